//! Lie algebras over the rationals: structure constants, validation,
//! adjoint maps, the modular character, and the derived / lower central
//! series. All tests here are exact; a subspace is always carried as an
//! explicit rational basis in canonical (reduced row echelon) form, so
//! membership and equality are rank computations, not comparisons of
//! floating point residues.

use crate::matrix::RatMatrix;
use crate::rat::Rat;
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieAlgError {
    #[error("modular character is identically zero (algebra is unimodular)")]
    TauZero,
    #[error("subspace is not closed under the bracket at basis pair ({i}, {j})")]
    NotASubalgebra { i: usize, j: usize },
    #[error("change of basis matrix is singular")]
    SingularMatrix,
    #[error("coordinate vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ad_xi does not preserve the subspace at column {col}")]
    NotInvariant { col: usize },
}

/// Violated structure identity, with 1-based indices as they appear in
/// input files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize, l: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry violated at ({i}, {j}, {k})")
            }
            Violation::Jacobi { i, j, k, l } => {
                write!(f, "Jacobi identity violated at ({i}, {j}, {k}; component {l})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Finite-dimensional algebra given by its bracket table
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    brackets: Vec<Vec<Vec<Rat>>>,
}

/// The covector tau(xi) = tr ad_xi. Vanishes identically exactly on
/// unimodular algebras, and always vanishes on the derived algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularCharacter {
    pub tau: Vec<Rat>,
}

impl ModularCharacter {
    pub fn eval(&self, xi: &[Rat]) -> Rat {
        assert_eq!(xi.len(), self.tau.len());
        self.tau.iter().zip(xi).map(|(t, x)| t * x).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.tau.iter().all(|t| t.is_zero())
    }
}

/// Linear subspace of the algebra, stored with a canonical RREF basis so
/// that equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    /// Columns form the canonical basis; may have zero columns count.
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim);
        }
        if vectors.is_empty() {
            return Subspace { ambient_dim, basis: vec![] };
        }
        let rows = RatMatrix::from_rows(vectors.to_vec());
        let (rref, pivots) = rows.rref();
        let basis = (0..pivots.len()).map(|r| rref.row(r)).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let vectors: Vec<Vec<Rat>> = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient_dim];
                v[i] = num_traits::One::one();
                v
            })
            .collect();
        Subspace::from_spanning(ambient_dim, &vectors)
    }

    pub fn zero_subspace(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: vec![] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_vectors(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Basis as columns of a matrix (ambient_dim x dim); empty gives a
    /// matrix with zero columns, which callers must special-case.
    pub fn basis_matrix(&self) -> Option<RatMatrix> {
        if self.basis.is_empty() {
            None
        } else {
            Some(RatMatrix::from_cols(&self.basis))
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        RatMatrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

impl LieAlgebra {
    /// Builds from a complete bracket table c[i][j][k]; no identities are
    /// enforced here, `validate` reports violations as data.
    pub fn from_table(basis_names: Vec<String>, brackets: Vec<Vec<Vec<Rat>>>) -> Self {
        let dim = brackets.len();
        assert!(dim >= 1, "dimension must be at least 1");
        assert_eq!(basis_names.len(), dim);
        for row in &brackets {
            assert_eq!(row.len(), dim);
            for cell in row {
                assert_eq!(cell.len(), dim);
            }
        }
        LieAlgebra { dim, basis_names, brackets }
    }

    /// Convenience constructor from entries (i, j, k, c) meaning
    /// [e_i, e_j] = ... + c e_k; the reversed pair is filled with -c.
    /// Indices are 0-based here (the file format is 1-based).
    pub fn from_antisymmetric_entries(
        dim: usize,
        basis_names: Option<Vec<String>>,
        entries: &[(usize, usize, usize, Rat)],
    ) -> Self {
        let names = basis_names
            .unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect());
        let mut table = vec![vec![vec![Rat::zero(); dim]; dim]; dim];
        for (i, j, k, c) in entries {
            assert!(*i < dim && *j < dim && *k < dim, "entry index out of range");
            assert_ne!(i, j, "diagonal bracket entries must be zero");
            table[*i][*j][*k] = c.clone();
            table[*j][*i][*k] = -c.clone();
        }
        Self::from_table(names, table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.brackets[i][j][k]
    }

    /// Checks antisymmetry and the Jacobi identity exactly; violations are
    /// data, not errors. Jacobi is scanned over i < j < k, which covers all
    /// triples once antisymmetry holds.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let sum = &self.brackets[i][j][k] + &self.brackets[j][i][k];
                    if !sum.is_zero() {
                        violations.push(Violation::Antisymmetry { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut acc = Rat::zero();
                        for m in 0..n {
                            acc += &self.brackets[i][j][m] * &self.brackets[m][k][l];
                            acc += &self.brackets[j][k][m] * &self.brackets[m][i][l];
                            acc += &self.brackets[k][i][m] * &self.brackets[m][j][l];
                        }
                        if !acc.is_zero() {
                            violations.push(Violation::Jacobi {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                                l: l + 1,
                            });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let coeff = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.brackets[i][j][k].is_zero() {
                        out[k] += &coeff * &self.brackets[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad_xi in the defining basis: column j holds the
    /// coordinates of [xi, e_j].
    pub fn adjoint(&self, xi: &[Rat]) -> Result<RatMatrix, LieAlgError> {
        if xi.len() != self.dim {
            return Err(LieAlgError::DimensionMismatch { expected: self.dim, got: xi.len() });
        }
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for i in 0..self.dim {
                if xi[i].is_zero() {
                    continue;
                }
                for k in 0..self.dim {
                    if !self.brackets[i][j][k].is_zero() {
                        *m.at_mut(k, j) += &xi[i] * &self.brackets[i][j][k];
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        v[i] = num_traits::One::one();
        v
    }

    pub fn modular_character(&self) -> ModularCharacter {
        let tau = (0..self.dim)
            .map(|i| self.adjoint(&self.basis_vector(i)).expect("basis vector").trace())
            .collect();
        ModularCharacter { tau }
    }

    /// Exact kernel of the modular character; an ideal of codimension one
    /// (tau kills brackets, so [algebra, ker tau] lands back in the kernel).
    pub fn kernel_of_tau(&self) -> Result<Subspace, LieAlgError> {
        let tau = self.modular_character();
        if tau.is_zero() {
            return Err(LieAlgError::TauZero);
        }
        let row = RatMatrix::from_rows(vec![tau.tau.clone()]);
        let kernel = row.kernel_basis();
        let sub = Subspace::from_spanning(self.dim, &kernel);
        debug_assert!((0..self.dim).all(|i| {
            sub.basis_vectors()
                .iter()
                .all(|v| sub.contains(&self.bracket(&self.basis_vector(i), v)))
        }));
        Ok(sub)
    }

    /// Span of [u, v] over basis pairs of the two subspaces.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                vectors.push(self.bracket(u, v));
            }
        }
        Subspace::from_spanning(self.dim, &vectors)
    }

    /// Derived series of a subalgebra: S, [S,S], [[S,S],[S,S]], ...
    /// Stops at the first repeated term (which is included only once).
    pub fn derived_series_of(&self, start: &Subspace) -> Vec<Subspace> {
        let mut chain = vec![start.clone()];
        loop {
            let last = chain.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.dim() == last.dim() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&Subspace::full(self.dim))
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().dim() == 0
    }

    /// Lower central series of a subalgebra: S, [S,S], [S,[S,S]], ...
    pub fn lower_central_series_of(&self, start: &Subspace) -> Vec<Subspace> {
        let mut chain = vec![start.clone()];
        loop {
            let last = chain.last().unwrap();
            let next = self.bracket_span(start, last);
            if next.dim() == last.dim() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    pub fn lower_central_series(&self) -> Vec<Subspace> {
        self.lower_central_series_of(&Subspace::full(self.dim))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().dim() == 0
    }

    pub fn is_nilpotent_subalgebra(&self, sub: &Subspace) -> bool {
        self.lower_central_series_of(sub).last().unwrap().dim() == 0
    }

    /// Structure constants of a bracket-closed subspace in its own basis,
    /// together with the embedding matrix (columns = subspace basis).
    pub fn restrict_to_subspace(
        &self,
        sub: &Subspace,
    ) -> Result<(LieAlgebra, RatMatrix), LieAlgError> {
        let m = sub.dim();
        assert!(m >= 1, "cannot restrict to the zero subspace");
        let embedding = sub.basis_matrix().expect("nonzero subspace");
        let mut table = vec![vec![vec![Rat::zero(); m]; m]; m];
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let w = self.bracket(&sub.basis_vectors()[i], &sub.basis_vectors()[j]);
                match embedding.solve(&w) {
                    Some(coords) => table[i][j] = coords,
                    None => return Err(LieAlgError::NotASubalgebra { i: i + 1, j: j + 1 }),
                }
            }
        }
        let names = (0..m).map(|i| format!("f{}", i + 1)).collect();
        Ok((LieAlgebra::from_table(names, table), embedding))
    }

    /// Matrix of ad_xi restricted to an ad_xi-invariant subspace, in the
    /// subspace basis.
    pub fn adjoint_on_subspace(
        &self,
        xi: &[Rat],
        sub: &Subspace,
    ) -> Result<RatMatrix, LieAlgError> {
        let m = sub.dim();
        let embedding = sub.basis_matrix().expect("nonzero subspace");
        let mut mat = RatMatrix::zeros(m, m);
        for j in 0..m {
            let w = self.bracket(xi, &sub.basis_vectors()[j]);
            let coords = embedding.solve(&w).ok_or(LieAlgError::NotInvariant { col: j })?;
            for i in 0..m {
                *mat.at_mut(i, j) = coords[i].clone();
            }
        }
        Ok(mat)
    }

    /// Conjugates the bracket table by an invertible matrix P whose columns
    /// express the new basis in the old coordinates.
    pub fn change_basis(&self, p: &RatMatrix) -> Result<LieAlgebra, LieAlgError> {
        assert_eq!((p.rows(), p.cols()), (self.dim, self.dim));
        let p_inv = p.inverse().map_err(|_| LieAlgError::SingularMatrix)?;
        let mut table = vec![vec![vec![Rat::zero(); self.dim]; self.dim]; self.dim];
        for a in 0..self.dim {
            for b in 0..self.dim {
                let w = self.bracket(&p.column(a), &p.column(b));
                table[a][b] = p_inv.mul_vec(&w);
            }
        }
        Ok(LieAlgebra::from_table(self.basis_names.clone(), table))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i, Rat};

    pub fn abelian(n: usize) -> LieAlgebra {
        LieAlgebra::from_antisymmetric_entries(n, None, &[])
    }

    pub fn aff_r() -> LieAlgebra {
        // [e1, e2] = e2
        LieAlgebra::from_antisymmetric_entries(2, None, &[(0, 1, 1, rat_i(1))])
    }

    pub fn heisenberg() -> LieAlgebra {
        // [x, y] = z
        LieAlgebra::from_antisymmetric_entries(
            3,
            Some(vec!["x".into(), "y".into(), "z".into()]),
            &[(0, 1, 2, rat_i(1))],
        )
    }

    pub fn sol() -> LieAlgebra {
        // [e1, x] = x, [e1, y] = -y
        LieAlgebra::from_antisymmetric_entries(
            3,
            None,
            &[(0, 1, 1, rat_i(1)), (0, 2, 2, rat_i(-1))],
        )
    }

    #[test]
    fn validate_accepts_catalog_examples() {
        assert!(abelian(3).validate().ok());
        assert!(aff_r().validate().ok());
        assert!(heisenberg().validate().ok());
        assert!(sol().validate().ok());
    }

    #[test]
    fn validate_reports_antisymmetry_violation() {
        // c[1][2][2] = 1 and c[2][1][2] = 1 (both +1)
        let mut table = vec![vec![vec![Rat::zero(); 2]; 2]; 2];
        table[0][1][1] = rat_i(1);
        table[1][0][1] = rat_i(1);
        let bad = LieAlgebra::from_table(vec!["e1".into(), "e2".into()], table);
        let report = bad.validate();
        assert!(!report.ok());
        assert_eq!(report.violations, vec![Violation::Antisymmetry { i: 1, j: 2, k: 2 }]);
    }

    #[test]
    fn validate_reports_jacobi_violation() {
        // [e1,e2]=e3, [e1,e3]=e1 breaks Jacobi on (1,2,3)
        let bad = LieAlgebra::from_antisymmetric_entries(
            3,
            None,
            &[(0, 1, 2, rat_i(1)), (0, 2, 0, rat_i(1))],
        );
        let report = bad.validate();
        assert!(!report.ok());
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Jacobi { .. })));
    }

    #[test]
    fn adjoint_examples() {
        let ab = abelian(3);
        let m = ab.adjoint(&ab.basis_vector(0)).unwrap();
        assert!(m.is_zero());

        let aff = aff_r();
        let m = aff.adjoint(&aff.basis_vector(0)).unwrap();
        assert_eq!(*m.at(1, 1), rat_i(1));
        assert_eq!(m.trace(), rat_i(1));

        let h = heisenberg();
        let ad_x = h.adjoint(&h.basis_vector(0)).unwrap();
        assert!(ad_x.mul(&ad_x).is_zero());
        assert_eq!(*ad_x.at(2, 1), rat_i(1));
    }

    #[test]
    fn modular_character_examples() {
        assert!(abelian(3).modular_character().is_zero());
        assert_eq!(aff_r().modular_character().tau, vec![rat_i(1), rat_i(0)]);
        assert!(sol().modular_character().is_zero());
    }

    #[test]
    fn kernel_of_tau_examples() {
        let aff = aff_r();
        let k = aff.kernel_of_tau().unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&aff.basis_vector(1)));

        // diag(1,2) extension
        let d = LieAlgebra::from_antisymmetric_entries(
            3,
            None,
            &[(0, 1, 1, rat_i(1)), (0, 2, 2, rat_i(2))],
        );
        let k = d.kernel_of_tau().unwrap();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&d.basis_vector(1)) && k.contains(&d.basis_vector(2)));

        assert_eq!(abelian(2).kernel_of_tau(), Err(LieAlgError::TauZero));
    }

    #[test]
    fn series_examples() {
        let h = heisenberg();
        assert!(h.is_nilpotent());
        let lcs = h.lower_central_series();
        assert_eq!(lcs.len(), 3);
        assert_eq!(lcs[1].dim(), 1);
        assert_eq!(lcs[2].dim(), 0);

        let aff = aff_r();
        assert!(aff.is_solvable());
        assert!(!aff.is_nilpotent());
        let lcs = aff.lower_central_series();
        assert_eq!(lcs.last().unwrap().dim(), 1);

        assert!(abelian(4).is_nilpotent());

        // sl2 is not solvable
        let sl2 = LieAlgebra::from_antisymmetric_entries(
            3,
            Some(vec!["h".into(), "e".into(), "f".into()]),
            &[(0, 1, 1, rat_i(2)), (0, 2, 2, rat_i(-2)), (1, 2, 0, rat_i(1))],
        );
        assert!(sl2.validate().ok());
        assert!(!sl2.is_solvable());
    }

    #[test]
    fn restrict_examples() {
        let aff = aff_r();
        let k = aff.kernel_of_tau().unwrap();
        let (sub, _) = aff.restrict_to_subspace(&k).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.validate().ok());

        // span{e1, e2} in sol is not closed: [e1, x] = x is fine, but
        // span{e2, e3} is closed (abelian).
        let s = sol();
        let closed = Subspace::from_spanning(3, &[s.basis_vector(1), s.basis_vector(2)]);
        let (sub, _) = s.restrict_to_subspace(&closed).unwrap();
        assert!(sub.validate().ok());
        assert!(sub.is_nilpotent());
    }

    #[test]
    fn restrict_rejects_non_subalgebra() {
        let h = heisenberg();
        // span{x, y} is not closed: [x, y] = z
        let sub = Subspace::from_spanning(3, &[h.basis_vector(0), h.basis_vector(1)]);
        assert!(matches!(
            h.restrict_to_subspace(&sub),
            Err(LieAlgError::NotASubalgebra { .. })
        ));
    }

    #[test]
    fn restrict_line_in_heisenberg() {
        let h = heisenberg();
        let line = Subspace::from_spanning(3, &[h.basis_vector(0)]);
        let (sub, _) = h.restrict_to_subspace(&line).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.is_nilpotent());
    }

    #[test]
    fn change_basis_identity_and_singular() {
        let aff = aff_r();
        let id = RatMatrix::identity(2);
        assert_eq!(aff.change_basis(&id).unwrap(), aff);

        let singular = RatMatrix::zeros(2, 2);
        assert_eq!(aff.change_basis(&singular), Err(LieAlgError::SingularMatrix));
    }

    #[test]
    fn change_basis_preserves_structure() {
        let aff = aff_r();
        let p = RatMatrix::from_rows(vec![
            vec![rat_i(2), rat_i(1)],
            vec![rat_i(1), rat_i(1)],
        ]);
        let moved = aff.change_basis(&p).unwrap();
        assert!(moved.validate().ok());
        assert!(moved.is_solvable());
        assert!(!moved.is_nilpotent());
        // tau transforms as tau' = tau o P
        let tau = aff.modular_character();
        let tau_moved = moved.modular_character();
        for a in 0..2 {
            assert_eq!(tau_moved.tau[a], tau.eval(&p.column(a)));
        }
    }
}
