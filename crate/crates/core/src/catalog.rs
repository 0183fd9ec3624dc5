//! Built-in algebra catalog with expected verdicts, used for regression
//! testing and by the command line `catalog` subcommand.

use crate::classifier::Verdict;
use crate::liealg::LieAlgebra;
use crate::rat::{rat_i, Rat};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: String,
    pub algebra: LieAlgebra,
    pub expected_verdict: Verdict,
    /// Exact expected exponent for Heintze entries.
    pub expected_exponent: Option<Rat>,
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(n, None, &[])
}

/// [x, y] = z.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(
        3,
        Some(vec!["x".into(), "y".into(), "z".into()]),
        &[(0, 1, 2, rat_i(1))],
    )
}

/// Heisenberg algebra of dimension 2k+1: [x_i, y_i] = z.
pub fn heisenberg_dim(k: usize) -> LieAlgebra {
    assert!(k >= 1);
    let dim = 2 * k + 1;
    let entries: Vec<(usize, usize, usize, Rat)> =
        (0..k).map(|i| (2 * i, 2 * i + 1, dim - 1, rat_i(1))).collect();
    LieAlgebra::from_antisymmetric_entries(dim, None, &entries)
}

/// [e1, x] = x, [e1, y] = -y; unimodular but not nilpotent.
pub fn sol() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(
        3,
        Some(vec!["t".into(), "x".into(), "y".into()]),
        &[(0, 1, 1, rat_i(1)), (0, 2, 2, rat_i(-1))],
    )
}

/// [e1, e2] = e2; the hyperbolic plane.
pub fn aff_r() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(2, None, &[(0, 1, 1, rat_i(1))])
}

/// Model of real hyperbolic n-space: abelian R^{n-1} extended by a
/// derivation with all weights 1.
pub fn real_hyperbolic(n: usize) -> LieAlgebra {
    assert!(n >= 2);
    let entries: Vec<(usize, usize, usize, Rat)> =
        (1..n).map(|i| (0, i, i, rat_i(1))).collect();
    LieAlgebra::from_antisymmetric_entries(n, None, &entries)
}

/// Model of complex hyperbolic k-space: Heisenberg of dimension 2k-1
/// extended by the derivation with weight 1 on the horizontal directions
/// and weight 2 on the center. For k = 1 this degenerates to the
/// hyperbolic plane.
pub fn complex_hyperbolic(k: usize) -> LieAlgebra {
    assert!(k >= 1);
    let dim = 2 * k; // 1 + (2k - 1)
    let z = dim - 1;
    let mut entries: Vec<(usize, usize, usize, Rat)> = Vec::new();
    for i in 1..z {
        entries.push((0, i, i, rat_i(1)));
    }
    entries.push((0, z, z, rat_i(2)));
    for i in 0..k.saturating_sub(1) {
        entries.push((1 + 2 * i, 2 + 2 * i, z, rat_i(1)));
    }
    LieAlgebra::from_antisymmetric_entries(dim, None, &entries)
}

/// [xi, x] = 2x, [xi, y] = -y: nonunimodular with mixed eigenvalue signs.
pub fn mixed_sign() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(
        3,
        None,
        &[(0, 1, 1, rat_i(2)), (0, 2, 2, rat_i(-1))],
    )
}

/// [xi, x] = x, [xi, y] = 2y, [xi, z] = -z: same phenomenon in dimension 4.
pub fn mixed_sign_b() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(
        4,
        None,
        &[(0, 1, 1, rat_i(1)), (0, 2, 2, rat_i(2)), (0, 3, 3, rat_i(-1))],
    )
}

/// Direct sum aff(R) + sol: ker tau contains the sol factor, which is not
/// nilpotent.
pub fn aff_plus_sol() -> LieAlgebra {
    LieAlgebra::from_antisymmetric_entries(
        5,
        None,
        &[
            (0, 1, 1, rat_i(1)),
            (2, 3, 3, rat_i(1)),
            (2, 4, 4, rat_i(-1)),
        ],
    )
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "abelian-r2",
            description: "abelian R^2".into(),
            algebra: abelian(2),
            expected_verdict: Verdict::ClosedAtInfinity,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "abelian-r3",
            description: "abelian R^3".into(),
            algebra: abelian(3),
            expected_verdict: Verdict::ClosedAtInfinity,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "heisenberg",
            description: "Heisenberg algebra, dimension 3".into(),
            algebra: heisenberg(),
            expected_verdict: Verdict::ClosedAtInfinity,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "heisenberg-5",
            description: "Heisenberg algebra, dimension 5".into(),
            algebra: heisenberg_dim(2),
            expected_verdict: Verdict::ClosedAtInfinity,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "sol",
            description: "sol: [t,x] = x, [t,y] = -y (unimodular)".into(),
            algebra: sol(),
            expected_verdict: Verdict::ClosedAtInfinity,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "aff-r",
            description: "aff(R) = RH^2 = CH^1 model (hyperbolic plane)".into(),
            algebra: aff_r(),
            expected_verdict: Verdict::Heintze,
            expected_exponent: Some(rat_i(1)),
        },
        CatalogEntry {
            name: "rh3",
            description: "RH^3 model: weights (1, 1)".into(),
            algebra: real_hyperbolic(3),
            expected_verdict: Verdict::Heintze,
            expected_exponent: Some(rat_i(2)),
        },
        CatalogEntry {
            name: "rh4",
            description: "RH^4 model: weights (1, 1, 1)".into(),
            algebra: real_hyperbolic(4),
            expected_verdict: Verdict::Heintze,
            expected_exponent: Some(rat_i(3)),
        },
        CatalogEntry {
            name: "rh5",
            description: "RH^5 model: weights (1, 1, 1, 1)".into(),
            algebra: real_hyperbolic(5),
            expected_verdict: Verdict::Heintze,
            expected_exponent: Some(rat_i(4)),
        },
        CatalogEntry {
            name: "ch2",
            description: "CH^2 model: Heisenberg N, weights (1, 1, 2)".into(),
            algebra: complex_hyperbolic(2),
            expected_verdict: Verdict::Heintze,
            expected_exponent: Some(rat_i(4)),
        },
        CatalogEntry {
            name: "ch3",
            description: "CH^3 model: Heisenberg N, weights (1, 1, 1, 1, 2)".into(),
            algebra: complex_hyperbolic(3),
            expected_verdict: Verdict::Heintze,
            expected_exponent: Some(rat_i(6)),
        },
        CatalogEntry {
            name: "mixed-sign",
            description: "weights (2, -1): nonunimodular, not negatively curved".into(),
            algebra: mixed_sign(),
            expected_verdict: Verdict::Vanishing,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "mixed-sign-b",
            description: "weights (1, 2, -1)".into(),
            algebra: mixed_sign_b(),
            expected_verdict: Verdict::Vanishing,
            expected_exponent: None,
        },
        CatalogEntry {
            name: "aff-plus-sol",
            description: "aff(R) + sol direct sum: ker tau not nilpotent".into(),
            algebra: aff_plus_sol(),
            expected_verdict: Verdict::Vanishing,
            expected_exponent: None,
        },
    ]
}
