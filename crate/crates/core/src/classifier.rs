//! Three-way classification of solvable rational Lie algebras by the
//! behaviour of first L^p-cohomology of the associated simply connected
//! group, together with the critical exponent in the negatively curved
//! case.
//!
//! Decision procedure, all steps exact:
//!   - tau = 0 (unimodular)                    -> ClosedAtInfinity
//!   - tau != 0, ker tau not nilpotent         -> Vanishing
//!   - tau != 0, ker tau nilpotent, and every eigenvalue of
//!     ad_xi0 restricted to ker tau has strictly positive real part
//!                                             -> Heintze, exponent =
//!                                                (sum of real parts)/(least real part)
//!   - otherwise (some real part <= 0)         -> Vanishing
//!
//! Eigenvalues with zero real part never qualify as Heintze: the boundary
//! test is exact, so the verdict does not depend on floating point.

use crate::liealg::{LieAlgebra, Subspace, Violation};
use crate::rat::{Rat, RatInterval};
use crate::spectral::{char_poly, real_part_report, RealPartReport};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ClosedAtInfinity,
    Heintze,
    Vanishing,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ClosedAtInfinity => write!(f, "closed-at-infinity"),
            Verdict::Heintze => write!(f, "heintze"),
            Verdict::Vanishing => write!(f, "vanishing"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CohomologySpace {
    /// T^{1,p}: closure of zero in H^{1,p}
    Torsion,
    /// R^{1,p}: reduced cohomology
    Reduced,
    /// H^{1,p}: full cohomology
    Full,
}

/// Range of exponents p a statement quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PRange {
    /// p > 1
    GreaterThanOne,
    /// p >= 1
    AtLeastOne,
    /// 1 < p <= p(G)
    UpToExponent,
    /// p > p(G)
    AboveExponent,
}

impl std::fmt::Display for PRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PRange::GreaterThanOne => write!(f, "p > 1"),
            PRange::AtLeastOne => write!(f, "p >= 1"),
            PRange::UpToExponent => write!(f, "1 < p <= p(G)"),
            PRange::AboveExponent => write!(f, "p > p(G)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Statement {
    pub space: CohomologySpace,
    pub range: PRange,
    pub vanishes: bool,
    /// Set when the assertion is reported from the literature rather than
    /// computed here.
    pub note: Option<String>,
}

impl std::fmt::Display for Statement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let space = match self.space {
            CohomologySpace::Torsion => "T^{1,p}",
            CohomologySpace::Reduced => "R^{1,p}",
            CohomologySpace::Full => "H^{1,p}",
        };
        let rel = if self.vanishes { "= 0" } else { "!= 0" };
        write!(f, "{space} {rel} for {}", self.range)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Which tests fired on the way to the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub tau_is_zero: bool,
    /// The expanding direction used for the spectral step, in the defining
    /// basis, normalized so that tau(xi0) = 1 under the default selection.
    pub xi0: Option<Vec<Rat>>,
    pub kernel_nilpotent: Option<bool>,
    /// Characteristic polynomial of ad_xi0 restricted to ker tau.
    pub char_poly: Option<crate::poly::RatPolynomial>,
    pub real_parts: Option<RealPartReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Certified enclosure of the critical exponent; present iff Heintze.
    pub exponent: Option<RatInterval>,
    pub statements: Vec<Statement>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("algebra fails structure identities ({} violations)", violations.len())]
    InvalidAlgebra { violations: Vec<Violation> },
    #[error(
        "algebra is not solvable: derived series stabilizes at dimension {stabilized_dim} after step {failing_step}; reduce to a solvable cocompact subgroup first"
    )]
    NotSolvable { failing_step: usize, stabilized_dim: usize },
    #[error("tau(xi0) must be positive for the spectral step")]
    XiNotExpanding,
}

fn statements_for(verdict: Verdict) -> Vec<Statement> {
    match verdict {
        Verdict::ClosedAtInfinity => vec![
            Statement {
                space: CohomologySpace::Torsion,
                range: PRange::GreaterThanOne,
                vanishes: false,
                note: None,
            },
            Statement {
                space: CohomologySpace::Reduced,
                range: PRange::GreaterThanOne,
                vanishes: true,
                note: Some("cited (Tessera), not computed".to_string()),
            },
        ],
        Verdict::Heintze => vec![
            Statement {
                space: CohomologySpace::Torsion,
                range: PRange::AtLeastOne,
                vanishes: true,
                note: None,
            },
            Statement {
                space: CohomologySpace::Full,
                range: PRange::UpToExponent,
                vanishes: true,
                note: None,
            },
            Statement {
                space: CohomologySpace::Reduced,
                range: PRange::AboveExponent,
                vanishes: false,
                note: None,
            },
        ],
        Verdict::Vanishing => vec![Statement {
            space: CohomologySpace::Full,
            range: PRange::GreaterThanOne,
            vanishes: true,
            note: None,
        }],
    }
}

/// Classifies with the default expanding direction: the first basis vector
/// e_i with tau_i != 0, rescaled so that tau(xi0) = 1.
pub fn classify(algebra: &LieAlgebra, tol: &Rat) -> Result<Classification, ClassifyError> {
    check_preconditions(algebra)?;
    let tau = algebra.modular_character();
    if tau.is_zero() {
        return Ok(Classification {
            verdict: Verdict::ClosedAtInfinity,
            exponent: None,
            statements: statements_for(Verdict::ClosedAtInfinity),
            provenance: Provenance {
                tau_is_zero: true,
                xi0: None,
                kernel_nilpotent: None,
                char_poly: None,
                real_parts: None,
            },
        });
    }
    let i = tau.tau.iter().position(|t| !t.is_zero()).expect("tau nonzero");
    let mut xi0 = vec![Rat::zero(); algebra.dim()];
    xi0[i] = Rat::one() / &tau.tau[i];
    classify_with_xi0_unchecked(algebra, &xi0, tol)
}

/// Classifies using a caller-supplied expanding direction xi0 with
/// tau(xi0) > 0. The verdict and exponent do not depend on the choice;
/// exposed so that invariance is testable.
pub fn classify_with_xi0(
    algebra: &LieAlgebra,
    xi0: &[Rat],
    tol: &Rat,
) -> Result<Classification, ClassifyError> {
    check_preconditions(algebra)?;
    let tau = algebra.modular_character();
    if tau.is_zero() || !tau.eval(xi0).is_positive() {
        return Err(ClassifyError::XiNotExpanding);
    }
    classify_with_xi0_unchecked(algebra, xi0, tol)
}

fn check_preconditions(algebra: &LieAlgebra) -> Result<(), ClassifyError> {
    let report = algebra.validate();
    if !report.ok() {
        return Err(ClassifyError::InvalidAlgebra { violations: report.violations });
    }
    let series = algebra.derived_series();
    let last = series.last().unwrap();
    if last.dim() != 0 {
        return Err(ClassifyError::NotSolvable {
            failing_step: series.len() - 1,
            stabilized_dim: last.dim(),
        });
    }
    Ok(())
}

fn classify_with_xi0_unchecked(
    algebra: &LieAlgebra,
    xi0: &[Rat],
    tol: &Rat,
) -> Result<Classification, ClassifyError> {
    let kernel: Subspace = algebra.kernel_of_tau().expect("tau nonzero");
    let nilpotent = algebra.is_nilpotent_subalgebra(&kernel);
    if !nilpotent {
        return Ok(Classification {
            verdict: Verdict::Vanishing,
            exponent: None,
            statements: statements_for(Verdict::Vanishing),
            provenance: Provenance {
                tau_is_zero: false,
                xi0: Some(xi0.to_vec()),
                kernel_nilpotent: Some(false),
                char_poly: None,
                real_parts: None,
            },
        });
    }
    // ker tau is an ideal, hence ad_xi0-invariant.
    let ad = algebra.adjoint_on_subspace(xi0, &kernel).expect("ker tau is an ideal");
    let p = char_poly(&ad).expect("square");
    let report = real_part_report(&p, tol).expect("nonzero polynomial");
    let provenance = Provenance {
        tau_is_zero: false,
        xi0: Some(xi0.to_vec()),
        kernel_nilpotent: Some(true),
        char_poly: Some(p.clone()),
        real_parts: Some(report.clone()),
    };
    if report.count_zero == 0 && report.count_negative == 0 {
        let min = report.min_positive_real_part.clone().expect("all real parts positive");
        let mut exponent = min.reciprocal_scaled(&report.sum_real_parts);
        if exponent.lo < Rat::one() {
            // The exponent is at least 1; tighten a loose lower endpoint.
            exponent = RatInterval::new(Rat::one(), exponent.hi.clone());
        }
        Ok(Classification {
            verdict: Verdict::Heintze,
            exponent: Some(exponent),
            statements: statements_for(Verdict::Heintze),
            provenance,
        })
    } else {
        Ok(Classification {
            verdict: Verdict::Vanishing,
            exponent: None,
            statements: statements_for(Verdict::Vanishing),
            provenance,
        })
    }
}

/// Answer to "does the group carry nonconstant harmonic functions with L^2
/// gradient": yes exactly for Heintze verdicts with exponent below 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HarmonicL2 {
    Yes,
    No,
    /// The exponent enclosure straddles 2 and refinement did not separate
    /// it within the refinement budget.
    Indeterminate,
}

pub fn harmonic_l2_query(algebra: &LieAlgebra, tol: &Rat) -> Result<HarmonicL2, ClassifyError> {
    let two = Rat::from_integer(2.into());
    let mut width = tol.clone();
    for _round in 0..8 {
        let c = classify(algebra, &width)?;
        match (c.verdict, c.exponent) {
            (Verdict::Heintze, Some(e)) => {
                if e.hi < two {
                    return Ok(HarmonicL2::Yes);
                }
                if e.lo >= two {
                    return Ok(HarmonicL2::No);
                }
                width /= Rat::from_integer(256.into());
            }
            _ => return Ok(HarmonicL2::No),
        }
    }
    Ok(HarmonicL2::Indeterminate)
}
