//! Numerical verification of the critical-exponent threshold on explicit
//! diagonal models.
//!
//! A model is R^{n-1} extended by the diagonal derivation with positive
//! weights lambda_1 <= ... <= lambda_{n-1}. Coordinates (x, t) carry the
//! left-invariant metric dt^2 + sum_i e^{2 lambda_i t} dx_i^2, so the
//! volume element is e^{tau t} dx dt with tau = sum lambda_i, the gradient
//! picks up e^{-2 lambda_i t} factors, and translation along t expands
//! volume at rate tau.
//!
//! `rate_analysis` decides convergence of |du|^p dvol for the step-times-
//! bump test function exactly in rational arithmetic (the t -> +infinity
//! rate of term i is tau - p lambda_i); the quadrature routines confirm the
//! same threshold numerically and check the flow-decay identity
//! ||(xi0 u) o phi_t||_p = e^{-t tau / p} ||xi0 u||_p.

use crate::rat::{rat_to_f64, Rat};
use num_traits::Signed;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ThresholdError {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("invalid cutoff: {0}")]
    InvalidCutoff(String),
    #[error("resolution {0} too low (need at least 16 nodes per axis)")]
    InvalidResolution(usize),
    #[error("support escapes the quadrature window after translation")]
    SupportEscapesWindow,
}

/// Diagonal Heintze model: abelian N = R^{n-1}, rational weights sorted
/// ascending, all strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeintzeModel {
    weights: Vec<Rat>,
}

impl HeintzeModel {
    pub fn new(mut weights: Vec<Rat>) -> Result<Self, ThresholdError> {
        if weights.is_empty() {
            return Err(ThresholdError::InvalidModel("no weights".into()));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(ThresholdError::InvalidModel("weights must be positive".into()));
        }
        weights.sort();
        Ok(HeintzeModel { weights })
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// Volume growth rate tau = sum of weights.
    pub fn tau(&self) -> Rat {
        self.weights.iter().cloned().sum()
    }

    /// Critical exponent tau / lambda_1, exact.
    pub fn critical_exponent(&self) -> Rat {
        self.tau() / &self.weights[0]
    }

    pub fn dim(&self) -> usize {
        self.weights.len() + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateVerdict {
    Convergent,
    Divergent,
}

/// Exact rate analysis of |du|^p dvol for the step-times-bump test
/// function: term i decays or grows like e^{(tau - p lambda_i) t}, and the
/// step-derivative term is compactly supported in t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RateReport {
    pub verdict: RateVerdict,
    /// tau - p * lambda_i, largest first.
    pub term_rates: Vec<Rat>,
    pub critical_exponent: Rat,
}

pub fn rate_analysis(model: &HeintzeModel, p: &Rat) -> Result<RateReport, ThresholdError> {
    if !p.is_positive() {
        return Err(ThresholdError::InvalidModel("p must be positive".into()));
    }
    let tau = model.tau();
    let mut term_rates: Vec<Rat> =
        model.weights.iter().map(|l| &tau - &(p * l)).collect();
    term_rates.sort_by(|a, b| b.cmp(a));
    // Convergent iff every exponential rate is strictly negative; a zero
    // rate integrates a constant over a half line and diverges.
    let verdict = if term_rates.iter().all(|r| r.is_negative()) {
        RateVerdict::Convergent
    } else {
        RateVerdict::Divergent
    };
    Ok(RateReport { verdict, term_rates, critical_exponent: model.critical_exponent() })
}

/// Test function u(x, t) = chi(t) * bump(x): a quintic smoothstep in t
/// times a tensor product of compactly supported polynomial bumps in x.
/// Polynomial pieces keep every derivative exactly evaluable.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    pub bump_center: Vec<f64>,
    pub bump_radius: f64,
    pub step_lo: f64,
    pub step_hi: f64,
}

impl TestFunction {
    pub fn standard(n_minus_1: usize) -> Self {
        TestFunction {
            bump_center: vec![0.0; n_minus_1],
            bump_radius: 1.0,
            step_lo: -1.0,
            step_hi: 1.0,
        }
    }

    fn chi(&self, t: f64) -> f64 {
        smoothstep(self.step_lo, self.step_hi, t)
    }

    fn chi_prime(&self, t: f64) -> f64 {
        smoothstep_prime(self.step_lo, self.step_hi, t)
    }
}

fn smoothstep(lo: f64, hi: f64, t: f64) -> f64 {
    if t <= lo {
        return 0.0;
    }
    if t >= hi {
        return 1.0;
    }
    let s = (t - lo) / (hi - lo);
    s * s * s * (10.0 - 15.0 * s + 6.0 * s * s)
}

fn smoothstep_prime(lo: f64, hi: f64, t: f64) -> f64 {
    if t <= lo || t >= hi {
        return 0.0;
    }
    let s = (t - lo) / (hi - lo);
    30.0 * s * s * (1.0 - s) * (1.0 - s) / (hi - lo)
}

fn bump(c: f64, r: f64, x: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let y = (x - c) / r;
    if y.abs() >= 1.0 {
        return 0.0;
    }
    let w = 1.0 - y * y;
    w * w * w
}

fn bump_prime(c: f64, r: f64, x: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let y = (x - c) / r;
    if y.abs() >= 1.0 {
        return 0.0;
    }
    let w = 1.0 - y * y;
    -6.0 * y * w * w / r
}

// 4-point Gauss-Legendre rule on [-1, 1].
const GL4_NODES: [f64; 4] = [
    -0.8611363115940526,
    -0.3399810435848563,
    0.3399810435848563,
    0.8611363115940526,
];
const GL4_WEIGHTS: [f64; 4] = [
    0.3478548451374538,
    0.6521451548625461,
    0.6521451548625461,
    0.3478548451374538,
];

/// Composite 4-point Gauss-Legendre nodes and weights over [a, b] with the
/// given number of cells.
fn composite_gl4(a: f64, b: f64, cells: usize) -> Vec<(f64, f64)> {
    assert!(cells >= 1 && b > a);
    let h = (b - a) / cells as f64;
    let mut out = Vec::with_capacity(4 * cells);
    for c in 0..cells {
        let lo = a + c as f64 * h;
        let mid = lo + 0.5 * h;
        for k in 0..4 {
            out.push((mid + 0.5 * h * GL4_NODES[k], 0.5 * h * GL4_WEIGHTS[k]));
        }
    }
    out
}

// Iterates over the tensor grid of per-axis (node, weight) lists, calling
// f(point, weight) in a fixed order.
fn tensor_iterate(axes: &[Vec<(f64, f64)>], f: &mut impl FnMut(&[f64], f64)) {
    let mut point = vec![0.0; axes.len()];
    tensor_rec(axes, 0, 1.0, &mut point, f);
}

fn tensor_rec(
    axes: &[Vec<(f64, f64)>],
    axis: usize,
    weight: f64,
    point: &mut [f64],
    f: &mut impl FnMut(&[f64], f64),
) {
    if axis == axes.len() {
        f(point, weight);
        return;
    }
    for (x, w) in &axes[axis] {
        point[axis] = *x;
        tensor_rec(axes, axis + 1, weight * w, point, f);
    }
}

/// ||du||_p^p restricted to t in [-T, T], computed by tensor-product
/// composite Gauss-Legendre quadrature with a fixed evaluation order.
///
/// The integrand is
///   (chi'(t)^2 u(x)^2 + chi(t)^2 sum_i e^{-2 lambda_i t} (d_i u(x))^2)^{p/2} e^{tau t},
/// the squared gradient being measured in the left-invariant metric.
/// `resolution` is the node count per axis across the bump support and
/// across the step transition; the t-axis keeps that node density up to the
/// cutoff so that values at different cutoffs are comparable.
pub fn quadrature_norm(
    model: &HeintzeModel,
    test_fn: &TestFunction,
    p: &Rat,
    cutoff: f64,
    resolution: usize,
) -> Result<f64, ThresholdError> {
    if !p.is_positive() {
        return Err(ThresholdError::InvalidModel("p must be positive".into()));
    }
    if test_fn.bump_center.len() != model.weights.len() {
        return Err(ThresholdError::InvalidModel(format!(
            "test function has {} bump axes, model has {}",
            test_fn.bump_center.len(),
            model.weights.len()
        )));
    }
    if cutoff <= test_fn.step_hi {
        return Err(ThresholdError::InvalidCutoff(format!(
            "cutoff {cutoff} must exceed the step transition end {}",
            test_fn.step_hi
        )));
    }
    if resolution < 16 {
        return Err(ThresholdError::InvalidResolution(resolution));
    }
    if test_fn.bump_radius <= 0.0 {
        return Ok(0.0);
    }
    let nm1 = model.weights.len();
    let pf = rat_to_f64(p);
    let tau = rat_to_f64(&model.tau());
    let lambdas: Vec<f64> = model.weights.iter().map(rat_to_f64).collect();

    let cells_per_axis = resolution / 4;
    let x_axes: Vec<Vec<(f64, f64)>> = (0..nm1)
        .map(|i| {
            let c = test_fn.bump_center[i];
            let r = test_fn.bump_radius;
            composite_gl4(c - r, c + r, cells_per_axis)
        })
        .collect();

    // Precompute bump values and axis-derivative squares on the x grid.
    let mut x_nodes: Vec<(Vec<f64>, f64)> = Vec::new();
    tensor_iterate(&x_axes, &mut |pt, w| x_nodes.push((pt.to_vec(), w)));
    let mut u2 = Vec::with_capacity(x_nodes.len());
    let mut du2 = vec![Vec::with_capacity(x_nodes.len()); nm1];
    for (pt, _) in &x_nodes {
        let vals: Vec<f64> =
            (0..nm1).map(|i| bump(test_fn.bump_center[i], test_fn.bump_radius, pt[i])).collect();
        let prod: f64 = vals.iter().product();
        u2.push(prod * prod);
        for i in 0..nm1 {
            let mut d = bump_prime(test_fn.bump_center[i], test_fn.bump_radius, pt[i]);
            for (j, v) in vals.iter().enumerate() {
                if j != i {
                    d *= v;
                }
            }
            du2[i].push(d * d);
        }
    }

    // t axis: integrand vanishes below the step start; keep a fixed node
    // density anchored at the transition so cutoffs are comparable.
    let h_t = (test_fn.step_hi - test_fn.step_lo) / cells_per_axis as f64;
    let t_cells = ((cutoff - test_fn.step_lo) / h_t).ceil() as usize;
    let t_axis = composite_gl4(test_fn.step_lo, test_fn.step_lo + t_cells as f64 * h_t, t_cells);

    let half_p = 0.5 * pf;
    let mut total = 0.0;
    for (t, wt) in &t_axis {
        if *t > cutoff {
            break;
        }
        let a = {
            let cp = test_fn.chi_prime(*t);
            cp * cp
        };
        let b = {
            let cv = test_fn.chi(*t);
            cv * cv
        };
        let decay: Vec<f64> = lambdas.iter().map(|l| (-2.0 * l * t).exp()).collect();
        let vol = (tau * t).exp() * wt;
        let mut slice = 0.0;
        for (idx, (_, wx)) in x_nodes.iter().enumerate() {
            let mut g = a * u2[idx];
            for i in 0..nm1 {
                g += b * decay[i] * du2[i][idx];
            }
            if g > 0.0 {
                slice += g.powf(half_p) * wx;
            }
        }
        total += slice * vol;
    }
    Ok(total)
}

/// Compactly supported smooth function u(x, t) = bump(x) * bump_t(t) used
/// by the flow-decay check; xi0 u = bump(x) * bump_t'(t).
#[derive(Debug, Clone, PartialEq)]
pub struct FlowTestFn {
    pub bump_center: Vec<f64>,
    pub bump_radius: f64,
    pub t_center: f64,
    pub t_radius: f64,
}

impl FlowTestFn {
    pub fn standard(n_minus_1: usize) -> Self {
        FlowTestFn { bump_center: vec![0.0; n_minus_1], bump_radius: 1.0, t_center: 0.0, t_radius: 1.0 }
    }
}

/// Relative error between ||(xi0 u) o phi_t||_p and e^{-t tau/p} ||xi0 u||_p,
/// both sides computed by the same tensor quadrature over the window
/// [-window, window] in t. The identity is exact, so the returned value is
/// pure quadrature error.
pub fn flow_decay_check(
    model: &HeintzeModel,
    f: &FlowTestFn,
    p: &Rat,
    t: f64,
    window: f64,
    resolution: usize,
) -> Result<f64, ThresholdError> {
    if !p.is_positive() {
        return Err(ThresholdError::InvalidModel("p must be positive".into()));
    }
    if f.bump_center.len() != model.weights.len() {
        return Err(ThresholdError::InvalidModel("bump dimension mismatch".into()));
    }
    if resolution < 16 {
        return Err(ThresholdError::InvalidResolution(resolution));
    }
    let support_lo = (f.t_center - f.t_radius).min(f.t_center - f.t_radius - t);
    let support_hi = (f.t_center + f.t_radius).max(f.t_center + f.t_radius - t);
    if support_lo < -window || support_hi > window {
        return Err(ThresholdError::SupportEscapesWindow);
    }
    let nm1 = model.weights.len();
    let pf = rat_to_f64(p);
    let tau = rat_to_f64(&model.tau());

    let cells_per_axis = resolution / 4;
    let x_axes: Vec<Vec<(f64, f64)>> = (0..nm1)
        .map(|i| {
            composite_gl4(
                f.bump_center[i] - f.bump_radius,
                f.bump_center[i] + f.bump_radius,
                cells_per_axis,
            )
        })
        .collect();
    let mut x_integral_p = 0.0;
    tensor_iterate(&x_axes, &mut |pt, w| {
        let mut v = 1.0;
        for i in 0..nm1 {
            v *= bump(f.bump_center[i], f.bump_radius, pt[i]);
        }
        x_integral_p += v.abs().powf(pf) * w;
    });

    // t axis over the window, density anchored at the bump scale.
    let h_t = 2.0 * f.t_radius / cells_per_axis as f64;
    let t_cells = ((2.0 * window) / h_t).ceil() as usize;
    let t_axis = composite_gl4(-window, -window + t_cells as f64 * h_t, t_cells);

    let norm_p = |shift: f64| -> f64 {
        let mut acc = 0.0;
        for (s, w) in &t_axis {
            let d = bump_prime(f.t_center, f.t_radius, s + shift);
            if d != 0.0 {
                acc += d.abs().powf(pf) * (tau * s).exp() * w;
            }
        }
        (acc * x_integral_p).powf(1.0 / pf)
    };

    let lhs = norm_p(t);
    let rhs = (-t * tau / pf).exp() * norm_p(0.0);
    if rhs == 0.0 {
        return Err(ThresholdError::InvalidModel("zero test function".into()));
    }
    Ok((lhs - rhs).abs() / rhs)
}
