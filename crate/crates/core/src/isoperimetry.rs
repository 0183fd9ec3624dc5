//! Desk-scale graph experiments for the open/closed-at-infinity dichotomy:
//! Cheeger constants, Dirichlet L^p Sobolev constants, and radius scans on
//! word-metric balls of model groups.
//!
//! Discrete lattices can only model unimodular groups, so the open-at-
//! infinity exemplar is the regular tree, a stand-in rather than a lattice
//! in a nonunimodular group. Everything here is deterministic: fixed
//! traversal orders, fixed iteration counts, no randomness.

use crate::poly::isolate_smallest_real_root;
use crate::rat::{rat, Rat};
use crate::spectral::char_poly;
use crate::matrix::RatMatrix;
use num_traits::Zero;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no interior vertices (all forced to zero)")]
    EmptyInterior,
    #[error("p must be at least 1")]
    InvalidP,
}

/// Cayley-ball generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BallModel {
    /// Z^d with standard generators.
    Grid(usize),
    /// Z^2 semidirect Z by an integer matrix with |det| = 1, |tr| > 2.
    SolLattice([[i64; 2]; 2]),
    /// Integer Heisenberg group, generators x, y.
    DiscreteHeisenberg,
    /// k-regular tree.
    RegularTree(usize),
}

impl std::fmt::Display for BallModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BallModel::Grid(d) => write!(f, "grid({d})"),
            BallModel::SolLattice(a) => {
                write!(f, "sol-lattice([[{},{}],[{},{}]])", a[0][0], a[0][1], a[1][0], a[1][1])
            }
            BallModel::DiscreteHeisenberg => write!(f, "discrete-heisenberg"),
            BallModel::RegularTree(k) => write!(f, "regular-tree({k})"),
        }
    }
}

impl std::str::FromStr for BallModel {
    type Err = IsoError;

    /// Parses "grid:D", "sol:a,b,c,d" (row-major), "heisenberg", "tree:K".
    fn from_str(s: &str) -> Result<Self, IsoError> {
        let (kind, rest) = match s.split_once(':') {
            Some((k, r)) => (k, Some(r)),
            None => (s, None),
        };
        let bad = |m: &str| IsoError::InvalidModel(m.to_string());
        match kind {
            "grid" => rest
                .and_then(|r| r.parse().ok())
                .map(BallModel::Grid)
                .ok_or_else(|| bad("grid needs a dimension, e.g. grid:2")),
            "tree" => rest
                .and_then(|r| r.parse().ok())
                .map(BallModel::RegularTree)
                .ok_or_else(|| bad("tree needs a valence, e.g. tree:3")),
            "heisenberg" => Ok(BallModel::DiscreteHeisenberg),
            "sol" => {
                let nums: Option<Vec<i64>> = rest.map(|r| {
                    r.split(',').map(|x| x.trim().parse::<i64>().ok()).collect::<Option<Vec<_>>>()
                }).flatten();
                match nums.as_deref() {
                    Some([a, b, c, d]) => Ok(BallModel::SolLattice([[*a, *b], [*c, *d]])),
                    _ => Err(bad("sol needs a matrix, e.g. sol:2,1,1,1")),
                }
            }
            other => Err(bad(&format!("unknown model {other:?}"))),
        }
    }
}

/// Undirected simple graph with an optional forced-zero vertex set
/// (the Dirichlet boundary) and ball-generation metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    boundary: Vec<bool>,
    meta: Option<(String, usize)>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(u32, u32)>) -> Self {
        for e in edges.iter_mut() {
            assert!(e.0 != e.1, "self-loop");
            assert!((e.0 as usize) < n && (e.1 as usize) < n, "edge endpoint out of range");
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph { n, edges, boundary: vec![false; n], meta: None }
    }

    pub fn with_boundary(mut self, boundary: Vec<bool>) -> Self {
        assert_eq!(boundary.len(), self.n);
        self.boundary = boundary;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn boundary(&self) -> &[bool] {
        &self.boundary
    }

    pub fn meta(&self) -> Option<(&str, usize)> {
        self.meta.as_ref().map(|(m, r)| (m.as_str(), *r))
    }

    pub fn interior_count(&self) -> usize {
        self.boundary.iter().filter(|b| !**b).count()
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

// ---------------------------------------------------------------------------
// Ball generation
// ---------------------------------------------------------------------------

/// Word-metric ball of the given radius, with deterministic vertex order
/// (breadth-first, generators expanded in a fixed order) and the outermost
/// shell marked as Dirichlet boundary.
pub fn generate_ball(model: &BallModel, radius: usize) -> Result<Graph, IsoError> {
    if radius < 1 {
        return Err(IsoError::InvalidModel("radius must be at least 1".into()));
    }
    match model {
        BallModel::Grid(d) => {
            if *d < 1 {
                return Err(IsoError::InvalidModel("grid dimension must be at least 1".into()));
            }
            let gens = grid_generators(*d);
            Ok(cayley_ball(vec![0i64; *d], &gens, grid_mul, radius, model))
        }
        BallModel::SolLattice(a) => {
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            let tr = a[0][0] + a[1][1];
            if det.abs() != 1 {
                return Err(IsoError::InvalidModel(
                    "matrix must be invertible over the integers (det +-1)".into(),
                ));
            }
            if tr.abs() <= 2 {
                return Err(IsoError::InvalidModel("matrix must have |trace| > 2".into()));
            }
            let powers = sol_powers(a, radius);
            let gens: Vec<Vec<i64>> = vec![
                vec![1, 0, 0],
                vec![-1, 0, 0],
                vec![0, 1, 0],
                vec![0, -1, 0],
                vec![0, 0, 1],
                vec![0, 0, -1],
            ];
            let mul = move |g: &[i64], h: &[i64]| -> Vec<i64> {
                // (v, k) * (w, m) = (v + A^k w, k + m)
                let k = g[2];
                let aw = mat_apply(&powers[(k + radius as i64) as usize], h[0], h[1]);
                vec![g[0] + aw.0, g[1] + aw.1, k + h[2]]
            };
            Ok(cayley_ball(vec![0, 0, 0], &gens, mul, radius, model))
        }
        BallModel::DiscreteHeisenberg => {
            let gens: Vec<Vec<i64>> = vec![
                vec![1, 0, 0],
                vec![-1, 0, 0],
                vec![0, 1, 0],
                vec![0, -1, 0],
            ];
            let mul = |g: &[i64], h: &[i64]| -> Vec<i64> {
                // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')
                vec![g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1]]
            };
            Ok(cayley_ball(vec![0, 0, 0], &gens, mul, radius, model))
        }
        BallModel::RegularTree(k) => {
            if *k < 2 {
                return Err(IsoError::InvalidModel("tree valence must be at least 2".into()));
            }
            Ok(tree_ball(*k, radius, model))
        }
    }
}

fn grid_generators(d: usize) -> Vec<Vec<i64>> {
    let mut gens = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut plus = vec![0i64; d];
        plus[i] = 1;
        let mut minus = vec![0i64; d];
        minus[i] = -1;
        gens.push(plus);
        gens.push(minus);
    }
    gens
}

fn grid_mul(g: &[i64], h: &[i64]) -> Vec<i64> {
    g.iter().zip(h).map(|(a, b)| a + b).collect()
}

fn mat_apply(m: &[[i64; 2]; 2], x: i64, y: i64) -> (i64, i64) {
    (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
}

// Powers A^k for k in [-radius, radius], indexed by k + radius.
fn sol_powers(a: &[[i64; 2]; 2], radius: usize) -> Vec<[[i64; 2]; 2]> {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    let inv = [[det * a[1][1], -det * a[0][1]], [-det * a[1][0], det * a[0][0]]];
    let id = [[1, 0], [0, 1]];
    let mat_mul = |x: &[[i64; 2]; 2], y: &[[i64; 2]; 2]| -> [[i64; 2]; 2] {
        let mut out = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
            }
        }
        out
    };
    let mut powers = vec![id; 2 * radius + 1];
    for k in 1..=radius {
        powers[radius + k] = mat_mul(&powers[radius + k - 1], a);
        powers[radius - k] = mat_mul(&powers[radius - k + 1], &inv);
    }
    powers
}

fn cayley_ball(
    identity: Vec<i64>,
    gens: &[Vec<i64>],
    mul: impl Fn(&[i64], &[i64]) -> Vec<i64>,
    radius: usize,
    model: &BallModel,
) -> Graph {
    let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
    let mut elements: Vec<Vec<i64>> = Vec::new();
    let mut dist: Vec<usize> = Vec::new();
    index.insert(identity.clone(), 0);
    elements.push(identity);
    dist.push(0);
    let mut frontier_start = 0usize;
    for level in 1..=radius {
        let frontier_end = elements.len();
        for v in frontier_start..frontier_end {
            let base = elements[v].clone();
            for g in gens {
                let w = mul(&base, g);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), elements.len() as u32);
                    elements.push(w);
                    dist.push(level);
                }
            }
        }
        frontier_start = frontier_end;
    }
    let mut edges = Vec::new();
    for (v, el) in elements.iter().enumerate() {
        for g in gens {
            let w = mul(el, g);
            if let Some(&wi) = index.get(&w) {
                let (a, b) = (v as u32, wi);
                if a < b {
                    edges.push((a, b));
                }
            }
        }
    }
    let n = elements.len();
    let boundary = dist.iter().map(|&d| d == radius).collect();
    let mut g = Graph::new(n, edges).with_boundary(boundary);
    g.meta = Some((model.to_string(), radius));
    g
}

fn tree_ball(k: usize, radius: usize, model: &BallModel) -> Graph {
    let mut edges = Vec::new();
    let mut dist = vec![0usize];
    let mut next_id = 1u32;
    let mut frontier = vec![0u32];
    for level in 1..=radius {
        let mut new_frontier = Vec::new();
        for &v in &frontier {
            let children = if v == 0 { k } else { k - 1 };
            for _ in 0..children {
                edges.push((v, next_id));
                dist.push(level);
                new_frontier.push(next_id);
                next_id += 1;
            }
        }
        frontier = new_frontier;
    }
    let n = next_id as usize;
    let boundary = dist.iter().map(|&d| d == radius).collect();
    let mut g = Graph::new(n, edges).with_boundary(boundary);
    g.meta = Some((model.to_string(), radius));
    g
}

// ---------------------------------------------------------------------------
// Cheeger constants
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodTag {
    BruteForce,
    SpectralSandwich,
    SweepCut,
}

/// Enclosure of an isoperimetric constant.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantEstimate {
    pub lower: f64,
    pub upper: f64,
    pub method: MethodTag,
}

/// Exact minimum of |boundary edges| / |S| over subsets with
/// 1 <= |S| <= n/2, by exhaustion. Only for graphs with at most 16
/// vertices.
pub fn brute_force_cheeger(g: &Graph) -> Result<f64, IsoError> {
    let n = g.vertex_count();
    assert!(n <= 16, "brute force limited to 16 vertices");
    if !g.is_connected() {
        return Err(IsoError::Disconnected);
    }
    if n < 2 {
        return Err(IsoError::InvalidModel("need at least 2 vertices".into()));
    }
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > n / 2 {
            continue;
        }
        let mut cut = 0usize;
        for &(a, b) in g.edges() {
            let ina = mask >> a & 1;
            let inb = mask >> b & 1;
            if ina != inb {
                cut += 1;
            }
        }
        let h = cut as f64 / size as f64;
        if h < best {
            best = h;
        }
    }
    Ok(best)
}

/// Certified rational enclosure of the second-smallest Laplacian eigenvalue
/// for small graphs: the characteristic polynomial of the integer Laplacian
/// is exact, the zero eigenvalue is simple on a connected graph, and Sturm
/// bisection isolates the smallest positive root.
pub fn lambda2_certified(g: &Graph) -> Result<(Rat, Rat), IsoError> {
    let n = g.vertex_count();
    assert!(n <= 24, "certified eigenvalue bounds limited to small graphs");
    if !g.is_connected() {
        return Err(IsoError::Disconnected);
    }
    let deg = g.degrees();
    let mut l = RatMatrix::zeros(n, n);
    for i in 0..n {
        *l.at_mut(i, i) = Rat::from_integer((deg[i] as i64).into());
    }
    for &(a, b) in g.edges() {
        *l.at_mut(a as usize, b as usize) = -Rat::from_integer(1.into());
        *l.at_mut(b as usize, a as usize) = -Rat::from_integer(1.into());
    }
    let p = char_poly(&l).expect("square");
    // Divide out the simple zero root.
    let coeffs = p.coeffs();
    debug_assert!(coeffs[0].is_zero());
    let q = crate::poly::RatPolynomial::new(coeffs[1..].to_vec());
    debug_assert!(!q.eval(&Rat::zero()).is_zero(), "zero eigenvalue must be simple");
    let iv = isolate_smallest_real_root(&q, &rat(1, 1 << 30));
    Ok((iv.lo, iv.hi))
}

/// Estimated second Laplacian eigenvalue and Fiedler vector by deflated
/// power iteration on 2 d_max I - L; deterministic start and iteration
/// count.
fn lambda2_power_iteration(g: &Graph) -> (f64, Vec<f64>) {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let deg = g.degrees();
    let dmax = *deg.iter().max().unwrap_or(&0) as f64;
    let shift = 2.0 * dmax.max(1.0);
    let mut v: Vec<f64> = (0..n).map(|i| ((i as f64) + 1.0).sin()).collect();
    let orthonormalize = |v: &mut Vec<f64>| {
        let mean = v.iter().sum::<f64>() / n as f64;
        for x in v.iter_mut() {
            *x -= mean;
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            for x in v.iter_mut() {
                *x /= norm;
            }
        }
    };
    orthonormalize(&mut v);
    let apply = |v: &[f64], out: &mut Vec<f64>| {
        for i in 0..n {
            let mut lv = deg[i] as f64 * v[i];
            for &w in &adj[i] {
                lv -= v[w as usize];
            }
            out[i] = shift * v[i] - lv;
        }
    };
    let mut w = vec![0.0; n];
    for _ in 0..3000 {
        apply(&v, &mut w);
        std::mem::swap(&mut v, &mut w);
        orthonormalize(&mut v);
    }
    // Rayleigh quotient of L at the final vector.
    let mut lv = 0.0;
    for i in 0..n {
        let mut row = deg[i] as f64 * v[i];
        for &u in &adj[i] {
            row -= v[u as usize];
        }
        lv += v[i] * row;
    }
    (lv, v)
}

// Best sweep cut of a vertex ordering by value: prefixes S with
// 1 <= |S| <= n-1, candidate h = cut(S) / min(|S|, n - |S|).
fn best_sweep_cut(g: &Graph, values: &[f64]) -> f64 {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap().then(a.cmp(&b)));
    let mut in_s = vec![false; n];
    let mut cut = 0i64;
    let mut best = f64::INFINITY;
    for (k, &v) in order.iter().enumerate().take(n - 1) {
        let mut into_s = 0i64;
        for &w in &adj[v] {
            if in_s[w as usize] {
                into_s += 1;
            }
        }
        cut += adj[v].len() as i64 - 2 * into_s;
        in_s[v] = true;
        let size = (k + 1).min(n - k - 1);
        let h = cut as f64 / size as f64;
        if h < best {
            best = h;
        }
    }
    best
}

/// Cheeger constant enclosure. Brute force replaces both bounds on graphs
/// with at most 16 vertices; larger graphs get the spectral sandwich
/// lambda2/2 <= h <= sqrt(lambda2 (2 d_max - lambda2)) for the integer
/// Laplacian, tightened from above by the best Fiedler sweep cut.
pub fn cheeger_estimate(g: &Graph) -> Result<ConstantEstimate, IsoError> {
    if !g.is_connected() {
        return Err(IsoError::Disconnected);
    }
    let n = g.vertex_count();
    if n <= 16 {
        let h = brute_force_cheeger(g)?;
        return Ok(ConstantEstimate { lower: h, upper: h, method: MethodTag::BruteForce });
    }
    let (lambda2, fiedler) = lambda2_power_iteration(g);
    let dmax = *g.degrees().iter().max().unwrap() as f64;
    let mohar = (lambda2 * (2.0 * dmax - lambda2)).max(0.0).sqrt();
    let sweep = best_sweep_cut(g, &fiedler);
    let (upper, method) = if sweep < mohar {
        (sweep, MethodTag::SweepCut)
    } else {
        (mohar, MethodTag::SpectralSandwich)
    };
    let lower = (lambda2 / 2.0).min(upper);
    Ok(ConstantEstimate { lower, upper, method })
}

/// Spectral sandwich bounds alone (certified via exact arithmetic for
/// small graphs), for containment tests against brute force.
pub fn spectral_sandwich(g: &Graph) -> Result<(f64, f64), IsoError> {
    let n = g.vertex_count();
    let dmax = *g.degrees().iter().max().unwrap() as f64;
    let (lam_lo, lam_hi) = if n <= 16 {
        let (lo, hi) = lambda2_certified(g)?;
        (crate::rat::rat_to_f64(&lo), crate::rat::rat_to_f64(&hi))
    } else {
        let (est, _) = lambda2_power_iteration(g);
        (est, est)
    };
    // Upper envelope of sqrt(x (2 dmax - x)) over the eigenvalue enclosure.
    let f = |x: f64| (x * (2.0 * dmax - x)).max(0.0).sqrt();
    let mut hi = f(lam_lo).max(f(lam_hi));
    if lam_lo <= dmax && dmax <= lam_hi {
        hi = f(dmax);
    }
    Ok((lam_lo / 2.0, hi))
}

// ---------------------------------------------------------------------------
// Dirichlet p-Sobolev constants
// ---------------------------------------------------------------------------

/// Exact minimum of cut(S)/|S| over nonempty S inside the interior, edges
/// to the forced-zero boundary counted. Only for small interiors.
pub fn brute_force_dirichlet_cut(g: &Graph) -> Result<f64, IsoError> {
    let interior: Vec<usize> =
        (0..g.vertex_count()).filter(|&v| !g.boundary()[v]).collect();
    if interior.is_empty() {
        return Err(IsoError::EmptyInterior);
    }
    assert!(interior.len() <= 16, "brute force limited to 16 interior vertices");
    let pos: HashMap<usize, usize> =
        interior.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let m = interior.len();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << m) {
        let in_s = |v: usize| pos.get(&v).is_some_and(|&i| mask >> i & 1 == 1);
        let mut cut = 0usize;
        for &(a, b) in g.edges() {
            if in_s(a as usize) != in_s(b as usize) {
                cut += 1;
            }
        }
        let h = cut as f64 / mask.count_ones() as f64;
        if h < best {
            best = h;
        }
    }
    Ok(best)
}

// Best super-level cut of the interior values: sort descending, grow S,
// candidate cut(S)/|S| (edges leaving S, including to the boundary).
fn best_level_cut(g: &Graph, u: &[f64]) -> f64 {
    let adj = g.adjacency();
    let mut interior: Vec<usize> =
        (0..g.vertex_count()).filter(|&v| !g.boundary()[v] && u[v] > 0.0).collect();
    if interior.is_empty() {
        return f64::INFINITY;
    }
    interior.sort_by(|&a, &b| u[b].partial_cmp(&u[a]).unwrap().then(a.cmp(&b)));
    let mut in_s = vec![false; g.vertex_count()];
    let mut cut = 0i64;
    let mut best = f64::INFINITY;
    for (k, &v) in interior.iter().enumerate() {
        let mut into_s = 0i64;
        for &w in &adj[v] {
            if in_s[w as usize] {
                into_s += 1;
            }
        }
        cut += adj[v].len() as i64 - 2 * into_s;
        in_s[v] = true;
        let h = cut as f64 / (k + 1) as f64;
        if h < best {
            best = h;
        }
    }
    best
}

fn p_norms(g: &Graph, u: &[f64], p: f64) -> (f64, f64) {
    let mut du = 0.0;
    for &(a, b) in g.edges() {
        du += (u[a as usize] - u[b as usize]).abs().powf(p);
    }
    let nu = u.iter().map(|x| x.abs().powf(p)).sum::<f64>();
    (du, nu)
}

/// Result of the Dirichlet Rayleigh-quotient minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct SobolevEstimate {
    /// min ||du||_p / ||u||_p found (an upper bound for the true constant
    /// except where brute force certifies).
    pub value: f64,
    /// Value of the descent iterate alone, before cut refinement.
    pub descent_value: f64,
    /// Best super-level cut seen across iterates (p = 1 optimum shape).
    pub best_cut: f64,
}

/// Minimizes the Rayleigh quotient ||du||_p^p / ||u||_p^p over functions
/// vanishing on the boundary, by normalized subgradient descent with step
/// halving (deterministic start: indicator of the root vertex smoothed one
/// step; 200 iterations; 1e-10 relative improvement stop). For p = 1 the
/// returned value additionally inspects super-level cuts of every iterate,
/// the discrete coarea shapes.
pub fn sobolev_p_constant(g: &Graph, p: f64) -> Result<SobolevEstimate, IsoError> {
    if p < 1.0 {
        return Err(IsoError::InvalidP);
    }
    if !g.is_connected() {
        return Err(IsoError::Disconnected);
    }
    let n = g.vertex_count();
    let interior: Vec<usize> = (0..n).filter(|&v| !g.boundary()[v]).collect();
    if interior.is_empty() {
        return Err(IsoError::EmptyInterior);
    }
    let adj = g.adjacency();

    // start: indicator of the root, smoothed one step, zero on boundary
    let root = *interior.first().unwrap();
    let mut u = vec![0.0; n];
    u[root] = 1.0;
    let mut u1 = vec![0.0; n];
    for &v in &interior {
        let mut acc = u[v];
        for &w in &adj[v] {
            acc += u[w as usize];
        }
        u1[v] = acc / (1.0 + adj[v].len() as f64);
    }
    let mut u = u1;
    normalize_p(&mut u, p);

    let mut best_cut = best_level_cut(g, &u);
    let (mut e, mut m) = p_norms(g, &u, p);
    let mut ratio = e / m;
    let mut step = 0.5;
    for _iter in 0..200 {
        // subgradient of ||du||_p^p - ratio * ||u||_p^p at u
        let mut grad = vec![0.0; n];
        for &(a, b) in g.edges() {
            let d = u[a as usize] - u[b as usize];
            let gmag = p * d.abs().powf(p - 1.0) * d.signum();
            grad[a as usize] += gmag;
            grad[b as usize] -= gmag;
        }
        for &v in &interior {
            let x = u[v];
            grad[v] -= ratio * p * x.abs().powf(p - 1.0) * x.signum();
        }
        let mut improved = false;
        for _try in 0..40 {
            let mut cand = u.clone();
            for &v in &interior {
                cand[v] -= step * grad[v];
            }
            normalize_p(&mut cand, p);
            let (ce, cm) = p_norms(g, &cand, p);
            let cratio = ce / cm;
            if cratio < ratio {
                let rel = (ratio - cratio) / ratio.max(1e-300);
                u = cand;
                e = ce;
                m = cm;
                ratio = cratio;
                step = (step * 1.3).min(10.0);
                let cut = best_level_cut(g, &u);
                if cut < best_cut {
                    best_cut = cut;
                }
                improved = rel >= 1e-10;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    let _ = (e, m);

    // distance sublevel candidates (ball-shaped cuts) also tighten p = 1
    if let Some((_, radius)) = g.meta() {
        let dist = bfs_dist(g);
        for r in 0..radius {
            let shape: Vec<f64> =
                (0..n).map(|v| if dist[v] <= r { 1.0 } else { 0.0 }).collect();
            let cut = best_level_cut(g, &shape);
            if cut < best_cut {
                best_cut = cut;
            }
        }
    }

    let descent_value = ratio.powf(1.0 / p);
    let value = if p == 1.0 { descent_value.min(best_cut) } else { descent_value };
    Ok(SobolevEstimate { value, descent_value, best_cut })
}

fn normalize_p(u: &mut [f64], p: f64) {
    let norm = u.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p);
    if norm > 0.0 {
        for x in u.iter_mut() {
            *x /= norm;
        }
    }
}

fn bfs_dist(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[0] = 0;
    queue.push_back(0u32);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if dist[w as usize] == usize::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

// ---------------------------------------------------------------------------
// Radius scans
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub radius: usize,
    pub vertices: usize,
    pub cheeger: ConstantEstimate,
    pub sobolev: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    DecreasingTowardZero,
    BoundedBelow,
    Mixed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    pub trend: Trend,
    pub first_sobolev: f64,
    pub last_sobolev: f64,
    pub min_sobolev: f64,
}

/// Per-radius Cheeger and Dirichlet Sobolev constants with a coarse trend
/// classification of the Sobolev column.
pub fn dichotomy_scan(model: &BallModel, radii: &[usize], p: f64) -> Result<ScanTable, IsoError> {
    if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(IsoError::InvalidModel("radii must be strictly increasing".into()));
    }
    let mut rows = Vec::new();
    for &r in radii {
        let g = generate_ball(model, r)?;
        let cheeger = cheeger_estimate(&g)?;
        let sobolev = sobolev_p_constant(&g, p)?.value;
        rows.push(ScanRow { radius: r, vertices: g.vertex_count(), cheeger, sobolev });
    }
    let first = rows.first().unwrap().sobolev;
    let last = rows.last().unwrap().sobolev;
    let min = rows.iter().map(|r| r.sobolev).fold(f64::INFINITY, f64::min);
    let monotone = rows.windows(2).all(|w| w[1].sobolev <= w[0].sobolev * 1.0001);
    let trend = if monotone && last <= 0.6 * first {
        Trend::DecreasingTowardZero
    } else if min >= 0.5 * first {
        Trend::BoundedBelow
    } else {
        Trend::Mixed
    };
    Ok(ScanTable { rows, trend, first_sobolev: first, last_sobolev: last, min_sobolev: min })
}
