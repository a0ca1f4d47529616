//! Resolutions: peel reducible configurations until nothing is left, then
//! replay the peels backwards to extend list colorings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, SimpleGraph};
use crate::listcolor::{find_l_coloring, is_l_coloring, max_weight_coloring, Color, Coloring, ListAssignment};
use crate::pattern::{find_config, is_class_member, Class, ConfigId};
use crate::reducible::{check_boundary_reducible, ReducibilityReport, SizeFunction};
use crate::Rational;

/// List length the resolutions are built for.
pub const DEFAULT_K: usize = 5;
/// Bound on the size of one peel. A 6-vertex with all its neighbors would
/// need seven; the library configurations use at most six.
pub const DEFAULT_B: usize = 7;

/// One peel `(H_i, B_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub config: ConfigId,
    /// Vertices of `H_i - B_i` (original ids), in pattern order.
    pub peel: Vec<usize>,
    /// `B_i` (original ids); empty for every library configuration.
    pub boundary: Vec<usize>,
    /// Residual list sizes in `G_{i-1}`, keyed by original ids.
    pub residual: SizeFunction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    pub k: usize,
    pub class: Class,
    pub steps: Vec<Step>,
    /// The final graph `G_M`, itself a reducible configuration with empty
    /// boundary. Empty only for the empty graph.
    pub residue: Option<Step>,
}

impl Resolution {
    /// Peeled vertex sets in coloring order: residue first, then the steps
    /// from last to first.
    pub fn coloring_blocks(&self) -> Vec<&Step> {
        self.residue.iter().chain(self.steps.iter().rev()).collect()
    }

    /// `M`, the number of peels before the residue.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty() && self.residue.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("graph is not in class {0}")]
    NotInClass(Class),
    #[error("no reducible configuration in the remaining {} vertices", remaining.len())]
    Stuck { remaining: Vec<usize>, steps: Vec<Step> },
}

/// Cache key: the induced subgraph in match order plus its residual sizes.
type ReportKey = (SimpleGraph, Vec<usize>);

/// Builds a resolution by greedy peeling. At each stage the first library
/// match (library order, then by map) that re-verifies as reducible in the
/// current graph is removed; degrees are those of the current graph.
pub fn find_resolution<G: Graph + ?Sized>(
    g: &G,
    class: Class,
    k: usize,
    b: usize,
) -> Result<Resolution, ResolveError> {
    if !is_class_member(g, class) {
        return Err(ResolveError::NotInClass(class));
    }
    let mut alive: Vec<usize> = (0..g.vertex_count()).collect();
    let mut steps = Vec::new();
    let mut cache: BTreeMap<ReportKey, bool> = BTreeMap::new();
    while !alive.is_empty() {
        let current = SimpleGraph::induced(g, &alive);
        let Some((config, map, residual)) = first_reducible(&current, class, k, b, &mut cache) else {
            return Err(ResolveError::Stuck { remaining: alive, steps });
        };
        let peel: Vec<usize> = map.iter().map(|&i| alive[i]).collect();
        let residual = SizeFunction::new(peel.clone(), residual);
        let step = Step { config, peel, boundary: Vec::new(), residual };
        if map.len() == alive.len() {
            return Ok(Resolution { k, class, steps, residue: Some(step) });
        }
        alive.retain(|v| !step.peel.contains(v));
        steps.push(step);
    }
    Ok(Resolution { k, class, steps, residue: None })
}

fn first_reducible(
    current: &SimpleGraph,
    class: Class,
    k: usize,
    b: usize,
    cache: &mut BTreeMap<ReportKey, bool>,
) -> Option<(ConfigId, Vec<usize>, Vec<usize>)> {
    for &id in class.library() {
        for m in find_config(current, id) {
            if m.map.len() > b {
                continue;
            }
            let Ok(report) = reducibility(current, &m.map, class, k, cache) else {
                continue;
            };
            if let Some(sizes) = report {
                return Some((id, m.map, sizes));
            }
        }
    }
    None
}

/// Residual sizes when `h` is reducible in `g`, `None` when it is not.
fn reducibility(
    g: &SimpleGraph,
    h: &[usize],
    class: Class,
    k: usize,
    cache: &mut BTreeMap<ReportKey, bool>,
) -> Result<Option<Vec<usize>>, crate::reducible::ReducibleError> {
    let sizes = crate::reducible::residual_sizes(g, h, &[], k)?.sizes().to_vec();
    let key = (SimpleGraph::induced(g, h), sizes.clone());
    let ok = match cache.get(&key) {
        Some(&ok) => ok,
        None => {
            let ok = check_boundary_reducible(g, h, &[], k, class)?.is_reducible();
            cache.insert(key, ok);
            ok
        }
    };
    Ok(ok.then_some(sizes))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("step {0} peels a vertex that is already gone or repeated")]
    Overlap(usize),
    #[error("step {0} peels more than b vertices")]
    TooLarge(usize),
    #[error("step {0} is not reducible in its graph")]
    NotReducible(usize),
    #[error("step {0} records residual sizes that differ from the recomputed ones")]
    ResidualMismatch(usize),
    #[error("the residue does not consume the remaining vertices")]
    Leftover,
}

/// Replays the nested graphs `G_0 ⊇ G_1 ⊇ ...` and re-verifies every step.
pub fn validate_resolution<G: Graph + ?Sized>(
    g: &G,
    resolution: &Resolution,
    b: usize,
) -> Result<Vec<ReducibilityReport>, ValidationError> {
    let mut alive = vec![true; g.vertex_count()];
    let mut reports = Vec::new();
    let all: Vec<&Step> = resolution.steps.iter().chain(resolution.residue.iter()).collect();
    for (i, step) in all.iter().enumerate() {
        if step.peel.len() > b {
            return Err(ValidationError::TooLarge(i));
        }
        let local: Vec<usize> = (0..g.vertex_count()).filter(|&v| alive[v]).collect();
        let current = SimpleGraph::induced(g, &local);
        let mut h = Vec::new();
        for &v in step.peel.iter().chain(&step.boundary) {
            match local.binary_search(&v) {
                Ok(x) if !h.contains(&x) => h.push(x),
                _ => return Err(ValidationError::Overlap(i)),
            }
        }
        let bnd: Vec<usize> = h[step.peel.len()..].to_vec();
        let report = check_boundary_reducible(&current, &h, &bnd, resolution.k, resolution.class)
            .map_err(|_| ValidationError::NotReducible(i))?;
        if !report.is_reducible() {
            return Err(ValidationError::NotReducible(i));
        }
        if report.residual.sizes() != step.residual.sizes() {
            return Err(ValidationError::ResidualMismatch(i));
        }
        for &v in &step.peel {
            alive[v] = false;
        }
        reports.push(report);
    }
    let residue_ok = match &resolution.residue {
        Some(r) => r.boundary.is_empty(),
        None => g.vertex_count() == 0,
    };
    if !residue_ok || alive.iter().any(|&a| a) {
        return Err(ValidationError::Leftover);
    }
    Ok(reports)
}

/// Preferred colors on a subset of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Request {
    preferred: BTreeMap<usize, Color>,
}

/// Non-negative weights on (vertex, color) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedRequest {
    weights: BTreeMap<(usize, Color), Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RequestError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("color {color} is not in the list of vertex {vertex}")]
    NotInList { vertex: usize, color: Color },
    #[error("negative weight on ({vertex}, {color})")]
    NegativeWeight { vertex: usize, color: Color },
}

fn check_pair(l: &ListAssignment, v: usize, c: Color) -> Result<(), RequestError> {
    if v >= l.vertex_count() {
        return Err(RequestError::VertexOutOfRange(v));
    }
    if !l.contains(v, c) {
        return Err(RequestError::NotInList { vertex: v, color: c });
    }
    Ok(())
}

impl Request {
    /// Validates `r(v) ∈ L(v)`; later entries for a vertex replace earlier ones.
    pub fn new(
        l: &ListAssignment,
        pairs: impl IntoIterator<Item = (usize, Color)>,
    ) -> Result<Self, RequestError> {
        let mut preferred = BTreeMap::new();
        for (v, c) in pairs {
            check_pair(l, v, c)?;
            preferred.insert(v, c);
        }
        Ok(Self { preferred })
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.preferred.keys().copied()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.preferred.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.preferred.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preferred.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.preferred.iter().map(|(&v, &c)| (v, c))
    }

    /// Weight one on every requested pair.
    pub fn to_weighted(&self) -> WeightedRequest {
        WeightedRequest {
            weights: self.pairs().map(|p| (p, Rational::from_integer(1))).collect(),
        }
    }
}

impl WeightedRequest {
    /// Validates every pair against the lists. Zero weights are kept.
    pub fn new(
        l: &ListAssignment,
        entries: impl IntoIterator<Item = ((usize, Color), Rational)>,
    ) -> Result<Self, RequestError> {
        let mut weights = BTreeMap::new();
        for ((v, c), w) in entries {
            check_pair(l, v, c)?;
            if w < Rational::from_integer(0) {
                return Err(RequestError::NegativeWeight { vertex: v, color: c });
            }
            weights.insert((v, c), w);
        }
        Ok(Self { weights })
    }

    pub fn weight(&self, v: usize, c: Color) -> Rational {
        self.weights.get(&(v, c)).copied().unwrap_or_default()
    }

    /// `w(G, L)`: the sum of all weights.
    pub fn total(&self) -> Rational {
        self.weights.values().copied().sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, Color), Rational)> + '_ {
        self.weights.iter().map(|(&p, &w)| (p, w))
    }

    /// `Σ w(v, φ(v))`.
    pub fn honored(&self, coloring: &[Color]) -> Rational {
        self.weights
            .iter()
            .filter(|((v, c), _)| coloring.get(*v) == Some(c))
            .map(|(_, &w)| w)
            .sum()
    }
}

/// How [`extend_coloring`] chooses among the colorings of each peel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Policy {
    Plain,
    /// Vertex `v` must receive color `c`.
    Fixed(usize, Color),
    /// Each peel maximises the weight it honors.
    RequestGreedy(WeightedRequest),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("expected {expected} lists, got {got}")]
    ListCount { expected: usize, got: usize },
    #[error("vertex {vertex} has {len} colors, fewer than {k}")]
    ListsTooShort { vertex: usize, len: usize, k: usize },
    #[error("fixed vertex {vertex} cannot take color {color}")]
    BadFixed { vertex: usize, color: Color },
    #[error("no coloring of the peel {peel:?} with the remaining colors")]
    InvariantBreach { peel: Vec<usize> },
}

/// Colors `g` from `l` by coloring the residue and then the peels in reverse.
pub fn extend_coloring<G: Graph + ?Sized>(
    g: &G,
    l: &ListAssignment,
    resolution: &Resolution,
    policy: &Policy,
) -> Result<Coloring, ExtendError> {
    let n = g.vertex_count();
    if l.vertex_count() != n {
        return Err(ExtendError::ListCount { expected: n, got: l.vertex_count() });
    }
    if let Some(v) = (0..n).find(|&v| l.list(v).len() < resolution.k) {
        return Err(ExtendError::ListsTooShort { vertex: v, len: l.list(v).len(), k: resolution.k });
    }
    if let Policy::Fixed(v, c) = *policy {
        if v >= n || !l.contains(v, c) {
            return Err(ExtendError::BadFixed { vertex: v, color: c });
        }
    }
    let blocks = resolution.coloring_blocks();
    let fixed_block = match policy {
        Policy::Fixed(v, _) => blocks.iter().position(|s| s.peel.contains(v)),
        _ => None,
    };
    let mut coloring: Vec<Option<Color>> = vec![None; n];
    for (bi, step) in blocks.iter().enumerate() {
        let peel = &step.peel;
        let lists: Vec<Vec<Color>> = peel
            .iter()
            .map(|&x| {
                let mut list: Vec<Color> = l
                    .list(x)
                    .iter()
                    .copied()
                    .filter(|c| g.neighbors(x).iter().all(|&u| coloring[u] != Some(*c)))
                    .collect();
                if let Policy::Fixed(v, c) = *policy {
                    if x == v {
                        list.retain(|&y| y == c);
                    } else if fixed_block.is_some_and(|fb| bi < fb) && g.has_edge(x, v) {
                        // keep c free for v, which is colored later
                        list.retain(|&y| y != c);
                    }
                }
                list
            })
            .collect();
        let lists = ListAssignment::new(lists);
        let sub = SimpleGraph::induced(g, peel);
        let found = match policy {
            Policy::RequestGreedy(w) => {
                max_weight_coloring(&sub, &lists, |i, c| w.weight(peel[i], c)).map(|(c, _)| c)
            }
            _ => find_l_coloring(&sub, &lists),
        };
        let Some(local) = found else {
            return Err(ExtendError::InvariantBreach { peel: peel.clone() });
        };
        for (i, &x) in peel.iter().enumerate() {
            coloring[x] = Some(local[i]);
        }
    }
    let out: Coloring = coloring
        .into_iter()
        .map(|c| c.expect("resolution covers every vertex"))
        .collect();
    if !is_l_coloring(g, l, &out) {
        return Err(ExtendError::InvariantBreach { peel: Vec::new() });
    }
    Ok(out)
}

/// Largest graph the exact oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} vertices, the exact oracle handles at most {ORACLE_MAX_VERTICES}")]
    TooLarge(usize),
    #[error("request has zero total weight")]
    ZeroTotal,
    #[error("graph has no coloring from these lists")]
    Uncolorable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub coloring: Coloring,
    pub honored: Rational,
    pub total: Rational,
}

impl OracleResult {
    pub fn ratio(&self) -> Rational {
        self.honored / self.total
    }
}

/// Exact maximum of `Σ w(v, φ(v))` over all `L`-colorings `φ`.
pub fn oracle_max_satisfaction<G: Graph + ?Sized>(
    g: &G,
    l: &ListAssignment,
    w: &WeightedRequest,
) -> Result<OracleResult, OracleError> {
    if g.vertex_count() > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge(g.vertex_count()));
    }
    let total = w.total();
    if total == Rational::from_integer(0) {
        return Err(OracleError::ZeroTotal);
    }
    let (coloring, honored) =
        max_weight_coloring(g, l, |v, c| w.weight(v, c)).ok_or(OracleError::Uncolorable)?;
    Ok(OracleResult { coloring, honored, total })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonReport {
    pub min_ratio: Rational,
    /// A request attaining the minimum.
    pub worst: Request,
    pub requests_evaluated: u64,
    /// Whether every request on the domain was evaluated.
    pub exhaustive: bool,
}

/// Domains with at most this many requests are enumerated completely.
pub const EXHAUSTIVE_REQUEST_LIMIT: u64 = 4096;

/// Minimum exact satisfaction ratio over unit requests on `domain` (all
/// vertices when `None`): every request when there are few enough,
/// otherwise `trials` requests drawn with `rng`.
pub fn empirical_epsilon<G: Graph + ?Sized, R: Rng + ?Sized>(
    g: &G,
    l: &ListAssignment,
    domain: Option<&[usize]>,
    trials: u64,
    rng: &mut R,
) -> Result<EpsilonReport, OracleError> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let domain = domain.unwrap_or(&all);
    let choices: Vec<&[Color]> = domain.iter().map(|&v| l.list(v)).collect();
    if choices.iter().any(|c| c.is_empty()) || domain.is_empty() {
        return Err(OracleError::ZeroTotal);
    }
    let space = choices
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX);
    let exhaustive = space <= EXHAUSTIVE_REQUEST_LIMIT;
    let mut best: Option<(Rational, Request)> = None;
    let mut evaluated = 0;
    let mut evaluate = |picks: &[Color]| -> Result<(), OracleError> {
        let request = Request {
            preferred: domain.iter().copied().zip(picks.iter().copied()).collect(),
        };
        let ratio = oracle_max_satisfaction(g, l, &request.to_weighted())?.ratio();
        evaluated += 1;
        if best.as_ref().is_none_or(|(r, _)| ratio < *r) {
            best = Some((ratio, request));
        }
        Ok(())
    };
    if exhaustive {
        let mut idx = vec![0usize; domain.len()];
        loop {
            let picks: Vec<Color> = idx.iter().enumerate().map(|(i, &j)| choices[i][j]).collect();
            evaluate(&picks)?;
            let mut i = 0;
            while i < idx.len() {
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == idx.len() {
                break;
            }
        }
    } else {
        for _ in 0..trials.max(1) {
            let picks: Vec<Color> = choices.iter().map(|c| c[rng.gen_range(0..c.len())]).collect();
            evaluate(&picks)?;
        }
    }
    let (min_ratio, worst) = best.expect("at least one request");
    Ok(EpsilonReport { min_ratio, worst, requests_evaluated: evaluated, exhaustive })
}
