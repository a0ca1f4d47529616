//! Verification of the FIX and FORB conditions for an induced subgraph `H`
//! with boundary `B` inside a host `G`.
//!
//! "For every list assignment" is made finite by enumerating list systems up
//! to renaming of colors. Lists are visited vertex by vertex; the colors used
//! so far are grouped into classes of colors that occur in exactly the same
//! earlier lists, and a new list takes some number of colors from each class
//! (always the lowest ids, since colors in a class are interchangeable) plus
//! some fresh colors numbered in first-use order. Each renaming class of
//! systems is produced exactly once.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{Graph, SimpleGraph};
use crate::listcolor::{ListAssignment, SmallSolver, SMALL_MAX_VERTICES};
use crate::pattern::{is_forbidding, Class, ConfigId};

/// Colors are bits of a `u64`, so the sizes of one system may sum to at most this.
pub const MAX_UNIVERSE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReducibleError {
    #[error("residual size at vertex {vertex} would be {value}")]
    NegativeResidual { vertex: usize, value: i64 },
    #[error("boundary must be a proper subset of the subgraph")]
    BoundaryNotProper,
    #[error("vertex {0} is not in the domain")]
    NotInDomain(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} is listed twice")]
    DuplicateVertex(usize),
    #[error("list sizes sum to {0}, more than the supported universe")]
    UniverseTooLarge(usize),
    #[error("{0} vertices to color, more than the verifier supports")]
    DomainTooLarge(usize),
}

/// Target list sizes on the vertices of `H - B`, in the order given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SizeFunction {
    vertices: Vec<usize>,
    sizes: Vec<usize>,
}

impl SizeFunction {
    pub fn new(vertices: Vec<usize>, sizes: Vec<usize>) -> Self {
        assert_eq!(vertices.len(), sizes.len());
        Self { vertices, sizes }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.index_of(v).map(|i| self.sizes[i])
    }

    fn index_of(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// `f ↓ v`: the size at `v` becomes 1.
    pub fn lower_at(&self, v: usize) -> Result<Self, ReducibleError> {
        let i = self.index_of(v).ok_or(ReducibleError::NotInDomain(v))?;
        let mut out = self.clone();
        out.sizes[i] = 1;
        Ok(out)
    }

    /// `f - 1_S`. A result of zero or below on `S` is an error: an empty
    /// list leaves nothing to verify.
    pub fn subtract_indicator(&self, set: &[usize]) -> Result<Self, ReducibleError> {
        let mut out = self.clone();
        for &v in set {
            let i = self.index_of(v).ok_or(ReducibleError::NotInDomain(v))?;
            let value = out.sizes[i] as i64 - 1;
            if value <= 0 {
                return Err(ReducibleError::NegativeResidual { vertex: v, value });
            }
            out.sizes[i] = value as usize;
        }
        Ok(out)
    }
}

impl fmt::Display for SizeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

fn check_vertex_set<G: Graph + ?Sized>(g: &G, set: &[usize]) -> Result<(), ReducibleError> {
    let mut seen = vec![false; g.vertex_count()];
    for &v in set {
        if v >= g.vertex_count() {
            return Err(ReducibleError::VertexOutOfRange(v));
        }
        if seen[v] {
            return Err(ReducibleError::DuplicateVertex(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// `H - B` in the order of `h`, after validating the sets.
fn domain_of<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    b: &[usize],
) -> Result<Vec<usize>, ReducibleError> {
    check_vertex_set(g, h)?;
    check_vertex_set(g, b)?;
    if let Some(&x) = b.iter().find(|x| !h.contains(x)) {
        return Err(ReducibleError::NotInDomain(x));
    }
    if b.len() >= h.len() {
        return Err(ReducibleError::BoundaryNotProper);
    }
    Ok(h.iter().copied().filter(|v| !b.contains(v)).collect())
}

/// `k - deg_G(v) + deg_{H-B}(v)` for each `v` in `H - B`.
pub fn residual_sizes<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    b: &[usize],
    k: usize,
) -> Result<SizeFunction, ReducibleError> {
    let domain = domain_of(g, h, b)?;
    let mut sizes = Vec::with_capacity(domain.len());
    for &v in &domain {
        let inner = g.neighbors(v).iter().filter(|u| domain.contains(u)).count();
        let value = k as i64 - g.degree(v) as i64 + inner as i64;
        if value < 0 {
            return Err(ReducibleError::NegativeResidual { vertex: v, value });
        }
        sizes.push(value as usize);
    }
    Ok(SizeFunction { vertices: domain, sizes })
}

/// Calls `visit` with one representative (lists as color bit masks) of every
/// list system with exactly the given sizes, up to renaming colors.
/// Stops early when `visit` breaks.
pub fn for_each_canonical_system<F>(sizes: &[usize], mut visit: F) -> Result<(), ReducibleError>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    let total: usize = sizes.iter().sum();
    if total > MAX_UNIVERSE {
        return Err(ReducibleError::UniverseTooLarge(total));
    }
    if sizes.is_empty() {
        let _ = visit(&[]);
        return Ok(());
    }
    let mut e = Enumerator {
        sizes,
        lists: vec![0; sizes.len()],
        visit: &mut visit,
    };
    let _ = e.vertex(0, &[], 0);
    Ok(())
}

/// Number of canonical systems for `sizes`.
pub fn count_canonical_systems(sizes: &[usize]) -> Result<u64, ReducibleError> {
    let mut count = 0u64;
    for_each_canonical_system(sizes, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

struct Enumerator<'a, F> {
    sizes: &'a [usize],
    lists: Vec<u64>,
    visit: &'a mut F,
}

fn lowest_bits(mut mask: u64, k: usize) -> u64 {
    let mut out = 0;
    for _ in 0..k {
        let bit = mask & mask.wrapping_neg();
        out |= bit;
        mask ^= bit;
    }
    out
}

impl<F: FnMut(&[u64]) -> ControlFlow<()>> Enumerator<'_, F> {
    fn vertex(&mut self, j: usize, classes: &[u64], next_color: usize) -> ControlFlow<()> {
        let need = self.sizes[j];
        self.pick(j, classes, next_color, 0, need, 0)
    }

    /// `acc` holds the colors taken from classes before `ci`.
    fn pick(
        &mut self,
        j: usize,
        classes: &[u64],
        next_color: usize,
        ci: usize,
        remaining: usize,
        acc: u64,
    ) -> ControlFlow<()> {
        if ci == classes.len() {
            let fresh = match remaining {
                0 => 0,
                64 => u64::MAX,
                r => ((1u64 << r) - 1) << next_color,
            };
            let list = acc | fresh;
            self.lists[j] = list;
            if j + 1 == self.sizes.len() {
                return (self.visit)(&self.lists);
            }
            let mut next: Vec<u64> = Vec::with_capacity(2 * classes.len() + 1);
            for &class in classes {
                let inside = class & list;
                let outside = class & !list;
                if inside != 0 {
                    next.push(inside);
                }
                if outside != 0 {
                    next.push(outside);
                }
            }
            if fresh != 0 {
                next.push(fresh);
            }
            return self.vertex(j + 1, &next, next_color + remaining);
        }
        let available = classes[ci].count_ones() as usize;
        for t in 0..=available.min(remaining) {
            let taken = lowest_bits(classes[ci], t);
            self.pick(j, classes, next_color, ci + 1, remaining - t, acc | taken)?;
        }
        ControlFlow::Continue(())
    }
}

/// A failing check with the list system that defeats it. Lists are indexed
/// like the report's domain (local vertex `i` is `domain[i]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Fix { vertex: usize, lists: ListAssignment },
    Forb { set: Vec<usize>, lists: ListAssignment },
}

impl Witness {
    pub fn lists(&self) -> &ListAssignment {
        match self {
            Witness::Fix { lists, .. } | Witness::Forb { lists, .. } => lists,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub config: Option<ConfigId>,
    /// Vertices of `H - B` in host ids.
    pub domain: Vec<usize>,
    pub residual: SizeFunction,
    pub fix_ok: bool,
    pub forb_ok: bool,
    /// Sets `S` that were forbidding and therefore checked.
    pub forbidding_sets: Vec<Vec<usize>>,
    pub systems_checked: u64,
    pub witness: Option<Witness>,
}

impl ReducibilityReport {
    pub fn is_reducible(&self) -> bool {
        self.fix_ok && self.forb_ok
    }

    /// The subgraph `H - B` as its own graph, local ids as in `domain`.
    pub fn domain_graph<G: Graph + ?Sized>(&self, g: &G) -> SimpleGraph {
        SimpleGraph::induced(g, &self.domain)
    }
}

/// First system with `sizes` on `graph` that has no coloring.
fn first_uncolorable(
    graph: &SimpleGraph,
    sizes: &[usize],
    solver: &mut SmallSolver,
    checked: &mut u64,
) -> Result<Option<ListAssignment>, ReducibleError> {
    let mut failure = None;
    for_each_canonical_system(sizes, |masks| {
        *checked += 1;
        if solver.solve(masks) {
            ControlFlow::Continue(())
        } else {
            debug_assert_eq!(masks.len(), graph.vertex_count());
            failure = Some(ListAssignment::from_masks(masks));
            ControlFlow::Break(())
        }
    })?;
    Ok(failure)
}

struct FixOutcome {
    witness: Option<Witness>,
    checked: u64,
}

fn run_fix(
    graph: &SimpleGraph,
    residual: &SizeFunction,
) -> Result<FixOutcome, ReducibleError> {
    let mut solver = SmallSolver::new(graph);
    let mut checked = 0;
    for &v in residual.vertices() {
        let lowered = residual.lower_at(v)?;
        if let Some(lists) = first_uncolorable(graph, lowered.sizes(), &mut solver, &mut checked)? {
            return Ok(FixOutcome { witness: Some(Witness::Fix { vertex: v, lists }), checked });
        }
    }
    Ok(FixOutcome { witness: None, checked })
}

struct ForbOutcome {
    witness: Option<Witness>,
    sets: Vec<Vec<usize>>,
    checked: u64,
}

/// Subsets of `items` with sizes `lo..=hi`, by size then lexicographically.
fn subsets(items: &[usize], lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn grow(items: &[usize], from: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            grow(items, i + 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in lo..=hi.min(items.len()) {
        grow(items, 0, size, &mut Vec::new(), &mut out);
    }
    out
}

fn run_forb<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    graph: &SimpleGraph,
    residual: &SizeFunction,
    k: usize,
    class: Class,
) -> Result<ForbOutcome, ReducibleError> {
    // forbidding-ness is judged on H itself plus the apex
    let h_graph = SimpleGraph::induced(g, h);
    let local_in_h = |v: usize| h.iter().position(|&x| x == v).expect("domain inside H");
    let mut solver = SmallSolver::new(graph);
    let mut checked = 0;
    let mut sets = Vec::new();
    for set in subsets(residual.vertices(), 2, k.saturating_sub(2)) {
        let local: Vec<usize> = set.iter().map(|&v| local_in_h(v)).collect();
        if !is_forbidding(&h_graph, &local, class) {
            continue;
        }
        let reduced = residual.subtract_indicator(&set)?;
        sets.push(set.clone());
        if let Some(lists) = first_uncolorable(graph, reduced.sizes(), &mut solver, &mut checked)? {
            return Ok(ForbOutcome { witness: Some(Witness::Forb { set, lists }), sets, checked });
        }
    }
    Ok(ForbOutcome { witness: None, sets, checked })
}

fn report_base<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    b: &[usize],
    k: usize,
) -> Result<(SimpleGraph, SizeFunction), ReducibleError> {
    let residual = residual_sizes(g, h, b, k)?;
    if residual.vertices().len() > SMALL_MAX_VERTICES {
        return Err(ReducibleError::DomainTooLarge(residual.vertices().len()));
    }
    let total: usize = residual.sizes().iter().sum();
    if total > MAX_UNIVERSE {
        return Err(ReducibleError::UniverseTooLarge(total));
    }
    Ok((SimpleGraph::induced(g, residual.vertices()), residual))
}

/// The FIX condition alone; `forb_ok` is left `true` and unchecked.
pub fn check_fix<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    b: &[usize],
    k: usize,
) -> Result<ReducibilityReport, ReducibleError> {
    let (graph, residual) = report_base(g, h, b, k)?;
    let fix = run_fix(&graph, &residual)?;
    Ok(ReducibilityReport {
        config: None,
        domain: residual.vertices().to_vec(),
        residual,
        fix_ok: fix.witness.is_none(),
        forb_ok: true,
        forbidding_sets: Vec::new(),
        systems_checked: fix.checked,
        witness: fix.witness,
    })
}

/// The FORB condition alone; `fix_ok` is left `true` and unchecked.
pub fn check_forb<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    b: &[usize],
    k: usize,
    class: Class,
) -> Result<ReducibilityReport, ReducibleError> {
    let (graph, residual) = report_base(g, h, b, k)?;
    let forb = run_forb(g, h, &graph, &residual, k, class)?;
    Ok(ReducibilityReport {
        config: None,
        domain: residual.vertices().to_vec(),
        residual,
        fix_ok: true,
        forb_ok: forb.witness.is_none(),
        forbidding_sets: forb.sets,
        systems_checked: forb.checked,
        witness: forb.witness,
    })
}

/// Both conditions. The witness, if any, is the FIX one when FIX fails.
pub fn check_boundary_reducible<G: Graph + ?Sized>(
    g: &G,
    h: &[usize],
    b: &[usize],
    k: usize,
    class: Class,
) -> Result<ReducibilityReport, ReducibleError> {
    let (graph, residual) = report_base(g, h, b, k)?;
    let fix = run_fix(&graph, &residual)?;
    let forb = run_forb(g, h, &graph, &residual, k, class)?;
    Ok(ReducibilityReport {
        config: None,
        domain: residual.vertices().to_vec(),
        residual,
        fix_ok: fix.witness.is_none(),
        forb_ok: forb.witness.is_none(),
        forbidding_sets: forb.sets,
        systems_checked: fix.checked + forb.checked,
        witness: fix.witness.or(forb.witness),
    })
}

/// Checks a library configuration in the witness host realising `degrees`
/// (pattern vertex `i` gets host degree `degrees[i]`).
pub fn verify_config_with(
    id: ConfigId,
    degrees: &[usize],
    class: Class,
    k: usize,
) -> Result<ReducibilityReport, ReducibleError> {
    let pattern = id.pattern();
    let host = pattern.witness_host(degrees);
    let h: Vec<usize> = (0..pattern.vertex_count()).collect();
    let mut report = check_boundary_reducible(&host, &h, &[], k, class)?;
    report.config = Some(id);
    Ok(report)
}

/// Checks a library configuration in its canonical witness host, with its
/// own class and `k = 5`.
pub fn verify_config(id: ConfigId) -> Result<ReducibilityReport, ReducibleError> {
    let pattern = id.pattern();
    verify_config_with(id, &pattern.canonical_degrees(), id.class(), 5)
}

/// Every degree vector admitted by the pattern's constraints, with bounded
/// constraints expanded down to the pattern degree (`Z0`: 0..=3) and
/// unbounded ones fixed at the pattern degree.
pub fn degree_variants(id: ConfigId) -> Vec<Vec<usize>> {
    let pattern = id.pattern();
    let ranges: Vec<Vec<usize>> = (0..pattern.vertex_count())
        .map(|i| {
            let inner = pattern.graph().degree(i);
            let c = &pattern.host_degree()[i];
            match c.max_degree() {
                Some(max) => (inner..=max).filter(|&d| c.allows(d)).collect(),
                None => vec![inner],
            }
        })
        .collect();
    let mut out = vec![Vec::new()];
    for r in &ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                r.iter().map(move |&d| {
                    let mut p = prefix.clone();
                    p.push(d);
                    p
                })
            })
            .collect();
    }
    out
}
