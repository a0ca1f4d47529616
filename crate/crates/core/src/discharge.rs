//! The two discharging arguments, run on concrete plane graphs.
//!
//! Hopper mode gives every vertex and face `d - 4`; house mode gives vertices
//! `d - 6` and faces `2d - 6`. Rules move charge along recorded transfers, so
//! conservation can be audited exactly. All amounts are exact rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::pattern::{find_configurations, has_hopper, has_house, Class, Match};
use crate::plane::PlaneGraph;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Hopper,
    House,
}

impl Mode {
    pub fn for_class(class: Class) -> Self {
        match class {
            Class::H1 => Mode::Hopper,
            Class::H2 => Mode::House,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Hopper => "hopper",
            Mode::House => "house",
        }
    }

    /// Total initial charge of a connected plane graph.
    pub fn expected_total(self) -> Rational {
        match self {
            Mode::Hopper => Rational::from_integer(-8),
            Mode::House => Rational::from_integer(-12),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Mode {
    type Err = crate::pattern::UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hopper" => Ok(Mode::Hopper),
            "house" => Ok(Mode::House),
            _ => Err(crate::pattern::UnknownName(s.into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: &'static str,
    pub from: Element,
    pub to: Element,
    pub amount: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("graph contains a {0}, so {0} mode does not apply")]
    ModeViolation(Mode),
    #[error("vertex {vertex} of degree {degree} lies on {f3} triangular faces")]
    TooManyTriangles { vertex: usize, degree: usize, f3: usize },
}

/// Situations the rules do not spell out; each is recorded when met.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Anomaly {
    /// A bad 4-vertex on two bad 3-faces; what it received was split.
    SplitForward { vertex: usize },
    /// A vertex on two 3-faces that do not share an edge.
    SeparateTriangles { vertex: usize },
    /// Three or more 3-faces chained by shared edges.
    TriangleCluster { faces: Vec<usize> },
}

/// Role of each face with respect to the 3-face structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    NotTriangle,
    /// Every face sharing an edge with it has degree at least 4.
    Singleton,
    /// Shares an edge with exactly one other 3-face, which shares no edge
    /// with a third.
    Doubleton { partner: usize },
    /// Part of a larger edge-connected group of 3-faces.
    Cluster,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub mode: Mode,
    pub triangle_kind: Vec<TriangleKind>,
    pub bad_face: Vec<bool>,
    /// Hopper mode only: 4-vertices on a bad face.
    pub bad_vertex: Vec<bool>,
    /// Hopper mode, vertices with exactly one 3-face: bad 4-neighbors off it.
    pub n_b_star: Vec<Option<usize>>,
    /// Hopper mode, vertices on a doubleton: bad 4-neighbors off it.
    pub n_b: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub mode: Mode,
    pub initial_vertex: Vec<Rational>,
    pub initial_face: Vec<Rational>,
    pub final_vertex: Vec<Rational>,
    pub final_face: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub anomalies: Vec<Anomaly>,
}

impl ChargeLedger {
    pub fn initial_total(&self) -> Rational {
        self.initial_vertex.iter().chain(&self.initial_face).copied().sum()
    }

    pub fn final_total(&self) -> Rational {
        self.final_vertex.iter().chain(&self.final_face).copied().sum()
    }

    pub fn initial_vertex_total(&self) -> Rational {
        self.initial_vertex.iter().copied().sum()
    }

    pub fn initial_face_total(&self) -> Rational {
        self.initial_face.iter().copied().sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.initial_total() == self.final_total()
    }

    pub fn initial(&self, e: Element) -> Rational {
        match e {
            Element::Vertex(v) => self.initial_vertex[v],
            Element::Face(f) => self.initial_face[f],
        }
    }

    pub fn final_charge(&self, e: Element) -> Rational {
        match e {
            Element::Vertex(v) => self.final_vertex[v],
            Element::Face(f) => self.final_face[f],
        }
    }

    fn record(&mut self, rule: &'static str, from: Element, to: Element, amount: Rational) {
        if amount == Rational::from_integer(0) {
            return;
        }
        match from {
            Element::Vertex(v) => self.final_vertex[v] -= amount,
            Element::Face(f) => self.final_face[f] -= amount,
        }
        match to {
            Element::Vertex(v) => self.final_vertex[v] += amount,
            Element::Face(f) => self.final_face[f] += amount,
        }
        self.transfers.push(Transfer { rule, from, to, amount });
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

/// Initial charges of `mode`, before any rule fires.
pub fn initial_charges(g: &PlaneGraph, mode: Mode) -> ChargeLedger {
    let (vertex, face): (fn(i64) -> i64, fn(i64) -> i64) = match mode {
        Mode::Hopper => (|d| d - 4, |d| d - 4),
        Mode::House => (|d| d - 6, |d| 2 * d - 6),
    };
    let initial_vertex: Vec<Rational> =
        (0..g.vertex_count()).map(|v| int(vertex(g.degree(v) as i64))).collect();
    let initial_face: Vec<Rational> =
        (0..g.face_count()).map(|f| int(face(g.face_degree(f) as i64))).collect();
    ChargeLedger {
        mode,
        final_vertex: initial_vertex.clone(),
        final_face: initial_face.clone(),
        initial_vertex,
        initial_face,
        transfers: Vec::new(),
        anomalies: Vec::new(),
    }
}

/// Distinct 3-faces at `v`, sorted.
fn triangles_at(g: &PlaneGraph, v: usize) -> Vec<usize> {
    let mut fs: Vec<usize> =
        g.incident_faces(v).into_iter().filter(|&f| g.face_degree(f) == 3).collect();
    fs.dedup();
    fs
}

/// Faces sharing an edge with `f` (other than `f` itself), sorted.
fn edge_neighbors(g: &PlaneGraph, f: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .face(f)
        .boundary()
        .iter()
        .map(|d| g.face_of(crate::plane::Dart { tail: d.head, head: d.tail }))
        .filter(|&x| x != f)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn triangle_kinds(g: &PlaneGraph) -> Vec<TriangleKind> {
    let nf = g.face_count();
    let mut kind = vec![TriangleKind::NotTriangle; nf];
    for f in 0..nf {
        if g.face_degree(f) != 3 {
            continue;
        }
        let tri: Vec<usize> =
            edge_neighbors(g, f).into_iter().filter(|&x| g.face_degree(x) == 3).collect();
        kind[f] = match tri.as_slice() {
            [] => TriangleKind::Singleton,
            [p] => {
                let partner_tris =
                    edge_neighbors(g, *p).into_iter().filter(|&x| g.face_degree(x) == 3).count();
                if partner_tris == 1 {
                    TriangleKind::Doubleton { partner: *p }
                } else {
                    TriangleKind::Cluster
                }
            }
            _ => TriangleKind::Cluster,
        };
    }
    kind
}

fn check_mode(g: &PlaneGraph, mode: Mode) -> Result<(), DischargeError> {
    let bad = match mode {
        Mode::Hopper => has_hopper(g),
        Mode::House => has_house(g),
    };
    if bad {
        return Err(DischargeError::ModeViolation(mode));
    }
    Ok(())
}

/// Bad faces, bad vertices, 3-face structure and the `n_b` counters.
pub fn classify(g: &PlaneGraph, mode: Mode) -> Result<Classification, DischargeError> {
    check_mode(g, mode)?;
    let n = g.vertex_count();
    let nf = g.face_count();
    let triangle_kind = triangle_kinds(g);
    let mut bad_face = vec![false; nf];
    let mut bad_vertex = vec![false; n];
    let mut n_b_star = vec![None; n];
    let mut n_b = vec![None; n];
    match mode {
        Mode::House => {
            for (f, bad) in bad_face.iter_mut().enumerate() {
                let d = g.face_degree(f);
                *bad = g.n_k(f, 4) + 1 == d;
            }
        }
        Mode::Hopper => {
            for v in 0..n {
                let f3 = triangles_at(g, v).len();
                if g.degree(v) >= 4 && f3 >= 3 {
                    return Err(DischargeError::TooManyTriangles { vertex: v, degree: g.degree(v), f3 });
                }
            }
            for (f, bad) in bad_face.iter_mut().enumerate() {
                if g.face_degree(f) != 3 {
                    continue;
                }
                let degs: Vec<usize> = g.face(f).walk_vertices().map(|v| g.degree(v)).collect();
                *bad = is_bad_triangle(&degs);
            }
            for f in (0..nf).filter(|&f| bad_face[f]) {
                for v in g.face(f).walk_vertices() {
                    if g.degree(v) == 4 {
                        bad_vertex[v] = true;
                    }
                }
            }
            for v in 0..n {
                let tris = triangles_at(g, v);
                let on: Vec<usize> = tris.iter().flat_map(|&f| g.face(f).vertex_set()).collect();
                let off_bad = || {
                    g.neighbors(v).iter().filter(|u| bad_vertex[**u] && !on.contains(u)).count()
                };
                match tris.as_slice() {
                    [_] => n_b_star[v] = Some(off_bad()),
                    [a, b] if shares_edge(g, *a, *b) => n_b[v] = Some(off_bad()),
                    _ => {}
                }
            }
        }
    }
    Ok(Classification { mode, triangle_kind, bad_face, bad_vertex, n_b_star, n_b })
}

/// A `(4,4,5⁻)` triangle.
pub fn is_bad_triangle(degrees: &[usize]) -> bool {
    degrees.len() == 3
        && degrees.iter().filter(|&&d| d == 4).count() >= 2
        && degrees.iter().all(|&d| d <= 5)
}

fn shares_edge(g: &PlaneGraph, a: usize, b: usize) -> bool {
    edge_neighbors(g, a).contains(&b)
}

/// Runs every rule of `mode` and returns the ledger of transfers.
pub fn apply_rules(g: &PlaneGraph, mode: Mode) -> Result<ChargeLedger, DischargeError> {
    let class = classify(g, mode)?;
    let mut ledger = initial_charges(g, mode);
    match mode {
        Mode::Hopper => hopper_rules(g, &class, &mut ledger),
        Mode::House => house_rules(g, &class, &mut ledger),
    }
    Ok(ledger)
}

fn hopper_rules(g: &PlaneGraph, class: &Classification, ledger: &mut ChargeLedger) {
    let n = g.vertex_count();
    let sixth = Rational::new(1, 6);
    let tris: Vec<Vec<usize>> = (0..n).map(|v| triangles_at(g, v)).collect();
    let share_triangle = |u: usize, v: usize| {
        tris[u].iter().any(|f| tris[v].contains(f))
    };

    // R1, and what each bad 4-vertex collects for R2
    let mut received = vec![int(0); n];
    for v in (0..n).filter(|&v| g.degree(v) >= 5) {
        for &u in g.neighbors(v) {
            if class.bad_vertex[u] && !share_triangle(u, v) {
                ledger.record("R1", Element::Vertex(v), Element::Vertex(u), sixth);
                received[u] += sixth;
            }
        }
    }

    // R2
    for u in (0..n).filter(|&u| class.bad_vertex[u]) {
        let bad: Vec<usize> = tris[u].iter().copied().filter(|&f| class.bad_face[f]).collect();
        if bad.len() > 1 {
            ledger.anomalies.push(Anomaly::SplitForward { vertex: u });
        }
        let share = received[u] / int(bad.len() as i64);
        for f in bad {
            ledger.record("R2", Element::Vertex(u), Element::Face(f), share);
        }
    }

    for v in 0..n {
        let d = g.degree(v);
        if d < 5 {
            continue;
        }
        match tris[v].as_slice() {
            [] => {}
            &[f] => {
                let (rule, amount) = single_triangle_rule(g, class, v, f);
                ledger.record(rule, Element::Vertex(v), Element::Face(f), amount);
            }
            &[a, b] if shares_edge(g, a, b) => {
                let on_pair = {
                    let mut s = g.face(a).vertex_set();
                    s.extend(g.face(b).vertex_set());
                    s.sort_unstable();
                    s.dedup();
                    s
                };
                if matches!(class.triangle_kind[a], TriangleKind::Cluster) {
                    ledger.anomalies.push(Anomaly::TriangleCluster { faces: vec![a, b] });
                }
                let (rule, amount) = match d {
                    5 => {
                        let nb = class.n_b[v].unwrap_or(0) as i64;
                        ("R4", int(1) - Rational::new(nb, 6))
                    }
                    6 => {
                        let fours = on_pair.iter().filter(|&&x| g.degree(x) == 4).count();
                        if fours <= 2 {
                            ("R5.2", Rational::new(3, 2))
                        } else {
                            ("R5.3", int(2))
                        }
                    }
                    _ => ("R6.2", int(2)),
                };
                // the doubleton is one element; its two faces share the amount
                let half = amount / int(2);
                ledger.record(rule, Element::Vertex(v), Element::Face(a), half);
                ledger.record(rule, Element::Vertex(v), Element::Face(b), half);
            }
            _ => ledger.anomalies.push(Anomaly::SeparateTriangles { vertex: v }),
        }
    }
}

/// Rule and amount for a 5⁺-vertex `v` whose only 3-face is `f`.
fn single_triangle_rule(
    g: &PlaneGraph,
    class: &Classification,
    v: usize,
    f: usize,
) -> (&'static str, Rational) {
    let others: Vec<usize> =
        g.face(f).walk_vertices().filter(|&x| x != v).map(|x| g.degree(x)).collect();
    single_triangle_amount(g.degree(v), [others[0], others[1]], class.n_b_star[v].unwrap_or(0))
}

/// What a 5⁺-vertex of degree `d` sends to its only 3-face, whose other two
/// vertices have degrees `others`.
pub fn single_triangle_amount(d: usize, others: [usize; 2], n_b_star: usize) -> (&'static str, Rational) {
    match d {
        5 => {
            let (lo, hi) = (others[0].min(others[1]), others[0].max(others[1]));
            if lo == 4 && hi <= 5 {
                ("R3.1", if n_b_star == 0 { int(1) } else { Rational::new(2, 3) })
            } else if lo == 4 {
                ("R3.2", Rational::new(1, 2))
            } else if lo >= 5 {
                ("R3.3", if n_b_star == 0 { int(1) } else { Rational::new(1, 2) })
            } else {
                ("R3", int(0))
            }
        }
        6 => ("R5.1", Rational::new(4, 3)),
        _ => ("R6.1", Rational::new(4, 3)),
    }
}

fn house_rules(g: &PlaneGraph, class: &Classification, ledger: &mut ChargeLedger) {
    for f in 0..g.face_count() {
        let walk: Vec<usize> = g.face(f).walk_vertices().collect();
        for v in walk {
            if let Some((rule, amount)) =
                house_amount(g.face_degree(f), class.bad_face[f], g.degree(v))
            {
                ledger.record(rule, Element::Face(f), Element::Vertex(v), amount);
            }
        }
    }
}

/// What a face of degree `face_degree` sends to one incident vertex of degree
/// `vertex_degree` in house mode.
pub fn house_amount(
    face_degree: usize,
    bad: bool,
    vertex_degree: usize,
) -> Option<(&'static str, Rational)> {
    let dv = vertex_degree;
    let out = match face_degree {
        4 if bad => ("R1", if dv == 4 { Rational::new(2, 3) } else { int(0) }),
        4 => ("R2", if dv <= 5 { Rational::new(1, 2) } else { int(0) }),
        5 => (
            "R3",
            match dv {
                4 => int(1),
                5 => Rational::new(1, 2),
                _ => int(0),
            },
        ),
        d if d >= 6 => ("R4", if dv <= 5 { int(1) } else { int(0) }),
        _ => return None,
    };
    Some(out)
}

/// Something whose final charge the argument claims is non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Unit {
    Vertex(usize),
    Face(usize),
    /// Two 3-faces forming a doubleton, judged by their combined charge.
    Doubleton(usize, usize),
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Vertex(v) => write!(f, "v{v}"),
            Unit::Face(x) => write!(f, "f{x}"),
            Unit::Doubleton(a, b) => write!(f, "f{a}+f{b}"),
        }
    }
}

/// Units with negative final charge. In hopper mode a doubleton counts as
/// one unit.
pub fn negative_units(g: &PlaneGraph, ledger: &ChargeLedger) -> Vec<(Unit, Rational)> {
    let zero = int(0);
    let mut out: Vec<(Unit, Rational)> = (0..g.vertex_count())
        .filter(|&v| ledger.final_vertex[v] < zero)
        .map(|v| (Unit::Vertex(v), ledger.final_vertex[v]))
        .collect();
    let kinds = match ledger.mode {
        Mode::Hopper => triangle_kinds(g),
        Mode::House => vec![TriangleKind::NotTriangle; g.face_count()],
    };
    for f in 0..g.face_count() {
        let (unit, charge) = match kinds[f] {
            TriangleKind::Doubleton { partner } if partner < f => continue,
            TriangleKind::Doubleton { partner } => {
                (Unit::Doubleton(f, partner), ledger.final_face[f] + ledger.final_face[partner])
            }
            _ => (Unit::Face(f), ledger.final_face[f]),
        };
        if charge < zero {
            out.push((unit, charge));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// Minimum degree at most 3: `Z0` applies without discharging.
    Z0,
    /// Some library configuration is present.
    ConfigurationsFound,
    /// No configuration and no negative unit: would refute the theorem.
    TheoremContradiction,
    /// No configuration, but some unit ended negative.
    RuleGap,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Z0 => "Z0",
            Verdict::ConfigurationsFound => "CONFIGURATIONS-FOUND",
            Verdict::TheoremContradiction => "THEOREM-CONTRADICTION",
            Verdict::RuleGap => "RULE-GAP",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub class: Class,
    pub verdict: Verdict,
    /// `None` for the `Z0` shortcut.
    pub ledger: Option<ChargeLedger>,
    pub conserved: bool,
    pub negative: Vec<(Unit, Rational)>,
    pub configurations: Vec<Match>,
}

/// Discharges `g` in the mode of `class` and cross-checks the result against
/// the configuration matcher.
pub fn audit(g: &PlaneGraph, class: Class) -> Result<AuditReport, DischargeError> {
    let mode = Mode::for_class(class);
    check_mode(g, mode)?;
    let configurations = find_configurations(g, class);
    if g.min_degree().is_none_or(|d| d <= 3) {
        return Ok(AuditReport {
            class,
            verdict: Verdict::Z0,
            ledger: None,
            conserved: true,
            negative: Vec::new(),
            configurations,
        });
    }
    let ledger = apply_rules(g, mode)?;
    let conserved = ledger.is_conserved() && ledger.initial_total() == mode.expected_total();
    let negative = negative_units(g, &ledger);
    let verdict = if !configurations.is_empty() {
        Verdict::ConfigurationsFound
    } else if negative.is_empty() && ledger.anomalies.is_empty() {
        Verdict::TheoremContradiction
    } else {
        Verdict::RuleGap
    };
    Ok(AuditReport { class, verdict, ledger: Some(ledger), conserved, negative, configurations })
}
