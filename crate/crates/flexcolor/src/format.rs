//! Line-oriented text formats.
//!
//! Every format starts with a header line (`planegraph v1`, `lists v1`,
//! `requests v1`). Blank lines and `#` comments are ignored everywhere.

use std::fmt::Write as _;

use flexcolor_core::discharge::ChargeLedger;
use flexcolor_core::listcolor::{Color, ListAssignment};
use flexcolor_core::plane::PlaneError;
use flexcolor_core::resolve::{Request, RequestError, Resolution, Step, WeightedRequest};
use flexcolor_core::{Graph, PlaneGraph, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header `{0}`")]
    MissingHeader(&'static str),
    #[error("invalid plane graph: {0}")]
    Graph(#[from] PlaneError),
    #[error("invalid request: {0}")]
    Request(#[from] RequestError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &'static str,
) -> Result<(), ParseError> {
    match lines.next() {
        Some((_, l)) if l.split_whitespace().eq(header.split_whitespace()) => Ok(()),
        _ => Err(ParseError::MissingHeader(header)),
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T, ParseError> {
    s.parse().map_err(|_| syntax(line, format!("expected {what}, found `{s}`")))
}

/// Splits `<keyword> <head...>: <tail>`.
fn split_entry<'a>(line: usize, text: &'a str, keyword: &str) -> Result<(&'a str, &'a str), ParseError> {
    let rest = text
        .strip_prefix(keyword)
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| syntax(line, format!("expected `{keyword} ...`, found `{text}`")))?;
    rest.split_once(':').ok_or_else(|| syntax(line, "missing `:`"))
}

pub fn parse_plane_graph(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "planegraph v1")?;
    let (nline, first) = lines.next().ok_or_else(|| syntax(0, "missing `n <count>` line"))?;
    let count = first
        .strip_prefix("n ")
        .ok_or_else(|| syntax(nline, "expected `n <count>`"))?;
    let n: usize = parse_num(nline, count.trim(), "vertex count")?;
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, text) in lines {
        let (head, tail) = split_entry(line, text, "rot")?;
        let v: usize = parse_num(line, head.trim(), "vertex id")?;
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range (n = {n})")));
        }
        if rotation[v].is_some() {
            return Err(syntax(line, format!("duplicate `rot {v}` line")));
        }
        let ns = tail
            .split_whitespace()
            .map(|s| parse_num::<usize>(line, s, "neighbor id"))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&u) = ns.iter().find(|&&u| u >= n) {
            return Err(syntax(line, format!("neighbor {u} out of range (n = {n})")));
        }
        rotation[v] = Some(ns);
    }
    // a vertex without a `rot` line is isolated, which only makes sense for n = 1
    let rotation = rotation.into_iter().map(Option::unwrap_or_default).collect();
    Ok(PlaneGraph::build(rotation)?)
}

pub fn write_plane_graph(g: &PlaneGraph) -> String {
    let mut out = format!("planegraph v1\nn {}\n", g.vertex_count());
    for (v, ns) in g.rotations().iter().enumerate() {
        let _ = write!(out, "rot {v}:");
        for u in ns {
            let _ = write!(out, " {u}");
        }
        out.push('\n');
    }
    out
}

/// Parses `lists v1` for a graph with `n` vertices; every vertex needs a line.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "lists v1")?;
    let mut lists: Vec<Option<Vec<Color>>> = vec![None; n];
    for (line, text) in lines {
        let (head, tail) = split_entry(line, text, "L")?;
        let v: usize = parse_num(line, head.trim(), "vertex id")?;
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range (n = {n})")));
        }
        if lists[v].is_some() {
            return Err(syntax(line, format!("duplicate list for vertex {v}")));
        }
        let cs = tail
            .split_whitespace()
            .map(|s| parse_num::<Color>(line, s, "color"))
            .collect::<Result<Vec<_>, _>>()?;
        lists[v] = Some(cs);
    }
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| syntax(0, format!("no list for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ListAssignment::new(lists))
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut out = String::from("lists v1\n");
    for v in 0..l.vertex_count() {
        let _ = write!(out, "L {v}:");
        for c in l.list(v) {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

/// A parsed request file: unit requests (`r`) or weights (`w`), not both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RequestFile {
    Plain(Request),
    Weighted(WeightedRequest),
}

impl RequestFile {
    pub fn weighted(&self) -> WeightedRequest {
        match self {
            RequestFile::Plain(r) => r.to_weighted(),
            RequestFile::Weighted(w) => w.clone(),
        }
    }
}

/// Parses `requests v1`, validating every pair against `l`.
pub fn parse_requests(text: &str, l: &ListAssignment) -> Result<RequestFile, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "requests v1")?;
    let mut plain = Vec::new();
    let mut weighted = Vec::new();
    for (line, text) in lines {
        if text.starts_with('r') {
            let (head, tail) = split_entry(line, text, "r")?;
            let v = parse_num(line, head.trim(), "vertex id")?;
            let c = parse_num(line, tail.trim(), "color")?;
            plain.push((line, (v, c)));
        } else {
            let (head, tail) = split_entry(line, text, "w")?;
            let mut it = head.split_whitespace();
            let (Some(v), Some(c), None) = (it.next(), it.next(), it.next()) else {
                return Err(syntax(line, "expected `w <v> <c>: <weight>`"));
            };
            let v = parse_num(line, v, "vertex id")?;
            let c = parse_num(line, c, "color")?;
            let w = parse_decimal(tail.trim()).ok_or_else(|| {
                syntax(line, format!("expected a non-negative decimal, found `{}`", tail.trim()))
            })?;
            weighted.push((line, ((v, c), w)));
        }
    }
    if !plain.is_empty() && !weighted.is_empty() {
        return Err(syntax(weighted[0].0, "cannot mix `r` and `w` lines"));
    }
    let at = |line: usize, e: RequestError| syntax(line, e.to_string());
    if !weighted.is_empty() {
        for (line, (p, w)) in &weighted {
            WeightedRequest::new(l, [(*p, *w)]).map_err(|e| at(*line, e))?;
        }
        return Ok(RequestFile::Weighted(WeightedRequest::new(l, weighted.into_iter().map(|x| x.1))?));
    }
    for (line, p) in &plain {
        Request::new(l, [*p]).map_err(|e| at(*line, e))?;
    }
    Ok(RequestFile::Plain(Request::new(l, plain.into_iter().map(|x| x.1))?))
}

/// Exact value of a decimal such as `3`, `0.25` or `.5`.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let (int_part, frac) = s.split_once('.').unwrap_or((s, ""));
    if (int_part.is_empty() && frac.is_empty())
        || !int_part.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let whole: i64 = if int_part.is_empty() { 0 } else { int_part.parse().ok()? };
    let scale = 10i64.checked_pow(u32::try_from(frac.len()).ok()?)?;
    let num: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    Some(Rational::from_integer(whole) + Rational::new(num, scale))
}

/// `p/q`, or just `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn write_vertices(out: &mut String, vs: &[usize]) {
    for v in vs {
        let _ = write!(out, " {v}");
    }
}

fn write_step(out: &mut String, step: &Step) {
    let _ = write!(out, "{} peel", step.config);
    write_vertices(out, &step.peel);
    out.push_str(" boundary");
    write_vertices(out, &step.boundary);
    let _ = write!(out, " sizes {}", step.residual);
}

/// `step <i>: <id> peel <v...> boundary <v...>` per peel, then the residue.
pub fn write_resolution(res: &Resolution) -> String {
    let mut out = format!("resolution class {} k {} steps {}\n", res.class, res.k, res.len());
    for (i, step) in res.steps.iter().enumerate() {
        let _ = write!(out, "step {}: ", i + 1);
        write_step(&mut out, step);
        out.push('\n');
    }
    match &res.residue {
        Some(step) => {
            out.push_str("residue: ");
            write_step(&mut out, step);
            out.push('\n');
        }
        None => out.push_str("residue: empty\n"),
    }
    out
}

pub fn write_coloring(coloring: &[Color]) -> String {
    coloring.iter().enumerate().map(|(v, c)| format!("phi {v}: {c}\n")).collect()
}

/// Charge table followed by the transfer log.
pub fn write_ledger(ledger: &ChargeLedger) -> String {
    let mut out = format!("ledger mode {}\n", ledger.mode);
    for v in 0..ledger.initial_vertex.len() {
        let _ = writeln!(
            out,
            "charge v{v}: {} -> {}",
            fmt_rational(&ledger.initial_vertex[v]),
            fmt_rational(&ledger.final_vertex[v])
        );
    }
    for f in 0..ledger.initial_face.len() {
        let _ = writeln!(
            out,
            "charge f{f}: {} -> {}",
            fmt_rational(&ledger.initial_face[f]),
            fmt_rational(&ledger.final_face[f])
        );
    }
    for t in &ledger.transfers {
        let _ = writeln!(out, "rule {}: {} -> {} : {}", t.rule, t.from, t.to, fmt_rational(&t.amount));
    }
    for a in &ledger.anomalies {
        let _ = writeln!(out, "anomaly: {a:?}");
    }
    let _ = writeln!(
        out,
        "total: {} -> {}",
        fmt_rational(&ledger.initial_total()),
        fmt_rational(&ledger.final_total())
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use flexcolor_core::catalog;

    #[test]
    fn plane_graph_round_trip() {
        for g in [catalog::k4(), catalog::dodecahedron(), catalog::path(2), catalog::single_vertex()] {
            let text = write_plane_graph(&g);
            assert_eq!(parse_plane_graph(&text).unwrap(), g);
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# k3\nplanegraph v1\n\nn 3\nrot 0: 1 2 # first\nrot 1: 2 0\nrot 2: 0 1\n";
        assert_eq!(parse_plane_graph(text).unwrap().face_count(), 2);
    }

    #[test]
    fn plane_graph_errors_carry_line_numbers() {
        let dup = "planegraph v1\nn 2\nrot 0: 1\nrot 0: 1\n";
        assert!(matches!(parse_plane_graph(dup), Err(ParseError::Syntax { line: 4, .. })));
        let range = "planegraph v1\nn 2\nrot 0: 5\n";
        assert!(matches!(parse_plane_graph(range), Err(ParseError::Syntax { line: 3, .. })));
        let asym = "planegraph v1\nn 3\nrot 0: 1 2\nrot 1: 0\nrot 2:\n";
        assert!(matches!(
            parse_plane_graph(asym),
            Err(ParseError::Graph(PlaneError::InconsistentRotation(..)))
        ));
        assert_eq!(parse_plane_graph("n 1\n"), Err(ParseError::MissingHeader("planegraph v1")));
        let junk = "planegraph v1\nn 2\nrot 0: 1 x\n";
        assert!(matches!(parse_plane_graph(junk), Err(ParseError::Syntax { line: 3, .. })));
    }

    #[test]
    fn lists_round_trip() {
        let l = ListAssignment::new(vec![vec![3, 1], vec![0, 2, 4]]);
        assert_eq!(parse_lists(&write_lists(&l), 2).unwrap(), l);
        assert!(parse_lists("lists v1\nL 0: 1\n", 2).is_err());
    }

    #[test]
    fn requests() {
        let l = ListAssignment::uniform(2, &[0, 1, 2, 3, 4]);
        let RequestFile::Plain(r) = parse_requests("requests v1\nr 0: 3\n", &l).unwrap() else {
            panic!("expected unit request");
        };
        assert_eq!(r.get(0), Some(3));
        let err = parse_requests("requests v1\nr 0: 9\n", &l).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }), "{err}");
        let RequestFile::Weighted(w) =
            parse_requests("requests v1\nw 0 1: 0.25\nw 1 1: 2\n", &l).unwrap()
        else {
            panic!("expected weights");
        };
        assert_eq!(w.total(), Rational::new(9, 4));
        assert!(parse_requests("requests v1\nw 0 1: -1\n", &l).is_err());
        assert!(parse_requests("requests v1\nr 0: 1\nw 1 1: 1\n", &l).is_err());
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_decimal("3"), Some(Rational::from_integer(3)));
        assert_eq!(parse_decimal("0.125"), Some(Rational::new(1, 8)));
        assert_eq!(parse_decimal(".5"), Some(Rational::new(1, 2)));
        assert_eq!(parse_decimal("1e3"), None);
        assert_eq!(parse_decimal("."), None);
        assert_eq!(parse_decimal(""), None);
        assert_eq!(fmt_rational(&Rational::new(-2, 6)), "-1/3");
        assert_eq!(fmt_rational(&Rational::from_integer(-8)), "-8");
    }
}
