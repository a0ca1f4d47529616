//! Small named plane graphs, embedded from integer straight-line drawings.

use alloc::vec::Vec;

use crate::plane::PlaneGraph;

/// cos/sin * 1000 at 90 + 36k degrees, k = 0..10.
const DECAGON: [(i64, i64); 10] = [
    (0, 1000),
    (-588, 809),
    (-951, 309),
    (-951, -309),
    (-588, -809),
    (0, -1000),
    (588, -809),
    (951, -309),
    (951, 309),
    (588, 809),
];

fn on_circle(radius: i64, step: usize) -> (i64, i64) {
    let (x, y) = DECAGON[step % 10];
    (x * radius, y * radius)
}

fn drawn(coords: &[(i64, i64)], edges: &[(usize, usize)]) -> PlaneGraph {
    PlaneGraph::from_straight_line(coords, edges).expect("catalog drawings are planar")
}

pub fn single_vertex() -> PlaneGraph {
    PlaneGraph::build(alloc::vec![Vec::new()]).expect("one vertex")
}

/// Path on `n >= 1` vertices.
pub fn path(n: usize) -> PlaneGraph {
    let coords: Vec<_> = (0..n as i64).map(|i| (i, 0)).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    drawn(&coords, &edges)
}

/// Cycle on `n >= 3` vertices, drawn as a regular-ish polygon.
pub fn cycle(n: usize) -> PlaneGraph {
    // points on a parabola arc are in convex position
    let coords: Vec<_> = (0..n as i64).map(|i| (i, i * i)).collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    drawn(&coords, &edges)
}

/// Star with center 0 and `k` leaves.
pub fn star(k: usize) -> PlaneGraph {
    let mut coords = alloc::vec![(0, 0)];
    coords.extend((0..k).map(|i| on_circle(1, i * 10 / k.max(1))));
    if k > 10 {
        coords.truncate(1);
        coords.extend((0..k as i64).map(|i| (i - k as i64 / 2, 1)));
    }
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    drawn(&coords, &edges)
}

pub fn k4() -> PlaneGraph {
    let coords = [(0, 10), (-9, -5), (9, -5), (0, 0)];
    drawn(&coords, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
}

pub fn octahedron() -> PlaneGraph {
    let coords = [(0, 100), (-87, -50), (87, -50), (0, -20), (17, 10), (-17, 10)];
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 3),
        (3, 1),
        (3, 2),
        (4, 2),
        (4, 0),
        (5, 0),
        (5, 1),
    ];
    drawn(&coords, &edges)
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> PlaneGraph {
    let coords = [(0, 100), (-87, -50), (87, -50), (0, 20), (-17, -10), (17, -10)];
    let edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
    drawn(&coords, &edges)
}

pub fn cube() -> PlaneGraph {
    let coords = [(0, 0), (10, 0), (10, 10), (0, 10), (3, 3), (7, 3), (7, 7), (3, 7)];
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (0, 4),
        (1, 5),
        (2, 6),
        (3, 7),
    ];
    drawn(&coords, &edges)
}

/// Schlegel diagram of the dodecahedron: outer pentagon, a 10-cycle, inner
/// pentagon.
pub fn dodecahedron() -> PlaneGraph {
    let mut coords = Vec::with_capacity(20);
    coords.extend((0..5).map(|k| on_circle(100, 2 * k)));
    coords.extend((0..10).map(|j| on_circle(60, j)));
    coords.extend((0..5).map(|k| on_circle(30, 2 * k + 1)));
    let (a, b, c) = (0, 5, 15);
    let mut edges = Vec::with_capacity(30);
    for k in 0..5 {
        edges.push((a + k, a + (k + 1) % 5));
        edges.push((a + k, b + 2 * k));
        edges.push((b + 2 * k + 1, c + k));
        edges.push((c + k, c + (k + 1) % 5));
    }
    for j in 0..10 {
        edges.push((b + j, b + (j + 1) % 10));
    }
    drawn(&coords, &edges)
}

/// Two triangles sharing exactly vertex 0.
pub fn hopper() -> PlaneGraph {
    let coords = [(0, 0), (-2, 1), (-2, -1), (2, 1), (2, -1)];
    drawn(&coords, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// A square 0-1-2-3 with roof vertex 4 on edge 2-3.
pub fn house() -> PlaneGraph {
    let coords = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 3)];
    drawn(&coords, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])
}

/// Two triangles sharing edge 0-1 (K4 minus the edge 2-3).
pub fn diamond() -> PlaneGraph {
    let coords = [(0, -1), (0, 1), (-2, 0), (2, 0)];
    drawn(&coords, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
}
