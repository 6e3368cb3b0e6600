//! Seeded random digraphs for tests and benchmarks.

use rand::Rng;

use crate::digraph::Digraph;

/// A random digraph on `n >= 2` vertices without isolated vertices.
///
/// Each ordered pair is an arc with probability `density`; every vertex still
/// isolated afterwards gets one arc to or from a random other vertex.
pub fn random_nonisolated<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Digraph {
    assert!(n >= 2, "need n >= 2, got {n}");
    let mut arcs = Vec::new();
    let mut touched = vec![false; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(density) {
                arcs.push((u, v));
                touched[u] = true;
                touched[v] = true;
            }
        }
    }
    for u in 0..n {
        if touched[u] {
            continue;
        }
        let mut v = rng.random_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let arc = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
        if !arcs.contains(&arc) {
            arcs.push(arc);
        }
        touched[u] = true;
        touched[v] = true;
    }
    Digraph::new(n, arcs).expect("generated arcs are valid")
}

/// A random simple graph on `n >= 2` vertices without isolated vertices, as
/// an edge list with `u < v`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Vec<(usize, usize)> {
    assert!(n >= 2, "need n >= 2, got {n}");
    let mut edges = Vec::new();
    let mut deg = vec![0usize; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                edges.push((u, v));
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    for u in 0..n {
        if deg[u] > 0 {
            continue;
        }
        let mut v = rng.random_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        edges.push((u.min(v), u.max(v)));
        deg[u] += 1;
        deg[v] += 1;
    }
    edges
}

/// `count` random isolated-free digraphs with orders drawn from `orders` and
/// densities from `[0.1, 0.9)`.
pub fn corpus<R: Rng + ?Sized>(
    rng: &mut R,
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
) -> Vec<Digraph> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(orders.clone());
            let density = rng.random_range(0.1..0.9);
            random_nonisolated(rng, n, density)
        })
        .collect()
}
