//! Evaluation of vertex-degree-based indices.
//!
//! `I(D) = 1/2 * sum over arcs uv of phi(out(u), in(v))`. The arc sum and the
//! spectrum sum are two independent routes to the same number.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::phi::{Family, PhiSpec};
use crate::spectrum::DegreeSpectrum;

/// Halved sum of `phi` over the arcs of `d`.
pub fn index_arc_sum(d: &Digraph, spec: &PhiSpec) -> Result<f64> {
    if d.order() < 2 {
        return Err(Error::TooFewVertices(d.order()));
    }
    if let Some(v) = d.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let out = d.out_degrees();
    let inn = d.in_degrees();
    let total: f64 = d.arcs().map(|(u, v)| spec.eval(out[u], inn[v])).sum();
    Ok(0.5 * total)
}

/// Halved sum of `p(i, j) * phi(i, j)` over `i <= j`.
pub fn index_spectrum_sum(s: &DegreeSpectrum, spec: &PhiSpec) -> f64 {
    let total: f64 = s
        .p_entries()
        .map(|((i, j), c)| c as f64 * spec.eval(i, j))
        .sum();
    0.5 * total
}

/// Exact `2 * I(D)` for specs whose weights are all integers
/// (non-negative integer exponents of the two general families).
///
/// Returns `None` for other specs, on arithmetic overflow, or when `d` has an
/// isolated vertex. Halving is left to the caller because `I(D)` itself need
/// not be an integer: the single arc has second Zagreb index 1/2.
pub fn doubled_integer_index(d: &Digraph, spec: &PhiSpec) -> Option<u128> {
    let k = spec.integer_exponent()?;
    if d.order() < 2 || d.has_isolated_vertex() {
        return None;
    }
    let out = d.out_degrees();
    let inn = d.in_degrees();
    d.arcs().try_fold(0u128, |acc, (u, v)| {
        let (i, j) = (out[u] as u128, inn[v] as u128);
        let base = match spec.family() {
            Family::GeneralRandic => i * j,
            _ => i + j,
        };
        acc.checked_add(base.checked_pow(k)?)
    })
}

/// Classical edge-sum index of a simple graph: `sum over edges uv of
/// phi(deg u, deg v)`.
pub fn graph_index<I>(n: usize, edges: I, spec: &PhiSpec) -> Result<f64>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    // validates loops, duplicates and ranges
    let sym = Digraph::symmetrize(n, edges.iter().copied())?;
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if let Some(v) = sym.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    Ok(edges.iter().map(|&(u, v)| spec.eval(deg[u], deg[v])).sum())
}
