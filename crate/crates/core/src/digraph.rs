//! Loop-free digraphs and their edge-list text form.
//!
//! Small digraphs (n <= 8) are stored as a dense bitmask over the n(n-1)
//! ordered-pair slots, larger ones as a sorted arc list. Slot `k` holds the
//! arc `(u, v)` with `k = u * (n - 1) + v - [v > u]`, so ascending slot order
//! is the row-major order on arcs and both forms compare equal arc by arc.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Largest order stored as a dense bitmask.
pub const DENSE_MAX_ORDER: usize = 8;

/// Number of ordered-pair slots of a loop-free digraph on `n` vertices.
pub const fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1)
}

/// Slot of the arc `(u, v)`; `u != v`, both `< n`.
#[inline]
pub const fn slot_index(n: usize, u: usize, v: usize) -> usize {
    u * (n - 1) + if v > u { v - 1 } else { v }
}

/// Inverse of [`slot_index`].
#[inline]
pub const fn slot_arc(n: usize, slot: usize) -> (usize, usize) {
    let u = slot / (n - 1);
    let r = slot % (n - 1);
    (u, if r >= u { r + 1 } else { r })
}

/// Render a dense encoding the way reports print it.
pub fn mask_hex(mask: u64) -> String {
    format!("{mask:#x}")
}

#[derive(Clone, Debug)]
enum ArcStore {
    Dense(u64),
    List(Vec<(usize, usize)>),
}

/// A strict digraph on the vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    store: ArcStore,
}

impl Digraph {
    /// Build a digraph from an arc list, rejecting loops, duplicates and
    /// out-of-range ids.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in arcs {
            check_arc(n, u, v)?;
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(Self::from_sorted(n, seen.into_iter().collect()))
    }

    fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let store = if n <= DENSE_MAX_ORDER {
            ArcStore::Dense(
                arcs.iter()
                    .fold(0u64, |m, &(u, v)| m | 1 << slot_index(n, u, v)),
            )
        } else {
            ArcStore::List(arcs)
        };
        Digraph { n, store }
    }

    /// Decode a dense slot mask.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > DENSE_MAX_ORDER {
            return Err(Error::DenseOrder {
                n,
                max: DENSE_MAX_ORDER,
            });
        }
        let slots = slot_count(n);
        if slots < 64 && mask >> slots != 0 {
            return Err(Error::MaskOutOfRange { mask, n, slots });
        }
        Ok(Digraph {
            n,
            store: ArcStore::Dense(mask),
        })
    }

    /// The same digraph held in sorted-list form regardless of order.
    pub fn to_list_form(&self) -> Self {
        Digraph {
            n: self.n,
            store: ArcStore::List(self.arcs().collect()),
        }
    }

    /// Dense slot mask, when `n <= DENSE_MAX_ORDER`.
    pub fn mask(&self) -> Option<u64> {
        match &self.store {
            ArcStore::Dense(m) => Some(*m),
            ArcStore::List(arcs) if self.n <= DENSE_MAX_ORDER => Some(
                arcs.iter()
                    .fold(0u64, |m, &(u, v)| m | 1 << slot_index(self.n, u, v)),
            ),
            ArcStore::List(_) => None,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        match &self.store {
            ArcStore::Dense(m) => m.count_ones() as usize,
            ArcStore::List(arcs) => arcs.len(),
        }
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> Arcs<'_> {
        match &self.store {
            ArcStore::Dense(m) => Arcs::Dense {
                n: self.n,
                rest: *m,
            },
            ArcStore::List(arcs) => Arcs::List(arcs.iter()),
        }
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        match &self.store {
            ArcStore::Dense(m) => m >> slot_index(self.n, u, v) & 1 == 1,
            ArcStore::List(arcs) => arcs.binary_search(&(u, v)).is_ok(),
        }
    }

    /// Number of arcs with tail `u`.
    ///
    /// Panics if `u >= n`.
    pub fn out_degree(&self, u: usize) -> usize {
        assert!(u < self.n, "vertex {u} out of range for n = {}", self.n);
        match &self.store {
            ArcStore::Dense(m) => {
                let row = (1u64 << (self.n - 1)) - 1;
                (m >> (u * (self.n - 1)) & row).count_ones() as usize
            }
            ArcStore::List(arcs) => {
                let lo = arcs.partition_point(|&(t, _)| t < u);
                let hi = arcs.partition_point(|&(t, _)| t <= u);
                hi - lo
            }
        }
    }

    /// Number of arcs with head `u`.
    ///
    /// Panics if `u >= n`.
    pub fn in_degree(&self, u: usize) -> usize {
        assert!(u < self.n, "vertex {u} out of range for n = {}", self.n);
        (0..self.n).filter(|&t| self.has_arc(t, u)).count()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (u, _) in self.arcs() {
            out[u] += 1;
        }
        out
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut inn = vec![0; self.n];
        for (_, v) in self.arcs() {
            inn[v] += 1;
        }
        inn
    }

    /// First vertex with both degrees zero.
    pub fn isolated_vertex(&self) -> Option<usize> {
        let mut touched = vec![false; self.n];
        for (u, v) in self.arcs() {
            touched[u] = true;
            touched[v] = true;
        }
        touched.iter().position(|t| !t)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertex().is_some()
    }

    /// Replace every edge `{u, v}` of a simple graph with the arcs `(u, v)`
    /// and `(v, u)`.
    pub fn symmetrize<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut arcs = BTreeSet::new();
        for (u, v) in edges {
            check_arc(n, u, v)?;
            if !arcs.insert((u, v)) || !arcs.insert((v, u)) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self::from_sorted(n, arcs.into_iter().collect()))
    }

    /// Parse whitespace-separated `u v` lines. `#` starts a comment. Without
    /// `n_override` the order is one more than the largest id seen.
    pub fn parse_edge_list(text: &str, n_override: Option<usize>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 2 {
                return Err(Error::WrongArity(tokens.len()).at_line(line));
            }
            let parse = |tok: &str| {
                tok.parse::<usize>()
                    .map_err(|_| Error::MalformedToken(tok.to_string()).at_line(line))
            };
            arcs.push((parse(tokens[0])?, parse(tokens[1])?, line));
        }

        let n = match n_override {
            Some(n) => n,
            None => arcs
                .iter()
                .map(|&(u, v, _)| u.max(v) + 1)
                .max()
                .ok_or(Error::EmptyInput)?,
        };
        if n == 0 {
            return Err(Error::EmptyInput);
        }

        let mut seen = BTreeSet::new();
        for &(u, v, line) in &arcs {
            check_arc(n, u, v).map_err(|e| e.at_line(line))?;
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v).at_line(line));
            }
        }
        Ok(Self::from_sorted(n, seen.into_iter().collect()))
    }

    /// Canonical edge-list text: a `# n=<n>` header then one sorted arc per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n={}\n", self.n);
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn check_arc(n: usize, u: usize, v: usize) -> Result<()> {
    for id in [u, v] {
        if id >= n {
            return Err(Error::VertexOutOfRange { id, n });
        }
    }
    if u == v {
        return Err(Error::LoopArc(u));
    }
    Ok(())
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs().eq(other.arcs())
    }
}

impl Eq for Digraph {}

impl Hash for Digraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for arc in self.arcs() {
            arc.hash(state);
        }
    }
}

/// Iterator over the arcs of a [`Digraph`] in row-major order.
pub enum Arcs<'a> {
    Dense { n: usize, rest: u64 },
    List(std::slice::Iter<'a, (usize, usize)>),
}

impl Iterator for Arcs<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            Arcs::Dense { n, rest } => {
                if *rest == 0 {
                    return None;
                }
                let slot = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                Some(slot_arc(*n, slot))
            }
            Arcs::List(it) => it.next().copied(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn slot_roundtrip() {
        for n in 2..=8 {
            for s in 0..slot_count(n) {
                let (u, v) = slot_arc(n, s);
                assert_ne!(u, v);
                assert_eq!(slot_index(n, u, v), s);
            }
        }
    }

    #[test]
    fn parses_symmetric_pair() {
        let d = Digraph::parse_edge_list("0 1\n1 0", None).unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Digraph::parse_edge_list("0 0", None).unwrap_err();
        assert_eq!(err, Error::LoopArc(0).at_line(1));

        let err = Digraph::parse_edge_list("0 1\n0 1", None).unwrap_err();
        assert_eq!(err, Error::DuplicateArc(0, 1).at_line(2));

        let err = Digraph::parse_edge_list("0 1\n# note\n1 x", None).unwrap_err();
        assert_eq!(err, Error::MalformedToken("x".into()).at_line(3));

        let err = Digraph::parse_edge_list("0 1\n2 3", Some(3)).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { id: 3, n: 3 }.at_line(2));

        let err = Digraph::parse_edge_list("0 1 2", None).unwrap_err();
        assert_eq!(err, Error::WrongArity(3).at_line(1));

        assert_eq!(
            Digraph::parse_edge_list("# nothing\n", None).unwrap_err(),
            Error::EmptyInput
        );
    }

    #[test]
    fn comments_and_override() {
        let d = Digraph::parse_edge_list("# n=5\n0 1 # first\n\n 1\t2 \n", Some(5)).unwrap();
        assert_eq!(d.order(), 5);
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_isolated_vertex());
    }

    #[test]
    fn degrees() {
        let c = cycle3();
        assert_eq!((c.out_degree(0), c.in_degree(0)), (1, 1));

        let star = Digraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!((star.out_degree(0), star.in_degree(0)), (3, 0));

        let arc = Digraph::new(2, [(0, 1)]).unwrap();
        assert_eq!((arc.out_degree(1), arc.in_degree(1)), (0, 1));
    }

    #[test]
    fn list_form_degrees_match_dense() {
        let d = Digraph::new(5, [(0, 1), (0, 4), (3, 1), (4, 3), (2, 0)]).unwrap();
        let l = d.to_list_form();
        assert_eq!(d, l);
        for u in 0..5 {
            assert_eq!(d.out_degree(u), l.out_degree(u));
            assert_eq!(d.in_degree(u), l.in_degree(u));
        }
        assert_eq!(l.mask(), d.mask());
    }

    #[test]
    fn isolated_vertices() {
        assert!(Digraph::new(3, [(0, 1)]).unwrap().has_isolated_vertex());
        assert!(!cycle3().has_isolated_vertex());
        assert!(Digraph::new(1, []).unwrap().has_isolated_vertex());
    }

    #[test]
    fn symmetrize_edges() {
        let k2 = Digraph::symmetrize(2, [(0, 1)]).unwrap();
        assert_eq!(k2.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        let path = Digraph::symmetrize(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.arc_count(), 4);
        let k4 =
            Digraph::symmetrize(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(k4.arc_count(), 12);
        assert!((0..4).all(|u| k4.out_degree(u) == 3 && k4.in_degree(u) == 3));
        assert_eq!(
            Digraph::symmetrize(2, [(1, 1)]).unwrap_err(),
            Error::LoopArc(1)
        );
        assert_eq!(
            Digraph::symmetrize(3, [(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
    }

    #[test]
    fn large_orders_use_list_form() {
        let n = 12;
        let d = Digraph::new(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap();
        assert_eq!(d.mask(), None);
        assert!((0..n).all(|u| d.out_degree(u) == 1 && d.in_degree(u) == 1));
        let back = Digraph::parse_edge_list(&d.to_edge_list(), None).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn mask_bounds() {
        assert!(Digraph::from_mask(2, 0b100).is_err());
        assert!(Digraph::from_mask(9, 0).is_err());
        let d = Digraph::from_mask(3, 0b101).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
    }
}
