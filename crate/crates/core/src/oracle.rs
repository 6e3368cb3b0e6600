//! Exhaustive search over all labeled digraphs without isolated vertices.
//!
//! A digraph on `n <= 6` vertices is its slot mask (see [`crate::digraph`]),
//! so the search space is `0..2^(n(n-1))`. Work is split into contiguous mask
//! blocks, one per worker; each block is scanned in ascending order and the
//! per-block results are merged in block order, which makes every report
//! independent of the worker count.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::thread;

use serde::{Serialize, Serializer};

use crate::catalog::{BoundStatement, EqualityClass};
use crate::digraph::{mask_hex, slot_count, slot_index, Digraph};
use crate::error::{Error, Result};
use crate::families::star_orientations;
use crate::phi::PhiSpec;
use crate::theorems::check_hypothesis;

pub const MIN_ENUMERATION_ORDER: usize = 2;
pub const MAX_ENUMERATION_ORDER: usize = 6;
/// Absolute tolerance for attaining-set membership and bound comparisons.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Min,
    Max,
}

impl std::str::FromStr for Extremum {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "min" => Ok(Extremum::Min),
            "max" => Ok(Extremum::Max),
            _ => Err(format!("expected `min` or `max`, got `{s}`")),
        }
    }
}

impl crate::theorems::Side {
    pub fn extremum(self) -> Extremum {
        match self {
            crate::theorems::Side::Lower => Extremum::Min,
            crate::theorems::Side::Upper => Extremum::Max,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    pub tie_tolerance: f64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: thread::available_parallelism().map_or(1, NonZeroUsize::get),
            tie_tolerance: TIE_TOLERANCE,
        }
    }
}

impl SearchOptions {
    pub fn with_workers(workers: usize) -> Self {
        SearchOptions {
            workers: workers.max(1),
            ..Self::default()
        }
    }
}

fn serialize_masks<S: Serializer>(masks: &[u64], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(masks.iter().map(|&m| mask_hex(m)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub spec: PhiSpec,
    pub direction: Extremum,
    pub extremal_value: f64,
    /// Slot masks, ascending.
    #[serde(serialize_with = "serialize_masks")]
    pub attaining: Vec<u64>,
    pub enumerated_count: u64,
    pub tie_tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub statement: BoundStatement,
    pub hypothesis_holds: bool,
    pub observed_extremal: f64,
    pub bound_respected: bool,
    pub tight: bool,
    pub equality_set_matches: bool,
    pub attaining_count: usize,
    #[serde(serialize_with = "serialize_masks")]
    pub counterexamples: Vec<u64>,
}

impl VerificationOutcome {
    /// A statement whose hypothesis fails at this order makes no claim; any
    /// other must respect its bound and be attained exactly by its class.
    pub fn is_consistent(&self) -> bool {
        !self.hypothesis_holds || (self.bound_respected && self.equality_set_matches)
    }
}

/// `sum_k (-1)^k C(n, k) 2^((n-k)(n-k-1))`.
pub fn closed_form_count(n: usize) -> u64 {
    let mut total: i128 = 0;
    let mut binom: i128 = 1;
    for k in 0..=n {
        let m = n - k;
        let term = binom << slot_count(m);
        total += if k % 2 == 0 { term } else { -term };
        binom = binom * (n - k) as i128 / (k + 1) as i128;
    }
    total as u64
}

fn check_order(n: usize) -> Result<()> {
    if (MIN_ENUMERATION_ORDER..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationRange {
            n,
            min: MIN_ENUMERATION_ORDER,
            max: MAX_ENUMERATION_ORDER,
        })
    }
}

/// Degree profile of one slot mask.
#[derive(Clone, Copy, Debug)]
struct Profile {
    out: [u8; MAX_ENUMERATION_ORDER],
    inn: [u8; MAX_ENUMERATION_ORDER],
}

#[inline]
fn profile(n: usize, mask: u64) -> Option<Profile> {
    let width = n - 1;
    let row_bits = (1u64 << width) - 1;
    let mut rows = [0u64; MAX_ENUMERATION_ORDER];
    for (u, row) in rows.iter_mut().enumerate().take(n) {
        let packed = mask >> (u * width) & row_bits;
        let low = packed & ((1 << u) - 1);
        *row = low | (packed >> u) << (u + 1);
    }
    let mut p = Profile {
        out: [0; MAX_ENUMERATION_ORDER],
        inn: [0; MAX_ENUMERATION_ORDER],
    };
    for v in 0..n {
        let col = rows[..n]
            .iter()
            .enumerate()
            .fold(0u64, |c, (u, r)| c | (r >> v & 1) << u);
        p.out[v] = rows[v].count_ones() as u8;
        p.inn[v] = col.count_ones() as u8;
        if p.out[v] == 0 && p.inn[v] == 0 {
            return None;
        }
    }
    Some(p)
}

#[inline]
fn for_each_arc(n: usize, mask: u64, mut f: impl FnMut(usize, usize)) {
    let mut rest = mask;
    while rest != 0 {
        let slot = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = crate::digraph::slot_arc(n, slot);
        f(u, v);
    }
}

/// `phi` tabulated on `1..n` squared, row-major.
struct PhiTable {
    n: usize,
    values: Vec<f64>,
}

impl PhiTable {
    fn new(n: usize, spec: &PhiSpec) -> Self {
        let mut values = vec![0.0; n * n];
        for i in 1..n {
            for j in 1..n {
                values[i * n + j] = spec.eval(i, j);
            }
        }
        PhiTable { n, values }
    }

    /// Same arc order and weights as [`crate::index_arc_sum`].
    #[inline]
    fn index(&self, mask: u64, p: &Profile) -> f64 {
        let mut total = 0.0;
        for_each_arc(self.n, mask, |u, v| {
            total += self.values[p.out[u] as usize * self.n + p.inn[v] as usize];
        });
        0.5 * total
    }
}

/// Run `scan` on `workers` contiguous blocks of the mask range and return
/// the results in block order.
fn scan_blocks<T, F>(n: usize, workers: usize, scan: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync,
{
    let end = 1u64 << slot_count(n);
    let workers = (workers.max(1) as u64).min(end);
    let bounds: Vec<(u64, u64)> = (0..workers)
        .map(|k| (end * k / workers, end * (k + 1) / workers))
        .collect();
    if workers == 1 {
        return vec![scan(0, end)];
    }
    thread::scope(|s| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(lo, hi)| {
                let scan = &scan;
                s.spawn(move || scan(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}

/// Slot masks of every isolated-free digraph on `n` vertices, ascending.
pub fn nonisolated_masks(n: usize) -> Result<impl Iterator<Item = u64>> {
    check_order(n)?;
    Ok((0..1u64 << slot_count(n)).filter(move |&m| profile(n, m).is_some()))
}

/// Every isolated-free digraph on `n` vertices in ascending mask order.
pub fn enumerate_nonisolated(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    Ok(nonisolated_masks(n)?.map(move |m| Digraph::from_mask(n, m).expect("mask in range")))
}

/// Size of the isolated-free family, counted by scanning.
pub fn count_nonisolated(n: usize, workers: usize) -> Result<u64> {
    check_order(n)?;
    Ok(scan_blocks(n, workers, |lo, hi| {
        (lo..hi).filter(|&m| profile(n, m).is_some()).count() as u64
    })
    .into_iter()
    .sum())
}

struct BlockBest {
    best: Option<f64>,
    candidates: Vec<(u64, f64)>,
    count: u64,
}

/// Exact minimum or maximum of `spec` over all isolated-free digraphs on `n`
/// vertices, with every digraph within the tie tolerance of it.
pub fn extremal_search(
    n: usize,
    spec: &PhiSpec,
    direction: Extremum,
    opts: &SearchOptions,
) -> Result<ExtremalReport> {
    check_order(n)?;
    let table = PhiTable::new(n, spec);
    let tol = opts.tie_tolerance;
    // `better(a, b)`: a strictly improves on b
    let better = |a: f64, b: f64| match direction {
        Extremum::Min => a < b,
        Extremum::Max => a > b,
    };

    let blocks = scan_blocks(n, opts.workers, |lo, hi| {
        let mut acc = BlockBest {
            best: None,
            candidates: Vec::new(),
            count: 0,
        };
        for mask in lo..hi {
            let Some(p) = profile(n, mask) else { continue };
            acc.count += 1;
            let value = table.index(mask, &p);
            match acc.best {
                Some(b) if !better(value, b) => {
                    if (value - b).abs() <= tol {
                        acc.candidates.push((mask, value));
                    }
                }
                _ => {
                    acc.best = Some(value);
                    acc.candidates.retain(|&(_, v)| (v - value).abs() <= tol);
                    acc.candidates.push((mask, value));
                }
            }
        }
        acc
    });

    let extremal_value = blocks
        .iter()
        .filter_map(|b| b.best)
        .reduce(|a, b| if better(b, a) { b } else { a })
        .expect("every order >= 2 has isolated-free digraphs");
    let attaining = blocks
        .iter()
        .flat_map(|b| b.candidates.iter())
        .filter(|&&(_, v)| (v - extremal_value).abs() <= tol)
        .map(|&(m, _)| m)
        .collect();
    Ok(ExtremalReport {
        n,
        spec: *spec,
        direction,
        extremal_value,
        attaining,
        enumerated_count: blocks.iter().map(|b| b.count).sum(),
        tie_tolerance: tol,
    })
}

const UNIT_HUB: u8 = 1;
const SOURCE_SINK: u8 = 2;
const NO_ZERO: u8 = 4;

fn mask_conditions(n: usize, mask: u64, p: &Profile) -> u8 {
    let zero = p.out[..n]
        .iter()
        .chain(&p.inn[..n])
        .filter(|&&d| d == 0)
        .count();
    let top = (n - 1) as u8;
    let (mut diagonal, mut hub) = (true, true);
    for_each_arc(n, mask, |u, v| {
        let (i, j) = (p.out[u], p.inn[v]);
        diagonal &= i == j;
        hub &= (i, j) == (1, top) || (i, j) == (top, 1);
    });
    let mut flags = 0;
    if hub && zero == 0 {
        flags |= UNIT_HUB;
    }
    if diagonal && zero == n {
        flags |= SOURCE_SINK;
    }
    if diagonal && zero == 0 {
        flags |= NO_ZERO;
    }
    flags
}

/// Slot masks of the isolated-free digraphs on `n` vertices that belong to
/// `class`, ascending.
pub fn class_members(n: usize, class: EqualityClass, workers: usize) -> Result<Vec<u64>> {
    check_order(n)?;
    let flag = match class {
        EqualityClass::StarOrientations => {
            let mut masks: Vec<u64> = star_orientations(n)?
                .iter()
                .map(|d| d.mask().expect("small order"))
                .collect();
            masks.sort_unstable();
            return Ok(masks);
        }
        EqualityClass::SymComplete => return Ok(vec![(1u64 << slot_count(n)) - 1]),
        EqualityClass::SingleArc => {
            return Ok(if n == 2 {
                vec![1 << slot_index(2, 0, 1), 1 << slot_index(2, 1, 0)]
            } else {
                Vec::new()
            })
        }
        EqualityClass::NoneStated => return Ok(Vec::new()),
        EqualityClass::UnitHubArcs => UNIT_HUB,
        EqualityClass::DiagonalSourceSink => SOURCE_SINK,
        EqualityClass::DiagonalNoZero => NO_ZERO,
    };
    Ok(scan_blocks(n, workers, |lo, hi| {
        (lo..hi)
            .filter(|&m| profile(n, m).is_some_and(|p| mask_conditions(n, m, &p) & flag != 0))
            .collect::<Vec<_>>()
    })
    .concat())
}

/// Compare a statement with an already computed search in its direction.
pub fn verify_with(
    statement: &BoundStatement,
    report: &ExtremalReport,
    members: &[u64],
) -> VerificationOutcome {
    let tol = report.tie_tolerance;
    let bound = statement.bound_value;
    let observed = report.extremal_value;
    let bound_respected = match report.direction {
        Extremum::Min => observed >= bound - tol,
        Extremum::Max => observed <= bound + tol,
    };
    let tight = (observed - bound).abs() < tol;
    let at_bound: &[u64] = if tight { &report.attaining } else { &[] };
    let equality_set_matches =
        statement.equality_class == EqualityClass::NoneStated || at_bound == members;

    let counterexamples = if !bound_respected {
        report.attaining.clone()
    } else if equality_set_matches {
        Vec::new()
    } else {
        symmetric_difference(at_bound, members)
    };
    VerificationOutcome {
        statement: statement.clone(),
        hypothesis_holds: check_hypothesis(statement.hypothesis, statement.n, &statement.spec)
            .holds,
        observed_extremal: observed,
        bound_respected,
        tight,
        equality_set_matches,
        attaining_count: report.attaining.len(),
        counterexamples,
    }
}

fn symmetric_difference(a: &[u64], b: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

fn check_applicable(n: usize, statement: &BoundStatement) -> Result<()> {
    if statement.n != n {
        return Err(Error::NotApplicable {
            id: statement.id.to_string(),
            stated: statement.n,
            n,
        });
    }
    check_order(n)
}

/// Search in the statement's direction and check its bound and equality
/// characterization.
pub fn verify_bound(
    n: usize,
    statement: &BoundStatement,
    opts: &SearchOptions,
) -> Result<VerificationOutcome> {
    check_applicable(n, statement)?;
    let report = extremal_search(n, &statement.spec, statement.direction.extremum(), opts)?;
    let members = class_members(n, statement.equality_class, opts.workers)?;
    Ok(verify_with(statement, &report, &members))
}

/// [`verify_bound`] over many statements, sharing searches and class scans.
pub fn verify_all(
    n: usize,
    statements: &[BoundStatement],
    opts: &SearchOptions,
) -> Result<Vec<VerificationOutcome>> {
    let mut searches: BTreeMap<(String, bool), ExtremalReport> = BTreeMap::new();
    let mut classes: BTreeMap<&'static str, Vec<u64>> = BTreeMap::new();
    let mut out = Vec::with_capacity(statements.len());
    for st in statements {
        check_applicable(n, st)?;
        let dir = st.direction.extremum();
        let key = (st.spec.to_string(), dir == Extremum::Max);
        if !searches.contains_key(&key) {
            searches.insert(key.clone(), extremal_search(n, &st.spec, dir, opts)?);
        }
        let label = st.equality_class.label();
        if !classes.contains_key(label) {
            classes.insert(label, class_members(n, st.equality_class, opts.workers)?);
        }
        out.push(verify_with(st, &searches[&key], &classes[label]));
    }
    Ok(out)
}

/// Smallest relabeled mask over all vertex permutations.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let arcs: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for_each_arc(n, mask, |a, b| v.push((a, b)));
        v
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let m = arcs
            .iter()
            .fold(0u64, |m, &(u, v)| m | 1 << slot_index(n, p[u], p[v]));
        best = best.min(m);
    });
    best
}

fn permute(perm: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Canonical representatives of the isomorphism classes among `masks`,
/// ascending.
pub fn isomorphism_classes(n: usize, masks: &[u64]) -> Vec<u64> {
    let mut reps: Vec<u64> = masks.iter().map(|&m| canonical_mask(n, m)).collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}
