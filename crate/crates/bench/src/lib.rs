//! Fixed inputs shared by the benchmarks.

use digraph_vdb::sample::corpus;
use digraph_vdb::Digraph;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The same `count` digraphs on every run.
pub fn fixed_corpus(
    seed: u64,
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
) -> Vec<Digraph> {
    corpus(&mut ChaCha8Rng::seed_from_u64(seed), count, orders)
}
