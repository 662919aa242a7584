//! Ordering containers for the narrow band.
//!
//! | structure            | push     | decrease | top  | pop      |
//! |----------------------|----------|----------|------|----------|
//! | [`BinaryHeap`]       | O(log n) | O(log n) | O(1) | O(log n) |
//! | [`FibonacciHeap`]    | O(1)     | O(1)*    | O(1) | O(log n)*|
//! | [`PriorityQueue`]    | O(log n) | n/a      | O(1) | O(log n) |
//! | [`UntidyQueue`]      | O(1)     | O(1)     | O(1)*| O(1)*    |
//!
//! `*` amortized. [`DoubleQueue`] is a pair of unsorted FIFOs split by a
//! moving time threshold.

mod binary_heap;
mod double_queue;
mod fibonacci_heap;
mod priority_queue;
mod untidy;

pub use binary_heap::BinaryHeap;
pub use double_queue::{update_step, DoubleQueue};
pub use fibonacci_heap::FibonacciHeap;
pub use priority_queue::PriorityQueue;
pub use untidy::{UntidyQueue, UntidyQueueConfig};

use crate::error::QueueError;

/// A grid cell together with its ordering key (arrival time).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeyedEntry {
    pub cell: usize,
    pub key: f64,
}

impl KeyedEntry {
    #[inline]
    pub fn new(cell: usize, key: f64) -> Self {
        KeyedEntry { cell, key }
    }
}

/// Narrow band with decrease-key, as required by the marching solvers.
///
/// Each cell may be contained at most once.
pub trait NarrowBand {
    fn push(&mut self, entry: KeyedEntry) -> Result<(), QueueError>;

    /// Lowers the key of a contained cell.
    fn decrease(&mut self, cell: usize, new_key: f64) -> Result<(), QueueError>;

    fn top(&self) -> Option<KeyedEntry>;

    fn pop(&mut self) -> Option<KeyedEntry>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn contains(&self, cell: usize) -> bool;
}

pub(crate) const NIL: usize = usize::MAX;

#[cfg(test)]
pub(crate) mod testing {
    /// Deterministic keys for scripted structure tests (64-bit LCG).
    pub fn lcg_keys(n: usize, seed: u64) -> Vec<f64> {
        let mut s = seed;
        (0..n)
            .map(|_| {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (s >> 11) as f64 / (1u64 << 53) as f64
            })
            .collect()
    }
}
