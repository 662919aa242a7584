use std::cmp::Ordering;
use std::collections::BinaryHeap as StdHeap;

use super::KeyedEntry;

#[derive(Debug, Clone, Copy)]
struct MinEntry(KeyedEntry);

impl PartialEq for MinEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for MinEntry {}

impl PartialOrd for MinEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MinEntry {
    // Reversed so the std max-heap yields the smallest key.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .key
            .total_cmp(&self.0.key)
            .then_with(|| other.0.cell.cmp(&self.0.cell))
    }
}

/// Min priority queue without decrease-key; the same cell may be pushed
/// several times. Stale instances are the caller's concern.
#[derive(Debug, Clone, Default)]
pub struct PriorityQueue {
    heap: StdHeap<MinEntry>,
}

impl PriorityQueue {
    pub fn with_capacity(capacity: usize) -> Self {
        PriorityQueue {
            heap: StdHeap::with_capacity(capacity),
        }
    }

    #[inline]
    pub fn push(&mut self, entry: KeyedEntry) {
        self.heap.push(MinEntry(entry));
    }

    #[inline]
    pub fn top(&self) -> Option<KeyedEntry> {
        self.heap.peek().map(|e| e.0)
    }

    #[inline]
    pub fn pop_min(&mut self) -> Option<KeyedEntry> {
        self.heap.pop().map(|e| e.0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.heap.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }
}
