use super::{KeyedEntry, NarrowBand, NIL};
use crate::error::QueueError;

/// Binary min-heap with a cell -> slot map for O(log n) decrease-key.
#[derive(Debug, Clone, Default)]
pub struct BinaryHeap {
    heap: Vec<KeyedEntry>,
    slot: Vec<usize>,
}

impl BinaryHeap {
    /// `capacity` is the number of distinct cells expected (the grid size).
    pub fn with_capacity(capacity: usize) -> Self {
        BinaryHeap {
            heap: Vec::new(),
            slot: vec![NIL; capacity],
        }
    }

    #[inline]
    fn place(&mut self, i: usize, e: KeyedEntry) {
        self.slot[e.cell] = i;
        self.heap[i] = e;
    }

    fn sift_up(&mut self, mut i: usize) {
        let e = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            let p = self.heap[parent];
            if p.key <= e.key {
                break;
            }
            self.place(i, p);
            i = parent;
        }
        self.place(i, e);
    }

    fn sift_down(&mut self, mut i: usize) {
        let len = self.heap.len();
        let e = self.heap[i];
        loop {
            let left = 2 * i + 1;
            if left >= len {
                break;
            }
            let right = left + 1;
            let child = if right < len && self.heap[right].key < self.heap[left].key {
                right
            } else {
                left
            };
            if self.heap[child].key >= e.key {
                break;
            }
            self.place(i, self.heap[child]);
            i = child;
        }
        self.place(i, e);
    }

    #[cfg(test)]
    fn check_invariants(&self) {
        for i in 1..self.heap.len() {
            assert!(self.heap[(i - 1) / 2].key <= self.heap[i].key);
        }
        for (i, e) in self.heap.iter().enumerate() {
            assert_eq!(self.slot[e.cell], i);
        }
        let mapped = self.slot.iter().filter(|&&s| s != NIL).count();
        assert_eq!(mapped, self.heap.len());
    }
}

impl NarrowBand for BinaryHeap {
    fn push(&mut self, entry: KeyedEntry) -> Result<(), QueueError> {
        if entry.cell >= self.slot.len() {
            self.slot.resize(entry.cell + 1, NIL);
        }
        debug_assert_eq!(self.slot[entry.cell], NIL, "cell pushed twice");
        self.heap.push(entry);
        let i = self.heap.len() - 1;
        self.slot[entry.cell] = i;
        self.sift_up(i);
        Ok(())
    }

    fn decrease(&mut self, cell: usize, new_key: f64) -> Result<(), QueueError> {
        let i = match self.slot.get(cell) {
            Some(&i) if i != NIL => i,
            _ => return Err(QueueError::Absent(cell)),
        };
        let old = self.heap[i].key;
        if new_key > old {
            return Err(QueueError::KeyIncrease {
                cell,
                old,
                new: new_key,
            });
        }
        self.heap[i].key = new_key;
        self.sift_up(i);
        Ok(())
    }

    #[inline]
    fn top(&self) -> Option<KeyedEntry> {
        self.heap.first().copied()
    }

    fn pop(&mut self) -> Option<KeyedEntry> {
        let last = self.heap.pop()?;
        let top = if self.heap.is_empty() {
            last
        } else {
            let top = self.heap[0];
            self.place(0, last);
            self.sift_down(0);
            top
        };
        self.slot[top.cell] = NIL;
        Some(top)
    }

    #[inline]
    fn len(&self) -> usize {
        self.heap.len()
    }

    #[inline]
    fn contains(&self, cell: usize) -> bool {
        self.slot.get(cell).is_some_and(|&s| s != NIL)
    }
}
