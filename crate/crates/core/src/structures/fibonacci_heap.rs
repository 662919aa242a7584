use super::{KeyedEntry, NarrowBand, NIL};
use crate::error::QueueError;

#[derive(Debug, Clone, Copy)]
struct Node {
    key: f64,
    parent: usize,
    child: usize,
    left: usize,
    right: usize,
    degree: u32,
    marked: bool,
    present: bool,
}

const EMPTY: Node = Node {
    key: f64::INFINITY,
    parent: NIL,
    child: NIL,
    left: NIL,
    right: NIL,
    degree: 0,
    marked: false,
    present: false,
};

/// Fibonacci min-heap over grid cells.
///
/// Nodes live in an arena indexed by cell id; sibling lists are circular and
/// doubly linked through `left`/`right`.
#[derive(Debug, Clone, Default)]
pub struct FibonacciHeap {
    nodes: Vec<Node>,
    min: Option<usize>,
    len: usize,
    scratch_roots: Vec<usize>,
    scratch_degree: Vec<usize>,
}

impl FibonacciHeap {
    pub fn with_capacity(capacity: usize) -> Self {
        FibonacciHeap {
            nodes: vec![EMPTY; capacity],
            min: None,
            len: 0,
            scratch_roots: Vec::new(),
            scratch_degree: Vec::new(),
        }
    }

    /// Makes `x` a singleton circular list.
    #[inline]
    fn make_singleton(&mut self, x: usize) {
        self.nodes[x].left = x;
        self.nodes[x].right = x;
    }

    /// Inserts `x` to the right of `at` in `at`'s sibling list.
    #[inline]
    fn splice_after(&mut self, at: usize, x: usize) {
        let right = self.nodes[at].right;
        self.nodes[x].left = at;
        self.nodes[x].right = right;
        self.nodes[right].left = x;
        self.nodes[at].right = x;
    }

    /// Unlinks `x` from its sibling list.
    #[inline]
    fn unlink(&mut self, x: usize) {
        let (l, r) = (self.nodes[x].left, self.nodes[x].right);
        self.nodes[l].right = r;
        self.nodes[r].left = l;
        self.make_singleton(x);
    }

    fn add_root(&mut self, x: usize) {
        self.nodes[x].parent = NIL;
        match self.min {
            None => {
                self.make_singleton(x);
                self.min = Some(x);
            }
            Some(m) => {
                self.splice_after(m, x);
                if self.nodes[x].key < self.nodes[m].key {
                    self.min = Some(x);
                }
            }
        }
    }

    /// Makes root `y` a child of root `x`.
    fn link(&mut self, y: usize, x: usize) {
        self.unlink(y);
        self.nodes[y].parent = x;
        self.nodes[y].marked = false;
        let c = self.nodes[x].child;
        if c == NIL {
            self.nodes[x].child = y;
        } else {
            self.splice_after(c, y);
        }
        self.nodes[x].degree += 1;
    }

    fn consolidate(&mut self, start: usize) {
        let mut roots = std::mem::take(&mut self.scratch_roots);
        roots.clear();
        let mut r = start;
        loop {
            roots.push(r);
            r = self.nodes[r].right;
            if r == start {
                break;
            }
        }

        let mut by_degree = std::mem::take(&mut self.scratch_degree);
        by_degree.clear();
        for &w in &roots {
            let mut x = w;
            let mut d = self.nodes[x].degree as usize;
            loop {
                if d >= by_degree.len() {
                    by_degree.resize(d + 1, NIL);
                }
                let y = by_degree[d];
                if y == NIL {
                    break;
                }
                let (mut a, mut b) = (x, y);
                if self.nodes[b].key < self.nodes[a].key {
                    std::mem::swap(&mut a, &mut b);
                }
                self.link(b, a);
                x = a;
                by_degree[d] = NIL;
                d += 1;
            }
            by_degree[d] = x;
        }

        self.min = None;
        for &x in by_degree.iter().filter(|&&x| x != NIL) {
            self.make_singleton(x);
            self.add_root(x);
        }
        self.scratch_roots = roots;
        self.scratch_degree = by_degree;
    }

    fn cut(&mut self, x: usize, parent: usize) {
        if self.nodes[x].right == x {
            self.nodes[parent].child = NIL;
        } else {
            if self.nodes[parent].child == x {
                self.nodes[parent].child = self.nodes[x].right;
            }
            self.unlink(x);
        }
        self.nodes[parent].degree -= 1;
        self.nodes[x].marked = false;
        self.add_root(x);
    }

    fn cascading_cut(&mut self, mut y: usize) {
        loop {
            let z = self.nodes[y].parent;
            if z == NIL {
                return;
            }
            if !self.nodes[y].marked {
                self.nodes[y].marked = true;
                return;
            }
            self.cut(y, z);
            y = z;
        }
    }

    #[cfg(test)]
    fn check_invariants(&self) {
        let mut count = 0;
        if let Some(m) = self.min {
            let mut stack = Vec::new();
            let mut r = m;
            loop {
                assert_eq!(self.nodes[r].parent, NIL);
                assert!(self.nodes[r].key >= self.nodes[m].key);
                stack.push(r);
                r = self.nodes[r].right;
                if r == m {
                    break;
                }
            }
            while let Some(x) = stack.pop() {
                count += 1;
                let c = self.nodes[x].child;
                let mut degree = 0;
                if c != NIL {
                    let mut y = c;
                    loop {
                        assert_eq!(self.nodes[y].parent, x);
                        assert!(self.nodes[y].key >= self.nodes[x].key);
                        stack.push(y);
                        degree += 1;
                        y = self.nodes[y].right;
                        if y == c {
                            break;
                        }
                    }
                }
                assert_eq!(self.nodes[x].degree, degree);
            }
        }
        assert_eq!(count, self.len);
    }
}

impl NarrowBand for FibonacciHeap {
    fn push(&mut self, entry: KeyedEntry) -> Result<(), QueueError> {
        let x = entry.cell;
        if x >= self.nodes.len() {
            self.nodes.resize(x + 1, EMPTY);
        }
        debug_assert!(!self.nodes[x].present, "cell pushed twice");
        self.nodes[x] = Node {
            key: entry.key,
            present: true,
            ..EMPTY
        };
        self.add_root(x);
        self.len += 1;
        Ok(())
    }

    fn decrease(&mut self, cell: usize, new_key: f64) -> Result<(), QueueError> {
        if !self.contains(cell) {
            return Err(QueueError::Absent(cell));
        }
        let old = self.nodes[cell].key;
        if new_key > old {
            return Err(QueueError::KeyIncrease {
                cell,
                old,
                new: new_key,
            });
        }
        self.nodes[cell].key = new_key;
        let parent = self.nodes[cell].parent;
        if parent != NIL && new_key < self.nodes[parent].key {
            self.cut(cell, parent);
            self.cascading_cut(parent);
        }
        let m = self.min.expect("non-empty heap has a minimum");
        if new_key < self.nodes[m].key {
            self.min = Some(cell);
        }
        Ok(())
    }

    #[inline]
    fn top(&self) -> Option<KeyedEntry> {
        self.min.map(|m| KeyedEntry::new(m, self.nodes[m].key))
    }

    fn pop(&mut self) -> Option<KeyedEntry> {
        let z = self.min?;
        // Promote children to the root list.
        let c = self.nodes[z].child;
        if c != NIL {
            let mut children = std::mem::take(&mut self.scratch_roots);
            children.clear();
            let mut y = c;
            loop {
                children.push(y);
                y = self.nodes[y].right;
                if y == c {
                    break;
                }
            }
            for &y in &children {
                self.nodes[y].parent = NIL;
                self.nodes[y].marked = false;
                self.make_singleton(y);
                self.splice_after(z, y);
            }
            self.scratch_roots = children;
            self.nodes[z].child = NIL;
        }
        let next_root = self.nodes[z].right;
        self.unlink(z);
        if next_root == z {
            self.min = None;
        } else {
            self.consolidate(next_root);
        }
        self.len -= 1;
        let key = self.nodes[z].key;
        self.nodes[z] = EMPTY;
        Some(KeyedEntry::new(z, key))
    }

    #[inline]
    fn len(&self) -> usize {
        self.len
    }

    #[inline]
    fn contains(&self, cell: usize) -> bool {
        self.nodes.get(cell).is_some_and(|n| n.present)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::testing::lcg_keys;
    use proptest::prelude::*;

    #[test]
    fn pops_minimum() {
        let mut h = FibonacciHeap::with_capacity(3);
        for (c, k) in [(0, 3.0), (1, 1.0), (2, 2.0)] {
            h.push(KeyedEntry::new(c, k)).unwrap();
        }
        assert_eq!(h.pop().unwrap().key, 1.0);
        assert_eq!(h.pop().unwrap().key, 2.0);
        assert_eq!(h.pop().unwrap().key, 3.0);
        assert!(h.pop().is_none());
    }

    #[test]
    fn decrease_then_pop() {
        let mut h = FibonacciHeap::with_capacity(2);
        h.push(KeyedEntry::new(0, 5.0)).unwrap();
        h.decrease(0, 2.0).unwrap();
        h.push(KeyedEntry::new(1, 3.0)).unwrap();
        assert_eq!(h.pop().unwrap().cell, 0);
    }

    #[test]
    fn cascading_cut_after_consolidation() {
        let mut h = FibonacciHeap::with_capacity(16);
        for c in 0..16 {
            h.push(KeyedEntry::new(c, c as f64 + 1.0)).unwrap();
        }
        h.push(KeyedEntry::new(16, 0.0)).unwrap();
        assert_eq!(h.pop().unwrap().cell, 16);
        h.check_invariants();
        // deep nodes are cut repeatedly, marking and cutting their parents
        for (c, k) in [(15, 0.5), (14, 0.4), (13, 0.3), (11, 0.2), (7, 0.1)] {
            h.decrease(c, k).unwrap();
            h.check_invariants();
        }
        let order: Vec<usize> = std::iter::from_fn(|| h.pop().map(|e| e.cell)).collect();
        assert_eq!(&order[..5], &[7, 11, 13, 14, 15]);
        assert_eq!(order.len(), 16);
    }

    #[test]
    fn ten_thousand_sorted() {
        let keys = lcg_keys(10_000, 11);
        let mut h = FibonacciHeap::with_capacity(keys.len());
        for (c, &k) in keys.iter().enumerate() {
            h.push(KeyedEntry::new(c, k)).unwrap();
        }
        let mut expected = keys.clone();
        expected.sort_by(f64::total_cmp);
        let popped: Vec<f64> = std::iter::from_fn(|| h.pop().map(|e| e.key)).collect();
        assert_eq!(popped, expected);
    }

    #[test]
    fn contract_errors() {
        let mut h = FibonacciHeap::with_capacity(4);
        assert_eq!(h.decrease(1, 0.0), Err(QueueError::Absent(1)));
        h.push(KeyedEntry::new(1, 1.0)).unwrap();
        assert!(h.decrease(1, 2.0).is_err());
    }

    proptest! {
        #[test]
        fn scripted_ops_match_sorted_oracle(ops in proptest::collection::vec((0usize..40, 0.0..10.0f64, 0u8..3), 1..300)) {
            let mut h = FibonacciHeap::with_capacity(40);
            let mut oracle: Vec<(usize, f64)> = Vec::new();
            for (cell, key, op) in ops {
                match op {
                    0 if !h.contains(cell) => {
                        h.push(KeyedEntry::new(cell, key)).unwrap();
                        oracle.push((cell, key));
                    }
                    1 if h.contains(cell) => {
                        let e = oracle.iter_mut().find(|e| e.0 == cell).unwrap();
                        let k = key.min(e.1);
                        e.1 = k;
                        h.decrease(cell, k).unwrap();
                    }
                    _ => {
                        let min = oracle.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
                        match h.pop() {
                            Some(e) => {
                                prop_assert_eq!(e.key, min);
                                let pos = oracle.iter().position(|o| o.0 == e.cell).unwrap();
                                prop_assert_eq!(oracle[pos].1, e.key);
                                oracle.swap_remove(pos);
                            }
                            None => prop_assert!(oracle.is_empty()),
                        }
                    }
                }
                h.check_invariants();
            }
        }
    }
}
