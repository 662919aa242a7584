use crate::structures::NIL;

/// Doubly linked list of grid cells stored in cell-indexed arrays.
///
/// A cell is in the list at most once.
#[derive(Debug, Clone)]
pub(crate) struct CellList {
    next: Vec<usize>,
    prev: Vec<usize>,
    member: Vec<bool>,
    head: usize,
    tail: usize,
    len: usize,
}

impl CellList {
    pub fn new(capacity: usize) -> Self {
        CellList {
            next: vec![NIL; capacity],
            prev: vec![NIL; capacity],
            member: vec![false; capacity],
            head: NIL,
            tail: NIL,
            len: 0,
        }
    }

    #[inline]
    pub fn head(&self) -> Option<usize> {
        (self.head != NIL).then_some(self.head)
    }

    #[inline]
    pub fn tail(&self) -> Option<usize> {
        (self.tail != NIL).then_some(self.tail)
    }

    #[inline]
    pub fn next(&self, cell: usize) -> Option<usize> {
        let n = self.next[cell];
        (n != NIL).then_some(n)
    }

    #[inline]
    pub fn prev(&self, cell: usize) -> Option<usize> {
        let p = self.prev[cell];
        (p != NIL).then_some(p)
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push_back(&mut self, cell: usize) {
        debug_assert!(!self.member[cell]);
        self.member[cell] = true;
        self.prev[cell] = self.tail;
        self.next[cell] = NIL;
        if self.tail == NIL {
            self.head = cell;
        } else {
            self.next[self.tail] = cell;
        }
        self.tail = cell;
        self.len += 1;
    }

    /// Inserts `cell` immediately before the member `at`.
    pub fn insert_before(&mut self, at: usize, cell: usize) {
        debug_assert!(self.member[at] && !self.member[cell]);
        self.member[cell] = true;
        let p = self.prev[at];
        self.prev[cell] = p;
        self.next[cell] = at;
        self.prev[at] = cell;
        if p == NIL {
            self.head = cell;
        } else {
            self.next[p] = cell;
        }
        self.len += 1;
    }

    pub fn remove(&mut self, cell: usize) {
        debug_assert!(self.member[cell]);
        let (p, n) = (self.prev[cell], self.next[cell]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p] = n;
        }
        if n == NIL {
            self.tail = p;
        } else {
            self.prev[n] = p;
        }
        self.member[cell] = false;
        self.next[cell] = NIL;
        self.prev[cell] = NIL;
        self.len -= 1;
    }
}
