use super::{KeyedEntry, NarrowBand, NIL};
use crate::error::QueueError;

/// Bucket layout of an [`UntidyQueue`]: `bucket_count` buckets of width
/// `t_range / bucket_count`, reused circularly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UntidyQueueConfig {
    pub bucket_count: usize,
    pub t_range: f64,
}

impl Default for UntidyQueueConfig {
    fn default() -> Self {
        UntidyQueueConfig {
            bucket_count: 1000,
            t_range: 2.0,
        }
    }
}

impl UntidyQueueConfig {
    pub fn new(bucket_count: usize, t_range: f64) -> Result<Self, QueueError> {
        let cfg = UntidyQueueConfig {
            bucket_count,
            t_range,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), QueueError> {
        if self.bucket_count == 0 {
            return Err(QueueError::Config("bucket count must be at least 1".into()));
        }
        if !(self.t_range > 0.0 && self.t_range.is_finite()) {
            return Err(QueueError::Config(format!(
                "time range must be positive and finite, got {}",
                self.t_range
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn bucket_width(&self) -> f64 {
        self.t_range / self.bucket_count as f64
    }
}

/// Untidy priority queue: a circular array of FIFO buckets.
///
/// Keys are quantized to buckets; within a bucket cells leave in insertion
/// order regardless of key. Keys below the current head bucket are placed in
/// the head bucket. Buckets are intrusive doubly linked lists over cell ids,
/// so decrease-key is O(1).
#[derive(Debug, Clone)]
pub struct UntidyQueue {
    config: UntidyQueueConfig,
    width: f64,
    first: Vec<usize>,
    last: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    bucket_of: Vec<usize>,
    keys: Vec<f64>,
    /// Absolute (unwrapped) bucket number of the head.
    head: u64,
    len: usize,
}

impl UntidyQueue {
    pub fn new(config: UntidyQueueConfig, capacity: usize) -> Result<Self, QueueError> {
        config.validate()?;
        let k = config.bucket_count;
        Ok(UntidyQueue {
            config,
            width: config.bucket_width(),
            first: vec![NIL; k],
            last: vec![NIL; k],
            next: vec![NIL; capacity],
            prev: vec![NIL; capacity],
            bucket_of: vec![NIL; capacity],
            keys: vec![f64::INFINITY; capacity],
            head: 0,
            len: 0,
        })
    }

    pub fn config(&self) -> UntidyQueueConfig {
        self.config
    }

    fn grow(&mut self, cell: usize) {
        if cell >= self.next.len() {
            let n = cell + 1;
            self.next.resize(n, NIL);
            self.prev.resize(n, NIL);
            self.bucket_of.resize(n, NIL);
            self.keys.resize(n, f64::INFINITY);
        }
    }

    /// Circular bucket slot for `key`, or an error when it lies a full range
    /// or more beyond the head.
    fn slot_for(&mut self, key: f64) -> Result<usize, QueueError> {
        let k = self.config.bucket_count as u64;
        let abs = (key / self.width).floor();
        let abs = if abs.is_finite() && abs >= 0.0 {
            abs as u64
        } else if abs < 0.0 {
            0
        } else {
            u64::MAX
        };
        if self.len == 0 {
            self.head = abs;
        }
        let abs = abs.max(self.head);
        if abs - self.head >= k {
            return Err(QueueError::RangeExceeded {
                key,
                head: self.head as f64 * self.width,
                range: self.config.t_range,
            });
        }
        Ok((abs % k) as usize)
    }

    fn link_back(&mut self, b: usize, cell: usize) {
        self.bucket_of[cell] = b;
        self.next[cell] = NIL;
        self.prev[cell] = self.last[b];
        if self.last[b] == NIL {
            self.first[b] = cell;
        } else {
            self.next[self.last[b]] = cell;
        }
        self.last[b] = cell;
    }

    fn unlink(&mut self, cell: usize) {
        let b = self.bucket_of[cell];
        let (p, n) = (self.prev[cell], self.next[cell]);
        if p == NIL {
            self.first[b] = n;
        } else {
            self.next[p] = n;
        }
        if n == NIL {
            self.last[b] = p;
        } else {
            self.prev[n] = p;
        }
        self.bucket_of[cell] = NIL;
        self.next[cell] = NIL;
        self.prev[cell] = NIL;
    }

    /// Slot of the first non-empty bucket at or after the head.
    fn first_nonempty(&self) -> Option<(u64, usize)> {
        if self.len == 0 {
            return None;
        }
        let k = self.config.bucket_count as u64;
        (0..k).map(|off| self.head + off).find_map(|abs| {
            let s = (abs % k) as usize;
            (self.first[s] != NIL).then_some((abs, s))
        })
    }
}

impl NarrowBand for UntidyQueue {
    fn push(&mut self, entry: KeyedEntry) -> Result<(), QueueError> {
        self.grow(entry.cell);
        debug_assert_eq!(self.bucket_of[entry.cell], NIL, "cell pushed twice");
        let b = self.slot_for(entry.key)?;
        self.keys[entry.cell] = entry.key;
        self.link_back(b, entry.cell);
        self.len += 1;
        Ok(())
    }

    fn decrease(&mut self, cell: usize, new_key: f64) -> Result<(), QueueError> {
        if !self.contains(cell) {
            return Err(QueueError::Absent(cell));
        }
        let old = self.keys[cell];
        if new_key > old {
            return Err(QueueError::KeyIncrease {
                cell,
                old,
                new: new_key,
            });
        }
        self.keys[cell] = new_key;
        let b = self.slot_for(new_key)?;
        if b != self.bucket_of[cell] {
            self.unlink(cell);
            self.link_back(b, cell);
        }
        Ok(())
    }

    fn top(&self) -> Option<KeyedEntry> {
        self.first_nonempty().map(|(_, s)| {
            let c = self.first[s];
            KeyedEntry::new(c, self.keys[c])
        })
    }

    fn pop(&mut self) -> Option<KeyedEntry> {
        let (abs, s) = self.first_nonempty()?;
        self.head = abs;
        let c = self.first[s];
        self.unlink(c);
        self.len -= 1;
        Some(KeyedEntry::new(c, self.keys[c]))
    }

    #[inline]
    fn len(&self) -> usize {
        self.len
    }

    #[inline]
    fn contains(&self, cell: usize) -> bool {
        self.bucket_of.get(cell).is_some_and(|&b| b != NIL)
    }
}
