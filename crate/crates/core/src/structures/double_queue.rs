use std::collections::VecDeque;

const LOWER_FRACTION: f64 = 0.65;
const UPPER_FRACTION: f64 = 0.75;

/// Threshold step adaptation: keep the share of insertions routed to the
/// first queue between 65% and 75%.
pub fn update_step(step: f64, c1: u64, c_total: u64) -> f64 {
    let perc = if c1 > 0 {
        c1 as f64 / c_total as f64
    } else {
        1.0
    };
    if perc <= LOWER_FRACTION {
        step * 1.5
    } else if perc >= UPPER_FRACTION {
        step / 2.0
    } else {
        step
    }
}

/// Two unsorted FIFO queues split by a moving time threshold.
#[derive(Debug, Clone)]
pub struct DoubleQueue {
    queues: [VecDeque<usize>; 2],
    /// Index of the queue currently drained (the "first" queue).
    active: usize,
    threshold: f64,
    step: f64,
    c1: u64,
    c_total: u64,
}

impl DoubleQueue {
    /// Threshold starts at `step`.
    pub fn new(step: f64) -> Self {
        DoubleQueue {
            queues: [VecDeque::new(), VecDeque::new()],
            active: 0,
            threshold: step,
            step,
            c1: 0,
            c_total: 0,
        }
    }

    /// Inserts into the first queue without routing or counting.
    pub fn seed(&mut self, cell: usize) {
        self.queues[self.active].push_back(cell);
    }

    /// Routes `cell` by `key` against the threshold and counts the insertion.
    pub fn push(&mut self, cell: usize, key: f64) {
        self.c_total += 1;
        if key <= self.threshold {
            self.c1 += 1;
            self.queues[self.active].push_back(cell);
        } else {
            self.queues[1 - self.active].push_back(cell);
        }
    }

    pub fn pop_first(&mut self) -> Option<usize> {
        self.queues[self.active].pop_front()
    }

    /// Adapts the step, exchanges the queue roles, clears the counters and
    /// advances the threshold.
    pub fn swap_and_retune(&mut self) {
        self.step = update_step(self.step, self.c1, self.c_total);
        self.active = 1 - self.active;
        self.c1 = 0;
        self.c_total = 0;
        self.threshold += self.step;
    }

    pub fn first_len(&self) -> usize {
        self.queues[self.active].len()
    }

    pub fn second_len(&self) -> usize {
        self.queues[1 - self.active].len()
    }

    pub fn is_empty(&self) -> bool {
        self.queues.iter().all(VecDeque::is_empty)
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn counters(&self) -> (u64, u64) {
        (self.c1, self.c_total)
    }
}
