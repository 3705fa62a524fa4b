//! Arithmetic-operation tally for one transform invocation.

/// Counts floating-point multiplications and additions (subtractions count
/// as additions) on sample data. Index arithmetic, comparisons and data
/// movement are not counted; negation costs zero.
///
/// A counter is owned by a single invocation: create it fresh, pass it to
/// one transform call, then read it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    muls: u64,
    adds: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record_muls(&mut self, n: u64) {
        self.muls += n;
    }

    pub fn record_adds(&mut self, n: u64) {
        self.adds += n;
    }

    pub fn muls(&self) -> u64 {
        self.muls
    }

    pub fn adds(&self) -> u64 {
        self.adds
    }

    pub fn total(&self) -> u64 {
        self.muls + self.adds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starts_at_zero_and_accumulates() {
        let mut c = OpCounter::new();
        assert_eq!((c.muls(), c.adds(), c.total()), (0, 0, 0));
        c.record_muls(3);
        c.record_adds(2);
        c.record_muls(1);
        assert_eq!((c.muls(), c.adds(), c.total()), (4, 2, 6));
    }
}
