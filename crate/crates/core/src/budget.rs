use crate::error::{Error, Result};

/// Node budget shared by the exhaustive searches.
///
/// Exhausting a budget is reported as [`Error::BudgetExhausted`], never as a
/// negative answer.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    spent: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 50_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, spent: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    #[inline]
    pub fn tick(&mut self, what: &'static str) -> Result<()> {
        self.spent += 1;
        if self.spent > self.limit {
            Err(Error::BudgetExhausted {
                what,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}
