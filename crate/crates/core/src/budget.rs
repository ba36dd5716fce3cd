use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Work limit for the exponential searches.
///
/// Searches call [`Budget::tick`] once per node. The default budget is
/// unlimited; a node cap keeps results deterministic, a deadline does not.
#[derive(Debug, Default)]
pub struct Budget {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: Cell<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            ..Budget::default()
        }
    }

    pub fn time(limit: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + limit),
            ..Budget::default()
        }
    }

    pub fn with_deadline(mut self, limit: Option<Duration>) -> Self {
        self.deadline = limit.map(|d| Instant::now() + d);
        self
    }

    pub fn with_max_nodes(mut self, max_nodes: Option<u64>) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn spent(&self) -> u64 {
        self.nodes.get()
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        let n = self.nodes.get() + 1;
        self.nodes.set(n);
        if let Some(max) = self.max_nodes {
            if n > max {
                return Err(Error::BudgetExhausted(n));
            }
        }
        if n & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::BudgetExhausted(n));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_cap_trips() {
        let b = Budget::nodes(3);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert_eq!(b.tick(), Err(Error::BudgetExhausted(4)));
    }
}
