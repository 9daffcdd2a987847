use crate::{Error, Result};

/// Size bounds for structure construction.
///
/// Everything in this library is enumerated explicitly, so construction is
/// guarded by an element cap, and operations that need a full multiplication
/// table (conjugacy classes, isomorphism search) are guarded by a smaller
/// table cap. Both caps are policy, not correctness: raising them only costs
/// time and memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of elements a group or ring may have.
    pub max_elements: u64,
    /// Largest group order for which a dense multiplication table may be
    /// materialized (`order²` entries).
    pub table_threshold: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 1_000_000,
            table_threshold: 5_000,
        }
    }
}

impl Limits {
    /// Default limits with a different element cap.
    pub fn with_max_elements(max_elements: u64) -> Self {
        Limits {
            max_elements,
            ..Limits::default()
        }
    }

    /// Checks `needed` against the element cap, returning it as `u64` on success.
    pub(crate) fn check_size(&self, what: &str, needed: u128) -> Result<u64> {
        if needed > self.max_elements as u128 {
            Err(Error::SizeExceeded {
                what: what.to_string(),
                needed,
                bound: self.max_elements,
            })
        } else {
            Ok(needed as u64)
        }
    }
}
