use crate::buffers::NIL;
use crate::error::SusError;

/// Borrowed, non-empty input string together with its effective alphabet size.
#[derive(Debug, Clone, Copy)]
pub struct Text<'a> {
    bytes: &'a [u8],
    sigma: usize,
}

impl<'a> Text<'a> {
    pub fn new(bytes: &'a [u8]) -> Result<Self, SusError> {
        if bytes.is_empty() {
            return Err(SusError::EmptyText);
        }
        // NIL must stay outside [0, n].
        if bytes.len() >= NIL - 1 {
            return Err(SusError::TextTooLong(bytes.len()));
        }
        let mut seen = [false; 256];
        for &c in bytes {
            seen[c as usize] = true;
        }
        let sigma = seen.iter().filter(|&&s| s).count();
        Ok(Self { bytes, sigma })
    }

    #[inline]
    pub fn bytes(&self) -> &'a [u8] {
        self.bytes
    }

    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// Number of distinct byte values present.
    #[inline]
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub(crate) fn check_k(&self, k: usize, min: usize) -> Result<(), SusError> {
        let n = self.len();
        if k < min || k >= n {
            return Err(SusError::InvalidMismatchBudget { k, min, n });
        }
        Ok(())
    }
}
