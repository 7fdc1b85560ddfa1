//! The two `n`-word index arrays every stage works in, and the stage tag that
//! says how their cells are currently to be read.

use crate::error::SusError;

/// Sentinel for "does not exist". Never a valid position.
pub const NIL: usize = usize::MAX;

/// What `(A, B)` currently hold.
///
/// | stage      | `A[i]`                                  | `B[i]`                          |
/// |------------|-----------------------------------------|---------------------------------|
/// | `Fresh`    | unspecified                             | unspecified                     |
/// | `SaRank`   | suffix array                            | rank array                      |
/// | `LsusDone` | unspecified                             | end of LSUS starting at `i`/NIL |
/// | `SlsDone`  | start of rightmost shortest LSUS covering `i`/NIL | as `LsusDone`         |
/// | `SusDone`  | start of rightmost SUS covering `i`     | its end                         |
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    Fresh,
    SaRank,
    LsusDone,
    SlsDone,
    SusDone,
}

impl Stage {
    fn name(self) -> &'static str {
        match self {
            Stage::Fresh => "Fresh",
            Stage::SaRank => "SaRank",
            Stage::LsusDone => "LsusDone",
            Stage::SlsDone => "SlsDone",
            Stage::SusDone => "SusDone",
        }
    }
}

#[derive(Debug, Clone)]
pub struct WorkBuffers {
    a: Vec<usize>,
    b: Vec<usize>,
    stage: Stage,
}

impl WorkBuffers {
    /// Allocates both arrays for a text of `n` bytes.
    pub fn new(n: usize) -> Self {
        Self {
            a: vec![0; n],
            b: vec![0; n],
            stage: Stage::Fresh,
        }
    }

    /// Allocates room for texts up to `capacity` bytes; [`reset`](Self::reset)
    /// then never reallocates for `n <= capacity`.
    pub fn with_capacity(capacity: usize) -> Self {
        Self {
            a: Vec::with_capacity(capacity),
            b: Vec::with_capacity(capacity),
            stage: Stage::Fresh,
        }
    }

    /// Wraps an externally produced LSUS endpoint array (stage `LsusDone`).
    pub fn from_lsus_endpoints(b: Vec<usize>) -> Self {
        Self {
            a: vec![NIL; b.len()],
            b,
            stage: Stage::LsusDone,
        }
    }

    /// Resizes both arrays to `n` cells and rewinds to `Fresh`.
    pub fn reset(&mut self, n: usize) {
        self.a.resize(n, 0);
        self.b.resize(n, 0);
        self.stage = Stage::Fresh;
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.a.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.a.capacity().min(self.b.capacity())
    }

    #[inline]
    pub fn stage(&self) -> Stage {
        self.stage
    }

    #[inline]
    pub fn a(&self) -> &[usize] {
        &self.a
    }

    #[inline]
    pub fn b(&self) -> &[usize] {
        &self.b
    }

    #[inline]
    pub(crate) fn arrays_mut(&mut self) -> (&mut [usize], &mut [usize]) {
        (&mut self.a, &mut self.b)
    }

    pub(crate) fn expect_stage(&self, expected: Stage) -> Result<(), SusError> {
        if self.stage != expected {
            return Err(SusError::StageOrder {
                expected: expected.name(),
                found: self.stage,
            });
        }
        Ok(())
    }

    pub(crate) fn expect_len(&self, n: usize) -> Result<(), SusError> {
        if self.len() != n {
            return Err(SusError::BufferLength {
                expected: n,
                found: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn advance(&mut self, to: Stage) {
        debug_assert!(to > self.stage, "stage {:?} -> {:?}", self.stage, to);
        self.stage = to;
    }
}
