//! Stage 1: left-bounded shortest unique substrings.
//!
//! After this stage `B[i]` is the end of the shortest `k`-mismatch unique
//! substring starting at `i`, or [`NIL`] when every substring starting at `i`
//! repeats. Non-`NIL` cells form a prefix of `B` and are non-decreasing.

use crate::buffers::{Stage, WorkBuffers, NIL};
use crate::error::SusError;
use crate::suffix;
use crate::text::Text;

/// Exact (`k = 0`) LSUS from the suffix array in `sa` and the rank array in
/// `rank`, which is overwritten with the LSUS ends.
///
/// For each suffix the longest common prefixes with its two lexicographic
/// neighbours are extended from the previous position's values minus one, so
/// the total number of character comparisons stays linear. Returns that
/// number.
pub fn exact_lsus(text: &[u8], sa: &[usize], rank: &mut [usize]) -> usize {
    let n = text.len();
    assert_eq!(sa.len(), n);
    assert_eq!(rank.len(), n);

    let common = |mut len: usize, i: usize, j: usize, comparisons: &mut usize| {
        while i + len < n && j + len < n {
            *comparisons += 1;
            if text[i + len] != text[j + len] {
                break;
            }
            len += 1;
        }
        len
    };

    let mut comparisons = 0;
    let (mut x, mut y) = (0, 0);
    for i in 0..n {
        let r = rank[i];
        x = if r > 0 {
            common(x, i, sa[r - 1], &mut comparisons)
        } else {
            0
        };
        y = if r + 1 < n {
            common(y, i, sa[r + 1], &mut comparisons)
        } else {
            0
        };
        let end = i + x.max(y);
        if end >= n {
            rank[i..].fill(NIL);
            break;
        }
        rank[i] = end;
        x = x.saturating_sub(1);
        y = y.saturating_sub(1);
    }
    comparisons
}

/// Stage 1 for `k = 0`: `SaRank` to `LsusDone`.
pub fn compute_exact_lsus(text: &Text<'_>, buffers: &mut WorkBuffers) -> Result<(), SusError> {
    buffers.expect_stage(Stage::SaRank)?;
    buffers.expect_len(text.len())?;
    let (a, b) = buffers.arrays_mut();
    exact_lsus(text.bytes(), a, b);
    buffers.advance(Stage::LsusDone);
    Ok(())
}

/// Circular register of the leftmost `k + 1` mismatch positions between the
/// two suffixes currently compared. Backed by borrowed cells, normally
/// `A[0..=k]`.
#[derive(Debug)]
pub struct MismatchWindow<'a> {
    slots: &'a mut [usize],
    cursor: usize,
    size: usize,
}

impl<'a> MismatchWindow<'a> {
    pub fn new(slots: &'a mut [usize]) -> Self {
        assert!(!slots.is_empty());
        Self {
            slots,
            cursor: 0,
            size: 0,
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.slots.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn clear(&mut self) {
        self.size = 0;
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.size == self.slots.len()
    }

    /// Records a mismatch to the left of every one recorded so far.
    #[inline]
    pub fn record(&mut self, pos: usize) {
        let cap = self.slots.len();
        self.cursor = (self.cursor + cap - 1) % cap;
        self.slots[self.cursor] = pos;
        self.size = (self.size + 1).min(cap);
    }

    /// The rightmost of the retained mismatches, i.e. the `(k+1)`-th from the
    /// left once the window is full.
    #[inline]
    pub fn rightmost(&self) -> usize {
        let cap = self.slots.len();
        self.slots[(self.cursor + cap - 1) % cap]
    }
}

/// One diagonal phase: compares `S[p..]` with `S[p - delta..]` for every
/// `p` from `n - 1` down to `delta`, raising `llr` at both positions to their
/// `k`-mismatch common prefix length. Returns the number of pairs compared.
pub fn run_mismatch_phase(
    text: &[u8],
    window: &mut MismatchWindow<'_>,
    llr: &mut [usize],
    delta: usize,
) -> usize {
    let n = text.len();
    assert!(delta >= 1 && delta < n);
    window.clear();
    for p in (delta..n).rev() {
        let q = p - delta;
        if text[p] != text[q] {
            window.record(p);
        }
        let len = if window.is_full() {
            window.rightmost() - p
        } else {
            n - p
        };
        llr[p] = llr[p].max(len);
        llr[q] = llr[q].max(len);
    }
    n - delta
}

/// Approximate LSUS into `llr`, using `window` (`k + 1` cells) for the
/// mismatch register. `O(n^2)` whatever `k` is.
pub fn approx_lsus(text: &[u8], window: &mut [usize], llr: &mut [usize]) {
    let n = text.len();
    assert_eq!(llr.len(), n);
    llr.fill(0);
    let mut window = MismatchWindow::new(window);
    for delta in 1..n {
        run_mismatch_phase(text, &mut window, llr, delta);
    }
    // llr[p] now holds the longest repeat starting at p.
    for (p, cell) in llr.iter_mut().enumerate() {
        *cell = if *cell == n - p { NIL } else { p + *cell };
    }
}

/// Stage 1 for `k >= 1`: `Fresh` or `SaRank` to `LsusDone`.
pub fn compute_approx_lsus(
    text: &Text<'_>,
    buffers: &mut WorkBuffers,
    k: usize,
) -> Result<(), SusError> {
    if buffers.stage() != Stage::SaRank {
        buffers.expect_stage(Stage::Fresh)?;
    }
    buffers.expect_len(text.len())?;
    text.check_k(k, 1)?;
    let (a, b) = buffers.arrays_mut();
    approx_lsus(text.bytes(), &mut a[..=k], b);
    buffers.advance(Stage::LsusDone);
    Ok(())
}

/// Stage 1 on fresh buffers, picking the suffix-array path for `k = 0`.
pub fn compute_lsus(text: &Text<'_>, buffers: &mut WorkBuffers, k: usize) -> Result<(), SusError> {
    text.check_k(k, 0)?;
    if k == 0 {
        suffix::build_sa_rank(text, buffers)?;
        compute_exact_lsus(text, buffers)
    } else {
        compute_approx_lsus(text, buffers, k)
    }
}
