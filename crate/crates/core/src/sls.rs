//! Stage 2: for each position, the rightmost shortest LSUS covering it.
//!
//! `B` is read-only here. Treat each non-`NIL` `B[i]` as the interval
//! `[i, B[i]]`. Four passes over `A` turn it into the answer:
//!
//! 1. `pred[i]`: the nearest earlier interval strictly shorter than `[i, B[i]]`,
//!    found by chasing `pred` links the way a KMP failure function is built.
//! 2. `t[i] = max(B[pred[i]] + 1, i)`: where the interval starts being the
//!    best choice among itself and the intervals before it.
//! 3. `max t⁻¹[j]`: the largest `i` with `t[i] = j`, written right to left
//!    over the same cells.
//! 4. prefix maximum of step 3, treating `NIL` as minus infinity.

use crate::buffers::{Stage, WorkBuffers, NIL};
use crate::error::SusError;

/// Index of the rightmost existing LSUS and the last position it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlsBounds {
    pub r: usize,
    pub z: usize,
}

/// Scans `b` from the right for the last LSUS; clears `a` beyond `z`.
pub fn locate_bounds(a: &mut [usize], b: &[usize]) -> SlsBounds {
    let r = b
        .iter()
        .rposition(|&e| e != NIL)
        .expect("the LSUS at position 0 always exists");
    let z = b[r];
    a[z + 1..].fill(NIL);
    SlsBounds { r, z }
}

#[inline]
fn interval_len(b: &[usize], i: usize) -> usize {
    b[i] - i + 1
}

/// Writes `pred` into `a[0..=r]` and `NIL` into `a[r + 1..]`. Returns the
/// number of link-chasing steps taken.
pub fn compute_pred(a: &mut [usize], b: &[usize], bounds: SlsBounds) -> usize {
    let r = bounds.r;
    a[r + 1..].fill(NIL);
    a[0] = NIL;
    let mut steps = 0;
    for i in 1..=r {
        let len = interval_len(b, i);
        let mut j = i - 1;
        while a[j] != NIL && interval_len(b, j) >= len {
            j = a[j];
            steps += 1;
        }
        a[i] = if interval_len(b, j) < len { j } else { NIL };
    }
    steps
}

/// Replaces `pred` in `a[0..=r]` by the effective region starts.
pub fn compute_t(a: &mut [usize], b: &[usize], bounds: SlsBounds) {
    for (i, cell) in a[..=bounds.r].iter_mut().enumerate() {
        *cell = match *cell {
            NIL => i,
            p => (b[p] + 1).max(i),
        };
    }
}

/// Replaces `t` by `max t⁻¹`: `a[j]` becomes the largest `i` with `t[i] = j`,
/// or `NIL` if there is none.
///
/// Right to left, cell `i` still holds `t[i]` when it is reached: only
/// `i' <= j` ever claims cell `j`.
pub fn compute_t_inverse(a: &mut [usize], bounds: SlsBounds) {
    for i in (0..=bounds.r).rev() {
        let t = a[i];
        if a[t] == NIL {
            a[t] = i;
        }
        if i < t {
            a[i] = NIL;
        }
    }
}

/// Prefix maximum of `max t⁻¹` over `[0, z]`.
pub fn compute_sls(a: &mut [usize], bounds: SlsBounds) {
    a[0] = 0;
    for i in 1..=bounds.z {
        if a[i] == NIL || a[i] < a[i - 1] {
            a[i] = a[i - 1];
        }
    }
}

/// All four passes. `b` must satisfy the LSUS array invariants.
pub fn sls_in_place(a: &mut [usize], b: &[usize]) -> SlsBounds {
    let bounds = locate_bounds(a, b);
    compute_pred(a, b, bounds);
    compute_t(a, b, bounds);
    compute_t_inverse(a, bounds);
    compute_sls(a, bounds);
    bounds
}

/// Stage 2: `LsusDone` to `SlsDone`.
pub fn find_sls(buffers: &mut WorkBuffers) -> Result<SlsBounds, SusError> {
    buffers.expect_stage(Stage::LsusDone)?;
    let (a, b) = buffers.arrays_mut();
    let bounds = sls_in_place(a, b);
    buffers.advance(Stage::SlsDone);
    Ok(bounds)
}
