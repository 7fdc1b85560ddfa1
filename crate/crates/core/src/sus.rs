//! Stage 3 and the full pipeline.
//!
//! Step I widens the SLS starts in `A` into `(start, end)` pairs by writing
//! `B[i] = B[A[i]]` right to left. Step II walks left to right: a position
//! keeps its SLS unless the previous answer ends just before it and one more
//! character makes it strictly shorter, or there is no SLS at all.

use std::borrow::Borrow;

use crate::buffers::{Stage, WorkBuffers, NIL};
use crate::error::SusError;
use crate::lsus::compute_lsus;
use crate::sls::find_sls;
use crate::text::Text;

/// Step I: `B[i]` becomes the end of the rightmost SLS covering `i`, or `NIL`.
/// `A` is untouched. Returns the last covered position.
pub fn expand_sls_endpoints(a: &[usize], b: &mut [usize]) -> usize {
    let r = b
        .iter()
        .rposition(|&e| e != NIL)
        .expect("the LSUS at position 0 always exists");
    let z = b[r];
    b[z + 1..].fill(NIL);
    // a[i] <= i, so b[a[i]] has not been overwritten yet
    for i in (0..=z).rev() {
        b[i] = b[a[i]];
    }
    z
}

/// Step II: extends the previous answer by one character where that beats
/// (or replaces a missing) SLS.
pub fn compute_sus(a: &mut [usize], b: &mut [usize]) {
    for i in 1..a.len() {
        let (start, end) = (a[i - 1], b[i - 1]);
        if a[i] == NIL {
            debug_assert_eq!(end, i - 1);
            a[i] = start;
            b[i] = end + 1;
        } else if end == i - 1 && end - start + 2 < b[i] - a[i] + 1 {
            a[i] = start;
            b[i] = end + 1;
        }
    }
}

/// Stage 3: `SlsDone` to `SusDone`.
pub fn find_sus(buffers: &mut WorkBuffers) -> Result<(), SusError> {
    buffers.expect_stage(Stage::SlsDone)?;
    let (a, b) = buffers.arrays_mut();
    expand_sls_endpoints(a, b);
    compute_sus(a, b);
    buffers.advance(Stage::SusDone);
    Ok(())
}

/// Per-position `(start, end)` of the rightmost shortest unique substring,
/// 0-based and inclusive. A view over the finished work buffers.
#[derive(Debug)]
pub struct SusTable<W: Borrow<WorkBuffers> = WorkBuffers> {
    buffers: W,
}

impl<W: Borrow<WorkBuffers>> SusTable<W> {
    fn new(buffers: W) -> Self {
        debug_assert_eq!(buffers.borrow().stage(), Stage::SusDone);
        Self { buffers }
    }

    pub fn len(&self) -> usize {
        self.buffers.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn get(&self, pos: usize) -> (usize, usize) {
        let wb = self.buffers.borrow();
        (wb.a()[pos], wb.b()[pos])
    }

    pub fn starts(&self) -> &[usize] {
        self.buffers.borrow().a()
    }

    pub fn ends(&self) -> &[usize] {
        self.buffers.borrow().b()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.starts().iter().copied().zip(self.ends().iter().copied())
    }

    pub fn to_vec(&self) -> Vec<(usize, usize)> {
        self.iter().collect()
    }
}

impl SusTable<WorkBuffers> {
    pub fn into_buffers(self) -> WorkBuffers {
        self.buffers
    }
}

/// Rightmost `k`-mismatch shortest unique substring for every position of
/// `text`. `O(n)` for `k = 0`, `O(n^2)` otherwise; allocates only the two
/// work arrays.
pub fn find_all_sus(text: &[u8], k: usize) -> Result<SusTable, SusError> {
    let checked = Text::new(text)?;
    checked.check_k(k, 0)?;
    let mut buffers = WorkBuffers::new(text.len());
    run(&checked, k, &mut buffers)?;
    Ok(SusTable::new(buffers))
}

/// Like [`find_all_sus`], but reuses `buffers`; no allocation happens when
/// their capacity already covers `text`.
pub fn find_all_sus_into<'b>(
    text: &[u8],
    k: usize,
    buffers: &'b mut WorkBuffers,
) -> Result<SusTable<&'b mut WorkBuffers>, SusError> {
    let checked = Text::new(text)?;
    checked.check_k(k, 0)?;
    buffers.reset(text.len());
    run(&checked, k, buffers)?;
    Ok(SusTable::new(buffers))
}

fn run(text: &Text<'_>, k: usize, buffers: &mut WorkBuffers) -> Result<(), SusError> {
    compute_lsus(text, buffers, k)?;
    find_sls(buffers)?;
    find_sus(buffers)
}
