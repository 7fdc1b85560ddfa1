use std::borrow::Borrow;

use crate::buffers::WorkBuffers;
use crate::oracle;
use crate::sus::SusTable;

/// Records longer than this are not checked; the oracle is polynomial.
pub const VERIFY_MAX_LEN: usize = 512;

/// First position where the pipeline and the oracle disagree (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Divergence {
    pub pos: usize,
    pub pipeline: (usize, usize),
    pub oracle: (usize, usize),
}

/// Compares `table` with the brute-force answer; `None` when they agree.
pub fn run_verify<W: Borrow<WorkBuffers>>(
    seq: &[u8],
    k: usize,
    table: &SusTable<W>,
) -> Option<Divergence> {
    let expected = oracle::brute_sus(seq, k).expect("k and length checked by caller");
    table
        .iter()
        .zip(expected)
        .enumerate()
        .find(|(_, (got, want))| got != want)
        .map(|(pos, (pipeline, oracle))| Divergence {
            pos,
            pipeline,
            oracle,
        })
}
