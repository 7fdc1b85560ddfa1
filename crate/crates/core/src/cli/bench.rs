use std::time::Instant;

use crate::buffers::WorkBuffers;
use crate::sus::find_all_sus_into;

const FIRST_PREFIX: usize = 256;
const RUNS: usize = 3;

#[derive(Debug, Clone, Copy)]
pub struct BenchRow {
    pub n: usize,
    /// Median wall time over three runs.
    pub seconds: f64,
    /// Time relative to the previous (half-length) prefix.
    pub ratio: Option<f64>,
}

/// Times the pipeline on prefixes of length 256, 512, ... up to `seq.len()`,
/// reusing one pair of buffers. Prefixes with `n <= k` are skipped.
pub fn run_bench(seq: &[u8], k: usize) -> Vec<BenchRow> {
    let mut sizes = Vec::new();
    let mut n = FIRST_PREFIX.min(seq.len());
    while n <= seq.len() {
        if n > k {
            sizes.push(n);
        }
        if n == seq.len() {
            break;
        }
        n = (n * 2).min(seq.len());
    }

    let mut buffers = WorkBuffers::with_capacity(seq.len());
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for n in sizes {
        let seconds = median_seconds(|| {
            find_all_sus_into(&seq[..n], k, &mut buffers).expect("n > k");
        });
        let ratio = rows.last().map(|prev| seconds / prev.seconds);
        rows.push(BenchRow { n, seconds, ratio });
    }
    rows
}

pub(crate) fn median_seconds(mut f: impl FnMut()) -> f64 {
    let mut times = [0.0; RUNS];
    for t in times.iter_mut() {
        let start = Instant::now();
        f();
        *t = start.elapsed().as_secs_f64();
    }
    times.sort_by(f64::total_cmp);
    times[RUNS / 2]
}
