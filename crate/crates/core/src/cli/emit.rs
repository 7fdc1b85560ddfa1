use std::borrow::Borrow;
use std::io::{self, Write};

use crate::buffers::WorkBuffers;
use crate::sus::SusTable;

/// Writes `# record <name> n=<n> k=<k>` followed by one
/// `pos\tstart\tend\tlen` line per position, all 1-based.
pub fn emit_tsv<W: Borrow<WorkBuffers>>(
    out: &mut dyn Write,
    name: &str,
    seq: &[u8],
    table: &SusTable<W>,
    k: usize,
    show_substring: bool,
) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "# record {name} n={} k={k}", seq.len())?;
    for (pos, (start, end)) in table.iter().enumerate() {
        write!(out, "{}\t{}\t{}\t{}", pos + 1, start + 1, end + 1, end - start + 1)?;
        if show_substring {
            out.write_all(b"\t")?;
            out.write_all(&seq[start..=end])?;
        }
        out.write_all(b"\n")?;
    }
    out.flush()
}
