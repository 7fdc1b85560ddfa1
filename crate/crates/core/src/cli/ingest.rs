use super::{CliError, Format};

/// One named input string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub seq: Vec<u8>,
}

/// Splits raw input into records.
///
/// Plain input is one record named `-` with a single trailing newline
/// removed. FASTA records are used byte-for-byte (no case folding); line
/// breaks inside a sequence are dropped.
pub fn ingest(data: &[u8], format: Format) -> Result<Vec<Record>, CliError> {
    match format {
        Format::Plain => {
            let seq = strip_newline(data).to_vec();
            if seq.is_empty() {
                return Err(CliError::EmptyRecord("-".into()));
            }
            Ok(vec![Record {
                name: "-".into(),
                seq,
            }])
        }
        Format::Fasta => parse_fasta(data),
    }
}

fn strip_newline(line: &[u8]) -> &[u8] {
    let line = line.strip_suffix(b"\n").unwrap_or(line);
    line.strip_suffix(b"\r").unwrap_or(line)
}

fn parse_fasta(data: &[u8]) -> Result<Vec<Record>, CliError> {
    let mut records: Vec<Record> = Vec::new();
    for (lineno, line) in data.split(|&c| c == b'\n').enumerate() {
        let line = strip_newline(line);
        if let Some(header) = line.strip_prefix(b">") {
            if let Some(last) = records.last() {
                if last.seq.is_empty() {
                    return Err(CliError::EmptyRecord(last.name.clone()));
                }
            }
            records.push(Record {
                name: String::from_utf8_lossy(header).trim().to_string(),
                seq: Vec::new(),
            });
        } else if !line.is_empty() {
            match records.last_mut() {
                Some(rec) => rec.seq.extend_from_slice(line),
                None => return Err(CliError::MissingHeader(lineno + 1)),
            }
        }
    }
    match records.last() {
        None => Err(CliError::EmptyRecord("-".into())),
        Some(last) if last.seq.is_empty() => Err(CliError::EmptyRecord(last.name.clone())),
        Some(_) => Ok(records),
    }
}
