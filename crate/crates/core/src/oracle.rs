//! Brute-force reference answers, computed straight from the definitions.
//!
//! Nothing here touches the suffix array or the staged pipeline. Costs are
//! polynomial (roughly `O(n^2 * L^2)` where `L` is the longest unique-length
//! threshold), so inputs are expected to stay in the hundreds of bytes.

use crate::error::SusError;

/// Per-position optional `(start, end)`, inclusive and 0-based.
pub type Answer = Vec<Option<(usize, usize)>>;

/// Number of positions where `a` and `b` differ.
pub fn hamming(a: &[u8], b: &[u8]) -> Result<usize, SusError> {
    if a.len() != b.len() {
        return Err(SusError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

/// Longest common prefix of `a` and `b` with at most `k` mismatches.
pub fn lcp_k(a: &[u8], b: &[u8], k: usize) -> usize {
    let mut mismatches = 0;
    for (len, (x, y)) in a.iter().zip(b).enumerate() {
        if x != y {
            mismatches += 1;
            if mismatches > k {
                return len;
            }
        }
    }
    a.len().min(b.len())
}

/// Whether `s[i..=j]` has no other occurrence within Hamming distance `k`.
pub fn is_k_unique(s: &[u8], i: usize, j: usize, k: usize) -> bool {
    assert!(i <= j && j < s.len());
    let pattern = &s[i..=j];
    let len = pattern.len();
    (0..=s.len() - len)
        .filter(|&other| other != i)
        .all(|other| hamming(pattern, &s[other..other + len]).unwrap() > k)
}

fn check_k(s: &[u8], k: usize) -> Result<(), SusError> {
    if s.is_empty() {
        return Err(SusError::EmptyText);
    }
    if k >= s.len() {
        return Err(SusError::InvalidMismatchBudget {
            k,
            min: 0,
            n: s.len(),
        });
    }
    Ok(())
}

// Shortest unique substring starting at `i`, found by growing the end.
fn shortest_from(s: &[u8], i: usize, k: usize) -> Option<usize> {
    (i..s.len()).find(|&j| is_k_unique(s, i, j, k))
}

/// `(i, end)` of the left-bounded shortest unique substring at each `i`.
pub fn brute_lsus(s: &[u8], k: usize) -> Result<Answer, SusError> {
    check_k(s, k)?;
    Ok((0..s.len())
        .map(|i| shortest_from(s, i, k).map(|j| (i, j)))
        .collect())
}

/// Rightmost shortest left-bounded unique substring covering each position.
pub fn brute_sls(s: &[u8], k: usize) -> Result<Answer, SusError> {
    let lsus = brute_lsus(s, k)?;
    Ok((0..s.len())
        .map(|p| {
            lsus.iter()
                .flatten()
                .filter(|&&(i, j)| i <= p && p <= j)
                .min_by_key(|&&(i, j)| (j - i, usize::MAX - i))
                .copied()
        })
        .collect())
}

/// Rightmost shortest unique substring covering each position.
pub fn brute_sus(s: &[u8], k: usize) -> Result<Vec<(usize, usize)>, SusError> {
    check_k(s, k)?;
    let n = s.len();
    // unique_from[i]: smallest j with s[i..=j] unique. Any extension of a
    // unique substring is unique too, so this decides every (i, j).
    let unique_from: Vec<Option<usize>> = (0..n).map(|i| shortest_from(s, i, k)).collect();
    let unique = |i: usize, j: usize| unique_from[i].is_some_and(|first| j >= first);

    let mut out = Vec::with_capacity(n);
    for p in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for i in 0..=p {
            for j in p..n {
                if !unique(i, j) {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => j - i < bj - bi || (j - i == bj - bi && i > bi),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        out.push(best.expect("the whole string is always unique"));
    }
    Ok(out)
}
