//! Suffix array and rank array, built inside the two work arrays.
//!
//! The suffix array is produced by induced sorting (SA-IS) without an explicit
//! sentinel. The only workspace beyond the output array is the second work
//! array, which holds the L/S type bits and, at recursion levels, the bucket
//! pointers. The top level keeps its 256 bucket pointers on the stack, so no
//! heap memory is touched.

use crate::buffers::{Stage, WorkBuffers, NIL};
use crate::error::SusError;
use crate::text::Text;

const BYTE_ALPHABET: usize = 256;
const WORD_BITS: usize = usize::BITS as usize;

trait Symbol: Copy + Eq {
    fn index(self) -> usize;
}

impl Symbol for u8 {
    #[inline]
    fn index(self) -> usize {
        self as usize
    }
}

impl Symbol for usize {
    #[inline]
    fn index(self) -> usize {
        self
    }
}

/// Fills `sa` with the suffix array of `text`, using `scratch` as workspace.
///
/// `sa` and `scratch` must both be `text.len()` long. `scratch` is left with
/// unspecified content.
pub fn build_suffix_array(text: &[u8], sa: &mut [usize], scratch: &mut [usize]) {
    assert_eq!(sa.len(), text.len());
    assert_eq!(scratch.len(), text.len());
    if text.is_empty() {
        return;
    }
    let mut bucket = [0usize; BYTE_ALPHABET];
    sais(text, sa, BYTE_ALPHABET, Some(&mut bucket), scratch);
}

/// `rank[sa[i]] = i` for all `i`.
pub fn build_rank_in_place(sa: &[usize], rank: &mut [usize]) {
    assert_eq!(sa.len(), rank.len());
    for (i, &p) in sa.iter().enumerate() {
        rank[p] = i;
    }
}

/// Suffix array into `A`, rank array into `B`; advances `Fresh` to `SaRank`.
pub fn build_sa_rank(text: &Text<'_>, buffers: &mut WorkBuffers) -> Result<(), SusError> {
    buffers.expect_stage(Stage::Fresh)?;
    buffers.expect_len(text.len())?;
    let (a, b) = buffers.arrays_mut();
    build_suffix_array(text.bytes(), a, b);
    build_rank_in_place(a, b);
    buffers.advance(Stage::SaRank);
    Ok(())
}

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
fn is_s(types: &[usize], i: usize) -> bool {
    types[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

#[inline]
fn is_lms(types: &[usize], i: usize) -> bool {
    i > 0 && is_s(types, i) && !is_s(types, i - 1)
}

// The final suffix is L-type: it is larger than the empty suffix.
fn classify<T: Symbol>(s: &[T], types: &mut [usize]) {
    types.fill(0);
    let mut next_s = false;
    for i in (0..s.len() - 1).rev() {
        let here = s[i].index();
        let next = s[i + 1].index();
        let this_s = here < next || (here == next && next_s);
        if this_s {
            types[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        }
        next_s = this_s;
    }
}

fn bucket_heads<T: Symbol>(s: &[T], bucket: &mut [usize]) {
    bucket.fill(0);
    for &c in s {
        bucket[c.index()] += 1;
    }
    let mut sum = 0;
    for b in bucket.iter_mut() {
        let count = *b;
        *b = sum;
        sum += count;
    }
}

fn bucket_tails<T: Symbol>(s: &[T], bucket: &mut [usize]) {
    bucket.fill(0);
    for &c in s {
        bucket[c.index()] += 1;
    }
    let mut sum = 0;
    for b in bucket.iter_mut() {
        sum += *b;
        *b = sum;
    }
}

fn induce<T: Symbol>(s: &[T], sa: &mut [usize], bucket: &mut [usize], types: &[usize]) {
    let m = s.len();

    bucket_heads(s, bucket);
    let last = s[m - 1].index();
    sa[bucket[last]] = m - 1;
    bucket[last] += 1;
    for i in 0..m {
        let j = sa[i];
        if j != NIL && j > 0 && !is_s(types, j - 1) {
            let c = s[j - 1].index();
            sa[bucket[c]] = j - 1;
            bucket[c] += 1;
        }
    }

    bucket_tails(s, bucket);
    for i in (0..m).rev() {
        let j = sa[i];
        if j != NIL && j > 0 && is_s(types, j - 1) {
            let c = s[j - 1].index();
            bucket[c] -= 1;
            sa[bucket[c]] = j - 1;
        }
    }
}

fn next_lms(types: &[usize], from: usize, m: usize) -> usize {
    (from + 1..m).find(|&i| is_lms(types, i)).unwrap_or(m)
}

fn lms_substrings_equal<T: Symbol>(s: &[T], types: &[usize], x: usize, y: usize) -> bool {
    let m = s.len();
    let end_x = next_lms(types, x, m);
    let end_y = next_lms(types, y, m);
    // a substring running into the end of the text is unique
    if end_x == m || end_y == m || end_x - x != end_y - y {
        return false;
    }
    s[x..=end_x] == s[y..=end_y]
}

fn carve<'a>(
    arena: &'a mut [usize],
    bucket: Option<&'a mut [usize]>,
    alphabet: usize,
    m: usize,
) -> (&'a mut [usize], &'a mut [usize]) {
    let (bucket, rest) = match bucket {
        Some(b) => (&mut b[..alphabet], arena),
        None => arena.split_at_mut(alphabet),
    };
    (bucket, &mut rest[..words_for(m)])
}

fn sais<T: Symbol>(
    s: &[T],
    sa: &mut [usize],
    alphabet: usize,
    mut bucket: Option<&mut [usize]>,
    arena: &mut [usize],
) {
    let m = s.len();
    match m {
        1 => {
            sa[0] = 0;
            return;
        }
        2 => {
            if s[0].index() < s[1].index() {
                sa.copy_from_slice(&[0, 1]);
            } else {
                sa.copy_from_slice(&[1, 0]);
            }
            return;
        }
        _ => {}
    }

    // Sort LMS substrings and name them.
    let (n1, names) = {
        let (bkt, types) = carve(arena, bucket.as_deref_mut(), alphabet, m);
        classify(s, types);

        sa.fill(NIL);
        bucket_tails(s, bkt);
        for (i, &c) in s.iter().enumerate().skip(1) {
            if is_lms(types, i) {
                bkt[c.index()] -= 1;
                sa[bkt[c.index()]] = i;
            }
        }
        induce(s, sa, bkt, types);

        let mut n1 = 0;
        for i in 0..m {
            let p = sa[i];
            if is_lms(types, p) {
                sa[n1] = p;
                n1 += 1;
            }
        }

        // LMS positions are at least two apart, so p / 2 is a free slot.
        sa[n1..].fill(NIL);
        let mut names = 0;
        let mut prev = NIL;
        for i in 0..n1 {
            let p = sa[i];
            if prev == NIL || !lms_substrings_equal(s, types, prev, p) {
                names += 1;
            }
            prev = p;
            sa[n1 + p / 2] = names - 1;
        }
        let mut w = m;
        for i in (n1..m).rev() {
            if sa[i] != NIL {
                w -= 1;
                sa[w] = sa[i];
            }
        }
        (n1, names)
    };

    // Sort the reduced string; its symbols live in the tail of `sa`.
    {
        let (lo, hi) = sa.split_at_mut(m - n1);
        let reduced = &hi[..];
        let sa1 = &mut lo[..n1];
        if names < n1 {
            sais(reduced, sa1, names, None, arena);
        } else {
            for (i, &name) in reduced.iter().enumerate() {
                sa1[name] = i;
            }
        }
    }

    // Seed with LMS suffixes in sorted order and induce the rest.
    let (bkt, types) = carve(arena, bucket, alphabet, m);
    classify(s, types);
    let mut w = m - n1;
    for i in 1..m {
        if is_lms(types, i) {
            sa[w] = i;
            w += 1;
        }
    }
    for i in 0..n1 {
        sa[i] = sa[m - n1 + sa[i]];
    }
    sa[n1..].fill(NIL);
    bucket_tails(s, bkt);
    for i in (0..n1).rev() {
        let p = sa[i];
        sa[i] = NIL;
        let c = s[p].index();
        bkt[c] -= 1;
        sa[bkt[c]] = p;
    }
    induce(s, sa, bkt, types);
}
