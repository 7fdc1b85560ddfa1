//! Acceptance suite. Runs every criterion in sequence, prints one PASS/FAIL
//! line each, and exits non-zero if any fails.

#![allow(clippy::type_complexity, clippy::needless_range_loop)]

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use inplace_sus::buffers::{Stage, WorkBuffers, NIL};
use inplace_sus::lsus::compute_lsus;
use inplace_sus::oracle;
use inplace_sus::sls::{self, find_sls, SlsBounds};
use inplace_sus::sus::find_sus;
use inplace_sus::{find_all_sus, find_all_sus_into, Text};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct CountingAlloc;

static TRACKING: AtomicBool = AtomicBool::new(false);
static COUNT: AtomicUsize = AtomicUsize::new(0);
const LOG_LEN: usize = 64;
static SIZES: [AtomicUsize; LOG_LEN] = [const { AtomicUsize::new(0) }; LOG_LEN];

unsafe impl GlobalAlloc for CountingAlloc {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        if TRACKING.load(Ordering::Relaxed) {
            let i = COUNT.fetch_add(1, Ordering::Relaxed);
            if i < LOG_LEN {
                SIZES[i].store(layout.size(), Ordering::Relaxed);
            }
        }
        System.alloc(layout)
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout)
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        if TRACKING.load(Ordering::Relaxed) {
            let i = COUNT.fetch_add(1, Ordering::Relaxed);
            if i < LOG_LEN {
                SIZES[i].store(new_size, Ordering::Relaxed);
            }
        }
        System.realloc(ptr, layout, new_size)
    }
}

#[global_allocator]
static GLOBAL: CountingAlloc = CountingAlloc;

/// Allocation sizes (bytes) requested while `f` runs.
fn allocations_during<T>(f: impl FnOnce() -> T) -> (T, Vec<usize>) {
    COUNT.store(0, Ordering::SeqCst);
    TRACKING.store(true, Ordering::SeqCst);
    let out = f();
    TRACKING.store(false, Ordering::SeqCst);
    let count = COUNT.load(Ordering::SeqCst);
    let sizes = (0..count.min(LOG_LEN))
        .map(|i| SIZES[i].load(Ordering::SeqCst))
        .collect();
    (out, sizes)
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binary_strings(max_n: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_n).flat_map(|n| {
        (0u32..1 << n).map(move |bits| (0..n).map(|i| b'a' + (bits >> i & 1) as u8).collect())
    })
}

fn random_dna(rng: &mut StdRng, n: usize) -> Vec<u8> {
    (0..n).map(|_| b"ACGT"[rng.gen_range(0..4)]).collect()
}

/// Ratio of the best time at `2n` to the best time at `n`, sampled in
/// alternating rounds so drift in machine load hits both sizes alike.
fn doubling_ratio(n: usize, mut run: impl FnMut(usize)) -> f64 {
    let mut time = |len: usize| {
        let start = Instant::now();
        run(len);
        start.elapsed().as_secs_f64()
    };
    time(2 * n);
    let (mut small, mut large) = (f64::INFINITY, f64::INFINITY);
    for _ in 0..7 {
        small = small.min(time(n));
        large = large.min(time(2 * n));
    }
    large / small
}

fn criterion_1() -> Outcome {
    const N: usize = NIL;
    let mut b = vec![2, 3, 6, 7, 9, 9, 9, 10, 14];
    b.resize(17, NIL);
    let mut a = vec![0; 17];

    let start = Instant::now();
    let bounds = sls::locate_bounds(&mut a, &b);
    sls::compute_pred(&mut a, &b, bounds);
    let pred = a[..9].to_vec();
    sls::compute_t(&mut a, &b, bounds);
    let t = a[..9].to_vec();
    sls::compute_t_inverse(&mut a, bounds);
    let tinv = a[..12].to_vec();
    sls::compute_sls(&mut a, bounds);
    let elapsed = start.elapsed();

    ensure(bounds == SlsBounds { r: 8, z: 14 }, || format!("bounds {bounds:?}"))?;
    ensure(pred == [N, N, 1, 1, 3, 1, 1, 1, 7], || format!("pred {pred:?}"))?;
    ensure(t == [0, 1, 4, 4, 8, 5, 6, 7, 11], || format!("t {t:?}"))?;
    ensure(tinv == [0, 1, N, N, 3, 5, 6, 7, 4, N, N, 8], || format!("t^-1 {tinv:?}"))?;
    ensure(
        a[..15] == [0, 1, 1, 1, 3, 5, 6, 7, 7, 7, 7, 8, 8, 8, 8],
        || format!("A {a:?}"),
    )?;
    ensure(elapsed.as_secs_f64() < 1e-3, || format!("took {elapsed:?}"))?;
    Ok(format!("all four rows exact, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let cases: [(&[u8], usize, usize, (usize, usize)); 6] = [
        (b"dabcabc", 0, 5, (4, 5)),
        (b"dabcabc", 0, 6, (4, 6)),
        (b"dabcabc", 1, 4, (3, 5)),
        (b"dabcabc", 1, 6, (3, 6)),
        (b"abcbb", 0, 2, (2, 3)),
        (b"abcbb", 1, 2, (2, 4)),
    ];
    for (s, k, pos, want) in cases {
        let (i, j) = find_all_sus(s, k).map_err(|e| e.to_string())?.get(pos - 1);
        let got = (i + 1, j + 1);
        ensure(got == want, || {
            format!("{} k={k} pos {pos}: {got:?} != {want:?}", String::from_utf8_lossy(s))
        })?;
    }
    Ok("6 positions match (1-based)".into())
}

/// Runs the three stages one by one and checks each against the oracle.
fn staged_equivalence(s: &[u8], k: usize) -> Result<(), String> {
    let ctx = || format!("{} k={k}", String::from_utf8_lossy(s));
    let text = Text::new(s).map_err(|e| e.to_string())?;
    let mut wb = WorkBuffers::new(s.len());

    compute_lsus(&text, &mut wb, k).map_err(|e| e.to_string())?;
    let lsus: Vec<Option<(usize, usize)>> = wb
        .b()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e != NIL).then_some((i, e)))
        .collect();
    ensure(lsus == oracle::brute_lsus(s, k).unwrap(), || format!("lsus {}", ctx()))?;

    find_sls(&mut wb).map_err(|e| e.to_string())?;
    let sls: Vec<Option<(usize, usize)>> = wb
        .a()
        .iter()
        .map(|&j| (j != NIL).then(|| (j, wb.b()[j])))
        .collect();
    ensure(sls == oracle::brute_sls(s, k).unwrap(), || format!("sls {}", ctx()))?;

    find_sus(&mut wb).map_err(|e| e.to_string())?;
    ensure(wb.stage() == Stage::SusDone, || format!("stage {}", ctx()))?;
    let staged: Vec<(usize, usize)> = wb.a().iter().copied().zip(wb.b().iter().copied()).collect();
    let piped = find_all_sus(s, k).map_err(|e| e.to_string())?.to_vec();
    let expected = oracle::brute_sus(s, k).unwrap();
    ensure(staged == expected && piped == expected, || format!("sus {}", ctx()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut strings = 0;
    let mut instances = 0;
    for s in binary_strings(12) {
        strings += 1;
        for k in 0..s.len().min(3) {
            staged_equivalence(&s, k)?;
            instances += 1;
        }
    }
    ensure(strings == 8190, || format!("{strings} strings"))?;
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 300, || format!("took {elapsed:?}"))?;
    Ok(format!("{strings} strings, {instances} (string, k) instances, {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5u64);
    let mut mismatches = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=256);
        let k = rng.gen_range(0..=4.min(n - 1));
        let s = random_dna(&mut rng, n);
        let got = find_all_sus(&s, k).map_err(|e| e.to_string())?.to_vec();
        let want = oracle::brute_sus(&s, k).unwrap();
        mismatches += got.iter().zip(&want).filter(|(g, w)| g != w).count();
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatched cells"))?;
    Ok("500 random strings, 0 mismatched cells".into())
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xD7A);
    let big = random_dna(&mut rng, 1 << 21);
    let mut wb = WorkBuffers::with_capacity(1 << 21);
    let mut ratio = |n: usize, k: usize| {
        doubling_ratio(n, |len| {
            find_all_sus_into(&big[..len], k, &mut wb).unwrap();
        })
    };
    let exact = ratio(1 << 20, 0);
    let approx = ratio(1 << 12, 1);
    let detail = format!("k=0 ratio {exact:.2} (want [1.5, 3.0]), k=1 ratio {approx:.2} (want [3.2, 5.0])");
    ensure((1.5..=3.0).contains(&exact) && (3.2..=5.0).contains(&approx), || detail.clone())?;
    Ok(detail)
}

fn criterion_6() -> Outcome {
    const WORD: usize = std::mem::size_of::<usize>();
    const AUX_WORDS: usize = 256 + 16;
    let mut rng = StdRng::seed_from_u64(6);
    let mut max_other = 0;
    for (n, k) in [(1usize << 16, 0usize), (2048, 1), (1000, 3)] {
        let s = random_dna(&mut rng, n);
        let (table, sizes) = allocations_during(|| find_all_sus(&s, k).unwrap());
        drop(table);
        let arrays = sizes.iter().filter(|&&b| b == n * WORD).count();
        let other: usize = sizes.iter().filter(|&&b| b != n * WORD).sum();
        ensure(arrays == 2, || format!("n={n} k={k}: {arrays} n-word arrays, {sizes:?}"))?;
        ensure(other <= AUX_WORDS * WORD, || format!("n={n} k={k}: {other} extra bytes"))?;
        max_other = max_other.max(other);
    }

    let s = random_dna(&mut rng, 1 << 15);
    let mut wb = WorkBuffers::with_capacity(s.len());
    let ((), sizes) = allocations_during(|| {
        for round in 0..6 {
            let n = s.len() >> (round % 3);
            find_all_sus_into(&s[..n], round % 2, &mut wb).unwrap();
        }
    });
    ensure(sizes.is_empty(), || format!("reused buffers allocated {sizes:?}"))?;
    Ok(format!(
        "2 n-word arrays, at most {max_other} auxiliary heap bytes; 0 allocations over 6 reused runs"
    ))
}

fn check_invariants(s: &[u8], k: usize) -> Result<(), String> {
    let ctx = || format!("{} k={k}", String::from_utf8_lossy(s));
    let n = s.len();
    let text = Text::new(s).map_err(|e| e.to_string())?;
    let mut wb = WorkBuffers::new(n);
    compute_lsus(&text, &mut wb, k).map_err(|e| e.to_string())?;
    let lsus = wb.b().to_vec();
    ensure(lsus[0] != NIL, || format!("lsus[0] NIL {}", ctx()))?;
    let first_nil = lsus.iter().position(|&e| e == NIL).unwrap_or(n);
    ensure(lsus[first_nil..].iter().all(|&e| e == NIL), || format!("NIL closure {}", ctx()))?;
    ensure(
        lsus[..first_nil].windows(2).all(|w| w[0] <= w[1]),
        || format!("lsus monotone {}", ctx()),
    )?;
    ensure(
        lsus[..first_nil].iter().enumerate().all(|(i, &e)| e >= i),
        || format!("lsus end >= start {}", ctx()),
    )?;

    let bounds = find_sls(&mut wb).map_err(|e| e.to_string())?;
    let sls = wb.a().to_vec();
    ensure(
        sls[..=bounds.z].windows(2).all(|w| w[0] <= w[1]),
        || format!("sls monotone {}", ctx()),
    )?;
    ensure(sls[bounds.z + 1..].iter().all(|&j| j == NIL), || format!("sls tail {}", ctx()))?;

    find_sus(&mut wb).map_err(|e| e.to_string())?;
    for p in 0..n {
        let (i, j) = (wb.a()[p], wb.b()[p]);
        ensure(i <= p && p <= j && j < n, || format!("coverage p={p} {}", ctx()))?;
        ensure(oracle::is_k_unique(s, i, j, k), || format!("unique p={p} {}", ctx()))?;
        let len = j - i + 1;
        if len > 1 {
            let l = len - 1;
            let shorter = (p.saturating_sub(l - 1)..=p.min(n - l))
                .any(|si| oracle::is_k_unique(s, si, si + l - 1, k));
            ensure(!shorter, || format!("minimal p={p} {}", ctx()))?;
        }
        let later = (i + 1..=p.min(n - len)).any(|si| oracle::is_k_unique(s, si, si + len - 1, k));
        ensure(!later, || format!("rightmost p={p} {}", ctx()))?;
        // either the SLS itself or a right extension ending at p of an
        // LSUS that ends before p
        let is_sls = sls[p] == i && lsus[i] == j;
        let is_ext = j == p && lsus[i] != NIL && lsus[i] < p;
        ensure(is_sls || is_ext, || format!("decomposition p={p} {}", ctx()))?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut instances = 0;
    for s in binary_strings(12) {
        for k in 0..s.len().min(3) {
            check_invariants(&s, k)?;
            instances += 1;
        }
    }
    Ok(format!("{instances} instances"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 golden SLS table", criterion_1),
        ("2 worked examples", criterion_2),
        ("3 exhaustive oracle equivalence", criterion_3),
        ("4 randomized equivalence", criterion_4),
        ("5 scaling", criterion_5),
        ("6 space contract", criterion_6),
        ("7 invariant suite", criterion_7),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
