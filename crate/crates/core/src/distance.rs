//! Exact minimum distance by exhaustive codeword enumeration.
//!
//! The generator is brought to reduced echelon form and only messages whose
//! first nonzero coordinate is 1 are visited, one per projective class.
//! Work is split into independent partitions keyed by the leading position
//! and the value of the next coordinate; inside a partition the remaining
//! coordinates run as an odometer, so each step XORs one precomputed scaled
//! row into the running codeword. A shared running minimum lets partitions
//! stop as soon as a known lower bound is met.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::linalg::CodeMatrix;

/// Default budget in symbol operations (`q^k * n`).
pub const DEFAULT_BUDGET: u128 = 1 << 34;

/// How often (in messages) a partition looks at the shared minimum.
const POLL_INTERVAL: u32 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    BoundOnly,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::BoundOnly => "bound-only",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub n: usize,
    pub k: usize,
    pub exact_distance: Option<usize>,
    pub lower_bound: usize,
    pub method: Method,
    pub elapsed: Duration,
}

impl DistanceResult {
    /// Singleton bound `n - k + 1`.
    pub fn singleton(&self) -> usize {
        self.n + 1 - self.k
    }

    /// Lower bound <= exact <= Singleton, when an exact value exists.
    pub fn is_consistent(&self) -> bool {
        match self.exact_distance {
            Some(d) => self.lower_bound <= d && d <= self.singleton(),
            None => true,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Maximum `q^k * n` before the search is refused.
    pub budget: u128,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// A proven lower bound on the distance. Reaching it ends the search.
    pub lower_bound: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, threads: None, lower_bound: 1 }
    }
}

/// Work estimate `q^k * n` for a code.
pub fn work_units(q: usize, k: usize, n: usize) -> u128 {
    (q as u128).checked_pow(k as u32).and_then(|x| x.checked_mul(n as u128)).unwrap_or(u128::MAX)
}

/// Codewords packed one symbol per byte in little-endian `u64` words.
struct Packed {
    words: usize,
    // scaled[(row * q + c) * words ..] = c * row
    scaled: Vec<u64>,
    q: usize,
}

impl Packed {
    fn new(basis: &CodeMatrix) -> Self {
        let f = *basis.field();
        let q = f.order();
        let n = basis.cols();
        let words = n.div_ceil(8);
        let mut scaled = vec![0u64; basis.rows() * q * words];
        for i in 0..basis.rows() {
            for c in f.elements() {
                let base = (i * q + c.value() as usize) * words;
                for (col, &e) in basis.row(i).iter().enumerate() {
                    let byte = f.mul(c, e).value() as u64;
                    scaled[base + col / 8] |= byte << (8 * (col % 8));
                }
            }
        }
        Packed { words, scaled, q }
    }

    #[inline]
    fn row(&self, i: usize, c: usize) -> &[u64] {
        let base = (i * self.q + c) * self.words;
        &self.scaled[base..base + self.words]
    }

    #[inline]
    fn weight(&self, w: &[u64]) -> usize {
        const LOW7: u64 = 0x7f7f_7f7f_7f7f_7f7f;
        let zeros: u32 = w
            .iter()
            .map(|&x| {
                // high bit of each byte set iff that byte is zero
                let t = !(((x & LOW7).wrapping_add(LOW7)) | x | LOW7);
                t.count_ones()
            })
            .sum();
        // padding bytes are zero and were counted
        self.words * 8 - zeros as usize
    }
}

/// Scans one partition: message `e_lead + v * e_(lead+1) + (free tail)`.
fn scan_partition(packed: &Packed, k: usize, lead: usize, v: usize, best: &AtomicUsize, stop_at: usize) {
    let mut cw: Vec<u64> = packed.row(lead, 1).to_vec();
    if lead + 1 < k {
        for (a, b) in cw.iter_mut().zip(packed.row(lead + 1, v)) {
            *a ^= b;
        }
    }
    let first_free = (lead + 2).min(k);
    let free = k - first_free;
    let mut digits = vec![0usize; free];
    let mut local = best.load(Ordering::Relaxed);
    let mut tick = 0u32;
    loop {
        let w = packed.weight(&cw);
        if w < local {
            local = best.fetch_min(w, Ordering::Relaxed).min(w);
            if local <= stop_at {
                return;
            }
        }
        tick += 1;
        if tick == POLL_INTERVAL {
            tick = 0;
            local = local.min(best.load(Ordering::Relaxed));
            if local <= stop_at {
                return;
            }
        }
        // odometer step
        let mut pos = 0;
        loop {
            if pos == free {
                return;
            }
            let old = digits[pos];
            let new = if old + 1 == packed.q { 0 } else { old + 1 };
            digits[pos] = new;
            for (a, b) in cw.iter_mut().zip(packed.row(first_free + pos, old ^ new)) {
                *a ^= b;
            }
            if new != 0 {
                break;
            }
            pos += 1;
        }
    }
}

/// Minimum Hamming weight of the nonzero codewords of the row space of `g`.
///
/// Returns a bound-only result when `q^k * n` exceeds the budget or the
/// field is larger than GF(256).
pub fn exact_min_distance(g: &CodeMatrix, opts: &SearchOptions) -> DistanceResult {
    let start = Instant::now();
    let basis = g.row_basis();
    let (n, k) = (g.cols(), basis.rows());
    let field = *g.field();
    let q = field.order();
    let lower_bound = opts.lower_bound.max(1);
    let bound_only = DistanceResult { n, k, exact_distance: None, lower_bound, method: Method::BoundOnly, elapsed: Duration::ZERO };
    if k == 0 || field.degree() > 8 || work_units(q, k, n) > opts.budget {
        return DistanceResult { elapsed: start.elapsed(), ..bound_only };
    }

    let packed = Packed::new(&basis);
    let best = AtomicUsize::new(n + 1);
    let tasks: Vec<(usize, usize)> = (0..k)
        .flat_map(|lead| {
            let vs = if lead + 1 < k { q } else { 1 };
            (0..vs).map(move |v| (lead, v))
        })
        .collect();
    let run = || {
        tasks.par_iter().for_each(|&(lead, v)| {
            if best.load(Ordering::Relaxed) > lower_bound {
                scan_partition(&packed, k, lead, v, &best, lower_bound);
            }
        })
    };
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
    DistanceResult {
        exact_distance: Some(best.into_inner()),
        method: Method::Exhaustive,
        elapsed: start.elapsed(),
        ..bound_only
    }
}
