//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line and
//! asserts both the mathematical condition and its time limit.
//!
//! Run with `cargo test -p ghcodes --test acceptance -- --nocapture` to see
//! the report lines.

use std::time::{Duration, Instant};

use ghcodes::codes::{duality_sweep, CodeFamily};
use ghcodes::curve::{genus, GhCurve};
use ghcodes::distance::{exact_min_distance, SearchOptions, DEFAULT_BUDGET};
use ghcodes::gf::{FieldElement, GaloisField};
use ghcodes::semigroup::{gh_generators, is_telescopic, telescopic_conductor_genus, NumericalSemigroup, TelescopicSemigroup};
use ghcodes::tables::{designed_distance_table, distance_table_for, record_code_check};

fn report(id: &str, what: &str, ok: bool, elapsed: Duration, limit: Duration) {
    let within = elapsed < limit;
    let tag = if ok && within { "PASS" } else { "FAIL" };
    println!("[{tag}] {id} {what} ({:.3}s, limit {}s)", elapsed.as_secs_f64(), limit.as_secs());
    assert!(ok, "{id}: {what} failed");
    assert!(within, "{id}: took {elapsed:?}, limit {limit:?}");
}

#[test]
fn ac1_point_counts() {
    let t = Instant::now();
    let counts: Vec<usize> = (3..=5).map(|r| GhCurve::new(r).unwrap().points().len()).collect();
    let ok = counts == [32, 128, 512];
    report("AC1", &format!("affine points r=3,4,5: {counts:?}"), ok, t.elapsed(), Duration::from_secs(1));
}

#[test]
fn ac2_semigroup_identification() {
    let t = Instant::now();
    let mut ok = true;
    for r in 3..=8u32 {
        let gens = gh_generators(r).unwrap();
        let brute = NumericalSemigroup::new(&gens).unwrap();
        let closed = telescopic_conductor_genus(&gens).unwrap();
        let c = (1usize << (2 * r - 2)) - (1usize << (r - 1));
        let g = (1usize << (2 * r - 3)) - (1usize << (r - 2));
        // curve genus q^(r-1)(q^(r-1)-1)/2 at q = 2
        let q = 1usize << (r - 1);
        ok &= is_telescopic(&gens).unwrap();
        ok &= closed == (c, g);
        ok &= (brute.conductor(), brute.genus()) == (c, g);
        ok &= brute.gaps().len() == g;
        ok &= genus(r) == g && q * (q - 1) / 2 == g;
    }
    report("AC2", "telescopic generators, closed-form c and g = brute force = curve genus, r=3..8", ok, t.elapsed(), Duration::from_secs(1));
}

#[test]
fn ac3_dimension_identity() {
    let t = Instant::now();
    let fam = CodeFamily::new(3).unwrap();
    let ws = fam.curve().weierstrass();
    let mut ok = (1..32).all(|s| fam.generator_matrix(s).rank() == ws.count_up_to(s));
    let fam4 = CodeFamily::new(4).unwrap();
    let ws4 = fam4.curve().weierstrass();
    for s in [28, 55, 127] {
        ok &= fam4.generator_matrix(s).rank() == ws4.count_up_to(s);
    }
    report("AC3", "rank(GHM_s) = |Lambda ∩ [0,s]|, r=3 all 0<s<32, r=4 s in {28,55,127}", ok, t.elapsed(), Duration::from_secs(30));
}

#[test]
fn ac4_duality_sweep() {
    let t = Instant::now();
    let fam = CodeFamily::new(3).unwrap();
    let sweep = duality_sweep(&fam);
    let mut ok = sweep.len() == 43 && sweep.iter().all(|c| c.dual == 42 - c.l && c.passed(32));
    let herm = CodeFamily::new(2).unwrap();
    let hs = duality_sweep(&herm);
    ok &= hs.len() == 9 && hs.iter().all(|c| c.dual == 8 - c.l && c.passed(8));
    ok &= (0..=8).all(|s| herm.dual_parameter(s).unwrap() == 8 - s);
    report("AC4", "GHM_l * GHM_(42-l)^T = 0, rank sum 32, kernel oracle; Hermitian 8-s", ok, t.elapsed(), Duration::from_secs(60));
}

#[test]
fn ac5_designed_distance_table() {
    let t = Instant::now();
    let rows = designed_distance_table();
    let mut ok = rows.len() == 9;
    for row in &rows {
        if [12, 13].contains(&row.s) {
            ok &= row.delta_fr == 8 && row.delta_fr_window == Some(8) && row.reference_fr == 9;
            ok &= row.delta_goppa == row.reference_goppa;
            ok &= row.annotation.contains("suspected erratum");
        } else {
            ok &= row.matches_reference() && row.oracles_agree();
        }
    }
    report("AC5", "(delta_FR, delta_Goppa) for s=8..16; s=12,13 give 8 by both oracles", ok, t.elapsed(), Duration::from_secs(1));
}

#[test]
fn ac6_telescopic_feng_rao_formulas() {
    let t = Instant::now();
    let mut ok = true;
    let mut window_hits = 0;
    let mut low_hits = 0;
    for r in [3, 4] {
        let ts = TelescopicSemigroup::gh(r).unwrap();
        let sg = ts.semigroup();
        let (lo, hi) = ts.window().unwrap();
        for s in (lo + 1).max(sg.genus() as i64)..=hi {
            let s = s as usize;
            ok &= ts.feng_rao_window(s).unwrap() == sg.feng_rao(s).unwrap();
            window_hits += 1;
        }
        for s in 1..=hi as usize {
            if let Ok(v) = ts.feng_rao_low(s) {
                ok &= v == sg.feng_rao(s).unwrap();
                low_hits += 1;
            }
        }
    }
    ok &= window_hits > 0 && low_hits > 0;
    report(
        "AC6",
        &format!("window formula ({window_hits} cases) and low formula ({low_hits} cases) = brute force, r=3,4"),
        ok,
        t.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn ac7_distance_table() {
    let t = Instant::now();
    let opts = SearchOptions { budget: DEFAULT_BUDGET, threads: None, lower_bound: 1 };
    let rows = distance_table_for(&[6, 7, 8], &opts).unwrap();
    let mut ok = true;
    let mut got = Vec::new();
    for row in &rows {
        ok &= row.result.exact_distance == Some(row.reference_d) && row.result.is_consistent();
        ok &= row.goppa_bound <= row.reference_d;
        got.push((row.k, row.s, row.result.exact_distance));
        // full scan without the early exit, as an independent check
        let fam = CodeFamily::new(3).unwrap();
        let full = exact_min_distance(&fam.generator_matrix(row.s), &SearchOptions::default());
        ok &= full.exact_distance == Some(row.reference_d);
    }
    ok &= got.iter().map(|g| g.1).eq([10, 12, 13]);
    report("AC7", &format!("exact d for (k, s): {got:?}"), ok, t.elapsed(), Duration::from_secs(600));
}

#[test]
fn ac8_record_code() {
    let t = Instant::now();
    let rc = record_code_check().unwrap();
    let ok = rc.passed() && rc.s == 21 && rc.omega_index == 16 && rc.feng_rao_bound == 12;
    report("AC8", &format!("GH_21: n={} k={} self-dual={} d>={}", rc.n, rc.k, rc.self_dual, rc.feng_rao_bound), ok, t.elapsed(), Duration::from_secs(5));
}

#[test]
fn ac9_property_suites() {
    let t = Instant::now();
    let mut ok = true;
    // field axioms, exhaustive for small r and sampled above
    for r in 2..=8u32 {
        let f = GaloisField::new(r).unwrap();
        let step = if r <= 4 { 1 } else { 37 };
        let els: Vec<FieldElement> = f.elements().step_by(step).collect();
        for &a in &els {
            for &b in &els {
                ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                ok &= f.trace(f.add(a, b)) == f.add(f.trace(a), f.trace(b));
                for &c in els.iter().step_by(3) {
                    ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        let kernel = f.elements().filter(|&a| f.trace(a).is_zero()).count();
        ok &= kernel == 1 << (r - 1);
    }
    // basis / semigroup counts
    let c3 = GhCurve::new(3).unwrap();
    for s in 0..=64 {
        ok &= c3.lbasis(s).unwrap().len() == c3.weierstrass().count_up_to(s);
    }
    // injectivity up to 2c
    for r in 3..=6 {
        let c = GhCurve::new(r).unwrap();
        let b = c.lbasis(2 * c.weierstrass().conductor()).unwrap();
        ok &= b.windows(2).all(|w| w[0].order < w[1].order);
    }
    // Singleton on every computed code
    let fam = CodeFamily::new(3).unwrap();
    for s in [0, 4, 6, 8, 9, 10] {
        let res = exact_min_distance(&fam.generator_matrix(s), &SearchOptions::default());
        ok &= res.exact_distance.is_some() && res.is_consistent();
    }
    let herm = CodeFamily::new(2).unwrap();
    for s in 0..=8 {
        let res = exact_min_distance(&herm.generator_matrix(s), &SearchOptions::default());
        ok &= res.exact_distance.is_some_and(|d| d <= res.singleton() && d + s >= 8);
    }
    report("AC9", "field axioms, trace kernel, basis counts, injectivity, Singleton", ok, t.elapsed(), Duration::from_secs(60));
}

/// Rows k = 9, 10, 11 by full exhaustive scan. Not part of the default run.
#[test]
#[ignore]
fn ac7_forced_rows() {
    let t = Instant::now();
    let fam = CodeFamily::new(3).unwrap();
    let mut ok = true;
    let mut got = Vec::new();
    for (s, d) in [(14, 18), (15, 17), (16, 16)] {
        let opts = SearchOptions { budget: u128::MAX, ..Default::default() };
        let res = exact_min_distance(&fam.generator_matrix(s), &opts);
        ok &= res.exact_distance == Some(d);
        got.push((res.k, s, res.exact_distance));
    }
    report("AC7+", &format!("forced exact d for (k, s): {got:?}"), ok, t.elapsed(), Duration::from_secs(3600));
}
