use std::io::Write;

use anyhow::{bail, Result};
use ghcodes::codes::{duality_sweep, CodeFamily};
use ghcodes::distance::{exact_min_distance, SearchOptions, DEFAULT_BUDGET};
use ghcodes::gf::{FieldElement, GaloisField};
use ghcodes::semigroup::{telescopic_conductor_genus, telescopic_trace, NumericalSemigroup, TelescopicSemigroup};
use ghcodes::tables;
use ghcodes::GhCurve;

use crate::{Command, Format, GlobalOpts, RunConfig, Table, ThreadOpts, VerificationFailed};

pub fn dispatch(cmd: &Command, cfg: &RunConfig, opts: &GlobalOpts, out: &mut Vec<u8>) -> Result<()> {
    match cmd {
        Command::Curve { points } => curve(cfg, opts, *points, out),
        Command::Semigroup { generators, max_s } => semigroup(cfg, opts, generators.as_deref(), *max_s, out),
        Command::Basis { s } => basis(cfg, opts, *s, out),
        Command::Code { s, dual_sweep } => {
            if *dual_sweep {
                sweep(cfg, out)
            } else {
                code(cfg, opts, s.expect("clap requires s"), out)
            }
        }
        Command::Distance { s, exact: _, bounds_only, force, budget, threads } => {
            distance(cfg, opts, *s, *bounds_only, *force, *budget, *threads, out)
        }
        Command::Tables { which, force, threads } => table(*which, *force, *threads, out),
        Command::Verify { seed, threads } => verify(cfg, *seed, *threads, out),
    }
}

fn field(cfg: &RunConfig) -> Result<GaloisField> {
    Ok(match cfg.modulus {
        Some(m) => GaloisField::with_modulus(cfg.r, m)?,
        None => GaloisField::new(cfg.r)?,
    })
}

fn curve_for(cfg: &RunConfig) -> Result<GhCurve> {
    Ok(GhCurve::over(field(cfg)?))
}

fn fmt_el(e: FieldElement, hex: bool) -> String {
    if hex {
        format!("{e:#}")
    } else {
        e.to_string()
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn curve(cfg: &RunConfig, opts: &GlobalOpts, with_points: bool, out: &mut Vec<u8>) -> Result<()> {
    let c = curve_for(cfg)?;
    let (n, g) = (c.length(), c.genus());
    let pts = c.points();
    let rows = [
        ("r", cfg.r.to_string()),
        ("modulus", c.field().modulus().to_string()),
        ("genus", g.to_string()),
        ("points", pts.len().to_string()),
        ("rational_places", (n + 1).to_string()),
        ("places_per_genus", format!("{:.4}", (n + 1) as f64 / g as f64)),
    ];
    match opts.format {
        Format::Text => {
            for (k, v) in rows {
                writeln!(out, "{k}: {v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", join(rows.iter().map(|r| r.0), ","))?;
            writeln!(out, "{}", join(rows.iter().map(|r| r.1.clone()), ","))?;
        }
    }
    if with_points {
        if opts.format == Format::Text {
            writeln!(out)?;
        }
        writeln!(out, "alpha,beta")?;
        for p in pts {
            writeln!(out, "{},{}", fmt_el(p.alpha, opts.hex), fmt_el(p.beta, opts.hex))?;
        }
    }
    Ok(())
}

fn semigroup(cfg: &RunConfig, opts: &GlobalOpts, gens: Option<&[usize]>, max_s: usize, out: &mut Vec<u8>) -> Result<()> {
    let sg = match gens {
        Some(g) => NumericalSemigroup::new(g)?,
        None => curve_for(cfg)?.weierstrass().clone(),
    };
    let seq: Vec<usize> = gens.map(<[usize]>::to_vec).unwrap_or_else(|| sg.generators().to_vec());
    let trace = telescopic_trace(&seq)?;
    let tele = TelescopicSemigroup::new(&seq).ok();
    let closed = telescopic_conductor_genus(&seq).ok();

    let summary = [
        ("generators", join(&seq, " ")),
        ("conductor", sg.conductor().to_string()),
        ("genus", sg.genus().to_string()),
        ("gaps", join(sg.gaps(), " ")),
        ("telescopic", trace.is_telescopic().to_string()),
        ("closed_form", closed.map_or("-".into(), |(c, g)| format!("c={c} g={g}"))),
    ];
    let header = ["s", "rho_s", "nu_s", "delta_fr", "delta_goppa", "delta_fr_window", "delta_fr_low"];
    let mut rows = Vec::new();
    for s in 1..=max_s {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        rows.push([
            s.to_string(),
            sg.rho(s)?.to_string(),
            sg.nu(s)?.to_string(),
            sg.feng_rao(s)?.to_string(),
            sg.goppa_omega(s)?.to_string(),
            opt(tele.as_ref().and_then(|t| t.feng_rao_window(s).ok())),
            opt(tele.as_ref().and_then(|t| t.feng_rao_low(s).ok())),
        ]);
    }
    match opts.format {
        Format::Text => {
            for (k, v) in &summary {
                writeln!(out, "{k}: {v}")?;
            }
            for (i, st) in trace.stages.iter().enumerate() {
                writeln!(out, "stage {}: d={} A={{{}}} member={}", i + 1, st.d, join(&st.scaled, ","), st.member)?;
            }
            writeln!(out)?;
            let widths: Vec<usize> = (0..header.len())
                .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap())
                .collect();
            let line = |cells: Vec<&str>| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for r in &rows {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
        }
        Format::Csv => {
            writeln!(out, "key,value")?;
            for (k, v) in &summary {
                writeln!(out, "{k},{v}")?;
            }
            writeln!(out)?;
            writeln!(out, "{}", header.join(","))?;
            for r in &rows {
                writeln!(out, "{}", r.join(","))?;
            }
        }
    }
    Ok(())
}

fn basis(cfg: &RunConfig, opts: &GlobalOpts, s: usize, out: &mut Vec<u8>) -> Result<()> {
    let c = curve_for(cfg)?;
    let b = c.basis(s);
    match opts.format {
        Format::Text => {
            writeln!(out, "L({s}Q) basis, dimension {}", b.len())?;
            for m in &b {
                writeln!(out, "order {:>4}: x^{} y^{} theta^{}", m.order, m.i, m.j, m.k)?;
            }
        }
        Format::Csv => {
            writeln!(out, "i,j,k,order")?;
            for m in &b {
                writeln!(out, "{},{},{},{}", m.i, m.j, m.k, m.order)?;
            }
        }
    }
    Ok(())
}

fn code(cfg: &RunConfig, opts: &GlobalOpts, s: usize, out: &mut Vec<u8>) -> Result<()> {
    let fam = CodeFamily::for_curve(curve_for(cfg)?);
    let g = fam.generator_matrix(s);
    let report = fam.report(s)?;
    write!(out, "{}", g.to_text())?;
    match opts.format {
        Format::Text => write!(out, "{report}")?,
        Format::Csv => write!(out, "{}", report.to_csv())?,
    }
    Ok(())
}

fn sweep(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<()> {
    let fam = CodeFamily::for_curve(curve_for(cfg)?);
    let n = fam.length();
    let mut failed = 0;
    for c in duality_sweep(&fam) {
        let ok = c.passed(n);
        failed += usize::from(!ok);
        writeln!(
            out,
            "l={:<4} dual={:<4} rank={}+{} orthogonal={} kernel={} {}",
            c.l,
            c.dual,
            c.rank,
            c.dual_rank,
            c.orthogonal,
            c.kernel_matches,
            if ok { "PASS" } else { "FAIL" }
        )?;
    }
    if failed > 0 {
        return Err(VerificationFailed(failed).into());
    }
    Ok(())
}

fn search_options(force: bool, budget: Option<u128>, threads: ThreadOpts) -> SearchOptions {
    let budget = if force { u128::MAX } else { budget.unwrap_or(DEFAULT_BUDGET) };
    SearchOptions { budget, threads: threads.threads, lower_bound: 1 }
}

#[allow(clippy::too_many_arguments)]
fn distance(
    cfg: &RunConfig,
    opts: &GlobalOpts,
    s: usize,
    bounds_only: bool,
    force: bool,
    budget: Option<u128>,
    threads: ThreadOpts,
    out: &mut Vec<u8>,
) -> Result<()> {
    let fam = CodeFamily::for_curve(curve_for(cfg)?);
    let g = fam.generator_matrix(s);
    let mut search = search_options(force, budget, threads);
    search.lower_bound = fam.lower_bound(s);
    if bounds_only {
        search.budget = 0;
    }
    let res = exact_min_distance(&g, &search);
    eprintln!("elapsed: {:.3}s", res.elapsed.as_secs_f64());
    let exact = res.exact_distance.map_or("-".to_string(), |d| d.to_string());
    let fields = [
        ("n", res.n.to_string()),
        ("k", res.k.to_string()),
        ("s", s.to_string()),
        ("d", exact),
        ("lower_bound", res.lower_bound.to_string()),
        ("singleton", res.singleton().to_string()),
        ("method", res.method.as_str().to_string()),
    ];
    match opts.format {
        Format::Text => {
            for (k, v) in fields {
                writeln!(out, "{k} = {v}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", join(fields.iter().map(|f| f.0), ","))?;
            writeln!(out, "{}", join(fields.iter().map(|f| f.1.clone()), ","))?;
        }
    }
    if !res.is_consistent() {
        bail!("distance {:?} violates its bounds", res.exact_distance);
    }
    Ok(())
}

fn table(which: Table, force: bool, threads: ThreadOpts, out: &mut Vec<u8>) -> Result<()> {
    match which {
        Table::Designed => {
            write!(out, "{}", tables::designed_distance_csv(&tables::designed_distance_table()))?;
        }
        Table::Distances => {
            let rows = tables::distance_table(&search_options(force, None, threads))?;
            write!(out, "{}", tables::distance_csv(&rows))?;
        }
    }
    Ok(())
}

struct Checks<'a> {
    out: &'a mut Vec<u8>,
    failed: usize,
    total: usize,
}

impl Checks<'_> {
    fn check(&mut self, name: &str, ok: bool, detail: impl AsRef<str>) -> Result<()> {
        self.total += 1;
        self.failed += usize::from(!ok);
        writeln!(self.out, "[{}] {name}: {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref())?;
        Ok(())
    }
}

fn verify(cfg: &RunConfig, seed: u64, threads: ThreadOpts, out: &mut Vec<u8>) -> Result<()> {
    let curve = curve_for(cfg)?;
    let f = *curve.field();
    let r = cfg.r;
    let mut ck = Checks { out, failed: 0, total: 0 };

    // field
    let mut state = seed | 1;
    let mut next = || {
        // xorshift64
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        f.element((state % f.order() as u64) as u32).unwrap()
    };
    let mut axioms = true;
    for _ in 0..1000 {
        let (a, b, c) = (next(), next(), next());
        axioms &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
        axioms &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        axioms &= f.mul(a, b) == f.mul(b, a);
        axioms &= a.is_zero() || f.mul(a, f.inv(a)?) == FieldElement::ONE;
    }
    ck.check("field axioms", axioms, format!("1000 random triples, seed {seed}"))?;
    let kernel = f.elements().filter(|&a| f.trace(a).is_zero()).count();
    ck.check("trace kernel", kernel == f.order() / 2, format!("{kernel} of {} elements", f.order()))?;

    // curve
    let pts = curve.points();
    let n = curve.length();
    ck.check("point count", pts.len() == n && pts.iter().all(|&p| curve.contains(p)), format!("{} points", pts.len()))?;
    let per_alpha = f.elements().all(|a| pts.iter().filter(|p| p.alpha == a).count() == f.order() / 2);
    ck.check("beta fibres", per_alpha, "each alpha has 2^(r-1) points")?;

    // semigroup
    let ws = curve.weierstrass();
    let closed = telescopic_conductor_genus(ws.generators());
    let sg_ok = closed.as_ref().is_ok_and(|&(c, g)| c == ws.conductor() && g == ws.genus()) && ws.genus() == curve.genus();
    ck.check(
        "semigroup",
        sg_ok,
        format!("generators {:?}, conductor {}, genus {}", ws.generators(), ws.conductor(), ws.genus()),
    )?;
    if r >= 3 {
        let lim = 2 * ws.conductor();
        let b = curve.lbasis(lim)?;
        let ok = b.len() == ws.count_up_to(lim) && b.windows(2).all(|w| w[0].order < w[1].order);
        ck.check("basis orders", ok, format!("{} distinct orders up to {lim}", b.len()))?;
    }

    // codes
    let fam = CodeFamily::for_curve(curve.clone());
    let dims: Vec<usize> = if r <= 4 { (1..n).collect() } else { vec![1, curve.genus(), 2 * curve.genus() - 1, n - 1] };
    let bad: Vec<usize> = dims.iter().copied().filter(|&s| fam.generator_matrix(s).rank() != ws.count_up_to(s)).collect();
    ck.check("rank identity", bad.is_empty(), format!("{} values of s, failures {bad:?}", dims.len()))?;
    if r <= 4 {
        let sweep = duality_sweep(&fam);
        let bad: Vec<usize> = sweep.iter().filter(|c| !c.passed(n)).map(|c| c.l).collect();
        ck.check("duality sweep", bad.is_empty(), format!("l = 0..={}, failures {bad:?}", fam.dual_sum()))?;
    }
    let half = fam.dual_sum() / 2;
    let sd = fam.code(half);
    let gram = sd.generator.mul_transpose(&sd.generator)?.is_zero();
    ck.check("self-dual code", gram && 2 * sd.dimension == n, format!("GH_{half}: k = {}", sd.dimension))?;

    if r == 3 {
        let rows = tables::designed_distance_table();
        let ok = rows.iter().all(|row| row.oracles_agree() && (row.matches_reference() || !row.annotation.is_empty()));
        let flagged: Vec<usize> = rows.iter().filter(|r| !r.annotation.is_empty()).map(|r| r.s).collect();
        ck.check("designed distance table", ok, format!("flagged rows {flagged:?}"))?;
        let opts = search_options(false, None, threads);
        let rows = tables::distance_table_for(&[6, 7, 8], &opts)?;
        let ok = rows.iter().all(|r| r.result.exact_distance == Some(r.reference_d) && r.result.is_consistent());
        let got: Vec<_> = rows.iter().map(|r| (r.k, r.result.exact_distance)).collect();
        ck.check("distance table", ok, format!("{got:?}"))?;
        let rc = tables::record_code_check()?;
        ck.check("record code", rc.passed(), format!("[{}, {}, >= {}]", rc.n, rc.k, rc.feng_rao_bound))?;
    }

    let (failed, total) = (ck.failed, ck.total);
    writeln!(ck.out, "{} of {total} checks passed", total - failed)?;
    if failed > 0 {
        return Err(VerificationFailed(failed).into());
    }
    Ok(())
}
