use std::fs::File;
use std::io::{BufWriter, Write};

use anyhow::Context;
use cubetwist::arith::{is_cubefree, primes_up_to};
use cubetwist::averages::{checkpoints, growth_fit, gv_probe, partial_sums, tail_check, zk_vanishing_stats};
use cubetwist::charsums::t_polynomial;
use cubetwist::curves::{fraction, search_points};
use cubetwist::kubota::{check_homomorphism, gl2_kappa, gl3_factorizations, gl3_kappa};
use cubetwist::lfunctions::{hecke_coefficient, pointcount_ap};
use cubetwist::symbols::{cubic_symbol, quadratic_symbol};
use cubetwist::{Convention, Filter, IntMatrix, LOptions, QuadInt, Ring};
use num_complex::Complex64;

use crate::args::{
    ApMethod, Cli, Command, ConventionArg, FilterArgs, Format, KubotaCommand, StatsCommand, SymbolArg,
};
use crate::cache::ValueCache;
use crate::format::{round12, write_record, write_rows};
use crate::records::*;
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain(msg: impl Into<String>) -> CliError {
    CliError::Domain(anyhow::anyhow!(msg.into()))
}

/// Runs a parsed command, writing to `--out` or to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    if !(cli.cutoff_mult > 0.0 && cli.cutoff_mult.is_finite()) {
        return Err(usage("--cutoff-mult must be positive"));
    }
    let mut buffer = Vec::new();
    dispatch(cli, &mut buffer)?;
    match &cli.out {
        Some(path) => {
            let mut f = BufWriter::new(
                File::create(path).with_context(|| format!("creating {}", path.display()))?,
            );
            f.write_all(&buffer)?;
            f.flush()?;
        }
        None => stdout.write_all(&buffer)?,
    }
    Ok(())
}

fn format_or(cli: &Cli, default: Format) -> Format {
    cli.format.unwrap_or(default)
}

fn options(cli: &Cli) -> LOptions {
    LOptions {
        cutoff_mult: cli.cutoff_mult,
        ..LOptions::default()
    }
}

/// Opens the cache and fills in values for `ds`.
fn values_for(cli: &Cli, ds: &[i64]) -> Result<ValueCache> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .context("starting worker pool")?;
    let mut cache = ValueCache::open(cli.cache.as_deref(), options(cli))?;
    cache.ensure(ds, cli.recompute, &pool)?;
    Ok(cache)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Symbol { kind, a, b } => symbol(cli, *kind, a, b, out),
        Command::Kubota { command } => kubota(cli, command, out),
        Command::Ap { d, pmax, method } => ap(cli, *d, *pmax, *method, out),
        Command::Lvalue { d, json } => lvalue(cli, *d, *json, out),
        Command::Points { d, height } => points(cli, *d, *height, out),
        Command::Scan { xmax, filter } => scan(cli, *xmax, filter, out),
        Command::Stats { command } => stats(cli, command, out),
        Command::Tpoly { m, n, w, alpha_max } => tpoly(cli, m, n, w, *alpha_max, out),
    }
}

fn symbol(cli: &Cli, kind: SymbolArg, a: &str, b: &str, out: &mut dyn Write) -> Result<()> {
    let ring = match kind {
        SymbolArg::Cubic => Ring::Eisenstein,
        SymbolArg::Quadratic => Ring::Gaussian,
    };
    let a = QuadInt::parse_in(a, ring)?;
    let b = QuadInt::parse_in(b, ring)?;
    let v = match kind {
        SymbolArg::Cubic => cubic_symbol(&a, &b)?,
        SymbolArg::Quadratic => quadratic_symbol(&a, &b)?,
    };
    let record = SymbolRecord {
        a: a.to_string(),
        b: b.to_string(),
        exponent: v.exponent(),
        value: v.to_string(),
    };
    write_record(out, format_or(cli, Format::Text), &record)?;
    Ok(())
}

fn convention(c: ConventionArg) -> (Convention, &'static str) {
    match c {
        ConventionArg::Paper => (Convention::TopRow, "paper"),
        ConventionArg::Standard => (Convention::Standard, "standard"),
    }
}

fn kubota(cli: &Cli, command: &KubotaCommand, out: &mut dyn Write) -> Result<()> {
    match command {
        KubotaCommand::Gl2 { matrix, convention: c } => {
            let g = IntMatrix::parse(matrix, Ring::Gaussian)?;
            if g.size() != 2 {
                return Err(usage("kubota gl2 expects 4 entries"));
            }
            let (conv, name) = convention(*c);
            let v = gl2_kappa(&g, conv)?;
            let record = KappaRecord {
                matrix: g.to_string(),
                convention: name.into(),
                exponent: v.exponent().expect("kappa is a root of unity"),
                value: v.to_string(),
            };
            write_record(out, format_or(cli, Format::Text), &record)?;
        }
        KubotaCommand::Gl3 { matrix } => {
            let g = IntMatrix::parse(matrix, Ring::Eisenstein)?;
            if g.size() != 3 {
                return Err(usage("kubota gl3 expects 9 entries"));
            }
            let v = gl3_kappa(&g)?;
            let record = KappaRecord {
                matrix: g.to_string(),
                convention: format!("{} factorizations", gl3_factorizations(&g)?.len()),
                exponent: v.exponent().expect("kappa is a root of unity"),
                value: v.to_string(),
            };
            write_record(out, format_or(cli, Format::Text), &record)?;
        }
        KubotaCommand::CheckHom {
            n,
            samples,
            seed,
            max_word,
            convention: c,
        } => {
            if *n != 2 && *n != 3 {
                return Err(usage("--n must be 2 or 3"));
            }
            let (conv, name) = convention(*c);
            let r = check_homomorphism(*n, conv, *samples, *max_word, *seed)?;
            let record = HomomorphismRecord {
                n: *n,
                convention: if *n == 3 { "gl3".into() } else { name.into() },
                seed: *seed,
                samples: r.samples,
                passed: r.passed,
                failed: r.failed,
                undefined: r.errors,
                first_error: r.first_error,
            };
            write_record(out, format_or(cli, Format::Json), &record)?;
        }
    }
    Ok(())
}

/// Character values are listed for every prime `p <= pmax`; point counts
/// (alone or as a check) only for `p` not dividing `6D`.
fn ap(cli: &Cli, d: i64, pmax: u64, method: ApMethod, out: &mut dyn Write) -> Result<()> {
    if d == 0 || !is_cubefree(d) {
        return Err(cubetwist::Error::NotCubeFree(d).into());
    }
    let mut rows = Vec::new();
    for p in primes_up_to(pmax) {
        let good = (6 * d) % p as i64 != 0;
        let row = match method {
            ApMethod::Character => ApRecord {
                p,
                a_p: hecke_coefficient(d, p)?.a_n,
                a_p_check: None,
                matches: None,
            },
            _ if !good => continue,
            ApMethod::Pointcount => ApRecord {
                p,
                a_p: pointcount_ap(d, p)?,
                a_p_check: None,
                matches: None,
            },
            ApMethod::Both => {
                let a = hecke_coefficient(d, p)?.a_n;
                let b = pointcount_ap(d, p)?;
                ApRecord {
                    p,
                    a_p: a,
                    a_p_check: Some(b),
                    matches: Some(a == b),
                }
            }
        };
        rows.push(row);
    }
    write_rows(out, format_or(cli, Format::Csv), &rows)?;
    Ok(())
}

fn check_d(d: i64) -> Result<()> {
    if is_cubefree(d) {
        Ok(())
    } else {
        Err(cubetwist::Error::NotCubeFree(d).into())
    }
}

fn lvalue(cli: &Cli, d: i64, json: bool, out: &mut dyn Write) -> Result<()> {
    check_d(d)?;
    let cache = values_for(cli, &[d])?;
    let e = cache.row(d).expect("ensured").to_estimate(&options(cli))?;
    let record = LValueRecord {
        d,
        value: round12(e.value),
        error: round12(e.error_bound),
        sign: e.sign.to_string(),
        conductor: e.conductor_used,
        vanished: e.vanished,
    };
    let default = if json { Format::Json } else { Format::Text };
    write_record(out, format_or(cli, default), &record)?;
    Ok(())
}

fn points(cli: &Cli, d: i64, height: u64, out: &mut dyn Write) -> Result<()> {
    if d == 0 {
        return Err(domain("D must be nonzero"));
    }
    let rows: Vec<PointRecord> = search_points(d, height)
        .iter()
        .map(|p| PointRecord {
            x: fraction(&p.x),
            y: fraction(&p.y),
        })
        .collect();
    write_rows(out, format_or(cli, Format::Csv), &rows)?;
    Ok(())
}

fn filter(args: &FilterArgs) -> Result<Filter> {
    let f = match (args.class, args.modulus, args.primes, args.prime_squares) {
        (Some(c), Some(p), false, false) => Filter::Class { c, p },
        (None, None, true, false) => Filter::Primes,
        (None, None, false, true) => Filter::PrimeSquares,
        (None, None, false, false) => Filter::AllCubefree,
        _ => return Err(usage("use either --class with --mod, --primes or --prime-squares")),
    };
    f.validate()?;
    Ok(f)
}

fn filtered(xmax: u64, f: Filter) -> Vec<i64> {
    (1..=xmax as i64).filter(|&d| f.matches(d)).collect()
}

fn scan(cli: &Cli, xmax: u64, args: &FilterArgs, out: &mut dyn Write) -> Result<()> {
    let f = filter(args)?;
    let ds = filtered(xmax, f);
    let cache = values_for(cli, &ds)?;
    let table = cache.table(&ds)?;
    let rows: Vec<ScanRecord> = table
        .iter()
        .map(|e| ScanRecord {
            d: e.d,
            sign: e.sign.to_string(),
            value: round12(e.value),
            error: round12(e.error_bound),
            conductor: e.conductor_used,
            cutoff: round12(e.cutoff),
            vanished: e.vanished,
        })
        .collect();
    write_rows(out, format_or(cli, Format::Csv), &rows)?;
    Ok(())
}

fn stats(cli: &Cli, command: &StatsCommand, out: &mut dyn Write) -> Result<()> {
    match command {
        StatsCommand::Zk { xmax } => {
            if *xmax < 100 {
                return Err(domain(format!("stats zk needs xmax >= 100 (got {xmax})")));
            }
            let ds = filtered(*xmax, Filter::AllCubefree);
            let table = values_for(cli, &ds)?.table(&ds)?;
            let z = zk_vanishing_stats(*xmax, &table)?;
            let rows: Vec<ZkRecord> = [z.half, z.full]
                .iter()
                .map(|c| ZkRecord {
                    x: c.x,
                    even: c.even,
                    even_vanished: c.even_vanished,
                    odd: c.odd,
                    undetermined: c.undetermined,
                    fraction: round12(c.fraction),
                })
                .collect();
            write_rows(out, format_or(cli, Format::Csv), &rows)?;
        }
        StatsCommand::Gv { xmax } => {
            if *xmax < 50 {
                return Err(domain(format!("stats gv needs xmax >= 50 (got {xmax})")));
            }
            let ds: Vec<i64> = primes_up_to(*xmax)
                .into_iter()
                .filter(|&p| p != 3)
                .flat_map(|p| [p as i64, (p * p) as i64])
                .collect();
            let table = values_for(cli, &ds)?.table(&ds)?;
            let rows: Vec<GvRecord> = gv_probe(*xmax, &table)?
                .iter()
                .map(|r| GvRecord {
                    x: r.x,
                    sum: round12(r.sum),
                    normalized: round12(r.normalized),
                })
                .collect();
            write_rows(out, format_or(cli, Format::Csv), &rows)?;
        }
        StatsCommand::Growth { xmax, xmin, filter: args } => {
            let f = filter(args)?;
            let xmin = xmin.unwrap_or(xmax / 10);
            let ds = filtered(*xmax, f);
            let table = values_for(cli, &ds)?.table(&ds)?;
            let sums = partial_sums(&checkpoints(*xmax), f, &table)?;
            let pts: Vec<(f64, f64)> = sums
                .iter()
                .filter(|r| r.x >= xmin)
                .map(|r| (r.x as f64, r.sum))
                .collect();
            let fit = growth_fit(&pts)?;
            let report = GrowthReport {
                rows: sums
                    .iter()
                    .map(|r| SumRecord {
                        x: r.x,
                        sum: round12(r.sum),
                        count: r.count,
                    })
                    .collect(),
                fit: FitRecord {
                    exponent: round12(fit.exponent),
                    constant: round12(fit.constant),
                    log_preferred: fit.log_preferred,
                    residual: round12(fit.residual),
                    linear_residual: round12(fit.linear_residual),
                    xlogx_residual: round12(fit.xlogx_residual),
                    degenerate: fit.degenerate,
                    xmin: fit.sample_range.0,
                    xmax: fit.sample_range.1,
                },
            };
            match format_or(cli, Format::Text) {
                Format::Json => write_record(out, Format::Json, &report)?,
                Format::Csv => write_rows(out, Format::Csv, std::slice::from_ref(&report.fit))?,
                Format::Text => {
                    write_rows(out, Format::Text, &report.rows)?;
                    writeln!(out).map_err(anyhow::Error::from)?;
                    write_record(out, Format::Text, &report.fit)?;
                }
            }
        }
        StatsCommand::Tail { k, w, bound } => {
            let kd = *k as i64;
            if *k == 0 || !is_cubefree(kd) {
                return Err(cubetwist::Error::NotCubeFree(kd).into());
            }
            let table = values_for(cli, &[kd])?.table(&[kd])?;
            let t = tail_check(*k, *w, *bound, &table)?;
            let record = TailRecord {
                k: t.k,
                w: t.w,
                bound: t.bound,
                weight: round12(t.weight),
                partial_sum: round12(t.partial_sum),
                decay_flag: t.decay_flag,
            };
            write_record(out, format_or(cli, Format::Text), &record)?;
        }
    }
    Ok(())
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let bad = || usage(format!("cannot parse {s:?} as re,im"));
    let mut parts = s.split(',').map(str::trim);
    let re: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let im: f64 = match parts.next() {
        Some(p) => p.parse().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn tpoly(cli: &Cli, m: &str, n: &str, w: &str, alpha_max: u32, out: &mut dyn Write) -> Result<()> {
    let w = parse_complex(w)?;
    let m = QuadInt::parse_in(m, Ring::Eisenstein)?;
    let n = QuadInt::parse_in(n, Ring::Eisenstein)?;
    let t = t_polynomial(&m, &n, w, alpha_max)?;
    let record = TPolyRecord {
        value_re: round12(t.value_re),
        value_im: round12(t.value_im),
        terms: t
            .terms
            .iter()
            .map(|x| TermRecord {
                summand: x.summand,
                alpha: x.alpha,
                delta: x.delta,
                value_re: round12(x.value_re),
                value_im: round12(x.value_im),
            })
            .collect(),
    };
    match format_or(cli, Format::Json) {
        Format::Json => write_record(out, Format::Json, &record)?,
        Format::Csv => write_rows(out, Format::Csv, &record.terms)?,
        Format::Text => {
            writeln!(out, "value: {} {}", crate::format::sig12(record.value_re), crate::format::sig12(record.value_im))
                .map_err(anyhow::Error::from)?;
            write_rows(out, Format::Text, &record.terms)?;
        }
    }
    Ok(())
}
