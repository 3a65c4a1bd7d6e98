use std::collections::BTreeMap;
use std::error::Error;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use pfsum_core::identities::{
    self, apery_general_term, beta_h_recursion, conjecture_probe, default_probe_samples,
    hurwitz_even_recursion, zeta_ah_recursion, zeta_even_recursion, CheckParams, CheckStatus,
    IdentityReport,
};
use pfsum_core::product::{pfs_coeff, taylor_coeffs_inverse, SequenceSpec};
use pfsum_core::special::{beta_h, dirichlet_beta, hurwitz_zeta, zeta_ah};
use pfsum_core::{
    BigComplex, BigReal, PfsError, Precision, SeriesResult, SeriesStatus, SummationStrategy,
};

use crate::output::{self, ComputeRecord, ProbeSummary, ReportRecord, Style, TableRow};
use crate::{Cli, Command, GlobalOpts, SeriesParams};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NONCONVERGENT: u8 = 3;

type CliResult<T> = Result<T, Box<dyn Error + Send + Sync>>;

/// Draws per identity on top of the default parameters.
const RANDOM_DRAWS: usize = 3;

pub fn run(cli: &Cli) -> CliResult<u8> {
    let g = &cli.global;
    let prec = Precision::new(g.digits, g.n_max, g.tol)?;
    let style = Style {
        value_digits: g.digits.saturating_sub(10).max(10) as usize,
        timing: g.timing,
    };
    match &cli.command {
        Command::Verify { suite } => verify(g, &prec, &style, suite),
        Command::Compute { series, params } => compute(g, &prec, &style, series, params),
        Command::Table { table, m, n, a } => table_cmd(g, &prec, &style, table, m.as_deref(), n.as_deref(), a),
        Command::Probe { order_l, a, samples } => probe(g, &prec, &style, *order_l, a, *samples),
    }
}

fn open_output(g: &GlobalOpts) -> CliResult<Box<dyn Write>> {
    Ok(match &g.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn exit_for(statuses: impl IntoIterator<Item = CheckStatus>) -> u8 {
    let mut code = EXIT_OK;
    for s in statuses {
        match s {
            CheckStatus::Fail => return EXIT_FAIL,
            CheckStatus::NonConvergent => code = EXIT_NONCONVERGENT,
            CheckStatus::Pass => {}
        }
    }
    code
}

fn resolve_suite(suite: &[String]) -> CliResult<Vec<&'static str>> {
    if suite.iter().any(|s| s == "all") {
        return Ok(identities::IDENTITY_IDS.to_vec());
    }
    let mut ids = Vec::new();
    for s in suite {
        let Some(id) = identities::IDENTITY_IDS.iter().find(|id| **id == s.as_str()) else {
            return Err(format!("unknown identity '{s}'").into());
        };
        if !ids.contains(id) {
            ids.push(*id);
        }
    }
    ids.sort();
    Ok(ids)
}

/// FNV-1a, so each identity gets its own stream for a given seed.
fn id_hash(id: &str) -> u64 {
    id.bytes().fold(0xcbf29ce484222325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100000001b3)
    })
}

fn verify(g: &GlobalOpts, prec: &Precision, style: &Style, suite: &[String]) -> CliResult<u8> {
    let ids = resolve_suite(suite)?;
    let bits = prec.bits();
    let mut jobs: Vec<(&str, CheckParams)> = Vec::new();
    for id in ids {
        jobs.push((id, identities::default_params(id, bits)?));
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed ^ id_hash(id));
        let mut draw = || rng.gen::<f64>();
        for _ in 0..RANDOM_DRAWS {
            match identities::sample_params(id, &mut draw, bits)? {
                Some(p) => jobs.push((id, p)),
                None => break,
            }
        }
    }
    let results: Vec<(&str, Result<Vec<IdentityReport>, PfsError>)> = jobs
        .par_iter()
        .map(|(id, p)| (*id, identities::run_check(id, p, prec)))
        .collect();

    let mut reports = Vec::new();
    let mut errored = false;
    for (id, r) in results {
        match r {
            Ok(rs) => reports.extend(rs),
            Err(e) => {
                eprintln!("pfsum: {id}: {e}");
                errored = true;
            }
        }
    }
    reports.sort_by(|x, y| x.identity_id.cmp(&y.identity_id));
    let records: Vec<ReportRecord> = reports.iter().map(|r| ReportRecord::new(r, style)).collect();
    let mut out = open_output(g)?;
    output::write_rows(&mut out, &records, g.format)?;
    out.flush()?;
    let code = exit_for(reports.iter().map(|r| r.status));
    Ok(if errored { EXIT_FAIL } else { code })
}

fn parse_complex(s: &str, bits: u32) -> CliResult<BigComplex> {
    Ok(BigComplex::parse(s, bits)?)
}

fn series_spec(p: &SeriesParams, bits: u32, params: &mut BTreeMap<String, String>) -> CliResult<SequenceSpec> {
    let kind = p.spec.as_deref().unwrap_or("hurwitz");
    params.insert("spec".into(), kind.into());
    let spec = match kind {
        "hurwitz" => {
            let a = p.a.as_deref().unwrap_or("1");
            let m = p.m.unwrap_or(2);
            params.insert("a".into(), a.into());
            params.insert("m".into(), m.to_string());
            SequenceSpec::hurwitz(parse_complex(a, bits)?, m)?
        }
        "interleaved" => {
            let a = p.a.as_deref().ok_or("interleaved spec needs --a")?;
            let b = p.b.as_deref().ok_or("interleaved spec needs --b")?;
            let step = p.step.as_deref().unwrap_or("1");
            params.insert("a".into(), a.into());
            params.insert("b".into(), b.into());
            params.insert("step".into(), step.into());
            SequenceSpec::interleaved(
                parse_complex(a, bits)?,
                parse_complex(b, bits)?,
                BigReal::parse(step, bits)?,
            )?
        }
        "odd-even" => SequenceSpec::odd_even(bits),
        other => return Err(format!("unknown spec '{other}'").into()),
    };
    Ok(spec)
}

fn need_s(p: &SeriesParams, params: &mut BTreeMap<String, String>) -> CliResult<u32> {
    let s = p.s.ok_or("this series needs --s")?;
    params.insert("s".into(), s.to_string());
    Ok(s)
}

fn compute(g: &GlobalOpts, prec: &Precision, style: &Style, series: &str, p: &SeriesParams) -> CliResult<u8> {
    let bits = prec.bits();
    let mut params = BTreeMap::new();
    let result: SeriesResult = match series {
        "hurwitz-pfs" | "hurwitz-direct" => {
            let a = p.a.as_deref().unwrap_or("1");
            let m = p.m.unwrap_or(2);
            params.insert("a".into(), a.to_string());
            params.insert("m".into(), m.to_string());
            let a = parse_complex(a, bits)?;
            if series == "hurwitz-pfs" {
                // [1/F]_m of Π(1 − (z/(a+k))^m) is ζ(m, a)
                pfs_coeff(&SequenceSpec::hurwitz(a, m)?, m, prec)?
            } else {
                hurwitz_zeta(m, &a, prec)?
            }
        }
        "zeta3-apery" => pfsum_core::numeric::try_sum_series(
            |k| Ok(BigComplex::from_real(apery_general_term(k as u64 + 1, bits)?)),
            SummationStrategy::EulerTransform,
            prec,
        )?,
        "beta" => dirichlet_beta(need_s(p, &mut params)?, prec)?,
        "beta-h" => beta_h(need_s(p, &mut params)?, prec)?,
        "zeta-ah" => zeta_ah(need_s(p, &mut params)?, prec)?,
        "pfs-coeff" | "taylor-coeff" => {
            let spec = series_spec(p, bits, &mut params)?;
            let j = p.j.ok_or("this series needs --J")?;
            params.insert("J".into(), j.to_string());
            if series == "pfs-coeff" {
                pfs_coeff(&spec, j, prec)?
            } else {
                let c = taylor_coeffs_inverse(&spec, j as usize, prec)?;
                SeriesResult::exact(c[j as usize].clone())
            }
        }
        other => return Err(format!("unknown series '{other}'").into()),
    };
    let record = ComputeRecord::new(series, params, &result, style);
    let mut out = open_output(g)?;
    output::write_rows(&mut out, &[record], g.format)?;
    out.flush()?;
    Ok(if result.status == SeriesStatus::Converged { EXIT_OK } else { EXIT_NONCONVERGENT })
}

/// Parses an inclusive range `lo..hi`; `lo > hi` is empty.
pub fn parse_range(s: &str) -> CliResult<std::ops::RangeInclusive<u32>> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range '{s}' is not of the form lo..hi"))?;
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start in '{s}'"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end in '{s}'"))?;
    Ok(lo..=hi)
}

fn table_cmd(
    g: &GlobalOpts,
    prec: &Precision,
    style: &Style,
    table: &str,
    m: Option<&str>,
    n: Option<&str>,
    a: &str,
) -> CliResult<u8> {
    let bits = prec.bits();
    let (flag, range) = match table {
        "zeta-even-recursion" | "hurwitz-recursion" => ("--m", m),
        "zetaAH" | "betaH" => ("--n", n),
        other => return Err(format!("unknown table '{other}'").into()),
    };
    let range = parse_range(range.ok_or_else(|| format!("table '{table}' needs {flag} lo..hi"))?)?;
    if *range.start() == 0 && !range.is_empty() {
        return Err("table indices start at 1".into());
    }
    let a = parse_complex(a, bits)?;
    let indices: Vec<u32> = range.collect();
    let reports: Vec<Result<IdentityReport, PfsError>> = indices
        .par_iter()
        .map(|&i| match table {
            "zeta-even-recursion" => zeta_even_recursion(i, prec),
            "hurwitz-recursion" => hurwitz_even_recursion(i, &a, prec),
            "zetaAH" => zeta_ah_recursion(i, prec),
            _ => beta_h_recursion(i, prec),
        })
        .collect();
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<TableRow> = indices
        .iter()
        .zip(&reports)
        .map(|(&i, r)| TableRow::new(table, i, r, style))
        .collect();
    let mut out = open_output(g)?;
    output::write_rows(&mut out, &rows, g.format)?;
    out.flush()?;
    Ok(exit_for(reports.iter().map(|r| r.status)))
}

fn probe(g: &GlobalOpts, prec: &Precision, style: &Style, order_l: u32, a: &str, samples: usize) -> CliResult<u8> {
    let bits = prec.bits();
    let a = parse_complex(a, bits)?;
    let zs = default_probe_samples(&a, samples, bits);
    let rep = conjecture_probe(&a, order_l, &zs, prec)?;
    let summary = ProbeSummary::new(&rep, style);
    let mut out = open_output(g)?;
    output::write_probe(&mut out, &summary, g.format)?;
    out.flush()?;
    Ok(EXIT_OK)
}
