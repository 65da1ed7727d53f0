//! The `verify` harness: every formula pipeline against the brute-force engine.
//!
//! Pipelines are plain function pointers so tests can swap one for a broken
//! version and watch the harness catch it.

use std::collections::BTreeSet;
use std::io::Write;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use starsym::betti::{betti_from_set_sizes, betti_table};
use starsym::generators::{enumerate_generators, sdefect};
use starsym::oracle::{
    contains, sdefect_oracle, successive_colons, symbolic_power_oracle, tau_sorted, MonomialIdeal,
};
use starsym::order::set_size;
use starsym::{normal_form, BettiTable, FMonomial, StarParams};

use crate::{CliError, CliResult, Format, VerifyArgs, EXIT_MISMATCH, EXIT_OK, SCHEMA};

/// Largest exhaustive monomial sweep before `--seed` switches to sampling.
pub const SAMPLE_SIZE: usize = 4096;
/// Exponents of the test monomials run over `0..=MAX_TEST_EXPONENT`.
pub const MAX_TEST_EXPONENT: u32 = 3;

const MAX_S: usize = 8;
const MAX_M: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_s: usize,
    pub max_m: usize,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn from_args(a: &VerifyArgs) -> CliResult<Self> {
        if !(2..=MAX_S).contains(&a.max_s) {
            return Err(CliError::Usage(format!("--max-s must lie in 2..={MAX_S}")));
        }
        if !(1..=MAX_M).contains(&a.max_m) {
            return Err(CliError::Usage(format!("--max-m must lie in 1..={MAX_M}")));
        }
        if a.threads == Some(0) {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        Ok(Config {
            max_s: a.max_s,
            max_m: a.max_m,
            seed: a.seed,
            threads: a.threads,
        })
    }

    pub fn cells(&self) -> Vec<StarParams> {
        let mut out = Vec::new();
        for s in 2..=self.max_s {
            for c in 1..s {
                for m in 1..=self.max_m {
                    out.push(StarParams::linear(s, c, m).expect("loop bounds are valid"));
                }
            }
        }
        out
    }
}

/// The formula side of every comparison.
#[derive(Clone, Copy)]
pub struct Pipelines {
    pub generators: fn(&StarParams) -> starsym::Result<Vec<FMonomial>>,
    pub sdeg: fn(&FMonomial, &StarParams) -> u64,
    pub set_size: fn(&FMonomial, &StarParams) -> starsym::Result<usize>,
    pub sdefect: fn(&StarParams) -> BigInt,
    pub betti: fn(&StarParams) -> starsym::Result<BettiTable>,
}

impl Default for Pipelines {
    fn default() -> Self {
        Pipelines {
            generators: enumerate_generators,
            sdeg: normal_form::sdeg,
            set_size,
            sdefect,
            betti: betti_table,
        }
    }
}

pub const SUITES: [&str; 5] = ["generators", "sdeg", "set-sizes", "sdefect", "betti"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub params: StarParams,
    pub suite: &'static str,
    pub monomial: Option<String>,
    pub expected: String,
    pub actual: String,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} [{}]", self.params, self.suite)?;
        if let Some(m) = &self.monomial {
            write!(f, " at {m}")?;
        }
        write!(f, ": expected {}, got {}", self.expected, self.actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub params: StarParams,
    /// Suites that ran to completion before the cell stopped.
    pub passed: Vec<&'static str>,
    pub failure: Option<Counterexample>,
    /// Number of monomials the sdeg suite looked at.
    pub monomials: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub cells: Vec<CellReport>,
}

impl Report {
    pub fn first_failure(&self) -> Option<&Counterexample> {
        self.cells.iter().find_map(|c| c.failure.as_ref())
    }

    pub fn exit_code(&self) -> i32 {
        if self.first_failure().is_some() {
            EXIT_MISMATCH
        } else {
            EXIT_OK
        }
    }
}

pub fn run(config: &Config, pipes: &Pipelines) -> CliResult<Report> {
    let cells = config.cells();
    let work = || {
        cells
            .par_iter()
            .map(|p| check_cell(p, config.seed, pipes))
            .collect::<CliResult<Vec<_>>>()
    };
    let cells = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    Ok(Report { cells })
}

fn exps(gens: &[FMonomial]) -> BTreeSet<Vec<u32>> {
    gens.iter().map(|g| g.exponents().to_vec()).collect()
}

/// Test monomials for the sdeg suite: the whole cube, or a seeded sample of it.
fn test_monomials(p: &StarParams, seed: Option<u64>) -> Vec<FMonomial> {
    let s = p.s();
    let side = MAX_TEST_EXPONENT as usize + 1;
    let total = side.pow(s as u32);
    match seed {
        Some(seed) if total > SAMPLE_SIZE => {
            let cell = (p.s() * 64 + p.c()) * 64 + p.m();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((cell as u64) << 32));
            (0..SAMPLE_SIZE)
                .map(|_| {
                    FMonomial::new(
                        (0..s)
                            .map(|_| rng.gen_range(0..=MAX_TEST_EXPONENT))
                            .collect(),
                    )
                })
                .filter(|m| !m.is_unit())
                .collect()
        }
        _ => (1..total)
            .map(|mut code| {
                FMonomial::new(
                    (0..s)
                        .map(|_| {
                            let e = code % side;
                            code /= side;
                            e as u32
                        })
                        .collect(),
                )
            })
            .collect(),
    }
}

fn check_cell(p: &StarParams, seed: Option<u64>, pipes: &Pipelines) -> CliResult<CellReport> {
    let mut report = CellReport {
        params: *p,
        passed: Vec::new(),
        failure: None,
        monomials: 0,
    };
    let fail = |suite, monomial: Option<&FMonomial>, expected: String, actual: String| {
        Some(Counterexample {
            params: *p,
            suite,
            monomial: monomial.map(ToString::to_string),
            expected,
            actual,
        })
    };

    let oracle = symbolic_power_oracle(p)?;
    let ours = (pipes.generators)(p)?;
    let (want, got) = (exps(&oracle.generators()), exps(&ours));
    if want != got || ours.len() != oracle.len() {
        let missing = want.difference(&got).next();
        let extra = got.difference(&want).next();
        report.failure = fail(
            "generators",
            None,
            format!(
                "{} generators{}",
                oracle.len(),
                missing.map_or(String::new(), |m| format!(" incl. {m:?}"))
            ),
            format!(
                "{} generators{}",
                ours.len(),
                extra.map_or(String::new(), |m| format!(" incl. {m:?}"))
            ),
        );
        return Ok(report);
    }
    report.passed.push("generators");

    // I^(1), …, I^(m); the top one is already in hand
    let mut powers: Vec<MonomialIdeal> = (1..p.m())
        .map(|u| symbolic_power_oracle(&p.with_m(u)?))
        .collect::<starsym::Result<_>>()?;
    powers.push(oracle.clone());
    let monomials = test_monomials(p, seed);
    report.monomials = monomials.len();
    for mono in &monomials {
        let d = (pipes.sdeg)(mono, p);
        for (k, ideal) in powers.iter().enumerate() {
            let u = k as u64 + 1;
            if contains(ideal, mono) != (d >= u) {
                report.failure = fail(
                    "sdeg",
                    Some(mono),
                    format!("membership in power {u} is {}", contains(ideal, mono)),
                    format!("sdeg {d}"),
                );
                return Ok(report);
            }
        }
    }
    report.passed.push("sdeg");

    let sorted = tau_sorted(&oracle, p)?;
    let colons = successive_colons(&sorted, p.s())?;
    let mut sizes = Vec::with_capacity(sorted.len());
    for (g, colon) in sorted.iter().zip(&colons) {
        if let Some(h) = colon.generators().iter().find(|h| h.f_degree() != 1) {
            report.failure = fail(
                "set-sizes",
                Some(g),
                "a colon generated by forms".into(),
                format!("colon generator {h}"),
            );
            return Ok(report);
        }
        let k = (pipes.set_size)(g, p)?;
        if k != colon.len() {
            report.failure = fail("set-sizes", Some(g), colon.len().to_string(), k.to_string());
            return Ok(report);
        }
        sizes.push((g.f_degree(), k));
    }
    report.passed.push("set-sizes");

    let want = BigInt::from(sdefect_oracle(p)?);
    let got = (pipes.sdefect)(p);
    if want != got {
        report.failure = fail("sdefect", None, want.to_string(), got.to_string());
        return Ok(report);
    }
    report.passed.push("sdefect");

    let want = betti_from_set_sizes(&sizes, p);
    let got = (pipes.betti)(p)?;
    if want != got {
        let diff = want
            .entries()
            .map(|(i, j, _)| (i, j))
            .chain(got.entries().map(|(i, j, _)| (i, j)))
            .find(|&(i, j)| want.get(i, j) != got.get(i, j))
            .unwrap_or((0, 0));
        report.failure = fail(
            "betti",
            None,
            format!("beta_{},{} = {}", diff.0, diff.1, want.get(diff.0, diff.1)),
            got.get(diff.0, diff.1).to_string(),
        );
        return Ok(report);
    }
    report.passed.push("betti");
    Ok(report)
}

pub fn render(report: &Report, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Text => {
            for cell in &report.cells {
                let status = if cell.failure.is_some() { "FAIL" } else { "ok" };
                writeln!(
                    out,
                    "{}: {} [{}]",
                    cell.params,
                    status,
                    cell.passed.join(" ")
                )?;
            }
            match report.first_failure() {
                Some(c) => writeln!(out, "counterexample: {c}")?,
                None => writeln!(out, "verified {} cells", report.cells.len())?,
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["s", "c", "m", "delta", "ok", "passed", "monomials"])?;
            for cell in &report.cells {
                let p = cell.params;
                w.write_record([
                    p.s().to_string(),
                    p.c().to_string(),
                    p.m().to_string(),
                    p.delta().to_string(),
                    cell.failure.is_none().to_string(),
                    cell.passed.join(" "),
                    cell.monomials.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let cells: Vec<Value> = report
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "params": { "s": c.params.s(), "c": c.params.c(), "m": c.params.m(), "delta": c.params.delta() },
                        "ok": c.failure.is_none(),
                        "passed": c.passed,
                        "monomials": c.monomials,
                    })
                })
                .collect();
            let cx = report.first_failure().map(|c| {
                json!({
                    "params": c.params.to_string(),
                    "suite": c.suite,
                    "monomial": c.monomial,
                    "expected": c.expected,
                    "actual": c.actual,
                })
            });
            let doc = json!({ "schema": SCHEMA, "cells": cells, "counterexample": cx });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
