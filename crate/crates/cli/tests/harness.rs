//! Negative controls: the verify harness must notice broken pipelines.

use num_bigint::BigInt;
use starsym::{FMonomial, StarParams};
use starsym_cli::verify::{render, run, Config, Pipelines};
use starsym_cli::{Format, EXIT_MISMATCH, EXIT_OK};

fn config(max_s: usize, max_m: usize) -> Config {
    Config {
        max_s,
        max_m,
        seed: None,
        threads: Some(2),
    }
}

fn set_size_off_by_one(m: &FMonomial, p: &StarParams) -> starsym::Result<usize> {
    starsym::order::set_size(m, p).map(|k| k + 1)
}

fn sdefect_off_by_one(p: &StarParams) -> BigInt {
    starsym::generators::sdefect(p) + 1
}

fn sdeg_shifted(m: &FMonomial, p: &StarParams) -> u64 {
    let d = starsym::normal_form::sdeg(m, p);
    if m.max_exponent() == 3 {
        d + 1
    } else {
        d
    }
}

fn drop_last_generator(p: &StarParams) -> starsym::Result<Vec<FMonomial>> {
    let mut g = starsym::generators::enumerate_generators(p)?;
    if p.m() == 2 {
        g.pop();
    }
    Ok(g)
}

#[test]
fn clean_run_exits_zero() {
    let report = run(&config(4, 3), &Pipelines::default()).unwrap();
    assert_eq!(report.exit_code(), EXIT_OK);
    assert!(report.cells.iter().all(|c| c.passed.len() == 5));
    assert_eq!(report.cells.len(), 18);
}

#[test]
fn off_by_one_set_size_is_caught() {
    let pipes = Pipelines {
        set_size: set_size_off_by_one,
        ..Pipelines::default()
    };
    let report = run(&config(4, 2), &pipes).unwrap();
    assert_eq!(report.exit_code(), EXIT_MISMATCH);
    let cx = report.first_failure().unwrap();
    assert_eq!(cx.suite, "set-sizes");
    assert_eq!(cx.params, StarParams::linear(2, 1, 1).unwrap());
    assert_eq!((cx.expected.as_str(), cx.actual.as_str()), ("0", "1"));
    assert!(cx.monomial.is_some());

    let mut out = Vec::new();
    render(&report, Format::Text, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("counterexample: s=2 c=1 m=1 delta=1 [set-sizes] at "));
}

#[test]
fn every_suite_has_teeth() {
    let cases: [(Pipelines, &str); 3] = [
        (
            Pipelines {
                sdefect: sdefect_off_by_one,
                ..Pipelines::default()
            },
            "sdefect",
        ),
        (
            Pipelines {
                sdeg: sdeg_shifted,
                ..Pipelines::default()
            },
            "sdeg",
        ),
        (
            Pipelines {
                generators: drop_last_generator,
                ..Pipelines::default()
            },
            "generators",
        ),
    ];
    for (pipes, suite) in cases {
        let report = run(&config(4, 2), &pipes).unwrap();
        assert_eq!(report.exit_code(), EXIT_MISMATCH, "{suite}");
        assert_eq!(report.first_failure().unwrap().suite, suite);
    }
}

#[test]
fn broken_betti_formula_is_caught() {
    fn shifted(p: &StarParams) -> starsym::Result<starsym::BettiTable> {
        let t = starsym::betti::betti_table(p)?;
        let mut entries: Vec<_> = t.entries().map(|(i, j, b)| (i, j, b.clone())).collect();
        if let Some(last) = entries.last_mut() {
            last.2 += 1;
        }
        Ok(starsym::BettiTable::from_entries(*p, entries))
    }
    let pipes = Pipelines {
        betti: shifted,
        ..Pipelines::default()
    };
    let report = run(&config(3, 1), &pipes).unwrap();
    assert_eq!(report.first_failure().unwrap().suite, "betti");
}
