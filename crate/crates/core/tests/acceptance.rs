//! One line per acceptance criterion, `PASS` or `FAIL`, with the elapsed time.
//!
//! Run with `cargo test -p starsym --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use starsym::betti::{
    betti_from_set_sizes, betti_table, is_koszul_stranded, regularity, strand_closed,
    top_strand_closed, BettiTable,
};
use starsym::generators::{
    count_generators_closed, count_generators_in_degree, enumerate_generators, mu, sdefect,
};
use starsym::oracle::{
    contains, sdefect_oracle, successive_colons, symbolic_power_oracle,
    symbolic_power_oracle_capped, tau_sorted, OracleCaps,
};
use starsym::order::{set_elements, set_size};
use starsym::{binomial, normal_form::sdeg, FMonomial, StarParams};

const ONE_SECOND: Duration = Duration::from_secs(1);
const TWO_MINUTES: Duration = Duration::from_secs(120);
const FIVE_MINUTES: Duration = Duration::from_secs(300);

type Check = Result<(), String>;

fn report(n: u32, what: &str, budget: Duration, f: impl FnOnce() -> Check) {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if took <= budget {
            Ok(())
        } else {
            Err(format!("took {took:?}, budget {budget:?}"))
        }
    });
    match &outcome {
        Ok(()) => println!("PASS criterion {n}: {what} ({took:.2?})"),
        Err(e) => println!("FAIL criterion {n}: {what} ({took:.2?}): {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {n} failed: {e}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(s: usize, c: usize, m: usize, delta: usize) -> StarParams {
    StarParams::new(s, c, m, delta).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Compares every strand and insists the table holds nothing else.
fn check_strands(table: &BettiTable, want: &[&[i64]]) -> Check {
    let p = *table.params();
    let t_min = p.min_length();
    let strands = p.m() + 1 - t_min;
    ensure(strands == want.len(), || {
        format!("{p}: {strands} strands, expected {}", want.len())
    })?;
    let mut entries = 1;
    for (k, w) in want.iter().enumerate() {
        let t = t_min + k;
        let mut w = big(w);
        w.resize(p.c(), BigInt::from(0));
        let got = table.strand(t);
        ensure(got == w, || {
            format!("{p}: strand t={t} is {got:?}, expected {w:?}")
        })?;
        entries += w.iter().filter(|x| **x != BigInt::from(0)).count();
    }
    ensure(table.get(0, 0) == BigInt::from(1), || "beta_00 != 1".into())?;
    ensure(table.len() == entries, || {
        format!("{p}: {} entries, expected {entries}", table.len())
    })
}

fn structural(table: &BettiTable) -> Check {
    let p = table.params();
    ensure(is_koszul_stranded(table), || {
        format!("{p}: not Koszul stranded")
    })?;
    ensure(table.max_row() == regularity(p), || {
        format!(
            "{p}: max row {} vs regularity {}",
            table.max_row(),
            regularity(p)
        )
    })
}

/// Parameter cells of the oracle sweep.
fn oracle_sweep() -> Vec<StarParams> {
    let mut cells = Vec::new();
    for s in 2..=6 {
        for c in 1..s {
            for m in 1..=4 {
                cells.push(params(s, c, m, 1));
            }
        }
    }
    for s in 3..=5 {
        for m in 5..=6 {
            cells.push(params(s, 2, m, 1));
        }
    }
    cells
}

#[test]
fn criterion_1_golden_table_seven_three_seven() {
    report(1, "Betti table of s=7 c=3 m=7", ONE_SECOND, || {
        let table = betti_table(&params(7, 3, 7, 1)).map_err(|e| e.to_string())?;
        check_strands(
            &table,
            &[
                &[28, 42, 15],
                &[84, 161, 77],
                &[63, 126, 63],
                &[42, 84, 42],
                &[21, 42, 21],
            ],
        )?;
        let firsts: Vec<usize> = (3..=7).map(|t| table.strand_degree(t, 1)).collect();
        ensure(firsts == [19, 23, 27, 31, 35], || {
            format!("strand degrees {firsts:?}")
        })
    });
}

#[test]
fn criterion_2_golden_table_six_four_two_cubics() {
    report(2, "Betti table of s=6 c=4 m=2 delta=3", ONE_SECOND, || {
        let p = params(6, 4, 2, 3);
        let table = betti_table(&p).map_err(|e| e.to_string())?;
        ensure(regularity(&p) == 23, || {
            format!("regularity {}", regularity(&p))
        })?;
        check_strands(
            &table,
            &[
                &[77, 161, 105, 20],
                &[210, 609, 588, 189],
                &[105, 315, 315, 105],
                &[35, 105, 105, 35],
            ],
        )
    });
}

#[test]
fn criterion_3_golden_table_seven_four_ten() {
    report(3, "Betti strands of s=7 c=4 m=10", ONE_SECOND, || {
        let table = betti_table(&params(7, 4, 10, 1)).map_err(|e| e.to_string())?;
        check_strands(
            &table,
            &[
                &[28, 42, 15, 0],
                &[413, 1092, 952, 273],
                &[651, 1890, 1827, 588],
                &[525, 1575, 1575, 525],
                &[350, 1050, 1050, 350],
                &[210, 630, 630, 210],
                &[105, 315, 315, 105],
                &[35, 105, 105, 35],
            ],
        )
    });
}

#[test]
fn criterion_4_symbolic_defect_formulas() {
    report(4, "square and m=28 defect formulas", ONE_SECOND, || {
        for s in 3..=20usize {
            for c in 1..s {
                let p = params(s, c, 2, 1);
                let (s, c) = (s as i64, c as i64);
                ensure(sdefect(&p) == binomial(s, c - 2), || {
                    format!("{p}: sdefect")
                })?;
                ensure(mu(&p) == binomial(s + 1, c - 1), || format!("{p}: mu"))?;
            }
        }
        for s in 4..=12usize {
            let p = params(s, 3, 28, 1);
            let si = s as i64;
            ensure(mu(&p) == BigInt::from(70 * si * si - 65 * si), || {
                format!("{p}: mu")
            })?;
            ensure(sdefect(&p) == 139 * binomial(si, 2) + 5 * si, || {
                format!("{p}: sdefect")
            })?;
        }
        Ok(())
    });
}

fn exponent_set(gens: &[FMonomial]) -> BTreeSet<Vec<u32>> {
    gens.iter().map(|g| g.exponents().to_vec()).collect()
}

#[test]
fn criterion_5_oracle_generator_equivalence() {
    report(
        5,
        "generators and defects against the oracle",
        FIVE_MINUTES,
        || {
            for p in oracle_sweep() {
                let ours = enumerate_generators(&p).map_err(|e| e.to_string())?;
                let oracle = symbolic_power_oracle(&p).map_err(|e| e.to_string())?;
                ensure(
                    exponent_set(&ours) == exponent_set(&oracle.generators()),
                    || format!("{p}: generator sets differ"),
                )?;
                ensure(ours.len() == oracle.len(), || {
                    format!("{p}: duplicate generators")
                })?;
                let defect = sdefect_oracle(&p).map_err(|e| e.to_string())?;
                ensure(BigInt::from(defect) == sdefect(&p), || {
                    format!("{p}: sdefect {} vs oracle {defect}", sdefect(&p))
                })?;
            }
            Ok(())
        },
    );
}

/// All exponent vectors of length `s` with entries at most `hi`.
fn cube(s: usize, hi: u32) -> Vec<FMonomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=hi).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(FMonomial::new).collect()
}

#[test]
fn criterion_6_sdeg_oracle() {
    // Exponents up to 3 give Sdeg up to 3c, so u runs to 3c + 1 to see the
    // largest power actually attained, and one past it.
    report(
        6,
        "Sdeg as the largest symbolic power",
        FIVE_MINUTES,
        || {
            let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
            for p in oracle_sweep() {
                pairs.insert((p.s(), p.c()));
            }
            for (s, c) in pairs {
                let top = 3 * c + 1;
                let caps = OracleCaps {
                    max_m: top,
                    ..OracleCaps::default()
                };
                let powers = (1..=top)
                    .map(|u| symbolic_power_oracle_capped(&params(s, c, u, 1), &caps))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                let p = params(s, c, 1, 1);
                for m in cube(s, 3) {
                    if m.is_unit() {
                        continue;
                    }
                    let want = sdeg(&m, &p) as usize;
                    let got = powers.iter().take_while(|i| contains(i, &m)).count();
                    ensure(got == want, || {
                        format!("s={s} c={c} {m}: sdeg {want}, oracle {got}")
                    })?;
                    // containment is monotone in u, so nothing is found past the first miss
                    ensure(powers[got..].iter().all(|i| !contains(i, &m)), || {
                        format!("s={s} c={c} {m}: containment is not monotone")
                    })?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_linear_quotients() {
    report(
        7,
        "successive colons are generated by set(M)",
        FIVE_MINUTES,
        || {
            for p in oracle_sweep() {
                let oracle = symbolic_power_oracle(&p).map_err(|e| e.to_string())?;
                let gens = tau_sorted(&oracle, &p).map_err(|e| e.to_string())?;
                let colons = successive_colons(&gens, p.s()).map_err(|e| e.to_string())?;
                for (g, colon) in gens.iter().zip(&colons) {
                    let elems = set_elements(g, &p).map_err(|e| e.to_string())?;
                    let want: BTreeSet<Vec<u32>> = elems
                        .iter()
                        .map(|j| {
                            let mut e = vec![0; p.s()];
                            e[j - 1] = 1;
                            e
                        })
                        .collect();
                    let got = exponent_set(&colon.generators());
                    ensure(colon.generators().iter().all(|h| h.f_degree() == 1), || {
                        format!("{p}: colon at {g} is not linear")
                    })?;
                    ensure(got == want, || {
                        format!("{p}: colon at {g} differs from {elems}")
                    })?;
                }
            }
            Ok(())
        },
    );
}

fn closed_forms_agree(p: &StarParams, table: &BettiTable) -> Check {
    let (c, m) = (p.c(), p.m());
    for t in p.min_length()..=m {
        for i in 1..=c {
            if let Ok(v) = strand_closed(p, t, i) {
                let got = table.get(i, table.strand_degree(t, i));
                ensure(v == got, || {
                    format!("{p}: strand t={t} i={i}: closed {v}, table {got}")
                })?;
            }
        }
        if let Ok(v) = count_generators_closed(p, t) {
            let direct = count_generators_in_degree(p, t).map_err(|e| e.to_string())?;
            ensure(v == direct, || {
                format!("{p}: count t={t}: closed {v}, direct {direct}")
            })?;
        }
    }
    if let Ok(top) = top_strand_closed(p) {
        let got = table.strand(p.min_length());
        for (i, v) in top {
            ensure(got[i - 1] == v, || {
                format!("{p}: top strand i={i}: closed {v}, table {}", got[i - 1])
            })?;
        }
    }
    Ok(())
}

#[test]
fn criterion_8_formula_cross_consistency() {
    report(
        8,
        "closed forms and both Betti pipelines agree",
        TWO_MINUTES,
        || {
            for s in 2..=7 {
                for c in 1..s {
                    for m in 1..=6 {
                        let p = params(s, c, m, 1);
                        let sizes = enumerate_generators(&p)
                            .map_err(|e| e.to_string())?
                            .iter()
                            .map(|g| set_size(g, &p).map(|k| (g.f_degree(), k)))
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|e| e.to_string())?;
                        let table = betti_table(&p).map_err(|e| e.to_string())?;
                        ensure(table == betti_from_set_sizes(&sizes, &p), || {
                            format!("{p}: pipelines differ")
                        })?;
                    }
                }
            }
            for s in 2..=10 {
                for c in 1..s.min(7) {
                    for m in 1..=12 {
                        let p = params(s, c, m, 1);
                        let table = betti_table(&p).map_err(|e| e.to_string())?;
                        closed_forms_agree(&p, &table)?;
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_9_structural_properties() {
    report(9, "Koszul strands and regularity", TWO_MINUTES, || {
        let mut cells = vec![params(7, 3, 7, 1), params(6, 4, 2, 3), params(7, 4, 10, 1)];
        for s in 2..=10 {
            for c in 1..s.min(7) {
                for m in 1..=12 {
                    cells.push(params(s, c, m, 1));
                }
            }
        }
        for p in cells {
            let table = betti_table(&p).map_err(|e| e.to_string())?;
            structural(&table)?;
        }
        Ok(())
    });
}

#[test]
fn seven_four_five_squares_table() {
    // the quadric table listed next to the cubic one, with its four strands
    report(
        2,
        "Betti table of s=7 c=4 m=5 delta=2 (companion)",
        ONE_SECOND,
        || {
            let p = params(7, 4, 5, 2);
            let table = betti_table(&p).map_err(|e| e.to_string())?;
            check_strands(
                &table,
                &[
                    &[77, 161, 105, 20],
                    &[210, 609, 588, 189],
                    &[105, 315, 315, 105],
                    &[35, 105, 105, 35],
                ],
            )?;
            let rows: Vec<usize> = (2..=5).map(|t| table.strand_degree(t, 1) - 1).collect();
            ensure(rows == [21, 27, 33, 39], || format!("strand rows {rows:?}"))?;
            ensure(regularity(&p) == 42, || {
                format!("regularity {}", regularity(&p))
            })?;
            structural(&table)
        },
    );
}

#[test]
fn six_four_two_cubics_shape() {
    report(
        2,
        "Betti table of s=6 c=4 m=2 delta=3 (computed shape)",
        ONE_SECOND,
        || {
            let p = params(6, 4, 2, 3);
            let table = betti_table(&p).map_err(|e| e.to_string())?;
            check_strands(&table, &[&[15, 24, 10, 0], &[20, 60, 60, 20]])?;
            structural(&table)
        },
    );
}
