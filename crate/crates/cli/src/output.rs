//! Rendering for `gens`, `invariants` and `betti`.

use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};
use starsym::betti::{betti_table, regularity};
use starsym::generators::{
    count_generators_in_degree, enumerate_generators_capped, enumerate_module_generators_capped,
    mu, partition_of, sdefect,
};
use starsym::normal_form::normal_form;
use starsym::{BettiTable, FMonomial, StarParams};

use crate::{CliError, CliResult, Format, GensArgs};

pub const SCHEMA: &str = "starsym/1";

fn params_json(p: &StarParams) -> Value {
    json!({ "s": p.s(), "c": p.c(), "m": p.m(), "delta": p.delta() })
}

fn write_json(v: &Value, out: &mut dyn Write) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn exps(m: &FMonomial) -> Value {
    Value::from(m.exponents().to_vec())
}

pub fn gens(a: &GensArgs, limit: u64, out: &mut dyn Write) -> CliResult<()> {
    let p = a.common.params.to_params()?;
    let format = a.common.format;
    if a.count {
        let n = if a.module { sdefect(&p) } else { mu(&p) };
        match format {
            Format::Text => writeln!(out, "{n}")?,
            Format::Json => write_json(
                &json!({
                    "schema": SCHEMA,
                    "params": params_json(&p),
                    "module": a.module,
                    "count": n.to_string(),
                }),
                out,
            )?,
            Format::Csv => write!(out, "count\n{n}\n")?,
        }
        return Ok(());
    }
    let gens = if a.module {
        enumerate_module_generators_capped(&p, limit)?
    } else {
        enumerate_generators_capped(&p, limit)?
    };
    let delta = p.delta() as u64;
    match format {
        Format::Text => {
            for g in &gens {
                writeln!(out, "{g} {}", normal_form(g)?)?;
            }
        }
        Format::Json => {
            let list = gens
                .iter()
                .map(|g| {
                    Ok(json!({
                        "exponents": exps(g),
                        "normal_form": normal_form(g)?.to_string(),
                        "partition": partition_of(g, &p)?.parts(),
                        "degree": delta * g.f_degree(),
                    }))
                })
                .collect::<CliResult<Vec<Value>>>()?;
            write_json(
                &json!({
                    "schema": SCHEMA,
                    "params": params_json(&p),
                    "module": a.module,
                    "count": gens.len().to_string(),
                    "generators": list,
                }),
                out,
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["exponents", "normal_form", "partition", "degree"])?;
            for g in &gens {
                w.write_record([
                    g.to_string(),
                    normal_form(g)?.to_string(),
                    partition_of(g, &p)?.to_string(),
                    (delta * g.f_degree()).to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// `(t, degree, count)` for every strand length `t`.
fn degree_histogram(p: &StarParams) -> CliResult<Vec<(usize, usize, BigInt)>> {
    (p.min_length()..=p.m())
        .map(|t| {
            Ok((
                t,
                p.delta() * p.generator_f_degree(t),
                count_generators_in_degree(p, t)?,
            ))
        })
        .collect()
}

pub fn invariants(p: &StarParams, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let (mu, sdef, reg) = (mu(p), sdefect(p), regularity(p));
    let hist = degree_histogram(p)?;
    match format {
        Format::Text => {
            writeln!(out, "{p}")?;
            writeln!(out, "mu: {mu}")?;
            writeln!(out, "sdefect: {sdef}")?;
            writeln!(out, "regularity: {reg}")?;
            writeln!(out, "degrees:")?;
            for (t, d, n) in &hist {
                writeln!(out, "  t={t} degree={d} count={n}")?;
            }
        }
        Format::Json => {
            let degrees: Vec<Value> = hist
                .iter()
                .map(|(t, d, n)| json!({ "t": t, "degree": d, "count": n.to_string() }))
                .collect();
            write_json(
                &json!({
                    "schema": SCHEMA,
                    "params": params_json(p),
                    "mu": mu.to_string(),
                    "sdefect": sdef.to_string(),
                    "regularity": reg,
                    "degrees": degrees,
                }),
                out,
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "s",
                "c",
                "m",
                "delta",
                "mu",
                "sdefect",
                "regularity",
                "t",
                "degree",
                "count",
            ])?;
            for (t, d, n) in &hist {
                w.write_record([
                    p.s().to_string(),
                    p.c().to_string(),
                    p.m().to_string(),
                    p.delta().to_string(),
                    mu.to_string(),
                    sdef.to_string(),
                    reg.to_string(),
                    t.to_string(),
                    d.to_string(),
                    n.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn betti_json(table: &BettiTable) -> Value {
    let entries: Vec<Value> = table
        .entries()
        .map(|(i, j, b)| json!({ "i": i, "j": j, "beta": b.to_string() }))
        .collect();
    json!({
        "schema": SCHEMA,
        "params": params_json(table.params()),
        "regularity": regularity(table.params()),
        "entries": entries,
    })
}

pub fn betti(p: &StarParams, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let table = betti_table(p)?;
    match format {
        Format::Text => out.write_all(table.render_text().as_bytes())?,
        Format::Json => write_json(&betti_json(&table), out)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["i", "j", "beta"])?;
            for (i, j, b) in table.entries() {
                w.write_record([i.to_string(), j.to_string(), b.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn bad(msg: &str) -> CliError {
    CliError::Usage(format!("betti json: {msg}"))
}

/// Reads back the document written by `betti --format json`.
pub fn betti_from_json(text: &str) -> CliResult<BettiTable> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    if v["schema"] != SCHEMA {
        return Err(bad("unknown schema"));
    }
    let field = |obj: &Value, k: &str| obj[k].as_u64().map(|x| x as usize).ok_or_else(|| bad(k));
    let pj = &v["params"];
    let params = StarParams::new(
        field(pj, "s")?,
        field(pj, "c")?,
        field(pj, "m")?,
        field(pj, "delta")?,
    )?;
    let entries = v["entries"].as_array().ok_or_else(|| bad("entries"))?;
    let mut triples = Vec::with_capacity(entries.len());
    for e in entries {
        let beta = e["beta"].as_str().ok_or_else(|| bad("beta"))?;
        let beta = BigInt::from_str(beta).map_err(|_| bad("beta"))?;
        triples.push((field(e, "i")?, field(e, "j")?, beta));
    }
    Ok(BettiTable::from_entries(params, triples))
}
