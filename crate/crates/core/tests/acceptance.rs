//! Exit-gate checks. Each criterion prints one PASS/FAIL line; the process
//! fails if any criterion fails.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use gorenstein::construct::{
    compress_level, construct_thm_e, construct_thm_r_gorenstein, construct_thm_r_level,
    two_variable_truncation, Parity,
};
use gorenstein::exact::{mix_seed, FieldSpec};
use gorenstein::invsys::{hilbert_function, Form};
use gorenstein::seqcore::{
    first_growth_violation, is_o_sequence, is_si_sequence, is_symmetric, is_unimodal,
    macaulay_bound, HVector,
};
use num_bigint::BigUint;
use serde_json::Value;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })
}

/// Runs the CLI; returns (exit code, stdout, elapsed).
fn cli(args: &[&str]) -> Result<(i32, String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_gorenstein"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run CLI: {e}"))?;
    let elapsed = start.elapsed();
    let code = out.status.code().unwrap_or(-1);
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((code, text, elapsed))
}

fn cli_json(args: &[&str]) -> Result<(i32, Value, Duration), String> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, text, t) = cli(&full)?;
    let v = serde_json::from_str(&text).map_err(|e| format!("bad JSON from {args:?}: {e}"))?;
    Ok((code, v, t))
}

fn entries(v: &Value) -> Vec<u64> {
    v.as_array()
        .map(|a| a.iter().filter_map(Value::as_u64).collect())
        .unwrap_or_default()
}

fn ac1() -> Check {
    let (code, v, t) = cli_json(&["construct", "thm-e", "--e", "6"])?;
    ensure(code == 0, || format!("exit {code}"))?;
    let r = &v["results"][0];
    let gor = entries(&r["gorenstein_hvector"]);
    let lvl = entries(&r["level_hvector"]);
    ensure(gor == [1, 10, 14, 20, 14, 10, 1], || {
        format!("gorenstein {gor:?}")
    })?;
    ensure(lvl == [1, 3, 6, 10, 8, 7], || format!("level {lvl:?}"))?;
    within(t, Duration::from_secs(1), "construct")?;
    Ok(format!("exact match in {t:?}"))
}

fn ac2() -> Check {
    let (code, v, t) = cli_json(&["construct", "thm-r", "--d", "10", "--parity", "even"])?;
    ensure(code == 0, || format!("exit {code}"))?;
    let r = &v["results"][0];
    let lvl = entries(&r["level_hvector"]);
    let gor = entries(&r["gorenstein_hvector"]);
    ensure(
        lvl == [
            1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 67, 68, 56, 42, 30, 20, 12, 6, 2,
        ],
        || format!("level {lvl:?}"),
    )?;
    ensure(
        gor == [
            1, 5, 12, 22, 35, 51, 70, 92, 113, 122, 132, 122, 113, 92, 70, 51, 35, 22, 12, 5, 1,
        ],
        || format!("gorenstein {gor:?}"),
    )?;
    within(t, Duration::from_secs(1), "construct")?;
    Ok(format!("exact match in {t:?}"))
}

fn ac3() -> Check {
    let mut worst = Duration::ZERO;
    for e in 6..=10u64 {
        let es = e.to_string();
        let (code, v, t) = cli_json(&[
            "verify", "thm-e", "--e", &es, "--field", "32003", "--trials", "5",
        ])?;
        ensure(code == 0, || format!("e={e}: exit {code}"))?;
        let target = compress_level(Some(&two_variable_truncation(e)), 3, e - 1)
            .map_err(|x| x.to_string())?;
        let r = &v["results"][0];
        let computed = entries(&r["computed"]);
        ensure(computed == target.entries(), || {
            format!("e={e}: computed {computed:?}, expected {target}")
        })?;
        ensure(r["verdict"] == "match", || {
            format!("e={e}: verdict {}", r["verdict"])
        })?;
        within(t, Duration::from_secs(10), &format!("e={e}"))?;
        worst = worst.max(t);
    }
    Ok(format!("e=6..10 all match; slowest {worst:?}"))
}

fn ac4() -> Check {
    let mut notes = Vec::new();
    for parity in Parity::BOTH {
        let p = parity.to_string();
        let (code, v, t) = cli_json(&[
            "verify", "thm-r", "--d", "10", "--parity", &p, "--field", "32003", "--trials", "5",
        ])?;
        ensure(code == 0, || format!("{p}: exit {code}"))?;
        let table = construct_thm_r_level(10, parity).map_err(|x| x.to_string())?;
        let computed = entries(&v["results"][0]["computed"]);
        ensure(computed == table.entries(), || {
            format!("{p}: computed {computed:?}, table {table}")
        })?;
        within(t, Duration::from_secs(60), &p)?;
        notes.push(format!("{p} {t:?}"));
    }
    Ok(format!("every degree matches ({})", notes.join(", ")))
}

fn ac5() -> Check {
    let start = Instant::now();
    for e in 6..=14u64 {
        let h = construct_thm_e(e)
            .map_err(|x| x.to_string())?
            .gorenstein_hvector;
        ensure(
            is_symmetric(&h) && is_unimodal(&h) && !is_si_sequence(&h),
            || format!("thm_e e={e}: {h}"),
        )?;
        let half: Vec<u64> = h.first_difference()[..=(e as usize / 2)]
            .iter()
            .map(|&x| x as u64)
            .collect();
        let v = first_growth_violation(&half).ok_or(format!("e={e}: no violation"))?;
        ensure((v.degree, v.value, v.next) == (2, 4, 6), || {
            format!("e={e}: violation {v}")
        })?;
    }
    for d in 10..=16u64 {
        for parity in Parity::BOTH {
            let h = construct_thm_r_gorenstein(d, parity)
                .map_err(|x| x.to_string())?
                .gorenstein_hvector;
            ensure(
                is_symmetric(&h) && is_unimodal(&h) && !is_si_sequence(&h),
                || format!("thm_r d={d} {parity}: {h}"),
            )?;
            let diff = h.first_difference();
            let du = d as usize;
            ensure(
                diff[du - 1] == i128::from(d as u32 - 1) && diff[du] == i128::from(d as u32),
                || {
                    format!(
                        "d={d} {parity}: difference {} then {}",
                        diff[du - 1],
                        diff[du]
                    )
                },
            )?;
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(5), "classification")?;
    Ok(format!("9 + 14 family vectors classified in {t:?}"))
}

fn ac6() -> Check {
    let start = Instant::now();
    for i in 1..=5u32 {
        for n in 1..=100u64 {
            let lib = macaulay_bound(n, u64::from(i)).map_err(|x| x.to_string())?;
            let oracle = common::lex_segment_bound(n, i);
            ensure(lib == BigUint::from(oracle), || {
                format!("n={n}, i={i}: bound {lib}, oracle {oracle}")
            })?;
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(30), "oracle comparison")?;
    Ok(format!("500 pairs agree in {t:?}"))
}

fn ac7() -> Check {
    let start = Instant::now();
    let mut seen = 0;
    for e in 3..=5usize {
        for v in common::symmetric_unimodal_candidates(e, 6) {
            let h = HVector::new(v).map_err(|x| x.to_string())?;
            if !(is_o_sequence(&h) && is_unimodal(&h) && is_symmetric(&h)) {
                continue;
            }
            seen += 1;
            ensure(is_si_sequence(&h), || format!("{h} is not SI"))?;
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(10), "enumeration")?;
    Ok(format!(
        "{seen} symmetric unimodal O-sequences, all SI, in {t:?}"
    ))
}

fn ac8() -> Check {
    let start = Instant::now();
    let field = FieldSpec::new(32003).unwrap();
    for k in 0..50u64 {
        let s = mix_seed(0xace8, k);
        let r = 1 + (s % 4) as usize;
        let e = 1 + ((s >> 8) % 8) as u32;
        let h = hilbert_function(&[Form::random(field, r, e, s)]).map_err(|x| x.to_string())?;
        let expected = compress_level(None, r as u64, u64::from(e)).map_err(|x| x.to_string())?;
        ensure(is_symmetric(&h), || {
            format!("r={r}, e={e}: {h} not symmetric")
        })?;
        ensure(h == expected, || format!("r={r}, e={e}: {h} != {expected}"))?;
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(30), "random forms")?;
    Ok(format!("50 forms symmetric and compressed in {t:?}"))
}

fn ac9() -> Check {
    let (code, v, t) = cli_json(&["sweep", "thm-e", "--e", "6", "--chars", "0,101,1009,32003"])?;
    ensure(code == 0, || format!("exit {code}"))?;
    let reports = v["results"].as_array().ok_or("no results")?;
    let chars: Vec<u64> = reports
        .iter()
        .filter_map(|r| r["characteristic"].as_u64())
        .collect();
    ensure(chars == [0, 101, 1009, 32003], || {
        format!("characteristics {chars:?}")
    })?;
    for r in reports {
        ensure(r["verdict"] == "match", || {
            format!("char {}: {}", r["characteristic"], r["verdict"])
        })?;
    }
    within(t, Duration::from_secs(60), "sweep")?;
    Ok(format!("match in all 4 characteristics in {t:?}"))
}

fn ac10() -> Check {
    let runs: [&[&str]; 3] = [
        &[
            "verify", "thm-r", "--d", "10", "--parity", "odd", "--seed", "99", "--format", "json",
        ],
        &[
            "verify", "thm-e", "--e", "6..8", "--seed", "5", "--format", "json",
        ],
        &[
            "sweep", "thm-e", "--e", "6", "--seed", "3", "--trials", "3", "--format", "json",
        ],
    ];
    for args in runs {
        let (_, a, _) = cli(args)?;
        let (_, b, _) = cli(args)?;
        ensure(!a.is_empty() && a == b, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok("verify and sweep JSON byte-identical across repeats".into())
}

fn main() {
    type Criterion = (&'static str, &'static str, fn() -> Check);
    let criteria: [Criterion; 10] = [
        ("AC1", "thm-e e=6 construction", ac1),
        ("AC2", "thm-r d=10 even construction", ac2),
        ("AC3", "thm-e e=6..10 verification over GF(32003)", ac3),
        ("AC4", "thm-r d=10 verification, both parities", ac4),
        ("AC5", "family classification suite", ac5),
        ("AC6", "Macaulay bound vs lex-segment oracle", ac6),
        ("AC7", "socle degree 3..5 exhaustive SI check", ac7),
        ("AC8", "single-form symmetry and compression", ac8),
        ("AC9", "characteristic sweep for thm-e e=6", ac9),
        ("AC10", "report determinism", ac10),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
