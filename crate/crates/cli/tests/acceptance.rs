//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed.

use c4clique::harness::{regular_internals_hold, run_suite, Report, Suite, SuiteConfig};
use c4clique::{cycle_power, extract_regular, find_independent_set_of_size, Witness};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

const BIN: &str = env!("CARGO_BIN_EXE_c4clique");
const SEED: u64 = 2024;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "1 cycle powers: extract regular = exact omega = k+1",
            criterion_1,
        ),
        ("2 dominating-pair internals", criterion_2),
        ("3 general bound over the random corpus", criterion_3),
        ("4 triple bound and structure route", criterion_4),
        (
            "5 double count and conditional large-alpha bound",
            criterion_5,
        ),
        ("6 alpha<=2 decomposition families", criterion_6),
        ("7 C4 detector equivalence", criterion_7),
        ("8 deterministic reports", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "`c4clique {}` exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn json(text: &str) -> Result<serde_json::Value, String> {
    serde_json::from_str(text).map_err(|e| format!("bad JSON: {e}"))
}

fn criterion_1() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for k in 1..=6usize {
        let file = dir.path().join(format!("c{}.txt", 4 * k + 1));
        let file_arg = file.to_str().unwrap();
        run_cli(&["gen", "cycle-power", "--k", &k.to_string(), "-o", file_arg])?;
        let cert = json(&run_cli(&[
            "clique", "extract", "--method", "regular", file_arg,
        ])?)?;
        let exact = json(&run_cli(&["clique", "exact", file_arg])?)?;
        let size = cert["clique_size"].as_u64();
        let claimed = cert["clique"].as_array().map(Vec::len);
        let verified = cert["bound_satisfied"].as_bool() == Some(true);
        if size != Some(k as u64 + 1) || claimed != Some(k + 1) || !verified {
            return Err(format!("k={k}: extracted {cert}"));
        }
        if exact["omega"].as_u64() != Some(k as u64 + 1) {
            return Err(format!("k={k}: exact omega {}", exact["omega"]));
        }
        if !clique_is_valid(&file, &cert)? {
            return Err(format!("k={k}: returned vertices are not a clique"));
        }
    }
    Ok("k=1..6 all size k+1, omega confirmed".into())
}

/// Re-checks a CLI certificate's clique against the graph file.
fn clique_is_valid(file: &Path, cert: &serde_json::Value) -> Result<bool, String> {
    let g = c4clique::parse_graph(&std::fs::read_to_string(file).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let vs: Vec<usize> = cert["clique"]
        .as_array()
        .ok_or("clique missing")?
        .iter()
        .map(|v| v.as_u64().map(|v| v as usize).ok_or("non-integer vertex"))
        .collect::<Result<_, _>>()?;
    let set = g.vertex_set(&vs).map_err(|e| e.to_string())?;
    Ok(g.is_clique(&set))
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for k in 1..=6 {
        let g = cycle_power(k).map_err(|e| e.to_string())?;
        if find_independent_set_of_size(&g, 3).is_none() {
            continue;
        }
        let cert = extract_regular(&g).map_err(|e| format!("k={k}: {e}"))?;
        let Witness::DominatingPair(w) = &cert.witness else {
            return Err(format!("k={k}: α ≥ 3 but method {}", cert.method));
        };
        if !regular_internals_hold(&g, k, w) {
            return Err(format!("k={k}: internals fail for {w:?}"));
        }
        checked += 1;
    }
    let report = run_suite(&SuiteConfig::new(Suite::CyclePowers, SEED, 6, 40));
    expect_all_pass(&report, 6)?;
    if checked == 0 {
        return Err("no instance with α ≥ 3".into());
    }
    Ok(format!(
        "{checked} instances with α ≥ 3: |X|=1, U1/W1 cliques, meet {{x}}, |V-(U2+W2)|=2k+1"
    ))
}

fn expect_all_pass(report: &Report, at_least: usize) -> Result<(), String> {
    let agg = &report.aggregate;
    if agg.failed > 0 {
        let first = report.records.iter().find(|r| !r.pass).unwrap();
        return Err(format!(
            "{} of {} failed; first {}: {} (reproduce: {})",
            agg.failed, agg.total, first.id, first.witness, first.reproduce
        ));
    }
    if agg.total < at_least {
        return Err(format!("only {} instances, need {at_least}", agg.total));
    }
    Ok(())
}

fn counter(report: &Report, name: &str) -> usize {
    report.aggregate.counters.get(name).copied().unwrap_or(0)
}

fn criterion_3() -> Check {
    let report = run_suite(&SuiteConfig::new(Suite::BoundsGeneral, SEED, 500, 40));
    expect_all_pass(&report, 500)?;
    let with_omega = report
        .records
        .iter()
        .filter(|r| r.oracle_omega.is_some())
        .count();
    if with_omega != report.records.len() {
        return Err(format!(
            "oracle omega missing on {} records",
            report.records.len() - with_omega
        ));
    }
    Ok(format!(
        "{}/{} satisfy the ceiling bound and stay within omega ({} used swaps)",
        report.aggregate.passed,
        report.aggregate.total,
        counter(&report, "swapped")
    ))
}

fn criterion_4() -> Check {
    let report = run_suite(&SuiteConfig::new(Suite::BoundsTriple, SEED, 500, 40));
    let agg = &report.aggregate;
    expect_all_pass(&report, 1)?;
    if agg.total + agg.skipped != 500 {
        return Err(format!(
            "{} evaluated + {} skipped != 500",
            agg.total, agg.skipped
        ));
    }
    Ok(format!(
        "{} pass ({} triple route, {} structure route), {} outside δ ≤ 11n/15",
        agg.passed,
        counter(&report, "triple-route"),
        counter(&report, "structure-route"),
        agg.skipped
    ))
}

fn criterion_5() -> Check {
    let report = run_suite(&SuiteConfig::new(Suite::LargeAlpha, SEED, 500, 40));
    expect_all_pass(&report, 500)?;
    Ok(format!(
        "{} instances, identity and inequality exact; hypothesis met on {}",
        report.aggregate.total,
        counter(&report, "hypothesis-met")
    ))
}

fn criterion_6() -> Check {
    let report = run_suite(&SuiteConfig::new(Suite::Structure, SEED, 200, 40));
    expect_all_pass(&report, 400)?;
    let w5 = report
        .records
        .iter()
        .filter(|r| r.id.starts_with("w5-"))
        .count();
    let cobip = report
        .records
        .iter()
        .filter(|r| r.id.starts_with("cobip-"))
        .count();
    if w5 < 200 || cobip < 200 {
        return Err(format!("{w5} W5 blow-ups, {cobip} co-bipartite"));
    }
    Ok(format!(
        "{w5} W5 blow-ups and {cobip} co-bipartite decomposed and verified ({} W5 certificates)",
        counter(&report, "w5-substitution")
    ))
}

fn criterion_7() -> Check {
    let report = run_suite(&SuiteConfig::new(Suite::CheckerEquiv, SEED, 1000, 12));
    expect_all_pass(&report, 1000)?;
    let n6 = report
        .records
        .iter()
        .find(|r| r.id == "all-n6")
        .ok_or("no exhaustive n=6 record")?;
    if !n6.witness.starts_with("32768 graphs") {
        return Err(format!("n=6 record: {}", n6.witness));
    }
    Ok(format!(
        "exhaustive n<=6 ({}), {} random graphs n<=12",
        n6.witness,
        counter(&report, "random")
    ))
}

fn criterion_8() -> Check {
    for suite in Suite::ALL {
        let config = SuiteConfig::new(suite, SEED, 60, 30);
        let a = run_suite(&config).to_json();
        let b = run_suite(&config).to_json();
        if a != b {
            return Err(format!("{suite}: reports differ between runs"));
        }
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let base = [
        "verify",
        "--suite",
        "bounds-general",
        "--seed",
        "7",
        "--samples",
        "40",
        "--max-n",
        "30",
        "--json",
    ];
    for path in [&a, &b] {
        let mut args = base.to_vec();
        args.push(path.to_str().unwrap());
        run_cli(&args)?;
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    if ja != jb {
        return Err("CLI --json reports differ".into());
    }
    // The reproduce command of a record rebuilds that record.
    let report = json(&String::from_utf8_lossy(&ja))?;
    let record = &report["records"][5];
    let repro = record["reproduce"].as_str().ok_or("no reproduce field")?;
    let args: Vec<&str> = repro.split_whitespace().skip(1).collect();
    let stdout = run_cli(&args)?;
    let end = stdout.find("\n}\n").ok_or("no record printed")? + 2;
    if json(&stdout[..end])? != *record {
        return Err(format!("`{repro}` printed a different record"));
    }
    Ok("all 6 suites byte-identical across runs; CLI reports and reproduce commands stable".into())
}
