use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bqlong::algebra::table_io::write_tables;
use bqlong::algebra::{wada_biquandle, FiniteGroup};
use bqlong::coloring::{count_colorings, count_fixed, enumerate_colorings_par};
use bqlong::diagram::long_virtual_trefoil;
use bqlong::harness::{run_harness, HarnessConfig};
use bqlong::longitude::{
    compare_invariants, invariant_family, invariant_sum, Comparison, Entry, InvariantSum,
};
use bqlong::{ColoringError, LongGaussCode, LongitudeMap};
use serde_json::{json, Value};

use crate::source::{load_tables, Context, SourceArgs};
use crate::CliError;

/// What a command prints in each format, and whether it succeeded.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub success: bool,
}

fn failure(e: ColoringError) -> CliError {
    CliError::Failure(e.to_string())
}

/// Accepts the text grammar or the JSON form.
pub fn parse_code(text: &str) -> Result<LongGaussCode, CliError> {
    if text.trim_start().starts_with('{') {
        LongGaussCode::from_json(text).map_err(|e| CliError::Usage(format!("bad code JSON: {e}")))
    } else {
        text.parse()
            .map_err(|e| CliError::Usage(format!("bad code {text:?}: {e}")))
    }
}

fn status<E: std::fmt::Display>(r: Option<&Result<(), E>>) -> (String, Value) {
    match r {
        None => ("not checked".into(), json!({"checked": false})),
        Some(Ok(())) => ("ok".into(), json!({"checked": true, "ok": true})),
        Some(Err(e)) => (
            format!("FAIL ({e})"),
            json!({"checked": true, "ok": false, "witness": e.to_string()}),
        ),
    }
}

pub fn verify(source: &SourceArgs, emit_table: Option<&Path>) -> Result<Outcome, CliError> {
    let loaded = load_tables(source)?;
    let report = loaded.tables.verify_all();
    let rows = [
        ("switch", status(Some(&report.switch))),
        ("birack", status(report.birack.as_ref())),
        ("biquandle", status(report.biquandle.as_ref())),
    ];
    let mut text = format!(
        "source: {}\nelements: {}\n",
        loaded.label,
        loaded.tables.size()
    );
    let mut record = json!({"source": loaded.label, "elements": loaded.tables.size()});
    for (name, (line, value)) in rows {
        let _ = writeln!(text, "{name}: {line}");
        record[name] = value;
    }
    if let Some(path) = emit_table {
        let body = write_tables(&loaded.tables, loaded.names.as_deref());
        fs::write(path, body)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))?;
        let _ = writeln!(text, "table written: {}", path.display());
        record["table_written"] = json!(path.display().to_string());
    }
    Ok(Outcome {
        text,
        json: record,
        success: report.all_ok(),
    })
}

pub fn colorings(
    ctx: &Context,
    code: &LongGaussCode,
    initial: Option<&str>,
    list: bool,
) -> Result<Outcome, CliError> {
    let p = initial.map(|s| ctx.resolve(s)).transpose()?;
    let all = enumerate_colorings_par(code, &ctx.b, p).map_err(failure)?;
    let mut text = format!("colorings: {}\n", all.len());
    if list {
        for c in &all {
            let _ = writeln!(text, "{}", ctx.names(c.colors()).join(" "));
        }
    }
    let json = json!({
        "source": ctx.label,
        "code": code.to_string(),
        "initial": p.map(|p| ctx.name(p)),
        "count": all.len(),
        "colorings": all,
    });
    Ok(Outcome {
        text,
        json,
        success: true,
    })
}

/// Wada longitudes are right multiplications; show them as `x*w`.
fn describe_map(ctx: &Context, map: &LongitudeMap) -> String {
    if let Some(g) = &ctx.group {
        let w = map.apply(g.identity());
        if (0..g.order()).all(|x| map.apply(x) == g.mul(x, w)) {
            return format!("x*{}", g.name(w));
        }
    }
    format!("{:?}", map.images())
}

fn sum_text(ctx: &Context, sum: &InvariantSum) -> String {
    format!("{{{}}}", ctx.names(sum.terms()).join(", "))
}

pub fn longitude(
    ctx: &Context,
    code: &LongGaussCode,
    initial: &str,
    apply: Option<&str>,
) -> Result<Outcome, CliError> {
    let p = ctx.resolve(initial)?;
    let x = apply.map(|s| ctx.resolve(s)).transpose()?;
    let mut record = json!({
        "source": ctx.label,
        "code": code.to_string(),
        "initial": ctx.name(p),
    });
    let text = match x {
        Some(x) => {
            let sum = invariant_sum(code, &ctx.b, p, x).map_err(failure)?;
            record["apply"] = json!(ctx.name(x));
            record["sum"] = json!(ctx.names(sum.terms()));
            format!("sum: {}\n", sum_text(ctx, &sum))
        }
        None => {
            let family = invariant_family(code, &ctx.b, p).map_err(failure)?;
            let mut text = format!("family size: {}\n", family.len());
            for m in family.maps() {
                let _ = writeln!(text, "{}", describe_map(ctx, m));
            }
            record["family"] = json!(family);
            text
        }
    };
    Ok(Outcome {
        text,
        json: record,
        success: true,
    })
}

fn entry_text(ctx: &Context, e: &Option<Entry>) -> String {
    match e {
        None => "(none)".into(),
        Some(Entry::Element(x)) => ctx.name(*x).to_string(),
        Some(Entry::Map(m)) => describe_map(ctx, m),
    }
}

pub fn compare(
    ctx: &Context,
    first: &LongGaussCode,
    second: &LongGaussCode,
    initial: &str,
    apply: Option<&str>,
) -> Result<Outcome, CliError> {
    let p = ctx.resolve(initial)?;
    let x = apply.map(|s| ctx.resolve(s)).transpose()?;
    let result = compare_invariants(first, second, &ctx.b, p, x).map_err(failure)?;
    let mut record = json!({
        "source": ctx.label,
        "first": first.to_string(),
        "second": second.to_string(),
        "initial": ctx.name(p),
        "apply": x.map(|x| ctx.name(x)),
    });
    let text = match &result {
        Comparison::Equal => {
            record["result"] = json!("EQUAL");
            "EQUAL\n".to_string()
        }
        Comparison::Different(d) => {
            record["result"] = json!("DIFFERENT");
            record["witness"] = json!(d);
            format!(
                "DIFFERENT\nfirst difference at entry {}: {} vs {}\n",
                d.index,
                entry_text(ctx, &d.left),
                entry_text(ctx, &d.right)
            )
        }
    };
    Ok(Outcome {
        text,
        json: record,
        success: result.is_equal(),
    })
}

pub fn moves(
    ctx: &Context,
    code: &LongGaussCode,
    config: &HarnessConfig,
) -> Result<Outcome, CliError> {
    let total = config.trials;
    let report = run_harness(code, &ctx.b, config, |done| {
        if done % 10 == 0 || done == total {
            eprintln!("moves: {done}/{total}");
        }
    })
    .map_err(failure)?;
    let mut text = format!(
        "random moves: {}\nr3 pairs: {}\nfailures: {}\n",
        report.random_moves,
        report.r3_pairs,
        report.failures.len()
    );
    for f in &report.failures {
        let _ = writeln!(
            text,
            "  {}: {} -> {} ({})",
            f.step, f.before, f.after, f.reason
        );
    }
    let _ = writeln!(
        text,
        "moves: {}",
        if report.passed() { "PASS" } else { "FAIL" }
    );
    let json = json!({
        "source": ctx.label,
        "code": code.to_string(),
        "seed": config.seed,
        "trials": config.trials,
        "random_moves": report.random_moves,
        "r3_pairs": report.r3_pairs,
        "failures": report.failures,
        "passed": report.passed(),
    });
    Ok(Outcome {
        text,
        json,
        success: report.passed(),
    })
}

const PAPER_INITIAL: &str = "(1,2,3,4)";
const PAPER_APPLY: &str = "()";
const PAPER_COUNT: u64 = 240;
const PAPER_FIXED_COUNT: u64 = 5;
const PAPER_SUM_D1: [&str; 5] = [
    "(1,3,2,5,4)",
    "()",
    "(1,5,3,4,2)",
    "(1,4,5,2,3)",
    "(1,2,4,3,5)",
];
const PAPER_SUM_D2: [&str; 5] = [
    "(1,4,2,3,5)",
    "()",
    "(1,2,5,4,3)",
    "(1,3,4,5,2)",
    "(1,5,3,2,4)",
];

fn expected_sum(g: &FiniteGroup, names: &[&str]) -> InvariantSum {
    InvariantSum::from_terms(
        names
            .iter()
            .map(|s| g.element(s).expect("embedded names are valid"))
            .collect(),
    )
}

/// The trefoil and its reverse over Wada S5 (or another structure), checked
/// against the published values when the structure is Wada S5.
pub fn paper_example(
    source: &SourceArgs,
    initial: Option<&str>,
    apply: Option<&str>,
) -> Result<Outcome, CliError> {
    let paper = !source.is_given();
    let ctx = if paper {
        let group = FiniteGroup::symmetric(5).map_err(|e| CliError::Failure(e.to_string()))?;
        let b = wada_biquandle(&group).map_err(|e| CliError::Failure(e.to_string()))?;
        Context {
            label: "wada S5".into(),
            b,
            group: Some(group),
        }
    } else {
        Context::load(source)?
    };
    let default_initial = if paper { PAPER_INITIAL } else { "0" };
    let default_apply = if paper { PAPER_APPLY } else { "0" };
    let p = ctx.resolve(initial.unwrap_or(default_initial))?;
    let x = ctx.resolve(apply.unwrap_or(default_apply))?;

    let d1 = long_virtual_trefoil();
    let d2 = d1.reverse_orientation();
    eprintln!("paper-example: counting colorings");
    let counts = [
        count_colorings(&d1, &ctx.b).map_err(failure)?,
        count_colorings(&d2, &ctx.b).map_err(failure)?,
    ];
    let fixed = [
        count_fixed(&d1, &ctx.b, p).map_err(failure)?,
        count_fixed(&d2, &ctx.b, p).map_err(failure)?,
    ];
    eprintln!("paper-example: computing sums");
    let sums = [
        invariant_sum(&d1, &ctx.b, p, x).map_err(failure)?,
        invariant_sum(&d2, &ctx.b, p, x).map_err(failure)?,
    ];
    let detected = sums[0] != sums[1];

    let (pn, xn) = (ctx.name(p).to_string(), ctx.name(x).to_string());
    let mut text = format!("biquandle: {} ({} elements)\n", ctx.label, ctx.b.size());
    let _ = writeln!(text, "D1: {d1}\nD2: {d2}");
    let _ = writeln!(
        text,
        "colorings D1: {}\ncolorings D2: {}",
        counts[0], counts[1]
    );
    let _ = writeln!(text, "colorings D1 with initial {pn}: {}", fixed[0]);
    let _ = writeln!(text, "colorings D2 with initial {pn}: {}", fixed[1]);
    let _ = writeln!(text, "S(D1, {pn}, {xn}) = {}", sum_text(&ctx, &sums[0]));
    let _ = writeln!(text, "S(D2, {pn}, {xn}) = {}", sum_text(&ctx, &sums[1]));
    let _ = writeln!(
        text,
        "noninvertible: {}",
        if detected { "YES" } else { "not detected" }
    );

    let mut mismatches = Vec::new();
    let expected = match (&ctx.group, paper) {
        (Some(g), true) => {
            let want = [
                expected_sum(g, &PAPER_SUM_D1),
                expected_sum(g, &PAPER_SUM_D2),
            ];
            for (i, &c) in counts.iter().enumerate() {
                if c != PAPER_COUNT {
                    mismatches.push(format!(
                        "colorings D{}: expected {PAPER_COUNT}, got {c}",
                        i + 1
                    ));
                }
            }
            for (i, &c) in fixed.iter().enumerate() {
                if c != PAPER_FIXED_COUNT {
                    mismatches.push(format!(
                        "colorings D{} with initial: expected {PAPER_FIXED_COUNT}, got {c}",
                        i + 1
                    ));
                }
            }
            for i in 0..2 {
                if sums[i] != want[i] {
                    mismatches.push(format!(
                        "S(D{}): expected {}, got {}",
                        i + 1,
                        sum_text(&ctx, &want[i]),
                        sum_text(&ctx, &sums[i])
                    ));
                }
            }
            if !detected {
                mismatches.push("noninvertible: expected YES".into());
            }
            if mismatches.is_empty() {
                let _ = writeln!(text, "expected-values: ok");
                json!("ok")
            } else {
                let _ = writeln!(text, "expected-values: MISMATCH");
                for m in &mismatches {
                    let _ = writeln!(text, "  {m}");
                }
                json!(mismatches)
            }
        }
        _ => {
            let _ = writeln!(text, "expected-values: skipped (non-paper biquandle)");
            json!("skipped")
        }
    };

    let json = json!({
        "biquandle": ctx.label,
        "elements": ctx.b.size(),
        "d1": d1.to_string(),
        "d2": d2.to_string(),
        "initial": pn,
        "apply": xn,
        "colorings": {"d1": counts[0], "d2": counts[1]},
        "colorings_with_initial": {"d1": fixed[0], "d2": fixed[1]},
        "sums": {"d1": ctx.names(sums[0].terms()), "d2": ctx.names(sums[1].terms())},
        "noninvertible": detected,
        "expected_values": expected,
    });
    Ok(Outcome {
        text,
        json,
        success: mismatches.is_empty(),
    })
}
