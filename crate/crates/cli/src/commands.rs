use std::fmt::Write as _;

use kalman_core::betti::{BettiKey, BettiTable, Label};
use kalman_core::bott::GrassmannianContext;
use kalman_core::geometric::{cohomology_table, resolution_terms};
use kalman_core::hilbert::HilbertSeries;
use kalman_core::resolution::{
    conjecture_consistency, d2_cone, d3_cone, ideal_generators, prop_1dn_table, prop_23n_table,
    prop_ndp1_table, prop_sdm1_table, thm_12n_table, thm_13n_equations,
};
use kalman_core::verifier::{
    expected_codim, jacobian_codim, minors_vanish, numeric_hilbert_function_with,
    reduced_kalman_matrix, sample_generic, sample_member, HfConfig, DEFAULT_PRIME,
};
use kalman_core::{Error, Result};
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Refused,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Refused => 3,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Refused => "refused",
        }
    }
}

pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub text: String,
}

impl CommandResult {
    fn ok(payload: Value, text: String) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            text,
        }
    }

    fn checked(pass: bool, mut payload: Value, text: String) -> Self {
        let status = if pass { Status::Ok } else { Status::Mismatch };
        payload["status"] = json!(status.as_str());
        CommandResult {
            status,
            payload,
            text,
        }
    }

    pub fn refused(err: &Error) -> Self {
        CommandResult {
            status: Status::Refused,
            payload: json!({ "status": "refused", "reason": err.to_string() }),
            text: format!("refused: {err}"),
        }
    }
}

fn context(s: usize, d: usize, n: usize) -> Result<GrassmannianContext> {
    GrassmannianContext::new(s, d, n)
}

fn bigint_json(text: String) -> Value {
    text.parse::<i64>().map_or(Value::String(text), Value::from)
}

fn hilbert_json(hs: &HilbertSeries) -> Value {
    json!({
        "numerator": hs.numerator().iter().map(|c| bigint_json(c.to_string())).collect::<Vec<_>>(),
        "denominator_exponent": hs.denominator_exponent(),
    })
}

fn table_json(t: &BettiTable) -> Value {
    serde_json::to_value(t.to_rows()).expect("rows serialize")
}

pub fn betti(s: usize, d: usize, n: usize) -> Result<CommandResult> {
    let t = resolution_terms(&context(s, d, n)?)?;
    Ok(CommandResult::ok(table_json(&t), t.to_string()))
}

pub fn cohomology(s: usize, d: usize, n: usize, q: u32) -> Result<CommandResult> {
    let ctx = context(s, d, n)?;
    let table = cohomology_table(&ctx, q)?;
    let mut text = format!("{:>3} {:>12}  labels\n", "j", "rank");
    let mut rows = Vec::new();
    for (j, labels) in &table {
        let rank = labels
            .iter()
            .map(|(l, &m)| l.rank(d, n) * m)
            .fold(BigUint::default(), |a, b| a + b);
        let names: Vec<String> = labels
            .iter()
            .map(|(l, &m)| {
                if m == 1 {
                    l.to_string()
                } else {
                    format!("{m}{l}")
                }
            })
            .collect();
        writeln!(text, "{j:>3} {rank:>12}  {}", names.join(" + ")).unwrap();
        rows.push(json!({
            "j": j,
            "rank": bigint_json(rank.to_string()),
            "labels": labels.iter().map(|(l, &m)| json!({"lambdaL": l.lambda_l, "muW": l.mu_w, "mult": m})).collect::<Vec<_>>(),
        }));
    }
    Ok(CommandResult::ok(Value::Array(rows), text))
}

pub fn hilbert(s: usize, d: usize, n: usize) -> Result<CommandResult> {
    let hs = kalman_core::geometric::hilbert_series_normalization(&context(s, d, n)?)?;
    let text = format!(
        "{hs}\nnumerator: [{}]\ndenominator exponent: {}\n",
        hs.numerator()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", "),
        hs.denominator_exponent()
    );
    Ok(CommandResult::ok(hilbert_json(&hs), text))
}

fn difference_report(
    id: &str,
    computed: &BettiTable,
    expected: &BettiTable,
    extra: Vec<(String, bool)>,
) -> CommandResult {
    let diff = computed.difference(expected);
    let mut text = String::new();
    let describe = |k: &BettiKey, m: i64| json!({"i": k.i, "degree": k.degree, "lambdaL": k.label.lambda_l, "muW": k.label.mu_w, "delta": m});
    for (k, m) in &diff {
        let side = if *m > 0 {
            "only computed"
        } else {
            "only expected"
        };
        writeln!(text, "{side}: {k} x{}", m.abs()).unwrap();
    }
    for (what, pass) in &extra {
        writeln!(text, "{}: {what}", if *pass { "ok" } else { "FAILED" }).unwrap();
    }
    let pass = diff.is_empty() && extra.iter().all(|(_, p)| *p);
    writeln!(text, "{id}: {}", if pass { "match" } else { "mismatch" }).unwrap();
    CommandResult::checked(
        pass,
        json!({
            "id": id,
            "differences": diff.iter().map(|(k, m)| describe(k, *m)).collect::<Vec<_>>(),
            "checks": extra.iter().map(|(w, p)| json!({"check": w, "pass": p})).collect::<Vec<_>>(),
        }),
        text,
    )
}

pub fn verify(id: &str, d: Option<usize>, n: Option<usize>) -> Result<CommandResult> {
    match id {
        "prop-2-2" => {
            let d = d.unwrap_or(3);
            let n = n.unwrap_or(2 * d);
            let t = resolution_terms(&context(1, d, n)?)?;
            let checks = vec![
                (format!("regularity {}", d - 1), t.regularity()? == d as i32 - 1),
                (format!("top index {}", n - d), t.proj_dim()? == (n - d) as i32),
            ];
            Ok(difference_report(id, &t, &prop_1dn_table(d, n)?, checks))
        }
        "prop-2-4" => {
            let n = n.unwrap_or(8);
            let t = resolution_terms(&context(2, 3, n)?)?;
            let checks = vec![("regularity 2".to_string(), t.regularity()? == 2)];
            Ok(difference_report(id, &t.truncate(3), &prop_23n_table(n)?, checks))
        }
        "prop-sdm1" => {
            let d = d.unwrap_or(3);
            let n = n.unwrap_or(d + 3);
            let t = resolution_terms(&context(d.saturating_sub(1), d, n)?)?;
            Ok(difference_report(id, &t.truncate(2), &prop_sdm1_table(d, n)?, Vec::new()))
        }
        "prop-ndp1" => {
            let d = d.unwrap_or(3);
            let mut cases = Vec::new();
            for s in 1..=d {
                let computed = resolution_terms(&context(s, d, d + 1)?)?;
                cases.push(difference_report(&format!("{id} s={s}"), &computed, &prop_ndp1_table(s, d)?, Vec::new()));
            }
            let pass = cases.iter().all(|c| c.status == Status::Ok);
            let text: String = cases.iter().map(|c| c.text.as_str()).collect();
            let payload = json!({"id": id, "cases": cases.into_iter().map(|c| c.payload).collect::<Vec<_>>()});
            Ok(CommandResult::checked(pass, payload, text))
        }
        "thm-3-3" => {
            let n = n.unwrap_or(6);
            let t = d2_cone(n)?;
            let checks = vec![
                (format!("projective dimension {}", 2 * n - 5), t.proj_dim()? == 2 * n as i32 - 5),
                ("regularity 2".to_string(), t.regularity()? == 2),
            ];
            Ok(difference_report(id, &t, &thm_12n_table(n)?, checks))
        }
        "thm-3-5" => {
            let n = n.unwrap_or(7);
            let got = ideal_generators(&d3_cone(n)?);
            let want: Vec<(Label, i32, u64)> = thm_13n_equations()
                .into_iter()
                .map(|(l, w, e)| (Label::new(l, w), e, 1))
                .filter(|(l, _, _)| l.rank(3, n) != BigUint::default())
                .collect();
            let pass = got == want;
            let mut text = String::new();
            for (l, e, m) in &got {
                writeln!(text, "degree {e}: {l} x{m}  count {}", l.rank(3, n) * *m).unwrap();
            }
            writeln!(text, "{id}: {}", if pass { "match" } else { "mismatch" }).unwrap();
            let generators: Vec<Value> = got
                .iter()
                .map(|(l, e, m)| {
                    json!({"degree": e, "lambdaL": l.lambda_l, "muW": l.mu_w, "mult": m, "count": bigint_json((l.rank(3, n) * *m).to_string())})
                })
                .collect();
            Ok(CommandResult::checked(pass, json!({"id": id, "generators": generators}), text))
        }
        "m2-output" => {
            let ctx = context(2, 3, 8)?;
            let expected: [(u32, u64, u64); 5] = [(1, 1, 0), (2, 45, 1), (3, 180, 15), (4, 310, 145), (5, 0, 705)];
            let mut text = String::new();
            let mut pass = true;
            let mut rows = Vec::new();
            for (q, h1, h2) in expected {
                let ranks = kalman_core::geometric::cohomology_ranks(&ctx, q)?;
                let got1 = ranks.get(&1).map(ToString::to_string).unwrap_or_else(|| "0".into());
                let got2 = ranks.get(&2).map(ToString::to_string).unwrap_or_else(|| "0".into());
                // q = 5 only records H^2
                let ok = (q == 5 || got1 == h1.to_string()) && got2 == h2.to_string();
                pass &= ok;
                writeln!(text, "q={q}: H^1 {got1}, H^2 {got2}{}", if ok { "" } else { "  MISMATCH" }).unwrap();
                rows.push(json!({"q": q, "h1": bigint_json(got1), "h2": bigint_json(got2), "pass": ok}));
            }
            writeln!(text, "{id}: {}", if pass { "match" } else { "mismatch" }).unwrap();
            Ok(CommandResult::checked(pass, json!({"id": id, "ranks": rows}), text))
        }
        "inductive-d2" | "inductive-d3" => {
            let d = if id == "inductive-d2" { 2 } else { 3 };
            let n = n.unwrap_or(d + 3);
            conjecture(d, n).map(|mut r| {
                r.payload["id"] = json!(id);
                r
            })
        }
        other => Err(Error::Parse(format!(
            "unknown verification id {other:?}; expected one of prop-2-2, prop-2-4, m2-output, thm-3-3, thm-3-5, prop-sdm1, prop-ndp1, inductive-d2, inductive-d3"
        ))),
    }
}

pub fn conjecture(d: usize, n: usize) -> Result<CommandResult> {
    let r = conjecture_consistency(d, n)?;
    let mut text = format!("predicted HS of O_(1,{d},{n}): {}\n", r.predicted);
    if let Some(res) = &r.residual {
        writeln!(text, "residual against proven resolution: {res}").unwrap();
    }
    if let Some(t) = &r.telescoped {
        writeln!(text, "telescoped from n = d + 1 sequences: {t}").unwrap();
    }
    if r.conjectural {
        writeln!(text, "conjectural: no proven resolution for d = {d}").unwrap();
    }
    let payload = json!({
        "d": d,
        "n": n,
        "predicted": hilbert_json(&r.predicted),
        "residual": r.residual.as_ref().map(hilbert_json),
        "telescoped": r.telescoped.as_ref().map(hilbert_json),
        "conjectural": r.conjectural,
    });
    Ok(CommandResult::checked(r.is_consistent(), payload, text))
}

pub fn kalman_test(s: usize, d: usize, n: usize, trials: u64, seed: u64) -> Result<CommandResult> {
    context(s, d, n)?;
    let k = d - s + 1;
    let mut sound = 0u64;
    let mut generic = 0u64;
    for t in 0..trials {
        let member = sample_member(s, d, n, seed.wrapping_add(t), DEFAULT_PRIME)?;
        sound += u64::from(minors_vanish(&reduced_kalman_matrix(&member), k));
        let pt = sample_generic(d, n, seed.wrapping_add(t), DEFAULT_PRIME)?;
        generic += u64::from(!minors_vanish(&reduced_kalman_matrix(&pt), k));
    }
    let pass = sound == trials && generic * 100 >= trials * 99;
    let text = format!(
        "members with vanishing {k}-minors: {sound}/{trials}\ngeneric points with a nonzero {k}-minor: {generic}/{trials}\n"
    );
    Ok(CommandResult::checked(
        pass,
        json!({"s": s, "d": d, "n": n, "minor_size": k, "trials": trials, "members_vanishing": sound, "generic_nonvanishing": generic}),
        text,
    ))
}

pub fn codim(s: usize, d: usize, n: usize, seed: u64) -> Result<CommandResult> {
    let rank = jacobian_codim(s, d, n, seed, DEFAULT_PRIME)?;
    let expected = expected_codim(s, d, n);
    Ok(CommandResult::checked(
        rank == expected,
        json!({"s": s, "d": d, "n": n, "jacobian_rank": rank, "expected": expected}),
        format!("jacobian rank {rank}, expected s(n-d) = {expected}\n"),
    ))
}

pub fn hf(
    s: usize,
    d: usize,
    n: usize,
    k_max: usize,
    seed: u64,
    budget: u64,
) -> Result<CommandResult> {
    let config = HfConfig {
        budget,
        ..HfConfig::default()
    };
    let hf = numeric_hilbert_function_with(s, d, n, k_max, seed, &config)?;
    let mut text = format!("{:>3} {:>12} {:>12}\n", "k", "HF", "dim I_k");
    for (k, (v, i)) in hf.values.iter().zip(&hf.ideal_dims).enumerate() {
        writeln!(text, "{k:>3} {v:>12} {i:>12}").unwrap();
    }
    Ok(CommandResult::ok(
        json!({"s": s, "d": d, "n": n, "values": hf.values, "ideal_dims": hf.ideal_dims}),
        text,
    ))
}
