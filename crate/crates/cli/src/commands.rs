use satake::bk::{
    appendix_shift_check, dp_identities, fourier_check, gamma_product_normalizer, highest_weight_vectors, mellin_check,
    BkCase,
};
use satake::doubling::{
    a_h, d_h, doubling_basic_and_fixedpoint, eta_factor, m_scalar, normalization_product, DoublingCase, DoublingKind,
};
use satake::qfield::{gamma_local, tate_shell_series, AffineExponent};
use satake::reps::{basic_function, basic_shift_bookkeeping, standard_lfactor, weight_multiplicities, RepTable};
use satake::rootdata::{build_root_datum, CartanType, RootDatum};
use satake::verify::{run, VerifyConfig};
use satake::vinberg::{sym_power_monoid, unit_group_dual};
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::output::SCHEMA;
use crate::CliError;

/// A finished command: its JSON report and whether every identity held.
pub struct Outcome {
    pub report: Map<String, Value>,
    pub pass: bool,
}

fn outcome(command: &str, pass: bool, body: Value) -> Outcome {
    let mut report = Map::new();
    report.insert("schema".into(), json!(SCHEMA));
    report.insert("command".into(), json!(command));
    if let Value::Object(m) = body {
        report.extend(m);
    }
    report.insert("pass".into(), json!(pass));
    Outcome { report, pass }
}

fn parse_labels(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|_| CliError::Parse(format!("Dynkin label {x:?}"))))
        .collect()
}

fn rep_table(datum: &RootDatum, rep: &str) -> Result<RepTable, CliError> {
    match rep {
        "std" | "standard" => Ok(RepTable::standard(datum)),
        "trivial" => Ok(RepTable::trivial(datum)),
        labels => {
            let l = parse_labels(labels)?;
            if l.len() != datum.rank {
                return Err(CliError::Parse(format!("expected {} Dynkin labels", datum.rank)));
            }
            Ok(weight_multiplicities(datum, &datum.from_dynkin_labels(&l)?)?)
        }
    }
}

pub fn lfactor(ty: CartanType, rank: usize, rep: &str, degree: usize) -> Result<Outcome, CliError> {
    let datum = build_root_datum(ty, rank)?;
    let table = rep_table(&datum, rep)?;
    let l = standard_lfactor(&table, degree);
    let mismatch = l.matches_sym_traces(&table);
    let body = json!({
        "group": datum.label(),
        "rep": rep,
        "degree": degree,
        "denominator": l.denominator.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "series": l.series.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "first_mismatch": mismatch,
    });
    Ok(outcome("lfactor", mismatch.is_none(), body))
}

pub fn basicfn(ty: CartanType, rank: usize, rep: &str, s2: i32, shift2: i32, degree: usize) -> Result<Outcome, CliError> {
    let datum = build_root_datum(ty, rank)?;
    let table = rep_table(&datum, rep)?;
    let f = basic_function(&table, s2, degree);
    let shifted = basic_shift_bookkeeping(&f, shift2);
    let pass = shifted == basic_function(&table, s2 + shift2, degree);
    let layers: Vec<Value> = shifted
        .layers
        .iter()
        .map(|l| json!({"degree": l.degree, "scale": l.scale.to_string(), "character": l.character.to_string()}))
        .collect();
    let body = json!({"group": datum.label(), "rep": rep, "s2": s2 + shift2, "shift2": shift2, "layers": layers});
    Ok(outcome("basicfn", pass, body))
}

pub fn doubling(case: &str, n: usize) -> Result<Outcome, CliError> {
    let kind = DoublingKind::parse(case, n)?;
    let c = DoublingCase::new(kind, n)?;
    let dh = d_h(&c)?;
    if kind == DoublingKind::HermitianUnramified {
        return Ok(outcome("doubling", true, json!({"case": kind.name(), "n": n, "d_h": dh.to_string()})));
    }
    let fp = doubling_basic_and_fixedpoint(&c)?;
    let normalized = normalization_product(&c)?.is_one();
    let body = json!({
        "case": kind.name(),
        "n": n,
        "d_h": dh.to_string(),
        "a_h": a_h(&c)?.to_string(),
        "m": m_scalar(&c)?.to_string(),
        "eta": eta_factor(&c)?.to_string(),
        "normalization_identity": normalized,
        "fixed_point_lhs": fp.lhs.to_string(),
        "fixed_point_rhs": fp.rhs.to_string(),
        "fixed_point": fp.fixed_point,
        "duality": fp.duality,
    });
    Ok(outcome("doubling", normalized && fp.fixed_point && fp.duality, body))
}

pub const BK_CHECKS: [&str; 6] = ["hwv", "dp", "gamma", "mellin", "fourier", "shift"];

fn bk_entry(check: &str, n: usize, case: BkCase, degree: u32, cfg: &RunConfig) -> Result<(bool, Value), CliError> {
    Ok(match check {
        "hwv" => {
            let set = highest_weight_vectors(n, case)?;
            let labels: Vec<String> = set.labels().iter().map(|w| w.to_string()).collect();
            let want = n / 2 + usize::from(case == BkCase::Sp);
            (set.lines.len() == want, json!({"labels": labels, "kernel_dimension": set.kernel_dimension}))
        }
        "dp" => {
            let r = dp_identities(n, case)?;
            (r.part_a && r.part_b, json!({"d_p_inverse": r.d_p_inverse.to_string(), "d_pbar_inverse": r.d_pbar_inverse.to_string()}))
        }
        "gamma" => (true, json!({"normalizer": gamma_product_normalizer(n, case)?.to_string()})),
        "mellin" => {
            let r = mellin_check(n, case, degree)?;
            (r.pass, json!({"first_mismatch": r.first_mismatch}))
        }
        "fourier" => {
            let r = fourier_check(n, case, degree)?;
            (r.pass(), serde_json::to_value(&r).expect("serializable"))
        }
        "shift" => {
            if case != BkCase::Sp || n % 2 != 0 {
                return Err(CliError::Parse("the shift check needs the symplectic case with even n".into()));
            }
            let r = appendix_shift_check(n / 2, degree as usize, cfg.c_sign)?;
            (r.pass(), serde_json::to_value(&r).expect("serializable"))
        }
        other => return Err(CliError::Parse(format!("unknown check {other:?}"))),
    })
}

pub fn bk(case: BkCase, n: usize, checks: &[String], cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut entries = Vec::new();
    let mut all = true;
    for check in checks {
        let (pass, mut detail) = match bk_entry(check, n, case, cfg.degree, cfg) {
            Ok(r) => r,
            Err(CliError::Compute(e)) => (false, json!({"error": e.to_string()})),
            Err(e) => return Err(e),
        };
        all &= pass;
        if let Value::Object(m) = &mut detail {
            m.insert("id".into(), json!(check));
            m.insert("pass".into(), json!(pass));
        }
        entries.push(detail);
    }
    Ok(outcome("bk", all, json!({"case": format!("{case:?}").to_lowercase(), "n": n, "degree": cfg.degree, "entries": entries})))
}

pub fn monoid_sym_power(n: u32) -> Result<Outcome, CliError> {
    let m = sym_power_monoid(n)?;
    Ok(outcome("monoid", true, json!({"monoid": m})))
}

pub fn monoid_lambda(ty: CartanType, rank: usize, labels: &str) -> Result<Outcome, CliError> {
    let datum = build_root_datum(ty, rank)?;
    let l = parse_labels(labels)?;
    if l.len() != rank {
        return Err(CliError::Parse(format!("expected {rank} Dynkin labels")));
    }
    let lambda = datum.from_dynkin_labels(&l)?.with_grading(1);
    Ok(outcome("monoid", true, json!({"units": unit_group_dual(&datum, &lambda)?})))
}

pub fn gamma(a: i32, b2: i32) -> Result<Outcome, CliError> {
    let e = AffineExponent::new(a, b2);
    Ok(outcome("gamma", true, json!({"argument": e.to_string(), "gamma": gamma_local(e)?.to_string()})))
}

pub fn gamma_tate(s0_2: i32, degree: u32) -> Result<Outcome, CliError> {
    let series = tate_shell_series(s0_2, degree as i32);
    let closed = series.collapse();
    let expected = gamma_local(AffineExponent::new(-1, -s0_2))?;
    let pass = closed == expected && closed.series(degree as i32)?.first_difference(&series.as_series()).is_none();
    let body = json!({"s0_2": s0_2, "shell_sum": closed.to_string(), "gamma": expected.to_string()});
    Ok(outcome("gamma", pass, body))
}

pub fn verify(vc: &VerifyConfig) -> Outcome {
    let ledger = run(vc);
    let mut body = serde_json::to_value(&ledger).expect("serializable");
    if let Value::Object(m) = &mut body {
        m.insert("n_max".into(), json!(vc.n_max));
        m.insert("degree".into(), json!(vc.degree));
    }
    outcome("verify", ledger.all_pass, body)
}
