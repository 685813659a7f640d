//! Identity suites: every check fans out per `(id, case, n)` and the ledger is
//! sorted canonically regardless of completion order.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bk::{
    appendix_shift_check, dp_identities, fourier_check, gamma_product_with, highest_weight_vectors, mellin_check,
    BkCase, NormalizerSign,
};
use crate::doubling::{
    a_h, d_h, doubling_basic_and_fixedpoint, eta_factor, eta_gamma_product, normalization_product, DoublingCase,
    DoublingKind,
};
use crate::error::{Error, Result};
use crate::qfield::{gamma_local, tate_shell_series, AffineExponent};
use crate::reps::{basic_constant_term, partition_count, standard_lfactor, sym_power_trace, RepTable};
use crate::rootdata::{build_root_datum, CartanType, Weight};
use crate::vinberg::{sym_power_monoid, CSign};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Doubling,
    Bk,
    Reps,
    #[default]
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "doubling" => Ok(Self::Doubling),
            "bk" => Ok(Self::Bk),
            "reps" => Ok(Self::Reps),
            "all" => Ok(Self::All),
            _ => Err(Error::Parse(format!("suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub n_max: usize,
    pub degree: u32,
    pub c_sign: CSign,
    pub timings: bool,
    /// Flips the sign of the eigenvalue in the gamma-product normalizer.
    pub flip_normalizer_sign: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { suite: Suite::All, n_max: 8, degree: 10, c_sign: CSign::default(), timings: false, flip_normalizer_sign: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub id: String,
    pub case: String,
    pub n: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Ledger {
    pub suite: Suite,
    pub entries: Vec<LedgerEntry>,
    pub all_pass: bool,
}

impl Ledger {
    pub fn failures(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

type Check = Box<dyn Fn() -> Result<bool> + Send + Sync>;

struct Task {
    id: &'static str,
    case: String,
    n: usize,
    check: Check,
}

fn task(id: &'static str, case: impl Into<String>, n: usize, check: impl Fn() -> Result<bool> + Send + Sync + 'static) -> Task {
    Task { id, case: case.into(), n, check: Box::new(check) }
}

fn doubling_cases(n_max: usize) -> Vec<DoublingCase> {
    (1..=n_max)
        .flat_map(|n| {
            [DoublingKind::Symplectic, DoublingKind::OrthogonalEven, DoublingKind::OrthogonalOdd]
                .into_iter()
                .filter_map(move |k| DoublingCase::new(k, n).ok())
        })
        .collect()
}

fn bk_cases(n_max: usize) -> Vec<(usize, BkCase)> {
    (1..=n_max)
        .flat_map(|n| [(n, BkCase::O), (n, BkCase::Sp)])
        .filter(|(n, c)| *c == BkCase::O || n % 2 == 0)
        .collect()
}

fn case_name(c: BkCase) -> &'static str {
    match c {
        BkCase::O => "orthogonal",
        BkCase::Sp => "symplectic",
    }
}

fn doubling_tasks(cfg: &VerifyConfig) -> Vec<Task> {
    let mut out = Vec::new();
    for c in doubling_cases(cfg.n_max) {
        let name = c.kind.name();
        out.push(task("normalization_identity", name, c.n, move || Ok(normalization_product(&c)?.is_one())));
        out.push(task("eta_gamma_product", name, c.n, move || {
            let ratio = d_h(&c)?.negate_s().div(&a_h(&c)?)?;
            Ok(ratio == eta_gamma_product(&c)? && ratio == eta_factor(&c)?)
        }));
        out.push(task("fixed_point", name, c.n, move || {
            let r = doubling_basic_and_fixedpoint(&c)?;
            Ok(r.fixed_point && r.duality)
        }));
    }
    out
}

fn bk_tasks(cfg: &VerifyConfig) -> Vec<Task> {
    let mut out = Vec::new();
    let d = cfg.degree;
    let sign = if cfg.flip_normalizer_sign { NormalizerSign::Literal } else { NormalizerSign::Eigenvalue };
    for n in 2..=cfg.n_max.max(2) {
        for case in [BkCase::O, BkCase::Sp] {
            out.push(task("hwv_root_lines", case_name(case), n, move || {
                let set = highest_weight_vectors(n, case)?;
                let mut got: Vec<Weight> = set.labels();
                got.sort();
                let mut want: Vec<Weight> =
                    (1..=n / 2).map(|l| Weight::x(n, l).add(&Weight::x(n, l + 1))).collect();
                if case == BkCase::Sp {
                    want.push(Weight::x(n, 1));
                }
                want.sort();
                Ok(got == want)
            }));
        }
    }
    for (n, case) in bk_cases(cfg.n_max) {
        let name = case_name(case);
        out.push(task("dp_identities", name, n, move || {
            let r = dp_identities(n, case)?;
            Ok(r.part_a && r.part_b)
        }));
        out.push(task("gamma_normalizer", name, n, move || gamma_product_with(n, case, sign).map(|_| true)));
        out.push(task("mellin", name, n, move || Ok(mellin_check(n, case, d)?.pass)));
        out.push(task("fourier", name, n, move || Ok(fourier_check(n, case, d)?.pass())));
    }
    let c_sign = cfg.c_sign;
    for m in 1..=cfg.n_max {
        out.push(task("appendix_shift", "symplectic", m, move || Ok(appendix_shift_check(m, 4, c_sign)?.pass())));
    }
    out
}

const TYPES: [CartanType; 4] = [CartanType::A, CartanType::B, CartanType::C, CartanType::D];

fn partitions_agree(ty: CartanType, rank: usize) -> Result<bool> {
    let rep = RepTable::standard(&build_root_datum(ty, rank)?).graded();
    let basis = rep.weight_basis();
    for d in 0..=6 {
        for mu in sym_power_trace(&rep, d).terms().keys() {
            let mu = mu.clone().with_grading(d as i32);
            if partition_count(&basis, &mu) != basic_constant_term(&rep, &mu) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn reps_tasks(_cfg: &VerifyConfig) -> Vec<Task> {
    let mut out = Vec::new();
    for ty in TYPES {
        for rank in 1..=3 {
            if build_root_datum(ty, rank).is_err() {
                continue;
            }
            let name = format!("{ty:?}{rank}");
            out.push(task("lfactor_sym_series", name.clone(), rank, move || {
                let rep = RepTable::standard(&build_root_datum(ty, rank)?);
                Ok(standard_lfactor(&rep, 8).matches_sym_traces(&rep).is_none())
            }));
            out.push(task("partition_constant_term", name, rank, move || partitions_agree(ty, rank)));
        }
    }
    for n in 1..=10u32 {
        out.push(task("monoid_dichotomy", "sym_power", n as usize, move || {
            let want = if n % 2 == 0 { "GL1 x SL2" } else { "GL2" };
            Ok(sym_power_monoid(n)?.units.resulting_isomorphism_label == want)
        }));
    }
    for s0_2 in -2..=2i32 {
        out.push(task("tate_oracle", format!("s0={}/2", s0_2), 0, move || {
            let series = tate_shell_series(s0_2, 12);
            let closed = series.collapse();
            Ok(closed == gamma_local(AffineExponent::new(-1, -s0_2))?
                && closed.series(12)?.first_difference(&series.as_series()).is_none())
        }));
    }
    out
}

/// Runs the suite and returns the sorted ledger.
pub fn run(cfg: &VerifyConfig) -> Ledger {
    let mut tasks = Vec::new();
    if matches!(cfg.suite, Suite::Doubling | Suite::All) {
        tasks.extend(doubling_tasks(cfg));
    }
    if matches!(cfg.suite, Suite::Bk | Suite::All) {
        tasks.extend(bk_tasks(cfg));
    }
    if matches!(cfg.suite, Suite::Reps | Suite::All) {
        tasks.extend(reps_tasks(cfg));
    }
    let mut entries: Vec<LedgerEntry> = tasks
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let result = (t.check)();
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            let (pass, detail) = match result {
                Ok(p) => (p, None),
                Err(e) => (false, Some(e.to_string())),
            };
            LedgerEntry {
                id: t.id.to_string(),
                case: t.case.clone(),
                n: t.n,
                pass,
                detail,
                elapsed_ms: cfg.timings.then_some(elapsed),
            }
        })
        .collect();
    entries.sort_by(|a, b| (&a.id, &a.case, a.n).cmp(&(&b.id, &b.case, b.n)));
    let all_pass = entries.iter().all(|e| e.pass);
    Ledger { suite: cfg.suite, entries, all_pass }
}
