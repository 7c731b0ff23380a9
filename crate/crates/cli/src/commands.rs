use circulant_core::circulant::{
    coefficient_oracle, coefficient_oracle_general, compare_dp, det_expand_general_with_budget, det_expand_with_budget,
    in_permanent_support, per_expand, support_congruence_check, theorem_witness, vanishing_predicate, DpComparison,
    ExpansionReport, WitnessParams, ORACLE_LIMIT,
};
use circulant_core::gtsys::{conjecture_scan, minimality_check_with_budget, theorem49_scan, GTReport, GroupAction};
use circulant_core::{BigScalar, Error, MultisetIndex};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::{Action, CoeffArgs, Command, CountArgs, Format, Matrix, ScanArgs};
use crate::table::{joined, Table};
use crate::CliError;

pub fn run(command: &Command, format: Option<Format>, budget: u64) -> Result<String, CliError> {
    match command {
        Command::Det(m) => expansion(det(m, budget)?, format.unwrap_or(Format::Json)),
        Command::Per(s) => expansion(per_expand(s.n)?, format.unwrap_or(Format::Json)),
        Command::Count(c) => count(c, format.unwrap_or(Format::Csv), budget),
        Command::Coeff(c) => coeff(c, format.unwrap_or(Format::Json)),
        Command::Witness(s) => witness(s.n, format.unwrap_or(Format::Json)),
        Command::Gt(a) => gt(a, format.unwrap_or(Format::Json), budget),
        Command::Scan(s) => scan(s, format.unwrap_or(Format::Csv), budget),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string(value).map_err(|e| CliError::Output(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn render<T: Serialize>(value: &T, format: Format, table: impl FnOnce() -> Table) -> Result<String, CliError> {
    match format {
        Format::Json => json(value),
        Format::Csv => table().to_csv().map_err(|e| CliError::Output(e.to_string())),
        Format::Pretty => Ok(table().to_pretty()),
    }
}

fn det(m: &Matrix, budget: u64) -> Result<ExpansionReport, Error> {
    match (m.n, m.d, &m.alpha) {
        (Some(n), None, None) => det_expand_with_budget(n, budget),
        (None, Some(d), Some(alpha)) => det_expand_general_with_budget(d, alpha, budget),
        _ => Err(Error::InvalidInput("give either --n, or --d with --alpha".into())),
    }
}

/// `x0^2*x1*x3` for the multiset `[0, 0, 1, 3]`, and `1` for the empty one.
fn monomial(m: &MultisetIndex) -> String {
    let s = m.as_slice();
    if s.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let run = s[i..].iter().take_while(|&&v| v == s[i]).count();
        parts.push(if run == 1 {
            format!("x{}", s[i])
        } else {
            format!("x{}^{run}", s[i])
        });
        i += run;
    }
    parts.join("*")
}

fn expansion(report: ExpansionReport, format: Format) -> Result<String, CliError> {
    render(&report, format, || {
        let mut t = Table::new(vec!["multiset", "coeff", "monomial"]);
        for term in &report.terms {
            t.push(vec![
                joined(term.multiset.as_slice()),
                term.coeff.to_string(),
                monomial(&term.multiset),
            ]);
        }
        t
    })
}

fn count(c: &CountArgs, format: Format, budget: u64) -> Result<String, CliError> {
    let range = match (c.n, &c.n_range) {
        (Some(n), None) => n..=n,
        (None, Some(r)) => r.clone(),
        _ => return Err(Error::InvalidInput("give either --n or --n-range".into()).into()),
    };
    let rows: Vec<DpComparison> = range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| compare_dp(n, budget))
        .collect::<Result<_, _>>()?;
    render(&rows, format, || {
        let mut t = Table::new(vec!["n", "d", "p", "equal", "prime_power"]);
        for r in &rows {
            t.push(vec![
                r.n.to_string(),
                r.d.to_string(),
                r.p.to_string(),
                r.equal.to_string(),
                r.prime_power.to_string(),
            ]);
        }
        t
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CoeffOutput {
    pub n: usize,
    pub d: usize,
    pub alpha: Vec<u32>,
    pub multiset: MultisetIndex,
    pub coeff: BigScalar,
}

fn coeff(c: &CoeffArgs, format: Format) -> Result<String, CliError> {
    let m = MultisetIndex::new(c.multiset.clone());
    let out = match (c.matrix.n, c.matrix.d, &c.matrix.alpha) {
        (Some(n), None, None) => CoeffOutput {
            n,
            d: n,
            alpha: (0..n as u32).collect(),
            coeff: coefficient_oracle(n, &m)?,
            multiset: m,
        },
        (None, Some(d), Some(alpha)) => CoeffOutput {
            n: alpha.len(),
            d,
            alpha: alpha.clone(),
            coeff: coefficient_oracle_general(d, alpha, &m)?,
            multiset: m,
        },
        _ => return Err(Error::InvalidInput("give either --n, or --d with --alpha".into()).into()),
    };
    render(&out, format, || {
        let mut t = Table::new(vec!["n", "d", "alpha", "multiset", "coeff"]);
        t.push(vec![
            out.n.to_string(),
            out.d.to_string(),
            joined(&out.alpha),
            joined(out.multiset.as_slice()),
            out.coeff.to_string(),
        ]);
        t
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessOutput {
    pub params: WitnessParams,
    pub multiset: MultisetIndex,
    pub permanent_support_ok: bool,
    pub congruence_ok: bool,
    pub predicate_ok: bool,
    /// Determinant coefficient of the monomial; absent when `N` exceeds the
    /// oracle's limit.
    pub coefficient: Option<BigScalar>,
}

fn witness(n: usize, format: Format) -> Result<String, CliError> {
    let (params, multiset) = theorem_witness(n as u64)?;
    let coefficient = if n <= ORACLE_LIMIT {
        let c = coefficient_oracle(n, &multiset)?;
        if !c.is_zero() {
            return Err(Error::Internal(format!("witness {:?} has coefficient {c}", multiset.as_slice())).into());
        }
        Some(c)
    } else {
        None
    };
    let out = WitnessOutput {
        params,
        permanent_support_ok: in_permanent_support(n, &multiset),
        congruence_ok: support_congruence_check(n, &multiset),
        predicate_ok: vanishing_predicate(n, &multiset),
        coefficient,
        multiset,
    };
    render(&out, format, || {
        let p = &out.params;
        let mut t = Table::new(vec![
            "N",
            "n",
            "m",
            "lambda",
            "mu",
            "m0",
            "m1",
            "a1",
            "a2",
            "a3",
            "multiset",
            "permanent_support_ok",
            "congruence_ok",
            "predicate_ok",
            "coefficient",
        ]);
        t.push(vec![
            p.big_n.to_string(),
            p.n.to_string(),
            p.m.to_string(),
            p.lambda.to_string(),
            p.mu.to_string(),
            p.m0.to_string(),
            p.m1.to_string(),
            p.a1.to_string(),
            p.a2.to_string(),
            p.a3.to_string(),
            joined(out.multiset.as_slice()),
            out.permanent_support_ok.to_string(),
            out.congruence_ok.to_string(),
            out.predicate_ok.to_string(),
            out.coefficient.as_ref().map(ToString::to_string).unwrap_or_default(),
        ]);
        t
    })
}

fn gt(a: &Action, format: Format, budget: u64) -> Result<String, CliError> {
    let report: GTReport = minimality_check_with_budget(&GroupAction::new(a.d, &a.alpha)?, budget)?;
    render(&report, format, || {
        let mut t = Table::new(vec![
            "d",
            "alpha",
            "mu",
            "togliatti_bound",
            "bound_satisfied",
            "wlp_witness_verified",
            "rank",
            "source_dim",
            "target_dim",
            "injective",
            "minimal",
            "missing",
        ]);
        let missing: Vec<String> = report.missing_monomials.iter().map(monomial).collect();
        t.push(vec![
            report.d.to_string(),
            joined(&report.alpha),
            report.mu.to_string(),
            report.togliatti_bound.to_string(),
            report.bound_satisfied.to_string(),
            report.wlp_witness_verified.to_string(),
            report.rank.to_string(),
            report.source_dim.to_string(),
            report.target_dim.to_string(),
            report.injective.to_string(),
            report.minimal.to_string(),
            missing.join(" "),
        ]);
        t
    })
}

fn scan(s: &ScanArgs, format: Format, budget: u64) -> Result<String, CliError> {
    match (s.theorem49, s.conjecture) {
        (Some(n_max), None) => {
            let rows = theorem49_scan(n_max, budget)?;
            render(&rows, format, || {
                let mut t = Table::new(vec!["n", "minimal", "prime_power", "consistent"]);
                for r in &rows {
                    t.push(vec![
                        r.n.to_string(),
                        r.minimal.to_string(),
                        r.prime_power.to_string(),
                        r.consistent.to_string(),
                    ]);
                }
                t
            })
        }
        (None, Some(d_max)) => {
            let rows = conjecture_scan(d_max, budget)?;
            render(&rows, format, || {
                let mut t = Table::new(vec!["d", "n", "m", "minimal", "missing_count"]);
                for r in &rows {
                    t.push(vec![
                        r.d.to_string(),
                        r.n.to_string(),
                        r.m.to_string(),
                        r.minimal.to_string(),
                        r.missing_count.to_string(),
                    ]);
                }
                t
            })
        }
        _ => Err(Error::InvalidInput("give either --theorem49 or --conjecture".into()).into()),
    }
}
