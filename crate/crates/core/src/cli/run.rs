use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::parse::{Command, CommandKind, ProblemFile};
use crate::decompose::{degree_sum_check, minimal_primes};
use crate::error::{Error, Result};
use crate::gsop::{find_gsop, module_dimension, DEFAULT_MAX_TRIES};
use crate::koszul::{build_koszul, koszul_homology};
use crate::ring::{format_rational, Ring};
use crate::samuel::{default_n_max, fit_and_multiplicity, samuel_table, DEFAULT_WINDOW};
use crate::series::{dimension_and_degree, poincare};
use crate::verify::{monomial_quotient, run_checks, Outcome, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub seed: u64,
    pub window_slack: i64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, window_slack: crate::koszul::DEFAULT_SLACK }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Field {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub line: usize,
    pub status: Status,
    pub fields: Vec<Field>,
    pub provenance: Vec<Field>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Default)]
struct Out {
    fields: Vec<Field>,
    provenance: Vec<Field>,
    failed: bool,
}

impl Out {
    fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push(Field { key: key.into(), value: value.to_string() });
    }

    fn prov(&mut self, key: &str, value: impl ToString) {
        self.provenance.push(Field { key: key.into(), value: value.to_string() });
    }
}

pub fn run(problem: &ProblemFile, opts: &RunOptions) -> Vec<Report> {
    problem.commands.iter().map(|c| run_command(problem, c, opts)).collect()
}

fn run_command(problem: &ProblemFile, cmd: &Command, opts: &RunOptions) -> Report {
    let start = Instant::now();
    let mut out = Out::default();
    let status = match execute(problem, &cmd.kind, opts, &mut out) {
        Ok(()) if out.failed => Status::Failed,
        Ok(()) => Status::Ok,
        Err(e) => {
            out.field("error", e);
            Status::Error
        }
    };
    Report {
        command: cmd.text.clone(),
        line: cmd.line,
        status,
        fields: out.fields,
        provenance: out.provenance,
        elapsed: start.elapsed(),
    }
}

fn ideal<'a>(problem: &'a ProblemFile, name: &str) -> &'a [crate::ring::Polynomial] {
    &problem.ideals[name]
}

fn execute(problem: &ProblemFile, kind: &CommandKind, opts: &RunOptions, out: &mut Out) -> Result<()> {
    let m = &problem.module;
    match kind {
        CommandKind::Hilbert => {
            let p = poincare(m);
            let lo = m.min_shift().unwrap_or(0);
            let dims: Vec<String> = p.dims(lo, lo + 9).iter().map(i64::to_string).collect();
            out.field("series", &p);
            out.field("dims", format!("{lo}: {}", dims.join(" ")));
        }
        CommandKind::Dim => out.field("dim", dimension_and_degree(&poincare(m)).d1),
        CommandKind::Degree => out.field("degree", format_rational(&dimension_and_degree(&poincare(m)).degree)),
        CommandKind::Gsop { seed } => {
            let seed = seed.unwrap_or(opts.seed);
            out.prov("seed", seed);
            let g = find_gsop(m, seed, DEFAULT_MAX_TRIES)?;
            let elements: Vec<String> = g.elements.iter().map(|e| e.to_string()).collect();
            let degrees: Vec<String> = g.degrees.iter().map(i64::to_string).collect();
            out.field("elements", format!("[{}]", elements.join(", ")));
            out.field("degrees", format!("[{}]", degrees.join(", ")));
            out.field("certificate", &g.certificate);
            out.prov("tries", g.tries);
        }
        CommandKind::Samuel { ideal: name, n_max } => {
            let d = module_dimension(m).finite().unwrap_or(0);
            let n_max = n_max.unwrap_or_else(|| default_n_max(d));
            out.prov("nmax", n_max);
            out.prov("window", DEFAULT_WINDOW);
            let table = samuel_table(m, ideal(problem, name), n_max)?;
            let rows: Vec<String> = table.iter().map(|(n, l)| format!("{n}:{l}")).collect();
            out.field("table", rows.join(" "));
            let fit = fit_and_multiplicity(&table, d, DEFAULT_WINDOW)?;
            out.field("fitted_degree", fit.fitted_degree);
            out.field("e", &fit.leading_delta);
            out.field("polynomial", render_in_n(&fit.polynomial));
        }
        CommandKind::Koszul { xs } => {
            let k = build_koszul(m, ideal(problem, xs))?;
            let rep = koszul_homology(&k, opts.window_slack)?;
            let totals: Vec<String> = rep.totals.iter().map(u64::to_string).collect();
            let mut nonzero = Vec::new();
            for (j, d) in &rep.degrees {
                for (p, &h) in d.homology_dims.iter().enumerate() {
                    if h > 0 {
                        nonzero.push(format!("H{p}[{j}]={h}"));
                    }
                }
            }
            out.field("totals", totals.join(" "));
            out.field("homology", if nonzero.is_empty() { "0".to_string() } else { nonzero.join(" ") });
            out.field("chi", rep.chi);
            out.field("chi_series", &rep.chi_series);
            out.field("regular", rep.is_regular_sequence());
            out.prov("window", format!("{}..{}", rep.degree_window.0, rep.degree_window.1));
            out.prov("slack", rep.slack);
            out.prov("retries", rep.retries);
        }
        CommandKind::Decompose => {
            let ideal = monomial_quotient(m)
                .ok_or_else(|| Error::NotMonomial("module is not a cyclic monomial quotient".into()))?;
            let primes = minimal_primes(&ideal)?;
            out.field("minimal_primes", render_primes(&problem.ring, &primes));
            let rep = degree_sum_check(&problem.ring, &ideal)?;
            let terms: Vec<String> = rep
                .top_primes
                .iter()
                .map(|c| {
                    format!(
                        "{}:{}*{}",
                        render_primes(&problem.ring, std::slice::from_ref(&c.vars)),
                        c.local_length,
                        format_rational(&c.quotient_degree)
                    )
                })
                .collect();
            out.field("top_components", terms.join(" "));
            out.field("degree_sum", format!("{} = {}", format_rational(&rep.lhs), format_rational(&rep.rhs)));
            out.failed = !rep.holds();
        }
        CommandKind::Verify(scope) => {
            let vo = VerifyOptions { seed: opts.seed, max_tries: DEFAULT_MAX_TRIES, window_slack: opts.window_slack };
            out.prov("seed", vo.seed);
            out.prov("slack", vo.window_slack);
            for c in run_checks(m, *scope, &vo) {
                out.failed |= c.outcome == Outcome::Fail;
                out.field(c.name, &c);
            }
        }
    }
    Ok(())
}

fn render_primes(ring: &Ring, primes: &[Vec<usize>]) -> String {
    primes
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|&v| ring.vars()[v].as_str()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `c_k n^k + ... + c_0`, highest degree first.
pub fn render_in_n(coeffs: &[BigRational]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = format_rational(&c.abs());
        let body = match k {
            0 => abs,
            1 => format!("{abs}*n"),
            _ => format!("{abs}*n^{k}"),
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{sign} {body}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

pub fn render_tsv(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        let status = match r.status {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Error => "error",
        };
        for f in r.fields.iter().chain(&r.provenance) {
            s.push_str(&format!("{}\t{}\t{}\n", r.command, f.key, f.value));
        }
        s.push_str(&format!("{}\tstatus\t{status}\n", r.command));
    }
    s
}

pub fn render_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

/// 0 iff no command errored and no verification failed.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().all(|r| r.status == Status::Ok) {
        0
    } else {
        1
    }
}
