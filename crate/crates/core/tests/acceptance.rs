//! Acceptance suite: one line per criterion, exact comparisons only.
//!
//! Runs as a plain binary so the summary lines always reach the terminal;
//! exits nonzero when any criterion fails.

mod common;

use std::time::Instant;

use gradus::decompose::{degree_sum_check, multiplicity_sum_check, MonomialIdeal};
use gradus::gsop::{find_gsop, GsopResult, DEFAULT_MAX_TRIES};
use gradus::koszul::{build_koszul, koszul_homology, DEFAULT_SLACK};
use gradus::ring::{Polynomial, RingDescriptor};
use gradus::samuel::{multiplicity_additivity_check, samuel_multiplicity, samuel_table};
use gradus::series::{dimension_and_degree, poincare, Dimension, LaurentPoly};
use gradus::verify::{self, Check, Outcome, VerifyOptions};
use gradus::{LengthValue, ModulePresentation};
use num_bigint::BigInt;
use num_rational::BigRational;

const WINDOW: i64 = 15;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcomes + 'a>);

struct Outcomes {
    cases: usize,
    failures: Vec<String>,
}

impl Outcomes {
    fn new() -> Self {
        Outcomes { cases: 0, failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check(&mut self, label: &str, c: &Check) {
        self.expect(c.outcome == Outcome::Pass, || format!("{label}: {} {c}", c.name));
    }
}

struct Prepared {
    module: ModulePresentation,
    gsop: GsopResult,
}

fn prepare() -> Vec<Prepared> {
    common::corpus()
        .into_iter()
        .enumerate()
        .map(|(i, module)| {
            assert!(!module.is_zero(), "corpus module {i} is zero");
            let gsop = find_gsop(&module, i as u64, DEFAULT_MAX_TRIES).expect("system of parameters");
            Prepared { module, gsop }
        })
        .collect()
}

fn opts(i: usize) -> VerifyOptions {
    VerifyOptions { seed: i as u64, ..VerifyOptions::default() }
}

fn hilbert_serre_oracle(corpus: &[Prepared]) -> Outcomes {
    let mut o = Outcomes::new();
    for (i, p) in corpus.iter().enumerate() {
        let lo = p.module.min_shift().unwrap() - 1;
        let hi = lo + WINDOW - 1;
        let series = poincare(&p.module).dims(lo, hi);
        for (k, j) in (lo..=hi).enumerate() {
            let oracle = p.module.component_basis(j).dim as i64;
            o.expect(series[k] == oracle, || format!("module {i} degree {j}: series {} oracle {oracle}", series[k]));
        }
    }
    o
}

fn smoke(corpus: &[Prepared]) -> Outcomes {
    let mut o = Outcomes::new();
    for (i, p) in corpus.iter().enumerate() {
        o.check(&format!("module {i}"), &verify::smoke(&p.module, &p.gsop));
    }
    o
}

fn koszul_equals_samuel(corpus: &[Prepared]) -> Outcomes {
    let mut o = Outcomes::new();
    for (i, p) in corpus.iter().enumerate() {
        o.check(&format!("module {i}"), &verify::koszul_samuel(&p.module, &p.gsop, DEFAULT_SLACK));
    }
    o
}

fn main_theorem(corpus: &[Prepared]) -> Outcomes {
    let mut o = Outcomes::new();
    for (i, p) in corpus.iter().enumerate() {
        let mut systems = vec![p.gsop.clone()];
        match verify::second_gsop(&p.module, &p.gsop, &opts(i)) {
            Some(g) => {
                o.expect(g.elements != p.gsop.elements, || format!("module {i}: second system equals the first"));
                o.expect(g.certificate.is_finite(), || format!("module {i}: second system is not a parameter system"));
                systems.push(g);
            }
            // the empty sequence is the only system of parameters in dimension 0
            None => o.expect(p.gsop.elements.is_empty(), || format!("module {i}: no second system")),
        }
        o.check(&format!("module {i}"), &verify::main_theorem(&p.module, &systems));
    }
    o
}

fn euler_poincare(corpus: &[Prepared]) -> Outcomes {
    let mut o = Outcomes::new();
    for (i, p) in corpus.iter().enumerate() {
        o.check(&format!("module {i}"), &verify::euler_poincare(&p.module, &p.gsop, DEFAULT_SLACK));
    }
    o
}

fn sum_decompositions() -> Outcomes {
    let mut o = Outcomes::new();
    for (i, (ring, gens)) in common::monomial_instances(50, 7).into_iter().enumerate() {
        let ideal = MonomialIdeal::new(ring.nvars(), gens);
        let deg = degree_sum_check(&ring, &ideal).expect("degree sum");
        o.expect(deg.holds(), || format!("instance {i}: degree {} vs {}", deg.lhs, deg.rhs));
        let m = ModulePresentation::cyclic(&ring, &ideal.to_polynomials(&ring)).unwrap();
        let gsop = find_gsop(&m, i as u64, DEFAULT_MAX_TRIES).expect("system of parameters");
        let mult = multiplicity_sum_check(&ring, &ideal, &gsop.elements).expect("multiplicity sum");
        o.expect(mult.holds(), || format!("instance {i}: multiplicity {} vs {}", mult.lhs, mult.rhs));
    }
    o
}

fn micro_examples() -> Outcomes {
    let mut o = Outcomes::new();
    let r = RingDescriptor::rational(&[("x", 1), ("y", 2)]);
    let x = Polynomial::var(&r, 0);
    let y = Polynomial::var(&r, 1);
    let m = ModulePresentation::cyclic(&r, &[x.pow(2)]).unwrap();

    let p = poincare(&m);
    let oracle: Vec<i64> = (0..WINDOW).map(|j| m.component_basis(j).dim as i64).collect();
    o.expect(oracle == vec![1; WINDOW as usize], || format!("oracle dims {oracle:?}"));
    o.expect(p.dims(0, WINDOW - 1) == oracle, || "series disagrees with the oracle".into());
    let one_over = gradus::RationalSeries::new(LaurentPoly::one(), vec![1]);
    o.expect(p.same_series(&one_over), || format!("P = {p}"));

    let rep = dimension_and_degree(&p);
    o.expect(rep.d1 == Dimension::Finite(1), || format!("D = {}", rep.d1));
    o.expect(rep.degree == BigRational::from_integer(1.into()), || format!("deg = {}", rep.degree));

    let table = samuel_table(&m, std::slice::from_ref(&y), 4).unwrap();
    let oracle_table: Vec<(u32, u64)> = (1..=4u32)
        .map(|n| {
            let q = m.quotient_by_ideal(std::slice::from_ref(&y), n).unwrap();
            let total: usize = (0..=4 * n as i64 + 2).map(|j| q.component_basis(j).dim).sum();
            (n, total as u64)
        })
        .collect();
    o.expect(table == vec![(1, 2), (2, 4), (3, 6), (4, 8)], || format!("table {table:?}"));
    o.expect(table == oracle_table, || format!("oracle table {oracle_table:?}"));

    let fit = samuel_multiplicity(&m, std::slice::from_ref(&y), 1, None).unwrap();
    o.expect(fit.leading_delta == BigInt::from(2), || format!("e = {}", fit.leading_delta));

    let k = koszul_homology(&build_koszul(&m, std::slice::from_ref(&y)).unwrap(), DEFAULT_SLACK).unwrap();
    o.expect(k.chi == 2, || format!("chi = {}", k.chi));
    o.expect(k.chi_series == LaurentPoly::from_integers(&[(0, 1), (1, 1)]), || format!("chi(t) = {}", k.chi_series));

    let ideal = MonomialIdeal::new(2, vec![gradus::Monomial::new(vec![2, 0])]);
    let d = degree_sum_check(&r, &ideal).unwrap();
    o.expect(d.holds() && d.lhs == BigRational::from_integer(1.into()), || format!("degree sum {} vs {}", d.lhs, d.rhs));
    let c = &d.top_primes;
    o.expect(
        c.len() == 1 && c[0].local_length == 2 && c[0].quotient_degree == BigRational::new(1.into(), 2.into()),
        || format!("components {c:?}"),
    );
    o
}

fn structural(corpus: &[Prepared]) -> Outcomes {
    let mut o = Outcomes::new();
    for (i, p) in corpus.iter().enumerate() {
        let m = &p.module;
        let mut padded = p.gsop.elements.clone();
        padded.push(Polynomial::var(m.ring(), 0));
        for xs in [&p.gsop.elements, &padded] {
            let rep = koszul_homology(&build_koszul(m, xs).unwrap(), DEFAULT_SLACK).unwrap();
            o.expect(rep.boundary_squared_zero(), || format!("module {i}: boundary squared nonzero"));
            o.expect(rep.per_degree_euler_matches(), || format!("module {i}: per-degree Euler mismatch"));
        }

        let base = dimension_and_degree(&poincare(m));
        let quotient = m.quotient_by_ideal(&p.gsop.elements, 1).unwrap();
        let length = quotient.total_length(2);
        let d = base.d1.finite().unwrap();
        let fit = samuel_multiplicity(m, &p.gsop.elements, d, None).unwrap();
        for s in [-2, 3] {
            let sm = m.shift(s);
            let rep = dimension_and_degree(&poincare(&sm));
            o.expect(rep.d1 == base.d1 && rep.degree == base.degree, || format!("module {i}: shift {s} changes dim/degree"));
            o.expect(poincare(&sm).same_series(&poincare(m).scale_by_t_power(-s)), || {
                format!("module {i}: shift {s} series")
            });
            o.expect(quotient.shift(s).total_length(2) == length, || format!("module {i}: shift {s} length"));
            let sfit = samuel_multiplicity(&sm, &p.gsop.elements, d, None).unwrap();
            o.expect(sfit.polynomial == fit.polynomial, || format!("module {i}: shift {s} samuel polynomial"));
        }

        let doubled = m.direct_sum(&m.shift(1)).unwrap();
        let sum_series = poincare(m).add(&poincare(&m.shift(1)));
        o.expect(poincare(&doubled).same_series(&sum_series), || format!("module {i}: series not additive"));
        let q2 = quotient.direct_sum(&quotient.shift(2)).unwrap();
        let LengthValue::Finite(l) = length else {
            o.expect(false, || format!("module {i}: parameter quotient has infinite length"));
            continue;
        };
        o.expect(q2.total_length(2) == LengthValue::Finite(2 * l), || format!("module {i}: length not additive"));
        let smaller = match p.gsop.elements.first() {
            Some(y) => m.quotient_by_ideal(std::slice::from_ref(y), 1).unwrap(),
            None => m.clone(),
        };
        let add = multiplicity_additivity_check(m, &smaller, &p.gsop.elements).unwrap();
        o.expect(add.holds(), || format!("module {i}: e not additive: {} vs {} + {}", add.sum, add.left, add.right));
    }
    o
}

fn main() {
    let start = Instant::now();
    let corpus = prepare();
    let criteria: Vec<Criterion> = vec![
        ("1 hilbert-serre oracle equivalence", Box::new(|| hilbert_serre_oracle(&corpus))),
        ("2 smoke identity d1 = s1 = samuel degree", Box::new(|| smoke(&corpus))),
        ("3 koszul multiplicity = samuel multiplicity", Box::new(|| koszul_equals_samuel(&corpus))),
        ("4 degree = e / product of parameter degrees", Box::new(|| main_theorem(&corpus))),
        ("5 euler-poincare series identity", Box::new(|| euler_poincare(&corpus))),
        ("6 degree and multiplicity sum decompositions", Box::new(sum_decompositions)),
        ("7 worked micro-examples", Box::new(micro_examples)),
        ("8 structural suite", Box::new(|| structural(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        let o = run();
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("[{verdict}] criterion {name}: {} checks, {} failed ({:.1}s)", o.cases, o.failures.len(), t.elapsed().as_secs_f64());
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
        if !o.failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
