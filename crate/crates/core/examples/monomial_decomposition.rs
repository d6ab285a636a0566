//! Minimal primes of a monomial ideal and the degree and multiplicity sum formulas.

use gradus::decompose::{degree_sum_check, minimal_primes, multiplicity_sum_check, MonomialIdeal};
use gradus::gsop::{find_gsop, DEFAULT_MAX_TRIES};
use gradus::ring::format_rational;
use gradus::{ModulePresentation, Monomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 2), ("z", 1)]);
    let ideal = MonomialIdeal::new(3, vec![Monomial::new(vec![2, 1, 0]), Monomial::new(vec![0, 0, 3]), Monomial::new(vec![1, 0, 1])]);
    println!("minimal primes: {:?}", minimal_primes(&ideal)?);

    let deg = degree_sum_check(&r, &ideal)?;
    for c in &deg.top_primes {
        println!("  p = {:?}: length {} deg(R/p) {}", c.vars, c.local_length, format_rational(&c.quotient_degree));
    }
    println!("degree {} = {}", format_rational(&deg.lhs), format_rational(&deg.rhs));

    let m = ModulePresentation::cyclic(&r, &ideal.to_polynomials(&r))?;
    let gsop = find_gsop(&m, 0, DEFAULT_MAX_TRIES)?;
    let mult = multiplicity_sum_check(&r, &ideal, &gsop.elements)?;
    println!("multiplicity {} = {} ({})", mult.lhs, mult.rhs, if mult.holds() { "holds" } else { "fails" });
    Ok(())
}
