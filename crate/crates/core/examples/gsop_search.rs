//! Seeded search for a homogeneous system of parameters, with its certificate.

use gradus::gsop::{certify_algebraic_independence, find_gsop, DEFAULT_MAX_TRIES};
use gradus::{ModulePresentation, Polynomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 1), ("z", 2)]);
    let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
    let m = ModulePresentation::cyclic(&r, &[x.mul(&y)?, x.mul(&z)?])?;

    for seed in [0, 1, 2] {
        let g = find_gsop(&m, seed, DEFAULT_MAX_TRIES)?;
        let elements: Vec<String> = g.elements.iter().map(|e| e.to_string()).collect();
        println!(
            "seed {seed}: [{}] degrees {:?} length(M/(y)M) = {} tries {} independent {}",
            elements.join(", "),
            g.degrees,
            g.certificate,
            g.tries,
            certify_algebraic_independence(&g.elements, &m)?
        );
    }
    Ok(())
}
