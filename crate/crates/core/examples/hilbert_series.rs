//! Poincaré series of a weighted quotient, checked against direct dimension counts.

use gradus::{poincare, ModulePresentation, Polynomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 2), ("z", 3)]);
    let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
    let ideal = [x.pow(2).mul(&y)?.sub(&x.mul(&z)?)?, y.pow(3)];
    let m = ModulePresentation::cyclic(&r, &ideal)?;

    let p = poincare(&m);
    println!("P(t) = {p}");
    for (j, d) in (0..12).zip(p.dims(0, 11)) {
        println!("  degree {j:2}: series {d:3}  row reduction {:3}", m.component_basis(j).dim);
    }
    Ok(())
}
