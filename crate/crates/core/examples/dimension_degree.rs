//! Dimension and degree read off the Poincaré series, including shifts and the zero module.

use gradus::{dimension_and_degree, poincare, ModulePresentation, Polynomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 2)]);
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let cases = [
        ("R", ModulePresentation::free(&r, vec![0])),
        ("R(-3) + R(2)", ModulePresentation::free(&r, vec![3, -2])),
        ("R/(x^2)", ModulePresentation::cyclic(&r, &[x.pow(2)])?),
        ("R/(x^2, y)", ModulePresentation::cyclic(&r, &[x.pow(2), y.clone()])?),
        ("R/(x^2 y)(5)", ModulePresentation::cyclic(&r, &[x.pow(2).mul(&y)?])?.shift(5)),
        ("0", ModulePresentation::zero(&r)),
    ];
    for (name, m) in &cases {
        let rep = dimension_and_degree(&poincare(m));
        println!("{name:14} dim {:>4}  degree {}", rep.d1.to_string(), rep.degree);
    }
    Ok(())
}
