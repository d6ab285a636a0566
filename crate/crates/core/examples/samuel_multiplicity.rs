//! Samuel length table, fitted polynomial and multiplicity for a parameter ideal.

use gradus::samuel::{samuel_multiplicity, samuel_table};
use gradus::{ModulePresentation, Polynomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 1)]);
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let m = ModulePresentation::cyclic(&r, &[x.mul(&y)?])?;

    for (name, ideal) in [("(x, y)", vec![x.clone(), y.clone()]), ("(x + y)", vec![x.add(&y)?]), ("(x^2 + y^2)", vec![x.pow(2).add(&y.pow(2))?])] {
        let table = samuel_table(&m, &ideal, 7)?;
        let fit = samuel_multiplicity(&m, &ideal, 1, Some(7))?;
        let values: Vec<String> = table.iter().map(|(n, l)| format!("{n}:{l}")).collect();
        println!("I = {name:12} lengths {}  e = {}", values.join(" "), fit.leading_delta);
    }
    Ok(())
}
