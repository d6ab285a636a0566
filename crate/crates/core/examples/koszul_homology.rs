//! Graded Koszul homology of regular and non-regular sequences.

use gradus::koszul::{build_koszul, koszul_homology, DEFAULT_SLACK};
use gradus::{ModulePresentation, Polynomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 1)]);
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let m = ModulePresentation::cyclic(&r, &[x.mul(&y)?])?;

    for (name, xs) in [("x + y", vec![x.add(&y)?]), ("x, y", vec![x.clone(), y.clone()])] {
        let rep = koszul_homology(&build_koszul(&m, &xs)?, DEFAULT_SLACK)?;
        println!("sequence ({name}): regular {}  chi {}  chi(t) = {}", rep.is_regular_sequence(), rep.chi, rep.chi_series);
        for (j, d) in &rep.degrees {
            if d.homology_dims.iter().any(|&h| h > 0) {
                println!("  degree {j}: K dims {:?}  H dims {:?}", d.complex_dims, d.homology_dims);
            }
        }
    }
    Ok(())
}
