//! Every identity check on one module, as the `verify` command runs them.

use gradus::verify::{run_checks, Scope, VerifyOptions};
use gradus::{ModulePresentation, Polynomial, RingDescriptor};

fn main() -> gradus::Result<()> {
    let r = RingDescriptor::rational(&[("x", 1), ("y", 2), ("z", 3)]);
    let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
    let m = ModulePresentation::new(
        &r,
        vec![0, 1],
        vec![vec![x.pow(3), y.clone()], vec![z.clone(), x.pow(2)]],
    )?;
    for check in run_checks(&m, Scope::All, &VerifyOptions::default()) {
        println!("{:16} {check}", check.name);
    }
    Ok(())
}
