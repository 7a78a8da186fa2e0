// The shift module of aff1: `a` multiplies polynomials in t by t and `b`
// shifts p(t) to p(t - 1). Its truncated kernels vanish.

use liechain::chain::build_fixture;
use liechain::enveloping::Enveloping;
use liechain::lie::catalog_algebra;
use liechain::rep::{kernel_truncated, ShiftModule};
use liechain::scalar::{format_scalar, int};

pub fn run() -> liechain::Result<()> {
    let g = catalog_algebra("aff1")?;
    let env = Enveloping::new(g.clone());
    for d in 1..=2u32 {
        let m = ShiftModule::new(d as usize * (g.dim() + 1));
        let k = kernel_truncated(&env, &m, d, true)?;
        println!("kernel at degree {d}: dim {} (certified: {})", k.dim(), k.certified);
    }

    let p = vec![int(1), int(2), int(3)];
    let shifted: Vec<String> = ShiftModule::shift(&p).iter().map(format_scalar).collect();
    println!("p(t) = 1 + 2t + 3t^2 shifts to ({})", shifted.join(", "));
    println!(
        "simplicity probe reaches the constants: {}",
        ShiftModule::simplicity_probe(&p)
    );

    let chain = build_fixture("aff1-shift")?;
    println!(
        "merged chain presentation: {} generator(s), group {}",
        chain.num_generators(),
        chain.abelian_invariants()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
