// Weak containment through truncated kernels, and matrix-coefficient
// annihilators of finite-dimensional representations.

use liechain::enveloping::Enveloping;
use liechain::lie::catalog_algebra;
use liechain::rep::{kernel_truncated, matrix_coefficients_perp, weakly_contains, MatrixRep, ModuleHandle};
use liechain::scalar::int;

pub fn run() -> liechain::Result<()> {
    let g = catalog_algebra("abelian(1)")?;
    let env = Enveloping::new(g.clone());
    let chi = |c: i64| MatrixRep::character(&g, &[int(c)]);

    // χ_1 ⊕ χ_2 weakly contains each summand but not χ_3
    let sum: ModuleHandle = ModuleHandle::direct_sum(vec![chi(1)?.into(), chi(2)?.into()])?;
    for c in [1, 2, 3] {
        let wc = weakly_contains(&env, &chi(c)?, &sum, 2, true)?;
        println!("chi_{c} weakly contained in chi_1 + chi_2: {}", wc.holds);
    }
    let k = kernel_truncated(&env, &sum, 2, true)?;
    println!("ker(chi_1 + chi_2) at degree 2: {:?}", k.format(&env));

    let sl2 = catalog_algebra("sl2")?;
    let env = Enveloping::new(sl2);
    for k in 1..=3 {
        let rho = MatrixRep::sl2_irreducible(k);
        let kernel = kernel_truncated(&env, &rho, 2, true)?;
        let perp = matrix_coefficients_perp(&env, &rho, 2);
        assert!(kernel.same_space(&perp));
        println!(
            "sl2 irrep of dim {}: kernel at degree 2 has dim {}",
            rho.dim(),
            kernel.dim()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
