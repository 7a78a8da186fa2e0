// Verma modules, Casimir values, simple quotients and highest-weight
// vectors in tensor products for A1 and A2.

use liechain::highest_weight::{central_character_hc, root_system, simple_quotient, tensor_hw_vector, RootType};
use liechain::scalar::{format_scalar, int};

pub fn run() -> liechain::Result<()> {
    let a1 = root_system(RootType::A1)?;
    for l in -3..=3 {
        let c = central_character_hc(&a1, &[int(l)])?;
        println!("A1 lambda={l:>2}: Casimir {}", format_scalar(&c));
    }

    let a2 = root_system(RootType::A2)?;
    println!("|W(A2)| = {}", a2.weyl.len());
    for lambda in [[1, 1], [2, 1], [1, 2], [2, 2], [3, 1]] {
        let lambda = lambda.map(int);
        let rep = simple_quotient(&a2, &lambda)?;
        println!(
            "A2 simple quotient for lambda=({}, {}): dim {}",
            lambda[0],
            lambda[1],
            rep.dim()
        );
    }

    let wit = tensor_hw_vector(&a2, &[int(2), int(1)], &[int(1), int(3)], 1)?;
    let w: Vec<String> = wit.weight.iter().map(format_scalar).collect();
    let p: Vec<String> = wit.relation.product.iter().map(format_scalar).collect();
    println!(
        "top vector of M(2,1) ⊗ M(1,3): weight ({}), killed by all e: {}, product weight ({})",
        w.join(", "),
        wit.annihilated,
        p.join(", ")
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
