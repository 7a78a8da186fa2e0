// δ-shifted chain presentations for A1 and A2 weight grids, next to the
// Weyl coinvariants of the weight lattice.

use liechain::chain::{build_fixture, can_check, weyl_coinvariants, Coefficients};
use liechain::highest_weight::{root_system, RootType};

pub fn run() -> liechain::Result<()> {
    for (name, ty) in [("a1-delta-grid", RootType::A1), ("a2-delta-grid", RootType::A2)] {
        let p = build_fixture(name)?;
        let rs = root_system(ty)?;
        println!(
            "{name}: {} classes, {} relations, abelianization {}",
            p.num_generators(),
            p.relations().len(),
            p.abelian_invariants()
        );
        println!(
            "  Weyl coinvariants: lattice {}, rational {}",
            weyl_coinvariants(Coefficients::Lattice, &rs),
            weyl_coinvariants(Coefficients::Rational, &rs)
        );
        let can = can_check(&p)?;
        println!(
            "  central characters: image {} ; isomorphic {}",
            can.image, can.isomorphic
        );
    }
    let contrast = build_fixture("a1-lattice-additive")?;
    println!("unshifted additive contrast: {}", contrast.abelian_invariants());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
