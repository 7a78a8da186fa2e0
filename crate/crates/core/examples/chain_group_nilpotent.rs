// Chain presentation of the Heisenberg algebra from checked tensor and
// antipode relations; the abelianization matches the central characters.

use liechain::chain::{build_fixture, can_check};

pub fn run() -> liechain::Result<()> {
    let p = build_fixture("h3-tensnil")?;
    println!("{} generators, {} relations", p.num_generators(), p.relations().len());
    for r in p.relations() {
        println!("  {r}");
    }
    println!("abelianization: {}", p.abelian_invariants());
    let can = can_check(&p)?;
    println!("character image: {} ; isomorphic: {}", can.image, can.isomorphic);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
