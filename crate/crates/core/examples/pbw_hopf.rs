// PBW normal forms and the Hopf structure of U(sl2).

use liechain::enveloping::Enveloping;
use liechain::lie::catalog_algebra;

pub fn run() -> liechain::Result<()> {
    let env = Enveloping::new(catalog_algebra("sl2")?);

    // e·f is already ordered, f·e is not
    let fe = env.parse("f e")?;
    println!("f e      = {}", env.format(&fe));
    let h = env.generator(1);
    let hhh = env.pow(&h, 3);
    println!("h^3      = {}", env.format(&hhh));

    let u = env.parse("e*f + 1/2*h")?;
    let s = env.antipode(&u);
    println!("S(u)     = {}", env.format(&s));
    assert_eq!(env.antipode(&s), u);

    let delta = env.coproduct(&u);
    println!("Δ(u) has {} tensor terms", delta.len());
    // m ∘ (S ⊗ id) ∘ Δ = ε
    let lhs = env.mul_antipode_left(&delta);
    assert_eq!(lhs, env.one().scale(&env.counit(&u)));
    println!("antipode axiom holds, ε(u) = {}", env.counit(&u));

    for d in 0..=3 {
        println!("dim U_<={d}(sl2) = {}", env.filtration_basis(d).len());
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
