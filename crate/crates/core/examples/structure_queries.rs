// Center, series, nilradical and the half-trace character on catalog algebras.

use liechain::lie::{catalog_algebra, center, nilradical, series, theta, LieAlgebra, SeriesKind, CATALOG};
use liechain::linalg::{unit_vec, VecSpace};
use liechain::scalar::format_scalar;

pub fn run() -> liechain::Result<()> {
    for entry in CATALOG {
        let name = entry.name.replace("(n)", "(2)");
        let g = catalog_algebra(&name)?;
        let lower = series(&g, SeriesKind::LowerCentral);
        let derived = series(&g, SeriesKind::Derived);
        println!(
            "{:<12} dim {}  center {}  lower central length {}  derived length {}",
            g.name(),
            g.dim(),
            g.format_subspace(&center(&g)),
            lower.len() - 1,
            derived.len() - 1,
        );
        if let Ok(n) = nilradical(&g) {
            println!("{:<12} nilradical {}", "", g.format_subspace(&n));
        }
    }

    // θ for h = span{a} inside aff1 is a ↦ 1/2
    let aff1 = catalog_algebra("aff1")?;
    let h = VecSpace::span(2, [unit_vec(2, 0)]);
    let th: Vec<String> = theta(&aff1, &h)?.iter().map(format_scalar).collect();
    println!("theta(aff1, span{{a}}) = ({})", th.join(", "));

    let text = catalog_algebra("oscillator")?.to_json_string();
    let back = LieAlgebra::from_json_str(&text)?;
    assert_eq!(back, catalog_algebra("oscillator")?);
    println!("oscillator JSON round trip ok ({} bytes)", text.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
