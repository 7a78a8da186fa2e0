// Polarizations, Dixmier ideals and the relation checks on nilpotent
// and solvable algebras.

use liechain::enveloping::Enveloping;
use liechain::lie::catalog_algebra;
use liechain::orbit::{certified_level, check_relation, dixmier_ideal, FlagOrder, Relation, Truncation};
use liechain::scalar::int;

pub fn run() -> liechain::Result<()> {
    let g = catalog_algebra("heisenberg3")?;
    let env = Enveloping::new(g.clone());
    let f = vec![int(0), int(0), int(1)];

    let dix = dixmier_ideal(&env, &f, 1, certified_level(&g, 1), true, FlagOrder::default())?;
    println!("polarization of f(z)=1: {}", g.format_subspace(&dix.polarization.h));
    println!(
        "I(f) ∩ U_<=1 = {:?} (certified: {})",
        dix.ideal.format(&env),
        dix.ideal.certified
    );

    let checks = [
        Relation::TensNil {
            f: f.clone(),
            f2: vec![int(1), int(0), int(2)],
        },
        Relation::Antipode {
            f: vec![int(1), int(-1), int(3)],
        },
    ];
    for rel in &checks {
        let trunc = Truncation {
            d: 2,
            level: rel.required_level(&g, 2),
        };
        let report = check_relation(&env, rel, trunc, true, FlagOrder::default())?;
        println!(
            "{} {}: holds {} certified {}",
            report.kind, report.instance, report.holds, report.certified
        );
    }

    let aff1 = catalog_algebra("aff1")?;
    let env = Enveloping::new(aff1.clone());
    let rel = Relation::IndResTw {
        f: vec![int(1), int(2)],
        f2: vec![int(-1), int(1)],
    };
    let trunc = Truncation {
        d: 2,
        level: rel.required_level(&aff1, 2),
    };
    let report = check_relation(&env, &rel, trunc, true, FlagOrder::default())?;
    println!(
        "{} {}: holds {} with twist {}",
        report.kind,
        report.instance,
        report.holds,
        report.lambda.as_deref().unwrap_or("-")
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
