//! Every example runs to completion.

mod pbw_hopf {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pbw_hopf.rs"));
}

mod structure_queries {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/structure_queries.rs"));
}

mod weak_containment {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/weak_containment.rs"));
}

mod dixmier_ideals {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dixmier_ideals.rs"));
}

mod verma_modules {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verma_modules.rs"));
}

mod chain_group_nilpotent {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/chain_group_nilpotent.rs"
    ));
}

mod chain_group_semisimple {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/chain_group_semisimple.rs"
    ));
}

mod faithful_shift_module {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/faithful_shift_module.rs"
    ));
}

#[test]
fn pbw_hopf_runs() {
    pbw_hopf::run().unwrap();
}

#[test]
fn structure_queries_runs() {
    structure_queries::run().unwrap();
}

#[test]
fn weak_containment_runs() {
    weak_containment::run().unwrap();
}

#[test]
fn dixmier_ideals_runs() {
    dixmier_ideals::run().unwrap();
}

#[test]
fn verma_modules_runs() {
    verma_modules::run().unwrap();
}

#[test]
fn chain_group_nilpotent_runs() {
    chain_group_nilpotent::run().unwrap();
}

#[test]
fn chain_group_semisimple_runs() {
    chain_group_semisimple::run().unwrap();
}

#[test]
fn faithful_shift_module_runs() {
    faithful_shift_module::run().unwrap();
}
