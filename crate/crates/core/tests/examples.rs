mod lyndon_basis {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lyndon_basis.rs"));
}

#[test]
fn lyndon_basis_example_runs() {
    lyndon_basis::run_example().expect("lyndon_basis example should run");
}

mod bch_formula {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bch_formula.rs"));
}

#[test]
fn bch_formula_example_runs() {
    bch_formula::run_example().expect("bch_formula example should run");
}

mod exp_group {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exp_group.rs"));
}

#[test]
fn exp_group_example_runs() {
    exp_group::run_example().expect("exp_group example should run");
}

mod bernoulli_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bernoulli_series.rs"));
}

#[test]
fn bernoulli_series_example_runs() {
    bernoulli_series::run_example().expect("bernoulli_series example should run");
}

mod bar_construction {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bar_construction.rs"));
}

#[test]
fn bar_construction_example_runs() {
    bar_construction::run_example().expect("bar_construction example should run");
}

mod cosimplicial_generators {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cosimplicial_generators.rs"));
}

#[test]
fn cosimplicial_generators_example_runs() {
    cosimplicial_generators::run_example().expect("cosimplicial_generators example should run");
}

mod realization_iso {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/realization_iso.rs"));
}

#[test]
fn realization_iso_example_runs() {
    realization_iso::run_example().expect("realization_iso example should run");
}
