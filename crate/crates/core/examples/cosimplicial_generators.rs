// Cofaces and codegeneracies on the generators a_{i0...ik}.
//
// cargo run --example cosimplicial_generators

use lierealize::realization::{
    check_cosimplicial_identities, codegeneracy, coface, GeneratorSymbol,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g: GeneratorSymbol = "a_{0 2}@2".parse()?;
    for i in 0..=3 {
        println!("delta^{i} {g} = {}", coface(i, &g)?);
    }
    for i in 0..=1 {
        println!("sigma^{i} {g} = {}", codegeneracy(i, &g)?);
    }
    println!("generators in ambient 3: {}", GeneratorSymbol::all(3).len());

    let report = check_cosimplicial_identities(5);
    println!(
        "cosimplicial identities up to ambient 5: {} checked, {} violations",
        report.checked,
        report.violations.len()
    );
    if !report.passed() {
        return Err("cosimplicial identities failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
