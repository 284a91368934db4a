// Bar construction of a BCH group and the simplicial identity checker.
//
// cargo run --example bar_construction

use lierealize::sample::seeded_rng;
use lierealize::{
    bar_degeneracy, bar_face, check_simplicial_identities, BarConstruction, BarSimplex,
    ExpGroup, FreeNilpotent, LieAlgebra,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = FreeNilpotent::new("xy", 3)?;
    let group = ExpGroup::new(&alg);
    let x = alg.generator("x").ok_or("no x")?;
    let y = alg.generator("y").ok_or("no y")?;

    let s = BarSimplex::new(vec![x.clone(), y.clone(), x.clone()]);
    for i in 0..=3 {
        let d = bar_face(&group, i, &s)?;
        let shown: Vec<String> = d.entries.iter().map(|e| alg.format(e)).collect();
        println!("d_{i}[x | y | x] = [{}]", shown.join(" | "));
    }
    let s1 = bar_degeneracy(&group, 1, &s)?;
    println!("s_1 inserts the identity: {} entries", s1.dimension());

    let mut rng = seeded_rng(7);
    let samples: Vec<_> = (0..=4)
        .flat_map(|n| (0..10).map(move |_| n))
        .map(|n| BarSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect()))
        .collect();
    let report = check_simplicial_identities(&BarConstruction::new(group), &samples, 4);
    print!("{}", report.to_text());
    if !report.passed() {
        return Err("simplicial identities failed".into());
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
