// ad_x / (e^{ad_x} - 1) applied to y, and its inverse.
//
// cargo run --example bernoulli_series

use lierealize::rational::{bernoulli_numbers, format_rational};
use lierealize::{bernoulli_operator, exp_difference_operator, FreeNilpotent, LieAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let numbers: Vec<String> = bernoulli_numbers(8).iter().map(format_rational).collect();
    println!("B_0..B_8: {}", numbers.join(", "));

    let alg = FreeNilpotent::new("xy", 5)?;
    let x = alg.generator("x").ok_or("no x")?;
    let y = alg.generator("y").ok_or("no y")?;
    let b = bernoulli_operator(&alg, &x, &y);
    println!("B(x) y = {}", alg.format(&b));
    let back = exp_difference_operator(&alg, &x, &b);
    println!("E(x) B(x) y = {}", alg.format(&back));
    if back != y {
        return Err("series inversion failed".into());
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
