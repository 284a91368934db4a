// The universal BCH series and its check against log(exp(x) exp(y)).
//
// cargo run --example bch_formula

use lierealize::{assoc_oracle, universal_bch, FreeLieContext};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for cap in 1..=4 {
        let table = universal_bch(cap);
        println!("cap {cap}: {}", table.element());
    }

    let table = universal_bch(5);
    println!("weight 4 and 5 coefficients:");
    let alphabet = table.element().context().alphabet().clone();
    for (word, c) in table.coefficients().filter(|(w, _)| w.weight() >= 4) {
        println!("  {:<28} {}", word.bracketing(&alphabet), c);
    }

    let ctx = FreeLieContext::from_letters("xy", 5)?;
    let oracle = assoc_oracle(&ctx.generator("x")?, &ctx.generator("y")?)?;
    if oracle != *table.element() {
        return Err("BCH table disagrees with log(exp(x) exp(y))".into());
    }
    println!("cap 5 table matches the associative computation");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
