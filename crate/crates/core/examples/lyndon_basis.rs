// Lyndon basis of a truncated free Lie algebra and a few brackets in it.
//
// cargo run --example lyndon_basis

use lierealize::{lyndon_words, Alphabet, FreeLieContext};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alphabet = Alphabet::from_chars("xyz")?;
    let words = lyndon_words(&alphabet, 4);
    for weight in 1..=4 {
        let of_weight: Vec<String> = words
            .iter()
            .filter(|w| w.weight() == weight)
            .map(|w| w.bracketing(&alphabet))
            .collect();
        println!("weight {weight}: {} elements", of_weight.len());
        println!("  {}", of_weight.join("  "));
    }

    let ctx = FreeLieContext::from_letters("xy", 4)?;
    let x = ctx.generator("x")?;
    let y = ctx.generator("y")?;
    let xy = x.bracket(&y)?;
    // [[x,y],x] is not a basis bracketing; it is rewritten to -[x,[x,y]].
    println!("[[x,y],x] = {}", xy.bracket(&x)?);
    println!("[[x,y],[x,[x,y]]] = {}", xy.bracket(&x.bracket(&xy)?)?);

    let parsed = ctx.parse("[y,[x,y]] + 2*[x,y]")?;
    println!("parsed: {parsed}");
    // Weight 5 does not survive at cap 4.
    println!("[x,[x,[x,[x,y]]]] truncated: {}", ctx.parse("[x,[x,[x,[x,y]]]]")?.bracket(&y)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
