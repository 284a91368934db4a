// The group exp(g) on three kinds of algebra: free, abelian and one read
// from a structure-constants file.
//
// cargo run --example exp_group

use lierealize::expr::parse_in;
use lierealize::{
    bch_inverse, bch_product, Abelian, FreeNilpotent, LieAlgebra, StructureConstants,
};

const HEISENBERG: &str = "generators: x, y, z\n[x,y] = z\n";

fn show<A: LieAlgebra>(alg: &A, a: &str, b: &str) -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_in(a, alg)?;
    let b = parse_in(b, alg)?;
    let ab = bch_product(alg, &a, &b);
    println!("{}", alg.describe());
    println!("  a * b     = {}", alg.format(&ab));
    println!("  (a*b)^-1  = {}", alg.format(&bch_inverse(alg, &ab)));
    let back = bch_product(alg, &ab, &bch_inverse(alg, &b));
    println!("  a*b*b^-1  = {}", alg.format(&back));
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    show(&FreeNilpotent::new("xy", 3)?, "x + [x,y]", "2*y")?;
    show(&Abelian::new(3), "e1 - e2", "1/2*e3")?;
    let heis = StructureConstants::parse(HEISENBERG, 2)?;
    show(&heis, "x", "y")?;
    // The commutator of exp(x) and exp(y) in the Heisenberg group is exp(z).
    let (x, y) = (parse_in("x", &heis)?, parse_in("y", &heis)?);
    let comm = bch_product(
        &heis,
        &bch_product(&heis, &x, &y),
        &bch_product(&heis, &bch_inverse(&heis, &x), &bch_inverse(&heis, &y)),
    );
    println!("  x y x^-1 y^-1 = {}", heis.format(&comm));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
