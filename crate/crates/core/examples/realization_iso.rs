// Simplices of the realization, the map to the bar construction, and the
// randomized isomorphism check with its negative control.
//
// cargo run --example realization_iso

use lierealize::realization::Corruption;
use lierealize::{verify_iso, Abelian, FreeNilpotent, HomSimplex, IsoConfig, LieAlgebra, Realization};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = FreeNilpotent::new("xy", 3)?;
    let real = Realization::new(&alg);
    let x = alg.generator("x").ok_or("no x")?;
    let y = alg.generator("y").ok_or("no y")?;
    let h = HomSimplex::new(vec![x, y]);

    println!("f(a_12) = {}", alg.format(&real.extend_hom(&h, 1, 2)?));
    let d0 = real.induced_face_closed(0, &h)?;
    assert_eq!(d0, real.induced_face_bruteforce(0, &h)?);
    println!("d_0 (x, y) = ({})", alg.format(&d0.entries[0]));
    let psi: Vec<String> = real.psi(&h).entries.iter().map(|e| alg.format(e)).collect();
    println!("Psi(x, y) = [{}]", psi.join(" | "));
    println!("cocycle violations: {}", real.triangle_cocycle_check(&h).violations.len());

    let report = verify_iso(&alg, &IsoConfig::new(3, 10, 1));
    print!("{}", report.to_text());
    let abelian = verify_iso(&Abelian::new(3), &IsoConfig::new(3, 10, 1));
    println!("abelian:3 {}", if abelian.passed() { "PASS" } else { "FAIL" });

    let mut broken = IsoConfig::new(3, 10, 1);
    broken.corruption = Some(Corruption::Psi);
    let control = verify_iso(&alg, &broken);
    println!(
        "corrupted Psi: {} failures detected",
        control.failures.len()
    );
    if !report.passed() || !abelian.passed() || control.passed() {
        return Err("isomorphism check did not behave as expected".into());
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
