//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use lierealize::realization::check_cosimplicial_identities;
use lierealize::sample::seeded_rng;
use lierealize::simplicial::Group;
use lierealize::{
    assoc_oracle, bernoulli_operator, exp_difference_operator, lyndon_words, universal_bch, Abelian,
    Alphabet, ExpGroup, FreeLieContext, FreeNilpotent, HomSimplex, IsoConfig, LieAlgebra, Realization,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bch_two_paths() -> Outcome {
    for cap in 1..=6 {
        let ctx = FreeLieContext::from_letters("xy", cap).map_err(|e| e.to_string())?;
        let x = ctx.generator("x").map_err(|e| e.to_string())?;
        let y = ctx.generator("y").map_err(|e| e.to_string())?;
        let oracle = assoc_oracle(&x, &y).map_err(|e| e.to_string())?;
        let table = universal_bch(cap);
        ensure(*table.element() == oracle, || {
            format!("cap {cap}: table {} vs oracle {oracle}", table.element())
        })?;
    }
    Ok("caps 1..=6 equal".into())
}

fn group_laws_on<A: LieAlgebra>(alg: &A, seed: u64, triples: usize) -> Result<(), String> {
    let g = ExpGroup::new(alg);
    let mut rng = seeded_rng(seed);
    let e = g.identity();
    for t in 0..triples {
        let (a, b, c) = (alg.sample(&mut rng), alg.sample(&mut rng), alg.sample(&mut rng));
        let fail = |law: &str| format!("{} triple {t}: {law}", alg.describe());
        ensure(g.product(&g.product(&a, &b), &c) == g.product(&a, &g.product(&b, &c)), || fail("associativity"))?;
        ensure(g.product(&a, &e) == a && g.product(&e, &a) == a, || fail("identity"))?;
        let inv = g.inverse(&a);
        ensure(g.product(&a, &inv) == e && g.product(&inv, &a) == e, || fail("inverse"))?;
    }
    Ok(())
}

fn group_laws() -> Outcome {
    let n = 200;
    group_laws_on(&FreeNilpotent::new("xyz", 5).map_err(|e| e.to_string())?, 1, n)?;
    group_laws_on(&Abelian::new(3), 2, n)?;
    group_laws_on(&common::heisenberg(), 3, n)?;
    Ok(format!("{n} triples each on free:xyz:5, abelian:3, heisenberg"))
}

fn witt_dimensions() -> Outcome {
    for k in 2..=4usize {
        let a = Alphabet::from_chars(&"abcd"[..k]).map_err(|e| e.to_string())?;
        let words = lyndon_words(&a, 8);
        for n in 1..=8 {
            let count = words.iter().filter(|w| w.weight() == n).count() as u64;
            let expected = common::witt(k as u64, n as u64);
            ensure(count == expected, || format!("k={k} n={n}: {count} words, formula {expected}"))?;
        }
    }
    Ok("alphabets 2..=4, weights 1..=8".into())
}

fn cosimplicial() -> Outcome {
    let report = check_cosimplicial_identities(5);
    ensure(report.passed(), || format!("{} violations, first {:?}", report.violations.len(), report.violations.first()))?;
    Ok(format!("{} instances checked exhaustively", report.checked))
}

fn closed_forms() -> Outcome {
    let alg = FreeNilpotent::new("xy", 4).map_err(|e| e.to_string())?;
    let real = Realization::new(&alg);
    let mut rng = seeded_rng(5);
    let per_dim = 100;
    let mut compared = 0;
    for n in 0..=5 {
        for t in 0..per_dim {
            let h = HomSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect());
            for i in 0..=n {
                if n > 0 {
                    let closed = real.induced_face_closed(i, &h).map_err(|e| e.to_string())?;
                    let brute = real.induced_face_bruteforce(i, &h).map_err(|e| e.to_string())?;
                    ensure(closed == brute, || format!("d_{i} dim {n} tuple {t}"))?;
                    compared += 1;
                }
                let closed = real.induced_degeneracy(i, &h).map_err(|e| e.to_string())?;
                let brute = real.induced_degeneracy_bruteforce(i, &h).map_err(|e| e.to_string())?;
                ensure(closed == brute, || format!("s_{i} dim {n} tuple {t}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} operator applications agree, {per_dim} tuples per dimension 0..=5"))
}

/// Returns (triangles checked, violations with the corrupted assignment).
fn cocycle_on<A: LieAlgebra>(alg: &A, seed: u64) -> Result<(usize, usize), String> {
    let real = Realization::new(alg);
    let mut rng = seeded_rng(seed);
    let (mut checked, mut corrupted) = (0, 0);
    for n in 0..=5 {
        for _ in 0..20 {
            let h = HomSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect());
            let report = real.triangle_cocycle_check(&h);
            ensure(report.passed(), || format!("{}: {:?}", alg.describe(), report.violations.first()))?;
            checked += report.checked;
            // negative control: f(a_rs) = x_s, dropping x_r^{-1}
            let bad = real.triangle_cocycle_check_with(&h, |_, s| h.entries[s - 1].clone());
            corrupted += bad.violations.len();
        }
    }
    Ok((checked, corrupted))
}

fn cocycle() -> Outcome {
    let mut lines = Vec::new();
    let free = FreeNilpotent::new("xy", 4).map_err(|e| e.to_string())?;
    for (name, result) in [
        ("free:xy:4", cocycle_on(&free, 6)?),
        ("abelian:3", cocycle_on(&Abelian::new(3), 7)?),
        ("heisenberg", cocycle_on(&common::heisenberg(), 8)?),
    ] {
        let (checked, corrupted) = result;
        ensure(corrupted > 0, || format!("{name}: corrupted assignment was not caught"))?;
        lines.push(format!("{name} {checked} triangles"));
    }
    Ok(format!("{}; corrupted control fails", lines.join(", ")))
}

fn realization_iso() -> Outcome {
    let config = IsoConfig::new(4, 50, 7);
    for report in [
        lierealize::verify_iso(&Abelian::new(3), &config),
        lierealize::verify_iso(&FreeNilpotent::new("xy", 4).map_err(|e| e.to_string())?, &config),
    ] {
        ensure(report.passed(), || report.to_text())?;
    }
    for alg in ["free:xy:4", "abelian:3"] {
        let out = lierealize::cli::run([
            "lierealize", "iso-check", alg, "--dims", "4", "--samples", "50", "--seed", "7",
        ]);
        ensure(out.code == 0, || format!("iso-check {alg} exited {}", out.code))?;
    }
    Ok("abelian:3 and free:xy:4, n <= 4, 50 samples; iso-check exit 0".into())
}

fn bernoulli() -> Outcome {
    let mut rng = seeded_rng(9);
    for cap in 1..=5 {
        let alg = FreeNilpotent::new("xy", cap).map_err(|e| e.to_string())?;
        let (x, y) = (alg.generator("x").unwrap(), alg.generator("y").unwrap());
        let mut pairs = vec![(x, y)];
        pairs.extend((0..10).map(|_| (alg.sample(&mut rng), alg.sample(&mut rng))));
        for (x, y) in &pairs {
            let b = bernoulli_operator(&alg, x, y);
            ensure(exp_difference_operator(&alg, x, &b) == *y, || format!("cap {cap}: E(B(y)) != y"))?;
            let e = exp_difference_operator(&alg, x, y);
            ensure(bernoulli_operator(&alg, x, &e) == *y, || format!("cap {cap}: B(E(y)) != y"))?;
            ensure(bernoulli_operator(&alg, &alg.zero(), y) == *y, || format!("cap {cap}: x = 0"))?;
        }
    }
    let ab = Abelian::new(3);
    for _ in 0..20 {
        let (x, y) = (ab.sample(&mut rng), ab.sample(&mut rng));
        ensure(bernoulli_operator(&ab, &x, &y) == y, || "abelian case".into())?;
    }
    Ok("inversion at caps 1..=5, x = 0 and abelian cases return y".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", "BCH two-path agreement", Duration::from_secs(30), bch_two_paths),
        ("AC2", "BCH group laws", Duration::from_secs(60), group_laws),
        ("AC3", "Witt dimensions", Duration::from_secs(5), witt_dimensions),
        ("AC4", "cosimplicial identities", Duration::from_secs(5), cosimplicial),
        ("AC5", "closed-form faces/degeneracies", Duration::from_secs(120), closed_forms),
        ("AC6", "triangle cocycle", Duration::from_secs(60), cocycle),
        ("AC7", "realization isomorphic to bar construction", Duration::from_secs(300), realization_iso),
        ("AC8", "Bernoulli operator", Duration::from_secs(10), bernoulli),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()))
            .and_then(|detail| {
                let elapsed = start.elapsed();
                if elapsed > budget {
                    Err(format!("{detail}; took {elapsed:.1?}, budget {budget:?}"))
                } else {
                    Ok(detail)
                }
            });
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("[PASS] {id} {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
