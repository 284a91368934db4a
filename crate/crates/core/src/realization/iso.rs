//! Mechanical check that `Ψ` is an isomorphism of simplicial sets.

use std::fmt::Write as _;

use serde::Serialize;

use super::{HomSimplex, Realization};
use crate::algebra::LieAlgebra;
use crate::bch::ExpGroup;
use crate::sample::seeded_rng;
use crate::simplicial::{
    bar_degeneracy, bar_face, check_simplicial_identities, describe_tuple, BarSimplex, Group,
    IdentityReport, IndexError, SimplicialSet,
};

/// Deliberate defects for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Corruption {
    /// `Ψ` forgets the inverse in its second entry: `x_2` instead of
    /// `x_1^{-1} * x_2`.
    Psi,
    /// The bar construction swaps `d_0` and `d_1` on simplices of dimension
    /// at least 2.
    BarFace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoConfig {
    pub n_max: usize,
    /// Random simplices per dimension.
    pub samples: usize,
    pub seed: u64,
    pub corruption: Option<Corruption>,
}

impl IsoConfig {
    pub fn new(n_max: usize, samples: usize, seed: u64) -> Self {
        Self {
            n_max,
            samples,
            seed,
            corruption: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoCheck {
    /// `Ψ d_i = d_i Ψ`
    FaceCommutation,
    /// `Ψ s_i = s_i Ψ`
    DegeneracyCommutation,
    /// `Ψ^{-1} Ψ = id` on tuples
    HomRoundTrip,
    /// `Ψ Ψ^{-1} = id` on bar simplices
    BarRoundTrip,
    /// closed-form faces agree with faces through cofaces
    FaceClosedForm,
    /// closed-form degeneracies agree with degeneracies through codegeneracies
    DegeneracyClosedForm,
    /// `f(a_{rs}) * f(a_{st}) = f(a_{rt})`
    TriangleCocycle,
    RealizationIdentities,
    BarIdentities,
}

impl IsoCheck {
    pub const ALL: [IsoCheck; 9] = [
        IsoCheck::FaceCommutation,
        IsoCheck::DegeneracyCommutation,
        IsoCheck::HomRoundTrip,
        IsoCheck::BarRoundTrip,
        IsoCheck::FaceClosedForm,
        IsoCheck::DegeneracyClosedForm,
        IsoCheck::TriangleCocycle,
        IsoCheck::RealizationIdentities,
        IsoCheck::BarIdentities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IsoCheck::FaceCommutation => "face_commutation",
            IsoCheck::DegeneracyCommutation => "degeneracy_commutation",
            IsoCheck::HomRoundTrip => "hom_round_trip",
            IsoCheck::BarRoundTrip => "bar_round_trip",
            IsoCheck::FaceClosedForm => "face_closed_form",
            IsoCheck::DegeneracyClosedForm => "degeneracy_closed_form",
            IsoCheck::TriangleCocycle => "triangle_cocycle",
            IsoCheck::RealizationIdentities => "realization_identities",
            IsoCheck::BarIdentities => "bar_identities",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoFailure {
    pub check: IsoCheck,
    pub dimension: usize,
    pub detail: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub check: IsoCheck,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub algebra: String,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub corruption: Option<Corruption>,
    pub counts: Vec<CheckCount>,
    pub failures: Vec<IsoFailure>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, check: IsoCheck) -> &CheckCount {
        self.counts
            .iter()
            .find(|c| c.check == check)
            .expect("every check is counted")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "iso-check {} dims<={} samples={} seed={}{}",
            self.algebra,
            self.n_max,
            self.samples,
            self.seed,
            match self.corruption {
                Some(Corruption::Psi) => " corrupt=psi",
                Some(Corruption::BarFace) => " corrupt=face",
                None => "",
            }
        );
        for c in &self.counts {
            let _ = writeln!(
                out,
                "{:<24} checked {:>7}  failed {:>5}",
                c.check.name(),
                c.checked,
                c.failed
            );
        }
        for f in &self.failures {
            let _ = writeln!(
                out,
                "FAIL {} dim={} {} witness={}",
                f.check.name(),
                f.dimension,
                f.detail,
                f.witness
            );
        }
        let _ = writeln!(out, "result: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

struct Tally {
    counts: Vec<CheckCount>,
    failures: Vec<IsoFailure>,
}

impl Tally {
    fn new() -> Self {
        Self {
            counts: IsoCheck::ALL
                .iter()
                .map(|&check| CheckCount {
                    check,
                    checked: 0,
                    failed: 0,
                })
                .collect(),
            failures: Vec::new(),
        }
    }

    fn slot(&mut self, check: IsoCheck) -> &mut CheckCount {
        self.counts
            .iter_mut()
            .find(|c| c.check == check)
            .expect("known check")
    }

    fn record(&mut self, check: IsoCheck, ok: bool, failure: impl FnOnce() -> (usize, String, String)) {
        let slot = self.slot(check);
        slot.checked += 1;
        if !ok {
            slot.failed += 1;
            let (dimension, detail, witness) = failure();
            self.failures.push(IsoFailure {
                check,
                dimension,
                detail,
                witness,
            });
        }
    }

    fn absorb(&mut self, check: IsoCheck, report: IdentityReport) {
        let slot = self.slot(check);
        slot.checked += report.total_checked();
        slot.failed += report.violations.len();
        for v in report.violations {
            self.failures.push(IsoFailure {
                check,
                dimension: v.dimension,
                detail: format!("{} i={} j={}", v.family, v.i, v.j),
                witness: v.witness,
            });
        }
    }
}

/// Bar construction of `exp L`, optionally with corrupted faces.
struct BarSide<'g, 'a, A: LieAlgebra> {
    group: &'g ExpGroup<'a, A>,
    swap_low_faces: bool,
}

impl<A: LieAlgebra> SimplicialSet for BarSide<'_, '_, A> {
    type Simplex = BarSimplex<A::Element>;

    fn dimension(&self, s: &Self::Simplex) -> usize {
        s.dimension()
    }

    fn face(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError> {
        let i = match i {
            0 | 1 if self.swap_low_faces && s.dimension() >= 2 => 1 - i,
            other => other,
        };
        bar_face(self.group, i, s)
    }

    fn degeneracy(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError> {
        bar_degeneracy(self.group, i, s)
    }

    fn describe(&self, s: &Self::Simplex) -> String {
        describe_tuple(&s.entries, |g| self.group.format(g), "[", " | ", "]")
    }
}

/// Samples random simplices of every dimension `<= n_max` and checks that
/// `Ψ` commutes with all faces and degeneracies, that both round trips are
/// identities, that closed-form and generator-level faces/degeneracies
/// agree, that the triangle cocycle holds, and that both sides satisfy the
/// simplicial identities. Deterministic in `config.seed`.
pub fn verify_iso<A: LieAlgebra>(alg: &A, config: &IsoConfig) -> IsoReport {
    let real = Realization::new(alg);
    let group = real.group().clone();
    let bar = BarSide {
        group: &group,
        swap_low_faces: config.corruption == Some(Corruption::BarFace),
    };
    let psi = |h: &HomSimplex<A::Element>| -> BarSimplex<A::Element> {
        let mut b = real.psi(h);
        if config.corruption == Some(Corruption::Psi) && h.dimension() >= 2 {
            b.entries[1] = h.entries[1].clone();
        }
        b
    };
    let show_h = |h: &HomSimplex<A::Element>| real.describe(h);
    let show_b = |b: &BarSimplex<A::Element>| bar.describe(b);

    let mut rng = seeded_rng(config.seed);
    let mut homs = Vec::new();
    let mut bars = Vec::new();
    for n in 0..=config.n_max {
        for _ in 0..config.samples {
            homs.push(HomSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect()));
            bars.push(BarSimplex::new((0..n).map(|_| alg.sample(&mut rng)).collect()));
        }
    }

    let mut tally = Tally::new();
    for h in &homs {
        let n = h.dimension();
        let image = psi(h);
        if n >= 1 {
            for i in 0..=n {
                let closed = real.induced_face_closed(i, h).expect("i <= n");
                let brute = real.induced_face_bruteforce(i, h).expect("i <= n");
                tally.record(IsoCheck::FaceClosedForm, closed == brute, || {
                    (n, format!("i={i}"), format!("{} closed {} brute {}", show_h(h), show_h(&closed), show_h(&brute)))
                });
                let lhs = psi(&closed);
                let rhs = bar.face(i, &image).expect("i <= n");
                tally.record(IsoCheck::FaceCommutation, lhs == rhs, || {
                    (n, format!("i={i}"), format!("{} psi.d {} d.psi {}", show_h(h), show_b(&lhs), show_b(&rhs)))
                });
            }
        }
        for i in 0..=n {
            let closed = real.induced_degeneracy(i, h).expect("i <= n");
            let brute = real.induced_degeneracy_bruteforce(i, h).expect("i <= n");
            tally.record(IsoCheck::DegeneracyClosedForm, closed == brute, || {
                (n, format!("i={i}"), format!("{} closed {} brute {}", show_h(h), show_h(&closed), show_h(&brute)))
            });
            let lhs = psi(&closed);
            let rhs = bar.degeneracy(i, &image).expect("i <= n");
            tally.record(IsoCheck::DegeneracyCommutation, lhs == rhs, || {
                (n, format!("i={i}"), format!("{} psi.s {} s.psi {}", show_h(h), show_b(&lhs), show_b(&rhs)))
            });
        }
        let back = real.psi_inverse(&image);
        tally.record(IsoCheck::HomRoundTrip, &back == h, || {
            (n, String::new(), format!("{} -> {}", show_h(h), show_h(&back)))
        });
        let cocycle = real.triangle_cocycle_check(h);
        for v in &cocycle.violations {
            tally.record(IsoCheck::TriangleCocycle, false, || {
                (n, format!("r={} s={} t={}", v.r, v.s, v.t), format!("{} residual {}", show_h(h), v.residual))
            });
        }
        tally.slot(IsoCheck::TriangleCocycle).checked += cocycle.checked - cocycle.violations.len();
    }
    for b in &bars {
        let there = real.psi_inverse(b);
        let back = psi(&there);
        tally.record(IsoCheck::BarRoundTrip, &back == b, || {
            (b.dimension(), String::new(), format!("{} -> {}", show_b(b), show_b(&back)))
        });
    }
    tally.absorb(
        IsoCheck::RealizationIdentities,
        check_simplicial_identities(&real, &homs, config.n_max),
    );
    tally.absorb(
        IsoCheck::BarIdentities,
        check_simplicial_identities(&bar, &bars, config.n_max),
    );

    IsoReport {
        algebra: alg.describe(),
        n_max: config.n_max,
        samples: config.samples,
        seed: config.seed,
        corruption: config.corruption,
        counts: tally.counts,
        failures: tally.failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Abelian, FreeNilpotent};

    #[test]
    fn abelian_passes() {
        let report = verify_iso(&Abelian::new(3), &IsoConfig::new(3, 5, 1));
        assert!(report.passed(), "{}", report.to_text());
        assert!(IsoCheck::ALL
            .iter()
            .all(|&c| report.count(c).checked > 0));
    }

    #[test]
    fn free_passes_small() {
        let alg = FreeNilpotent::new("xy", 3).unwrap();
        let report = verify_iso(&alg, &IsoConfig::new(3, 4, 2));
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn corrupted_psi_breaks_face_commutation() {
        let alg = FreeNilpotent::new("xy", 3).unwrap();
        let mut config = IsoConfig::new(3, 4, 2);
        config.corruption = Some(Corruption::Psi);
        let report = verify_iso(&alg, &config);
        assert!(!report.passed());
        assert!(report.count(IsoCheck::FaceCommutation).failed > 0);
        assert!(report.to_text().contains("FAIL face_commutation"));
    }

    #[test]
    fn corrupted_bar_faces_break_identities() {
        let mut config = IsoConfig::new(3, 3, 5);
        config.corruption = Some(Corruption::BarFace);
        let report = verify_iso(&Abelian::new(2), &config);
        assert!(report.count(IsoCheck::BarIdentities).failed > 0);
        assert_eq!(report.count(IsoCheck::RealizationIdentities).failed, 0);
    }

    #[test]
    fn deterministic_under_seed() {
        let alg = FreeNilpotent::new("xy", 3).unwrap();
        let a = verify_iso(&alg, &IsoConfig::new(2, 3, 42));
        let b = verify_iso(&alg, &IsoConfig::new(2, 3, 42));
        assert_eq!(a, b);
    }
}
