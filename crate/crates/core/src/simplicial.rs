//! Simplicial sets, the bar construction and an identity checker.

use std::fmt::{self, Debug};

use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("{operator} index {index} out of range for a {dim}-simplex")]
pub struct IndexError {
    pub operator: &'static str,
    pub index: usize,
    pub dim: usize,
}

/// A group presented by callbacks. Equality is `PartialEq` on elements.
pub trait Group {
    type Element: Clone + PartialEq + Debug;

    fn identity(&self) -> Self::Element;
    fn product(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;

    fn format(&self, a: &Self::Element) -> String {
        format!("{a:?}")
    }
}

/// Faces `d_i` and degeneracies `s_i` on simplices of every dimension.
pub trait SimplicialSet {
    type Simplex: Clone + PartialEq;

    fn dimension(&self, s: &Self::Simplex) -> usize;
    /// `d_i` for `0 <= i <= n` on an `n`-simplex, `n >= 1`.
    fn face(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError>;
    /// `s_i` for `0 <= i <= n` on an `n`-simplex.
    fn degeneracy(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError>;
    fn describe(&self, s: &Self::Simplex) -> String;
}

/// `[g_1 | ... | g_n]`; the empty list is the unique 0-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarSimplex<E> {
    pub entries: Vec<E>,
}

impl<E> BarSimplex<E> {
    pub fn new(entries: Vec<E>) -> Self {
        Self { entries }
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }
}

pub fn bar_face<G: Group>(
    group: &G,
    i: usize,
    s: &BarSimplex<G::Element>,
) -> Result<BarSimplex<G::Element>, IndexError> {
    let n = s.dimension();
    if n == 0 || i > n {
        return Err(IndexError {
            operator: "face",
            index: i,
            dim: n,
        });
    }
    let g = &s.entries;
    let entries = if i == 0 {
        g[1..].to_vec()
    } else if i == n {
        g[..n - 1].to_vec()
    } else {
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&g[..i - 1]);
        out.push(group.product(&g[i - 1], &g[i]));
        out.extend_from_slice(&g[i + 1..]);
        out
    };
    Ok(BarSimplex { entries })
}

/// Inserts the identity so that it becomes entry `i + 1` (1-based).
pub fn bar_degeneracy<G: Group>(
    group: &G,
    i: usize,
    s: &BarSimplex<G::Element>,
) -> Result<BarSimplex<G::Element>, IndexError> {
    let n = s.dimension();
    if i > n {
        return Err(IndexError {
            operator: "degeneracy",
            index: i,
            dim: n,
        });
    }
    let mut entries = s.entries.clone();
    entries.insert(i, group.identity());
    Ok(BarSimplex { entries })
}

/// `B_n G = G^n`.
#[derive(Clone, Debug)]
pub struct BarConstruction<G> {
    group: G,
}

impl<G: Group> BarConstruction<G> {
    pub fn new(group: G) -> Self {
        Self { group }
    }

    pub fn group(&self) -> &G {
        &self.group
    }
}

pub(crate) fn describe_tuple<E>(entries: &[E], show: impl Fn(&E) -> String, open: &str, sep: &str, close: &str) -> String {
    let parts: Vec<String> = entries.iter().map(show).collect();
    format!("{open}{}{close}", parts.join(sep))
}

impl<G: Group> SimplicialSet for BarConstruction<G> {
    type Simplex = BarSimplex<G::Element>;

    fn dimension(&self, s: &Self::Simplex) -> usize {
        s.dimension()
    }

    fn face(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError> {
        bar_face(&self.group, i, s)
    }

    fn degeneracy(&self, i: usize, s: &Self::Simplex) -> Result<Self::Simplex, IndexError> {
        bar_degeneracy(&self.group, i, s)
    }

    fn describe(&self, s: &Self::Simplex) -> String {
        describe_tuple(&s.entries, |g| self.group.format(g), "[", " | ", "]")
    }
}

/// The five families of simplicial identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityFamily {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`
    FaceFace,
    /// `s_i s_j = s_{j+1} s_i` for `i <= j`
    DegeneracyDegeneracy,
    /// `d_i s_j = s_{j-1} d_i` for `i < j`
    FaceDegeneracyBelow,
    /// `d_j s_j = id = d_{j+1} s_j`
    FaceDegeneracyIdentity,
    /// `d_i s_j = s_j d_{i-1}` for `i > j + 1`
    FaceDegeneracyAbove,
}

impl IdentityFamily {
    pub const ALL: [IdentityFamily; 5] = [
        IdentityFamily::FaceFace,
        IdentityFamily::DegeneracyDegeneracy,
        IdentityFamily::FaceDegeneracyBelow,
        IdentityFamily::FaceDegeneracyIdentity,
        IdentityFamily::FaceDegeneracyAbove,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityFamily::FaceFace => "face_face",
            IdentityFamily::DegeneracyDegeneracy => "degeneracy_degeneracy",
            IdentityFamily::FaceDegeneracyBelow => "face_degeneracy_below",
            IdentityFamily::FaceDegeneracyIdentity => "face_degeneracy_identity",
            IdentityFamily::FaceDegeneracyAbove => "face_degeneracy_above",
        }
    }
}

impl fmt::Display for IdentityFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityViolation {
    pub family: IdentityFamily,
    pub i: usize,
    pub j: usize,
    pub dimension: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCount {
    pub family: IdentityFamily,
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub counts: Vec<FamilyCount>,
    pub violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total_checked(&self) -> usize {
        self.counts.iter().map(|c| c.checked).sum()
    }

    /// One line per family, then one line per violation.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.counts {
            out.push_str(&format!(
                "{:<26} checked {:>6}  failed {:>4}\n",
                c.family.name(),
                c.checked,
                c.failed
            ));
        }
        for v in &self.violations {
            out.push_str(&format!(
                "VIOLATION {} i={} j={} dim={} witness={}\n",
                v.family, v.i, v.j, v.dimension, v.witness
            ));
        }
        out
    }
}

/// Checks every instance of the five identity families on each sample whose
/// dimension is at most `n_max`.
pub fn check_simplicial_identities<S: SimplicialSet>(
    set: &S,
    samples: &[S::Simplex],
    n_max: usize,
) -> IdentityReport {
    let mut checker = Checker {
        set,
        counts: IdentityFamily::ALL
            .iter()
            .map(|&family| FamilyCount {
                family,
                checked: 0,
                failed: 0,
            })
            .collect(),
        violations: Vec::new(),
    };
    for x in samples {
        let n = set.dimension(x);
        if n <= n_max {
            checker.run(x, n);
        }
    }
    IdentityReport {
        counts: checker.counts,
        violations: checker.violations,
    }
}

struct Checker<'a, S: SimplicialSet> {
    set: &'a S,
    counts: Vec<FamilyCount>,
    violations: Vec<IdentityViolation>,
}

impl<S: SimplicialSet> Checker<'_, S> {
    fn d(&self, i: usize, x: &S::Simplex) -> Result<S::Simplex, IndexError> {
        self.set.face(i, x)
    }

    fn s(&self, i: usize, x: &S::Simplex) -> Result<S::Simplex, IndexError> {
        self.set.degeneracy(i, x)
    }

    fn record(
        &mut self,
        family: IdentityFamily,
        i: usize,
        j: usize,
        x: &S::Simplex,
        lhs: Result<S::Simplex, IndexError>,
        rhs: Result<S::Simplex, IndexError>,
    ) {
        let slot = IdentityFamily::ALL
            .iter()
            .position(|&f| f == family)
            .expect("known family");
        self.counts[slot].checked += 1;
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        if !ok {
            self.counts[slot].failed += 1;
            let show = |r: &Result<S::Simplex, IndexError>| match r {
                Ok(s) => self.set.describe(s),
                Err(e) => format!("<{e}>"),
            };
            let witness = format!(
                "{} (lhs {}, rhs {})",
                self.set.describe(x),
                show(&lhs),
                show(&rhs)
            );
            self.violations.push(IdentityViolation {
                family,
                i,
                j,
                dimension: self.set.dimension(x),
                witness,
            });
        }
    }

    fn run(&mut self, x: &S::Simplex, n: usize) {
        use IdentityFamily::*;
        // d_i d_j = d_{j-1} d_i, i < j <= n, needs n >= 2
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    let lhs = self.d(j, x).and_then(|y| self.d(i, &y));
                    let rhs = self.d(i, x).and_then(|y| self.d(j - 1, &y));
                    self.record(FaceFace, i, j, x, lhs, rhs);
                }
            }
        }
        // s_i s_j = s_{j+1} s_i, i <= j <= n
        for j in 0..=n {
            for i in 0..=j {
                let lhs = self.s(j, x).and_then(|y| self.s(i, &y));
                let rhs = self.s(i, x).and_then(|y| self.s(j + 1, &y));
                self.record(DegeneracyDegeneracy, i, j, x, lhs, rhs);
            }
        }
        for j in 0..=n {
            let sj = self.s(j, x);
            // d_j s_j = id = d_{j+1} s_j
            let lhs = sj.clone().and_then(|y| self.d(j, &y));
            self.record(FaceDegeneracyIdentity, j, j, x, lhs, Ok(x.clone()));
            let lhs = sj.clone().and_then(|y| self.d(j + 1, &y));
            self.record(FaceDegeneracyIdentity, j + 1, j, x, lhs, Ok(x.clone()));
            if n == 0 {
                continue;
            }
            // d_i s_j = s_{j-1} d_i, i < j
            for i in 0..j {
                let lhs = sj.clone().and_then(|y| self.d(i, &y));
                let rhs = self.d(i, x).and_then(|y| self.s(j - 1, &y));
                self.record(FaceDegeneracyBelow, i, j, x, lhs, rhs);
            }
            // d_i s_j = s_j d_{i-1}, j + 1 < i <= n + 1
            for i in (j + 2)..=(n + 1) {
                let lhs = sj.clone().and_then(|y| self.d(i, &y));
                let rhs = self.d(i - 1, x).and_then(|y| self.s(j, &y));
                self.record(FaceDegeneracyAbove, i, j, x, lhs, rhs);
            }
        }
    }
}
