use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::RealizationError;

/// A generator `a_{i0 ... ip}` of the free model of the `n`-simplex, with
/// `0 <= i0 < ... < ip <= n`. Its degree is `p - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    indices: Vec<usize>,
    ambient: usize,
}

impl GeneratorSymbol {
    pub fn new(indices: Vec<usize>, ambient: usize) -> Result<Self, RealizationError> {
        let valid = !indices.is_empty()
            && indices.windows(2).all(|w| w[0] < w[1])
            && indices.last().is_some_and(|&top| top <= ambient);
        if valid {
            Ok(Self { indices, ambient })
        } else {
            Err(RealizationError::InvalidGenerator { indices, ambient })
        }
    }

    /// `a_{r s}` in the `n`-simplex.
    pub fn pair(r: usize, s: usize, ambient: usize) -> Result<Self, RealizationError> {
        Self::new(vec![r, s], ambient)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn degree(&self) -> isize {
        self.indices.len() as isize - 2
    }

    /// Every generator of the `n`-simplex: one per nonempty subset of
    /// `{0, ..., n}`.
    pub fn all(ambient: usize) -> Vec<GeneratorSymbol> {
        let vertices = ambient + 1;
        let mut out: Vec<GeneratorSymbol> = (1u64..(1u64 << vertices))
            .map(|mask| GeneratorSymbol {
                indices: (0..vertices).filter(|k| mask >> k & 1 == 1).collect(),
                ambient,
            })
            .collect();
        out.sort_by(|a, b| a.indices.len().cmp(&b.indices.len()).then_with(|| a.cmp(b)));
        out
    }
}

/// `a_{0 2}@3`.
impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "a_{{{}}}@{}", parts.join(" "), self.ambient)
    }
}

impl FromStr for GeneratorSymbol {
    type Err = RealizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RealizationError::GeneratorSyntax(s.to_string());
        let rest = s.trim().strip_prefix("a_{").ok_or_else(bad)?;
        let (inside, ambient) = rest.split_once("}@").ok_or_else(bad)?;
        let indices = inside
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        let ambient = ambient.trim().parse::<usize>().map_err(|_| bad())?;
        Self::new(indices, ambient)
    }
}

impl Serialize for GeneratorSymbol {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Image of a generator under a codegeneracy.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorImage {
    Zero,
    Symbol(GeneratorSymbol),
}

impl fmt::Display for GeneratorImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorImage::Zero => f.write_str("0"),
            GeneratorImage::Symbol(g) => g.fmt(f),
        }
    }
}

/// Coface `δ^i`: indices `>= i` shift up by one; ambient `n -> n + 1`.
pub fn coface(i: usize, g: &GeneratorSymbol) -> Result<GeneratorSymbol, RealizationError> {
    if i > g.ambient + 1 {
        return Err(RealizationError::IndexOutOfRange {
            operator: "coface",
            index: i,
            dim: g.ambient,
        });
    }
    Ok(GeneratorSymbol {
        indices: g
            .indices
            .iter()
            .map(|&k| if k < i { k } else { k + 1 })
            .collect(),
        ambient: g.ambient + 1,
    })
}

/// Codegeneracy `σ^i`: zero when both `i` and `i + 1` are indices,
/// otherwise indices `> i` shift down by one; ambient `n -> n - 1`.
pub fn codegeneracy(i: usize, g: &GeneratorSymbol) -> Result<GeneratorImage, RealizationError> {
    if g.ambient == 0 || i > g.ambient - 1 {
        return Err(RealizationError::IndexOutOfRange {
            operator: "codegeneracy",
            index: i,
            dim: g.ambient,
        });
    }
    if g.indices.contains(&i) && g.indices.contains(&(i + 1)) {
        return Ok(GeneratorImage::Zero);
    }
    Ok(GeneratorImage::Symbol(GeneratorSymbol {
        indices: g
            .indices
            .iter()
            .map(|&k| if k <= i { k } else { k - 1 })
            .collect(),
        ambient: g.ambient - 1,
    }))
}

fn coface_image(i: usize, g: &GeneratorImage) -> Result<GeneratorImage, RealizationError> {
    match g {
        GeneratorImage::Zero => Ok(GeneratorImage::Zero),
        GeneratorImage::Symbol(s) => coface(i, s).map(GeneratorImage::Symbol),
    }
}

fn codegeneracy_image(i: usize, g: &GeneratorImage) -> Result<GeneratorImage, RealizationError> {
    match g {
        GeneratorImage::Zero => Ok(GeneratorImage::Zero),
        GeneratorImage::Symbol(s) => codegeneracy(i, s),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CosimplicialFamily {
    /// `δ^j δ^i = δ^i δ^{j-1}` for `i < j`
    CofaceCoface,
    /// `σ^j σ^i = σ^i σ^{j+1}` for `i <= j`
    CodegeneracyCodegeneracy,
    /// `σ^j δ^i = δ^i σ^{j-1}` for `i < j`
    MixedBelow,
    /// `σ^j δ^j = id = σ^j δ^{j+1}`
    MixedIdentity,
    /// `σ^j δ^i = δ^{i-1} σ^j` for `i > j + 1`
    MixedAbove,
}

impl CosimplicialFamily {
    pub const ALL: [CosimplicialFamily; 5] = [
        CosimplicialFamily::CofaceCoface,
        CosimplicialFamily::CodegeneracyCodegeneracy,
        CosimplicialFamily::MixedBelow,
        CosimplicialFamily::MixedIdentity,
        CosimplicialFamily::MixedAbove,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CosimplicialFamily::CofaceCoface => "coface_coface",
            CosimplicialFamily::CodegeneracyCodegeneracy => "codegeneracy_codegeneracy",
            CosimplicialFamily::MixedBelow => "codegeneracy_coface_below",
            CosimplicialFamily::MixedIdentity => "codegeneracy_coface_identity",
            CosimplicialFamily::MixedAbove => "codegeneracy_coface_above",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosimplicialViolation {
    pub family: CosimplicialFamily,
    pub i: usize,
    pub j: usize,
    pub generator: GeneratorSymbol,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CosimplicialReport {
    pub checked: usize,
    pub violations: Vec<CosimplicialViolation>,
}

impl CosimplicialReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the cosimplicial identities on every generator of ambient
/// dimension `<= max_ambient`, for every admissible index pair.
pub fn check_cosimplicial_identities(max_ambient: usize) -> CosimplicialReport {
    use CosimplicialFamily::*;
    let mut report = CosimplicialReport::default();
    let mut record = |family, i, j, g: &GeneratorSymbol, lhs: Result<GeneratorImage, RealizationError>, rhs: Result<GeneratorImage, RealizationError>| {
        report.checked += 1;
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        if !ok {
            let show = |r: &Result<GeneratorImage, RealizationError>| match r {
                Ok(v) => v.to_string(),
                Err(e) => format!("<{e}>"),
            };
            report.violations.push(CosimplicialViolation {
                family,
                i,
                j,
                generator: g.clone(),
                lhs: show(&lhs),
                rhs: show(&rhs),
            });
        }
    };
    for n in 0..=max_ambient {
        for g in GeneratorSymbol::all(n) {
            let sym = GeneratorImage::Symbol(g.clone());
            // δ^j δ^i = δ^i δ^{j-1}, i < j <= n + 2
            for j in 1..=n + 2 {
                for i in 0..j {
                    let lhs = coface_image(i, &sym).and_then(|h| coface_image(j, &h));
                    let rhs = coface_image(j - 1, &sym).and_then(|h| coface_image(i, &h));
                    record(CofaceCoface, i, j, &g, lhs, rhs);
                }
            }
            // σ^j σ^i = σ^i σ^{j+1}, i <= j, j + 1 <= n - 1
            if n >= 2 {
                for j in 0..=n - 2 {
                    for i in 0..=j {
                        let lhs = codegeneracy_image(i, &sym).and_then(|h| codegeneracy_image(j, &h));
                        let rhs = codegeneracy_image(j + 1, &sym).and_then(|h| codegeneracy_image(i, &h));
                        record(CodegeneracyCodegeneracy, i, j, &g, lhs, rhs);
                    }
                }
            }
            // δ^i: n -> n + 1, σ^j: n + 1 -> n with j <= n
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = coface_image(i, &sym).and_then(|h| codegeneracy_image(j, &h));
                    let (family, rhs) = if i < j {
                        (MixedBelow, codegeneracy_image(j - 1, &sym).and_then(|h| coface_image(i, &h)))
                    } else if i == j || i == j + 1 {
                        (MixedIdentity, Ok(sym.clone()))
                    } else {
                        (MixedAbove, codegeneracy_image(j, &sym).and_then(|h| coface_image(i - 1, &h)))
                    };
                    record(family, i, j, &g, lhs, rhs);
                }
            }
        }
    }
    report
}
