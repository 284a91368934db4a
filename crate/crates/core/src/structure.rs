//! Finite-dimensional nilpotent Lie algebras given by structure constants.
//!
//! File format, one bracket per line:
//!
//! ```text
//! # Heisenberg algebra
//! generators: x, y, z
//! [x,y] = z
//! ```
//!
//! The `generators:` line fixes the basis and its order; brackets not listed
//! (and not implied by antisymmetry) are zero. Right-hand sides are linear
//! expressions in the generators. `#` starts a comment.

use std::fs;
use std::path::Path;

use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

use crate::algebra::{sample_coords, Abelian, Coords, LieAlgebra};
use crate::expr::{self, Expr, ExprError};
use crate::freelie::LieError;
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Expression {
        line: usize,
        #[source]
        source: ExprError,
    },
    #[error("missing 'generators:' line")]
    MissingGenerators,
    #[error(transparent)]
    Names(#[from] LieError),
    #[error("[{0},{0}] must be zero")]
    SelfBracket(String),
    #[error("[{a},{b}] and [{b},{a}] are not negatives of each other")]
    Antisymmetry { a: String, b: String },
    #[error("Jacobi identity fails for ({0}, {1}, {2})")]
    Jacobi(String, String, String),
    #[error("not nilpotent at cap {cap}: brackets of {} elements do not all vanish", cap + 1)]
    NotNilpotent { cap: usize },
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Basis `e_1..e_d` with brackets `[e_i, e_j] = sum_k c_ij^k e_k`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    names: Vec<String>,
    /// `table[i][j] = [e_i, e_j]`
    table: Vec<Vec<Coords>>,
    cap: usize,
}

impl StructureConstants {
    /// Builds and validates an algebra from the listed brackets. Each pair
    /// may be given in either order; giving both requires consistency.
    pub fn new(
        names: Vec<String>,
        brackets: Vec<(usize, usize, Coords)>,
        cap: usize,
    ) -> Result<Self, StructureError> {
        if cap == 0 {
            return Err(StructureError::ZeroCap);
        }
        // reuse alphabet validation for the names
        crate::freelie::Alphabet::new(names.clone())?;
        let dim = names.len();
        let mut table: Vec<Vec<Option<Coords>>> = vec![vec![None; dim]; dim];
        for (i, j, v) in brackets {
            if i == j {
                if v.is_zero() {
                    continue;
                }
                return Err(StructureError::SelfBracket(names[i].clone()));
            }
            let neg = v.scale(&-Rational::from_integer(1.into()));
            for (a, b, w) in [(i, j, v), (j, i, neg)] {
                match &table[a][b] {
                    Some(existing) if *existing != w => {
                        return Err(StructureError::Antisymmetry {
                            a: names[a].clone(),
                            b: names[b].clone(),
                        })
                    }
                    _ => table[a][b] = Some(w),
                }
            }
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.unwrap_or_else(|| Coords::zero(dim))).collect())
            .collect();
        let alg = Self { names, table, cap };
        alg.validate()?;
        Ok(alg)
    }

    pub fn parse(text: &str, cap: usize) -> Result<Self, StructureError> {
        let mut names: Option<Vec<String>> = None;
        let mut raw: Vec<(usize, String, String, Expr)> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(list) = line.strip_prefix("generators:") {
                if names.is_some() {
                    return Err(StructureError::Syntax {
                        line: line_no,
                        message: "duplicate 'generators:' line".into(),
                    });
                }
                names = Some(list.split(',').map(|s| s.trim().to_string()).collect());
                continue;
            }
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| StructureError::Syntax {
                line: line_no,
                message: "expected '[a,b] = ...'".into(),
            })?;
            let pair = lhs
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .and_then(|s| s.split_once(','))
                .ok_or_else(|| StructureError::Syntax {
                    line: line_no,
                    message: format!("left-hand side '{}' is not of the form [a,b]", lhs.trim()),
                })?;
            let rhs = expr::parse(rhs).map_err(|source| StructureError::Expression {
                line: line_no,
                source,
            })?;
            if !rhs.is_linear() {
                return Err(StructureError::Syntax {
                    line: line_no,
                    message: "right-hand side must be a linear combination of generators".into(),
                });
            }
            raw.push((line_no, pair.0.trim().to_string(), pair.1.trim().to_string(), rhs));
        }
        let names = names.ok_or(StructureError::MissingGenerators)?;
        let space = Abelian::with_names(names.clone());
        let lookup = |line: usize, name: &str| {
            names.iter().position(|n| n == name).ok_or_else(|| StructureError::Syntax {
                line,
                message: format!("unknown generator '{name}'"),
            })
        };
        let mut brackets = Vec::new();
        for (line, a, b, rhs) in raw {
            let i = lookup(line, &a)?;
            let j = lookup(line, &b)?;
            let v = rhs
                .evaluate(&space)
                .map_err(|source| StructureError::Expression { line, source })?;
            brackets.push((i, j, v));
        }
        Self::new(names, brackets, cap)
    }

    pub fn load(path: impl AsRef<Path>, cap: usize) -> Result<Self, StructureError> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| StructureError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, cap)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn validate(&self) -> Result<(), StructureError> {
        let d = self.dim();
        let basis: Vec<Coords> = (0..d).map(|i| Coords::unit(d, i)).collect();
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let (a, b, c) = (&basis[i], &basis[j], &basis[k]);
                    let sum = self
                        .bracket(a, &self.bracket(b, c))
                        .add(&self.bracket(b, &self.bracket(c, a)))
                        .add(&self.bracket(c, &self.bracket(a, b)));
                    if !sum.is_zero() {
                        return Err(StructureError::Jacobi(
                            self.names[i].clone(),
                            self.names[j].clone(),
                            self.names[k].clone(),
                        ));
                    }
                }
            }
        }
        // Lower central series: L^1 = L, L^{k+1} = [L, L^k]; need L^{cap+1} = 0.
        let mut term = basis.clone();
        for _ in 0..self.cap {
            let next: Vec<Coords> = basis
                .iter()
                .flat_map(|e| term.iter().map(move |t| (e, t)))
                .map(|(e, t)| self.bracket(e, t))
                .collect();
            term = row_basis(next);
            if term.is_empty() {
                return Ok(());
            }
        }
        Err(StructureError::NotNilpotent { cap: self.cap })
    }
}

/// A basis of the span of `vectors`, by Gaussian elimination.
fn row_basis(vectors: Vec<Coords>) -> Vec<Coords> {
    let mut rows: Vec<Vec<Rational>> = vectors.into_iter().map(|v| v.0).filter(|v| v.iter().any(|c| !c.is_zero())).collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for c in rows[rank].iter_mut() {
            *c = &*c / &lead;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..width {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows.into_iter().map(Coords).collect()
}

impl LieAlgebra for StructureConstants {
    type Element = Coords;

    fn cap(&self) -> usize {
        self.cap
    }

    fn zero(&self) -> Coords {
        Coords::zero(self.dim())
    }

    fn add(&self, a: &Coords, b: &Coords) -> Coords {
        a.add(b)
    }

    fn scale(&self, c: &Rational, a: &Coords) -> Coords {
        a.scale(c)
    }

    fn bracket(&self, a: &Coords, b: &Coords) -> Coords {
        let d = self.dim();
        let mut out = Coords::zero(d);
        for (i, ai) in a.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let coeff = ai * bj;
                for (k, c) in self.table[i][j].0.iter().enumerate() {
                    if !c.is_zero() {
                        out.0[k] += &coeff * c;
                    }
                }
            }
        }
        out
    }

    fn generator(&self, name: &str) -> Option<Coords> {
        let i = self.names.iter().position(|n| n == name)?;
        Some(Coords::unit(self.dim(), i))
    }

    fn generator_names(&self) -> Vec<String> {
        self.names.clone()
    }

    fn format(&self, a: &Coords) -> String {
        a.format_with(&self.names)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Coords {
        sample_coords(self.dim(), rng)
    }

    fn describe(&self) -> String {
        format!("sc:{}:{}", self.names.join(","), self.cap)
    }
}
