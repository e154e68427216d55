//! Line-oriented problem descriptions.
//!
//! ```text
//! # the Z_4 fixture
//! ring = Z_4
//! n = 2
//! gen = 1 2
//! support = chain
//! ```
//!
//! Keys: `ring`, `n`, `gen` (repeatable), `support`, `command`, `lattice`,
//! `r` (`3` or `1..3`), `matrix` (repeatable row of an isometry), `shape`
//! (repeatable `m x n` block of a matrix code) and `convention`. Row entries
//! are separated by spaces or commas; residue tuples such as `(1,0)` name
//! elements of non-cyclic rings.

use std::path::Path;

use crate::code_latroids::{MatrixCode, SumRankConvention};
use crate::codes::Code;
use crate::error::{Error, Result};
use crate::ring::{Pir, RingElement};
use crate::supports::{lee_z4, z6_product_support, SupportFn};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemConfig {
    pub ring: Option<String>,
    pub n: Option<usize>,
    pub generators: Vec<Vec<String>>,
    pub support: Option<String>,
    pub command: Option<String>,
    pub lattice: Option<String>,
    pub r: Option<(u32, u32)>,
    pub matrix: Vec<Vec<String>>,
    pub shapes: Vec<(usize, usize)>,
    pub convention: Option<SumRankConvention>,
}

/// Splits a row at spaces and at commas outside parentheses.
fn tokens(s: &str) -> Vec<String> {
    let (mut out, mut cur, mut depth) = (vec![], String::new(), 0);
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            c if c.is_whitespace() && depth == 0 => out.push(std::mem::take(&mut cur)),
            c => cur.push(c),
        }
    }
    out.push(cur);
    out.retain(|t| !t.is_empty());
    out
}

fn set_once<T>(slot: &mut Option<T>, v: T, key: &str, line: usize) -> Result<()> {
    if slot.is_some() {
        return Err(Error::Parse(format!("line {line}: duplicate key {key:?}")));
    }
    *slot = Some(v);
    Ok(())
}

fn parse_r(v: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(format!("r: expected `k` or `a..b`, got {v:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match v.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(bad());
            }
            Ok((a, b))
        }
        None => {
            let a = num(v)?;
            Ok((a, a))
        }
    }
}

fn parse_shape(v: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("shape: expected `m x n`, got {v:?}"));
    let (m, n) = v.split_once(['x', 'X', '*']).ok_or_else(bad)?;
    let m = m.trim().parse().map_err(|_| bad())?;
    let n = n.trim().parse().map_err(|_| bad())?;
    if m == 0 || n == 0 {
        return Err(bad());
    }
    Ok((m, n))
}

impl ProblemConfig {
    pub fn parse(text: &str) -> Result<ProblemConfig> {
        let mut cfg = ProblemConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {line}: expected key = value")))?;
            let (key, value) = (key.trim(), value.trim().to_string());
            match key {
                "ring" => set_once(&mut cfg.ring, value, key, line)?,
                "n" => {
                    let n = value
                        .parse()
                        .map_err(|_| Error::Parse(format!("line {line}: n must be a positive integer")))?;
                    set_once(&mut cfg.n, n, key, line)?
                }
                "gen" => cfg.generators.push(tokens(&value)),
                "support" => set_once(&mut cfg.support, value, key, line)?,
                "command" => set_once(&mut cfg.command, value, key, line)?,
                "lattice" => set_once(&mut cfg.lattice, value, key, line)?,
                "r" => set_once(&mut cfg.r, parse_r(&value)?, key, line)?,
                "matrix" => cfg.matrix.push(tokens(&value)),
                "shape" => cfg.shapes.push(parse_shape(&value)?),
                "convention" => {
                    let c = match value.as_str() {
                        "column" => SumRankConvention::Column,
                        "row" => SumRankConvention::Row,
                        _ => return Err(Error::Parse(format!("line {line}: convention is `column` or `row`"))),
                    };
                    set_once(&mut cfg.convention, c, key, line)?
                }
                _ => return Err(Error::Parse(format!("line {line}: unknown key {key:?}"))),
            }
        }
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<ProblemConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        ProblemConfig::parse(&text)
    }

    pub fn ring(&self) -> Result<Pir> {
        self.ring
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("missing key `ring`".into()))?
            .parse()
    }

    /// Code length: `n`, or the length of the rows (or of the shapes).
    pub fn n(&self) -> Result<usize> {
        let from_shapes = (!self.shapes.is_empty()).then(|| self.shapes.iter().map(|&(m, n)| m * n).sum());
        let inferred = from_shapes.or_else(|| self.generators.first().map(|g| g.len()));
        match (self.n, inferred) {
            (Some(n), Some(k)) if n != k => Err(Error::DimensionMismatch { expected: n, got: k }),
            (Some(0), _) => Err(Error::InvalidArgument("n must be at least 1".into())),
            (Some(n), _) | (None, Some(n)) => Ok(n),
            (None, None) => Err(Error::InvalidArgument("missing key `n`".into())),
        }
    }

    fn rows(ring: &Pir, n: usize, rows: &[Vec<String>]) -> Result<Vec<Vec<RingElement>>> {
        rows.iter()
            .map(|row| {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: row.len(),
                    });
                }
                row.iter().map(|t| ring.parse_element(t)).collect()
            })
            .collect()
    }

    /// The span of the `gen` rows (the zero code when there are none).
    pub fn code(&self) -> Result<Code> {
        let ring = self.ring()?;
        let n = self.n()?;
        Code::span(&ring, n, Self::rows(&ring, n, &self.generators)?)
    }

    /// The matrix code described by `shape` lines over the prime field `ring`.
    pub fn matrix_code(&self) -> Result<MatrixCode> {
        if self.shapes.is_empty() {
            return Err(Error::InvalidArgument("a matrix code needs at least one `shape`".into()));
        }
        let ring = self.ring()?;
        if !ring.is_prime_field() {
            return Err(Error::InvalidRing(format!("matrix codes live over a prime field, got {ring}")));
        }
        let n = self.n()?;
        let rows = Self::rows(&ring, n, &self.generators)?;
        let ints: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|e| e.code() as i64).collect()).collect();
        MatrixCode::new(ring.size(), self.shapes.clone(), &ints)
    }

    /// Rows of `matrix`, which must be square.
    pub fn matrix_rows(&self) -> Result<Vec<Vec<RingElement>>> {
        if self.matrix.is_empty() {
            return Err(Error::InvalidArgument("missing `matrix` rows".into()));
        }
        let ring = self.ring()?;
        Self::rows(&ring, self.matrix.len(), &self.matrix)
    }

    pub fn support_name(&self) -> &str {
        self.support.as_deref().unwrap_or("chain")
    }

    /// `chain` (default), `hamming`, `tau`, `lee` (on `Z_4^1`) or `z6`
    /// (the coordinatewise support of `Z_6` with `supp(2) = (1,0)`).
    pub fn support_fn(&self, n: usize) -> Result<SupportFn> {
        let ring = self.ring()?;
        match self.support_name() {
            "chain" => Ok(SupportFn::chain(&ring, n)),
            "hamming" => Ok(SupportFn::hamming(&ring, n)),
            "tau" => SupportFn::tau(&ring, n),
            "lee" => {
                let lee = lee_z4();
                if lee.ring() != &ring || n != 1 {
                    return Err(Error::InvalidArgument("the Lee table lives on Z_4^1".into()));
                }
                Ok(lee)
            }
            "z6" => {
                let s = z6_product_support(n)?;
                if s.ring() != &ring {
                    return Err(Error::InvalidArgument("the z6 support lives on Z_6".into()));
                }
                Ok(s)
            }
            other => Err(Error::InvalidArgument(format!("unknown support {other:?}"))),
        }
    }

    pub fn lattice_name(&self) -> &str {
        self.lattice.as_deref().unwrap_or(if self.shapes.is_empty() { "chain" } else { "rank" })
    }
}
