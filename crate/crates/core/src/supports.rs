//! Supports `R^n -> Z^u` and the weights they induce.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::codes::{Code, RectangularModule};
use crate::error::{Error, Result};
use crate::limits;
use crate::report::{ensure, Report};
use crate::ring::{Pir, RingElement, Vector};

/// A point of `Z^u` with nonnegative coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Default)]
#[serde(transparent)]
pub struct SupportVec(pub Vec<u32>);

impl SupportVec {
    pub fn zeros(u: usize) -> Self {
        SupportVec(vec![0; u])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// The 1-norm.
    pub fn norm(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn le(&self, other: &SupportVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, other: &SupportVec) -> SupportVec {
        SupportVec(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn meet(&self, other: &SupportVec) -> SupportVec {
        SupportVec(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }
}

impl fmt::Display for SupportVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportKind {
    /// Indicator of the nonzero coordinates, one output per coordinate.
    Hamming,
    /// `k_i - valuation` per coordinate and factor; output `j * l + i` is
    /// factor `i` of coordinate `j`.
    Chain,
    /// One support on `R^1` per coordinate, outputs concatenated.
    StandardProduct(Vec<SupportFn>),
    /// Explicit table indexed by [`Pir::vector_index`].
    Custom(Arc<Vec<SupportVec>>),
}

/// A function `R^n -> Z^u`; constructors other than
/// [`SupportFn::from_table_unchecked`] only produce valid supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFn {
    ring: Pir,
    n: usize,
    u: usize,
    kind: SupportKind,
}

impl SupportFn {
    pub fn hamming(ring: &Pir, n: usize) -> SupportFn {
        SupportFn {
            ring: ring.clone(),
            n,
            u: n,
            kind: SupportKind::Hamming,
        }
    }

    /// The chain support; over a product ring it is the product of the
    /// factor chain supports.
    pub fn chain(ring: &Pir, n: usize) -> SupportFn {
        SupportFn {
            ring: ring.clone(),
            n,
            u: n * ring.num_factors(),
            kind: SupportKind::Chain,
        }
    }

    /// Coordinatewise product of supports on `R^1`.
    pub fn standard_product(parts: Vec<SupportFn>) -> Result<SupportFn> {
        let ring = parts
            .first()
            .map(|p| p.ring.clone())
            .ok_or_else(|| Error::InvalidSupport("a product needs at least one part".into()))?;
        if parts.iter().any(|p| p.n != 1 || p.ring != ring) {
            return Err(Error::InvalidSupport("product parts must be supports on R^1".into()));
        }
        Ok(SupportFn {
            n: parts.len(),
            u: parts.iter().map(|p| p.u).sum(),
            ring,
            kind: SupportKind::StandardProduct(parts),
        })
    }

    /// A support given by its full table, validated against axioms 1-3.
    pub fn custom(ring: &Pir, n: usize, u: usize, table: Vec<SupportVec>) -> Result<SupportFn> {
        let s = SupportFn::from_table_unchecked(ring, n, u, table)?;
        let report = s.validate()?;
        if !report.is_ok() {
            return Err(Error::InvalidSupport(report.to_string()));
        }
        Ok(s)
    }

    /// A table-defined function that is not checked against the axioms.
    pub fn from_table_unchecked(ring: &Pir, n: usize, u: usize, table: Vec<SupportVec>) -> Result<SupportFn> {
        let size = ring.space_size(n)?;
        if table.len() as u64 != size {
            return Err(Error::DimensionMismatch {
                expected: size as usize,
                got: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|s| s.len() != u) {
            return Err(Error::DimensionMismatch {
                expected: u,
                got: bad.len(),
            });
        }
        Ok(SupportFn {
            ring: ring.clone(),
            n,
            u,
            kind: SupportKind::Custom(Arc::new(table)),
        })
    }

    /// Tabulates `f` on all of `R^n`, without checking the axioms.
    pub fn from_fn_unchecked(ring: &Pir, n: usize, u: usize, f: impl Fn(&[RingElement]) -> Vec<u32>) -> Result<SupportFn> {
        let table = ring.all_vectors(n)?.map(|v| SupportVec(f(&v))).collect();
        SupportFn::from_table_unchecked(ring, n, u, table)
    }

    /// `0` at the zero vector and `1` everywhere else.
    pub fn tau(ring: &Pir, n: usize) -> Result<SupportFn> {
        SupportFn::from_fn_unchecked(ring, n, 1, |v| vec![u32::from(v.iter().any(|e| e.code() != 0))])
    }

    pub fn ring(&self) -> &Pir {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn kind(&self) -> &SupportKind {
        &self.kind
    }

    /// Product of supports on single coordinates.
    pub fn is_standard(&self) -> bool {
        !matches!(self.kind, SupportKind::Custom(_))
    }

    pub fn eval(&self, v: &[RingElement]) -> SupportVec {
        debug_assert_eq!(v.len(), self.n);
        match &self.kind {
            SupportKind::Hamming => SupportVec(v.iter().map(|e| u32::from(e.code() != 0)).collect()),
            SupportKind::Chain => {
                let l = self.ring.num_factors();
                let mut out = Vec::with_capacity(self.u);
                for &e in v {
                    for i in 0..l {
                        out.push(self.ring.factor(i).k() - self.ring.valuation(e, i));
                    }
                }
                SupportVec(out)
            }
            SupportKind::StandardProduct(parts) => SupportVec(
                parts
                    .iter()
                    .zip(v)
                    .flat_map(|(p, &e)| p.eval(&[e]).0)
                    .collect(),
            ),
            SupportKind::Custom(table) => table[self.ring.vector_index(v) as usize].clone(),
        }
    }

    /// `supp(X)`, the join of the supports of the elements of `X`.
    pub fn set_support<'a>(&self, xs: impl IntoIterator<Item = &'a Vector>) -> SupportVec {
        xs.into_iter()
            .fold(SupportVec::zeros(self.u), |acc, x| acc.join(&self.eval(x)))
    }

    pub fn weight(&self, v: &[RingElement]) -> u32 {
        self.eval(v).norm()
    }

    /// `supp(C)`.
    pub fn code_support(&self, c: &Code) -> SupportVec {
        self.set_support(c.codewords())
    }

    /// `wt(C) = |supp(C)|`.
    pub fn code_weight(&self, c: &Code) -> u32 {
        self.code_support(c).norm()
    }

    /// Minimum weight over nonzero codewords and maximum weight over all.
    pub fn min_max_weight(&self, c: &Code) -> Result<(u32, u32)> {
        let min = c
            .codewords()
            .iter()
            .filter(|w| !self.ring.vec_is_zero(w))
            .map(|w| self.weight(w))
            .min()
            .ok_or_else(|| Error::InvalidArgument("the zero code has no minimum weight".into()))?;
        let max = c.codewords().iter().map(|w| self.weight(w)).max().unwrap_or(0);
        Ok((min, max))
    }

    /// `supp(R^n)`.
    pub fn ambient_support(&self) -> SupportVec {
        match &self.kind {
            SupportKind::Hamming => SupportVec(vec![1; self.u]),
            SupportKind::Chain => SupportVec(
                (0..self.n)
                    .flat_map(|_| self.ring.factors().iter().map(|f| f.k()))
                    .collect(),
            ),
            SupportKind::StandardProduct(parts) => {
                SupportVec(parts.iter().flat_map(|p| p.ambient_support().0).collect())
            }
            SupportKind::Custom(table) => table
                .iter()
                .fold(SupportVec::zeros(self.u), |acc, s| acc.join(s)),
        }
    }

    /// `supp(M)` for a rectangular module.
    pub fn rect_support(&self, m: &RectangularModule) -> SupportVec {
        if self.is_standard() {
            let gens: Vector = m.ideals.iter().map(|id| self.ring.ideal_generator(id)).collect();
            self.eval(&gens)
        } else {
            self.code_support(&m.to_code(&self.ring))
        }
    }

    fn all_supports(&self) -> Result<(Vec<Vector>, Vec<SupportVec>)> {
        let vs: Vec<Vector> = self.ring.all_vectors(self.n)?.collect();
        let ss = vs.iter().map(|v| self.eval(v)).collect();
        Ok((vs, ss))
    }

    fn idx(&self, v: &[RingElement]) -> usize {
        self.ring.vector_index(v) as usize
    }

    /// Checks axioms 1-3 over all of `R^n`, reporting the first witness.
    pub fn validate(&self) -> Result<Report> {
        let size = self.ring.space_size(self.n)? as u128;
        limits::check("support validation", size * size, limits::VALIDATION_WORK)?;
        let (vs, ss) = self.all_supports()?;
        let ring = &self.ring;
        Ok((|| {
            for (v, s) in vs.iter().zip(&ss) {
                ensure!(ring.vec_is_zero(v) == s.is_zero(), "axiom 1", "v={}", fmt_vec(ring, v));
            }
            for (v, s) in vs.iter().zip(&ss) {
                for r in ring.elements() {
                    let rv = &ss[self.idx(&ring.vec_scale(r, v))];
                    ensure!(rv.le(s), "axiom 2", "r={}, v={}", ring.format(r), fmt_vec(ring, v));
                }
            }
            for (v, sv) in vs.iter().zip(&ss) {
                for (w, sw) in vs.iter().zip(&ss) {
                    let s = &ss[self.idx(&ring.vec_add(v, w))];
                    ensure!(
                        s.le(&sv.join(sw)),
                        "axiom 3",
                        "v={}, w={}",
                        fmt_vec(ring, v),
                        fmt_vec(ring, w)
                    );
                }
            }
            Report::ok()
        })())
    }

    /// Checks the modularity axiom: whenever `0 < supp(v)_i <= supp(w)_i`
    /// some `r` gives `supp(v + r w)_i < supp(v)_i`.
    pub fn validate_modular(&self) -> Result<Report> {
        let size = self.ring.space_size(self.n)? as u128;
        limits::check(
            "modularity validation",
            size * size * self.ring.size() as u128,
            limits::VALIDATION_WORK,
        )?;
        let (vs, ss) = self.all_supports()?;
        let ring = &self.ring;
        Ok((|| {
            for (v, sv) in vs.iter().zip(&ss) {
                for (w, sw) in vs.iter().zip(&ss) {
                    for i in 0..self.u {
                        if sv.0[i] == 0 || sv.0[i] > sw.0[i] {
                            continue;
                        }
                        let ok = ring.elements().any(|r| {
                            ss[self.idx(&ring.vec_add(v, &ring.vec_scale(r, w)))].0[i] < sv.0[i]
                        });
                        ensure!(
                            ok,
                            "axiom 4",
                            "v={}, w={}, i={}",
                            fmt_vec(ring, v),
                            fmt_vec(ring, w),
                            i + 1
                        );
                    }
                }
            }
            Report::ok()
        })())
    }

    /// Axioms 1-4 together.
    pub fn is_modular_support(&self) -> Result<bool> {
        Ok(self.validate()?.is_ok() && self.validate_modular()?.is_ok())
    }

    /// Agreement on every vector of `R^n`.
    pub fn same_values(&self, other: &SupportFn) -> Result<bool> {
        if self.ring != other.ring || self.n != other.n || self.u != other.u {
            return Ok(false);
        }
        Ok(self.ring.all_vectors(self.n)?.all(|v| self.eval(&v) == other.eval(&v)))
    }

    /// Splits a modular support over `R_1 x ... x R_l` into supports on the
    /// factors `R_i^n`.
    pub fn split(&self) -> Result<SplitSupport> {
        if !self.is_modular_support()? {
            return Err(Error::NotModular("only modular supports split over the factors".into()));
        }
        let l = self.ring.num_factors();
        if l == 1 {
            return Ok(SplitSupport {
                parts: vec![self.clone()],
                coordinates: vec![(0..self.u).collect()],
            });
        }
        let factor_vectors: Vec<Vec<Vector>> = (0..l)
            .map(|i| {
                let fr = self.ring.factor_ring(i);
                fr.all_vectors(self.n).map(|it| it.collect())})
            .collect::<Result<_>>()?;
        let embed = |i: usize, v: &[RingElement]| -> Vector { v.iter().map(|&e| self.ring.embed(i, e)).collect() };
        // each output coordinate is moved by exactly one factor
        let mut coordinates: Vec<Vec<usize>> = vec![vec![]; l];
        for c in 0..self.u {
            let movers: Vec<usize> = (0..l)
                .filter(|&i| factor_vectors[i].iter().any(|v| self.eval(&embed(i, v)).0[c] != 0))
                .collect();
            match movers.as_slice() {
                [i] => coordinates[*i].push(c),
                _ => {
                    return Err(Error::InvalidSupport(format!(
                        "output {} is moved by {} factors",
                        c + 1,
                        movers.len()
                    )))
                }
            }
        }
        let mut parts = Vec::with_capacity(l);
        for i in 0..l {
            let fr = self.ring.factor_ring(i);
            let table = factor_vectors[i]
                .iter()
                .map(|v| {
                    let s = self.eval(&embed(i, v));
                    SupportVec(coordinates[i].iter().map(|&c| s.0[c]).collect())
                })
                .collect();
            parts.push(SupportFn::from_table_unchecked(&fr, self.n, coordinates[i].len(), table)?);
        }
        let split = SplitSupport { parts, coordinates };
        for v in self.ring.all_vectors(self.n)? {
            if split.recombine(&self.ring, &v) != self.eval(&v) {
                return Err(Error::InvalidSupport(format!(
                    "support is not a product over the factors at v={}",
                    fmt_vec(&self.ring, &v)
                )));
            }
        }
        Ok(split)
    }
}

/// Per-factor supports and, for each factor, the output coordinates of the
/// original support that it accounts for.
#[derive(Clone, Debug)]
pub struct SplitSupport {
    pub parts: Vec<SupportFn>,
    pub coordinates: Vec<Vec<usize>>,
}

impl SplitSupport {
    /// Reassembles `supp(v)` from the factor supports of the projections.
    pub fn recombine(&self, ring: &Pir, v: &[RingElement]) -> SupportVec {
        let u: usize = self.coordinates.iter().map(|c| c.len()).sum();
        let mut out = vec![0; u];
        for (i, (part, coords)) in self.parts.iter().zip(&self.coordinates).enumerate() {
            let proj: Vector = if ring.num_factors() == 1 {
                v.to_vec()
            } else {
                v.iter().map(|&e| ring.project(e, i)).collect()
            };
            for (&c, x) in coords.iter().zip(part.eval(&proj).0) {
                out[c] = x;
            }
        }
        SupportVec(out)
    }

    /// Output coordinates in factor order.
    pub fn permutation(&self) -> Vec<usize> {
        self.coordinates.concat()
    }
}

pub(crate) fn fmt_vec(ring: &Pir, v: &[RingElement]) -> String {
    if v.len() == 1 {
        return ring.format(v[0]);
    }
    let parts: Vec<String> = v.iter().map(|&e| ring.format(e)).collect();
    format!("({})", parts.join(","))
}

/// The Lee "support" on `Z_4`, which violates axiom 2.
pub fn lee_z4() -> SupportFn {
    let ring = Pir::chain(2, 2).expect("Z_4");
    let table = [0, 1, 2, 1].iter().map(|&x| SupportVec(vec![x])).collect();
    SupportFn::from_table_unchecked(&ring, 1, 1, table).expect("table of the right size")
}

/// The support on `Z_6 = Z_2 x Z_3` with `supp(1) = (1,1)`, `supp(2) = (1,0)`,
/// `supp(3) = (0,1)`, applied coordinatewise on `Z_6^n`.
pub fn z6_product_support(n: usize) -> Result<SupportFn> {
    let ring: Pir = "Z_2 x Z_3".parse()?;
    let one = SupportFn::from_fn_unchecked(&ring, 1, 2, |v| {
        let r = ring.to_integer(v[0]).expect("Z_6 is cyclic");
        vec![u32::from(!r.is_multiple_of(3)), u32::from(!r.is_multiple_of(2))]
    })?;
    SupportFn::standard_product(vec![one; n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(ring: &Pir, xs: &[i64]) -> Vector {
        ring.vector(xs)
    }

    #[test]
    fn chain_support_values() {
        let z4 = Pir::chain(2, 2).unwrap();
        let s = SupportFn::chain(&z4, 1);
        assert_eq!(s.eval(&v(&z4, &[2])).0, vec![1]);
        assert_eq!(s.eval(&v(&z4, &[1])).0, vec![2]);
        assert_eq!(s.eval(&v(&z4, &[3])).0, vec![2]);
        assert_eq!(s.eval(&v(&z4, &[0])).0, vec![0]);
        let s2 = SupportFn::chain(&z4, 2);
        assert_eq!(s2.weight(&v(&z4, &[1, 2])), 3);
        let f2 = Pir::field(2).unwrap();
        assert_eq!(SupportFn::hamming(&f2, 3).weight(&v(&f2, &[1, 1, 0])), 2);
    }

    #[test]
    fn chain_is_k_minus_valuation() {
        for (p, k) in [(2, 3), (3, 2), (5, 1)] {
            let r = Pir::chain(p, k).unwrap();
            let s = SupportFn::chain(&r, 1);
            for e in r.elements() {
                // min{ i : e in (p^(k-i)) }
                let by_def = (0..=k)
                    .find(|&i| (e.code() as u64).is_multiple_of((p as u64).pow(k - i)))
                    .unwrap();
                assert_eq!(s.eval(&[e]).0[0], by_def);
            }
        }
    }

    #[test]
    fn z6_support_table() {
        let s = z6_product_support(1).unwrap();
        let r = s.ring().clone();
        assert_eq!(s.eval(&v(&r, &[1])).0, vec![1, 1]);
        assert_eq!(s.eval(&v(&r, &[2])).0, vec![1, 0]);
        assert_eq!(s.eval(&v(&r, &[3])).0, vec![0, 1]);
        assert_eq!(s.eval(&v(&r, &[0])).0, vec![0, 0]);
    }

    #[test]
    fn lee_violates_axiom_two() {
        let r = lee_z4().validate().unwrap();
        assert_eq!(r.rule(), Some("axiom 2"));
        assert_eq!(r.witness.as_deref(), Some("r=2, v=1"));
        let z4 = Pir::chain(2, 2).unwrap();
        let table = [0, 1, 2, 1].iter().map(|&x| SupportVec(vec![x])).collect();
        assert!(matches!(SupportFn::custom(&z4, 1, 1, table), Err(Error::InvalidSupport(_))));
    }

    #[test]
    fn chain_supports_are_modular() {
        for spec in ["Z_4", "Z_8", "Z_9", "Z_2 x Z_3"] {
            let r: Pir = spec.parse().unwrap();
            for n in 1..=2 {
                let s = SupportFn::chain(&r, n);
                assert!(s.validate().unwrap().is_ok(), "{spec}");
                assert!(s.validate_modular().unwrap().is_ok(), "{spec}");
            }
        }
    }

    #[test]
    fn tau_is_a_support_but_not_modular() {
        for q in [2, 3] {
            let f = Pir::field(q).unwrap();
            let t = SupportFn::tau(&f, 2).unwrap();
            assert!(t.validate().unwrap().is_ok());
            assert_eq!(t.validate_modular().unwrap().rule(), Some("axiom 4"));
            assert!(SupportFn::hamming(&f, 2).validate_modular().unwrap().is_ok());
        }
    }

    #[test]
    fn split_z6_example() {
        let s = z6_product_support(1).unwrap();
        let split = s.split().unwrap();
        let z2 = Pir::field(2).unwrap();
        let z3 = Pir::field(3).unwrap();
        assert!(split.parts[0].same_values(&SupportFn::hamming(&z2, 1)).unwrap());
        assert!(split.parts[1].same_values(&SupportFn::hamming(&z3, 1)).unwrap());
        assert_eq!(split.coordinates, vec![vec![1], vec![0]]);
        assert_eq!(split.permutation(), vec![1, 0]);
    }

    #[test]
    fn split_chain_support() {
        let z4 = Pir::chain(2, 2).unwrap();
        let s = SupportFn::chain(&z4, 1);
        let split = s.split().unwrap();
        assert_eq!(split.parts, vec![s]);
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        let split = SupportFn::chain(&r, 2).split().unwrap();
        for i in 0..2 {
            let fr = r.factor_ring(i);
            assert!(split.parts[i].same_values(&SupportFn::chain(&fr, 2)).unwrap());
            assert!(split.parts[i].is_modular_support().unwrap());
        }
        assert_eq!(split.coordinates, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn split_rejects_non_modular() {
        let f = Pir::field(2).unwrap();
        assert!(matches!(SupportFn::tau(&f, 2).unwrap().split(), Err(Error::NotModular(_))));
    }

    #[test]
    fn standard_supports_are_lattice_morphisms_on_rectangles() {
        for (spec, n) in [("Z_4", 2), ("Z_8", 1), ("Z_9", 2)] {
            let r: Pir = spec.parse().unwrap();
            let s = SupportFn::chain(&r, n);
            let rects = RectangularModule::all(&r, n);
            for a in &rects {
                let sa = s.rect_support(a);
                assert_eq!(sa, s.code_support(&a.to_code(&r)));
                for b in &rects {
                    let sb = s.rect_support(b);
                    assert_eq!(s.rect_support(&a.sum(&r, b)), sa.join(&sb));
                    assert_eq!(s.rect_support(&a.intersection(&r, b)), sa.meet(&sb));
                }
            }
        }
    }

    #[test]
    fn pir_rectangles_are_modular_and_strictly_increasing() {
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        for s in [SupportFn::chain(&r, 2), z6_product_support(2).unwrap()] {
            let rects = RectangularModule::all(&r, 2);
            for a in &rects {
                let sa = s.rect_support(a);
                for b in &rects {
                    let sb = s.rect_support(b);
                    let j = s.rect_support(&a.sum(&r, b));
                    let m = s.rect_support(&a.intersection(&r, b));
                    assert_eq!(sa.norm() + sb.norm(), j.norm() + m.norm());
                    if a != b && a.le(&r, b) {
                        assert!(sa.norm() < sb.norm());
                    }
                }
            }
        }
    }

    #[test]
    fn hamming_on_z6_is_not_modular_on_rectangles() {
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        let s = SupportFn::hamming(&r, 1);
        let m1 = Code::from_rows(&r, 1, &[vec![2]]).unwrap();
        let m2 = Code::from_rows(&r, 1, &[vec![3]]).unwrap();
        let lhs = s.code_weight(&m1) + s.code_weight(&m2);
        let rhs = s.code_weight(&m1.sum(&m2)) + s.code_weight(&m1.intersection(&m2));
        assert_eq!((lhs, rhs), (2, 1));
    }

    #[test]
    fn code_weights() {
        let z4 = Pir::chain(2, 2).unwrap();
        let c = Code::from_rows(&z4, 2, &[vec![1, 2]]).unwrap();
        let s = SupportFn::chain(&z4, 2);
        assert_eq!(s.code_support(&c).0, vec![2, 1]);
        assert_eq!(s.code_weight(&c), 3);
        assert_eq!(s.min_max_weight(&c).unwrap(), (1, 3));
        assert!(s.min_max_weight(&Code::zero(&z4, 2)).is_err());
        assert_eq!(s.ambient_support().0, vec![2, 2]);
    }
}
