//! Finite chain rings `Z_{p^k}` and principal ideal rings given as products
//! of them.
//!
//! A [`Pir`] is always presented in factored form `R_1 x ... x R_l`. Its
//! elements are encoded as mixed-radix codes over the factor residues, with
//! factor 0 as the least significant digit, so `Z_{p^k}` elements are just
//! their residues.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Label};
use crate::limits;

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The chain ring `Z_{p^k}`; its maximal ideal is generated by `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChainRing {
    p: u32,
    k: u32,
    modulus: u32,
}

impl ChainRing {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidRing("exponent must be at least 1".into()));
        }
        let modulus = (p as u64)
            .checked_pow(k)
            .filter(|&m| m <= limits::RING_SIZE)
            .ok_or_else(|| Error::CapExceeded {
                what: "chain ring",
                size: limits::pow_sat(p as u64, k as usize),
                cap: limits::RING_SIZE as u128,
            })?;
        Ok(ChainRing {
            p,
            k,
            modulus: modulus as u32,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Nilpotency index of the maximal ideal.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `|R/(alpha)|`.
    pub fn residue_field_size(&self) -> u32 {
        self.p
    }

    pub fn is_field(&self) -> bool {
        self.k == 1
    }

    /// The `t` with `r = unit * p^t`; `valuation(0) = k`.
    pub fn valuation(&self, r: u32) -> u32 {
        let mut r = r % self.modulus;
        if r == 0 {
            return self.k;
        }
        let mut t = 0;
        while r.is_multiple_of(self.p) {
            r /= self.p;
            t += 1;
        }
        t
    }

    pub fn is_unit(&self, r: u32) -> bool {
        !r.is_multiple_of(self.p)
    }

    /// Size of the ideal `(p^e)`, i.e. `p^(k-e)`.
    pub fn ideal_size(&self, e: u32) -> u32 {
        self.p.pow(self.k - e.min(self.k))
    }
}

impl fmt::Display for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{{{}^{}}}", self.p, self.k)
    }
}

/// An element of a [`Pir`], as a mixed-radix code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingElement(pub(crate) u32);

impl RingElement {
    pub fn code(self) -> u32 {
        self.0
    }
}

/// A vector of `R^n`.
pub type Vector = Vec<RingElement>;

/// An ideal `(alpha_1^{e_1}) x ... x (alpha_l^{e_l})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    pub exponents: Vec<u32>,
}

/// A finite principal ideal ring `R_1 x ... x R_l` with chain-ring factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pir {
    factors: Vec<ChainRing>,
    strides: Vec<u32>,
    size: u32,
}

impl Pir {
    pub fn new(factors: Vec<ChainRing>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one factor".into()));
        }
        let mut strides = Vec::with_capacity(factors.len());
        let mut size: u64 = 1;
        for f in &factors {
            strides.push(size as u32);
            size *= f.modulus as u64;
            limits::check("ring", size as u128, limits::RING_SIZE)?;
        }
        Ok(Pir {
            factors,
            strides,
            size: size as u32,
        })
    }

    /// The chain ring `Z_{p^k}` as a one-factor ring.
    pub fn chain(p: u32, k: u32) -> Result<Self> {
        Pir::new(vec![ChainRing::new(p, k)?])
    }

    /// The prime field `F_p`.
    pub fn field(p: u32) -> Result<Self> {
        Pir::chain(p, 1)
    }

    pub fn factors(&self) -> &[ChainRing] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, i: usize) -> &ChainRing {
        &self.factors[i]
    }

    /// The `i`-th factor as a ring in its own right.
    pub fn factor_ring(&self, i: usize) -> Pir {
        Pir::new(vec![self.factors[i]]).expect("factor of a valid ring")
    }

    pub fn is_chain_ring(&self) -> bool {
        self.factors.len() == 1
    }

    /// True for `F_p`.
    pub fn is_prime_field(&self) -> bool {
        self.is_chain_ring() && self.factors[0].is_field()
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// True when the factor moduli are pairwise coprime, so `R = Z_N`.
    pub fn is_cyclic(&self) -> bool {
        for (i, a) in self.factors.iter().enumerate() {
            for b in &self.factors[i + 1..] {
                if gcd(a.modulus as u64, b.modulus as u64) != 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn zero(&self) -> RingElement {
        RingElement(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_integer(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> {
        (0..self.size).map(RingElement)
    }

    pub fn coord(&self, e: RingElement, i: usize) -> u32 {
        (e.0 / self.strides[i]) % self.factors[i].modulus
    }

    pub fn coords(&self, e: RingElement) -> Vec<u32> {
        (0..self.factors.len()).map(|i| self.coord(e, i)).collect()
    }

    /// Builds an element from per-factor residues (reduced modulo each factor).
    pub fn element(&self, coords: &[i64]) -> Result<RingElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                expected: self.factors.len(),
                got: coords.len(),
            });
        }
        Ok(self.compose(coords.iter().zip(&self.factors).map(|(&c, f)| {
            c.rem_euclid(f.modulus as i64) as u32
        })))
    }

    fn compose(&self, residues: impl Iterator<Item = u32>) -> RingElement {
        RingElement(
            residues
                .zip(&self.strides)
                .map(|(r, s)| r * s)
                .sum::<u32>(),
        )
    }

    /// Image of an integer under `Z -> R`.
    pub fn from_integer(&self, n: i64) -> RingElement {
        self.compose(
            self.factors
                .iter()
                .map(|f| n.rem_euclid(f.modulus as i64) as u32),
        )
    }

    /// Inverse of [`Pir::from_integer`] when the ring is `Z_N`.
    pub fn to_integer(&self, e: RingElement) -> Option<u64> {
        if !self.is_cyclic() {
            return None;
        }
        let n: u64 = self.factors.iter().map(|f| f.modulus as u64).product();
        (0..n).find(|&m| self.from_integer(m as i64) == e)
    }

    fn zip_with(&self, a: RingElement, b: RingElement, op: impl Fn(u64, u64, u64) -> u64) -> RingElement {
        self.compose(self.factors.iter().enumerate().map(|(i, f)| {
            let m = f.modulus as u64;
            op(self.coord(a, i) as u64, self.coord(b, i) as u64, m) as u32
        }))
    }

    pub fn add(&self, a: RingElement, b: RingElement) -> RingElement {
        if self.factors.len() == 1 {
            return RingElement((a.0 + b.0) % self.size);
        }
        self.zip_with(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: RingElement, b: RingElement) -> RingElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        if self.factors.len() == 1 {
            return RingElement(((a.0 as u64 * b.0 as u64) % self.size as u64) as u32);
        }
        self.zip_with(a, b, |x, y, m| (x * y) % m)
    }

    pub fn neg(&self, a: RingElement) -> RingElement {
        self.compose(
            self.factors
                .iter()
                .enumerate()
                .map(|(i, f)| (f.modulus - self.coord(a, i)) % f.modulus),
        )
    }

    /// Unit iff every coordinate is coprime to its prime.
    pub fn is_unit(&self, a: RingElement) -> bool {
        self.factors
            .iter()
            .enumerate()
            .all(|(i, f)| f.is_unit(self.coord(a, i)))
    }

    pub fn inverse(&self, a: RingElement) -> Option<RingElement> {
        if !self.is_unit(a) {
            return None;
        }
        let one = self.one();
        self.elements().find(|&b| self.mul(a, b) == one)
    }

    /// Valuation of the `i`-th coordinate in its chain ring.
    pub fn valuation(&self, e: RingElement, i: usize) -> u32 {
        self.factors[i].valuation(self.coord(e, i))
    }

    /// Projection onto the `i`-th factor ring.
    pub fn project(&self, e: RingElement, i: usize) -> RingElement {
        RingElement(self.coord(e, i))
    }

    /// Embeds an element of the `i`-th factor ring, other coordinates zero.
    pub fn embed(&self, i: usize, e: RingElement) -> RingElement {
        RingElement((e.0 % self.factors[i].modulus) * self.strides[i])
    }

    pub fn ideal_contains(&self, ideal: &Ideal, e: RingElement) -> bool {
        ideal
            .exponents
            .iter()
            .enumerate()
            .all(|(i, &ex)| self.valuation(e, i) >= ex)
    }

    /// The principal ideal generated by `e`.
    pub fn principal_ideal(&self, e: RingElement) -> Ideal {
        Ideal {
            exponents: (0..self.factors.len()).map(|i| self.valuation(e, i)).collect(),
        }
    }

    pub fn ideal_size(&self, ideal: &Ideal) -> u64 {
        self.factors
            .iter()
            .zip(&ideal.exponents)
            .map(|(f, &e)| f.ideal_size(e) as u64)
            .product()
    }

    /// `p_1^{e_1} ... ` as an element: the canonical generator of `ideal`.
    pub fn ideal_generator(&self, ideal: &Ideal) -> RingElement {
        self.compose(
            self.factors
                .iter()
                .zip(&ideal.exponents)
                .map(|(f, &e)| if e >= f.k { 0 } else { f.p.pow(e) }),
        )
    }

    pub fn ideal_elements(&self, ideal: &Ideal) -> Vec<RingElement> {
        self.elements().filter(|&e| self.ideal_contains(ideal, e)).collect()
    }

    /// All ideals, in mixed-radix order of their exponent tuples.
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut out = vec![Ideal { exponents: vec![] }];
        for f in &self.factors {
            out = out
                .into_iter()
                .flat_map(|id| {
                    (0..=f.k).map(move |e| {
                        let mut ex = id.exponents.clone();
                        ex.push(e);
                        Ideal { exponents: ex }
                    })
                })
                .collect();
        }
        out
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            exponents: self.factors.iter().map(|f| f.k).collect(),
        }
    }

    pub fn unit_ideal(&self) -> Ideal {
        Ideal {
            exponents: vec![0; self.factors.len()],
        }
    }

    pub fn ideal_le(&self, a: &Ideal, b: &Ideal) -> bool {
        a.exponents.iter().zip(&b.exponents).all(|(x, y)| x >= y)
    }

    pub fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Ideal {
        Ideal {
            exponents: a.exponents.iter().zip(&b.exponents).map(|(&x, &y)| x.min(y)).collect(),
        }
    }

    pub fn ideal_intersection(&self, a: &Ideal, b: &Ideal) -> Ideal {
        Ideal {
            exponents: a.exponents.iter().zip(&b.exponents).map(|(&x, &y)| x.max(y)).collect(),
        }
    }

    /// The lattice of ideals ordered by inclusion, labelled by exponent tuples.
    pub fn ideal_lattice(&self) -> FiniteLattice {
        let ideals = self.ideals();
        let labels = ideals
            .iter()
            .map(|id| Label::Vector(id.exponents.iter().map(|&e| e as i64).collect()))
            .collect();
        FiniteLattice::build(labels, |a, b| self.ideal_le(&ideals[a], &ideals[b]))
            .expect("ideals of a principal ideal ring form a lattice")
    }

    /// Human-readable form: the integer for `Z_N`, a residue tuple otherwise.
    pub fn format(&self, e: RingElement) -> String {
        if self.factors.len() == 1 {
            return e.0.to_string();
        }
        match self.to_integer(e) {
            Some(n) => n.to_string(),
            None => {
                let parts: Vec<String> = self.coords(e).iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Parses an element written as an integer or as a residue tuple `(a,b,..)`.
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let coords = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            return self.element(&coords);
        }
        let n: i64 = s.parse().map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
        if self.factors.len() > 1 && !self.is_cyclic() {
            return Err(Error::Parse(format!(
                "{s:?}: integers are ambiguous in {self}; use a residue tuple"
            )));
        }
        Ok(self.from_integer(n))
    }

    /// `|R|^n`, checked against the ambient-space cap.
    pub fn space_size(&self, n: usize) -> Result<u64> {
        let size = limits::pow_sat(self.size as u64, n);
        limits::check("ambient space R^n", size, limits::AMBIENT_SPACE)?;
        Ok(size as u64)
    }

    /// Index of a vector among all of `R^n` (coordinate 0 least significant).
    pub fn vector_index(&self, v: &[RingElement]) -> u64 {
        v.iter().rev().fold(0u64, |acc, e| acc * self.size as u64 + e.0 as u64)
    }

    pub fn vector_from_index(&self, mut idx: u64, n: usize) -> Vector {
        (0..n)
            .map(|_| {
                let e = RingElement((idx % self.size as u64) as u32);
                idx /= self.size as u64;
                e
            })
            .collect()
    }

    /// Every vector of `R^n` in index order (cap-checked).
    pub fn all_vectors(&self, n: usize) -> Result<impl Iterator<Item = Vector> + '_> {
        let total = self.space_size(n)?;
        Ok((0..total).map(move |i| self.vector_from_index(i, n)))
    }

    pub fn vec_add(&self, a: &[RingElement], b: &[RingElement]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn vec_scale(&self, r: RingElement, v: &[RingElement]) -> Vector {
        v.iter().map(|&x| self.mul(r, x)).collect()
    }

    pub fn vec_is_zero(&self, v: &[RingElement]) -> bool {
        v.iter().all(|e| e.0 == 0)
    }

    pub fn zero_vector(&self, n: usize) -> Vector {
        vec![RingElement(0); n]
    }

    /// Vector from integers (see [`Pir::from_integer`]).
    pub fn vector(&self, entries: &[i64]) -> Vector {
        entries.iter().map(|&x| self.from_integer(x)).collect()
    }
}

impl fmt::Display for Pir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" x "))
    }
}

fn parse_factor(tok: &str) -> Result<Vec<ChainRing>> {
    let bad = || Error::Parse(format!("cannot read ring factor {tok:?}"));
    let body = tok.trim().strip_prefix("Z_").ok_or_else(bad)?;
    let body = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .unwrap_or(body);
    if let Some((p, k)) = body.split_once('^') {
        let p = p.trim().parse().map_err(|_| bad())?;
        let k = k.trim().parse().map_err(|_| bad())?;
        return Ok(vec![ChainRing::new(p, k)?]);
    }
    // a bare modulus is split into its prime power factors
    let n: u32 = body.trim().parse().map_err(|_| bad())?;
    if n < 2 {
        return Err(bad());
    }
    let (mut m, mut out) = (n, vec![]);
    let mut p = 2;
    while m > 1 {
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        if k > 0 {
            out.push(ChainRing::new(p, k)?);
        }
        p += 1;
    }
    Ok(out)
}

impl FromStr for Pir {
    type Err = Error;

    /// `Z_{p^k}` or `Z_{p1^k1} x Z_{p2^k2} x ...`; a bare `Z_n` is split by
    /// the Chinese remainder theorem, so `Z_6` reads as `Z_2 x Z_3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = vec![];
        for tok in s.split(['x', '×', '*']) {
            factors.extend(parse_factor(tok)?);
        }
        Pir::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations_in_z8() {
        let r = ChainRing::new(2, 3).unwrap();
        assert_eq!(r.valuation(4), 2);
        assert_eq!(r.valuation(0), 3);
        assert_eq!(r.valuation(6), 1);
        assert_eq!(r.valuation(5), 0);
    }

    #[test]
    fn unit_test_in_z4() {
        let r = Pir::chain(2, 2).unwrap();
        assert!(r.is_unit(r.from_integer(3)));
        assert!(!r.is_unit(r.from_integer(2)));
    }

    #[test]
    fn z6_zero_divisors() {
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        let two = r.from_integer(2);
        let three = r.from_integer(3);
        assert_eq!(r.coords(two), vec![0, 2]);
        assert_eq!(r.coords(three), vec![1, 0]);
        assert_eq!(r.mul(two, three), r.zero());
    }

    #[test]
    fn every_nonzero_element_is_unit_times_power() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 6), (7, 2)] {
            let c = ChainRing::new(p, k).unwrap();
            for r in 1..c.modulus() {
                let t = c.valuation(r);
                let pt = p.pow(t);
                let found = (0..c.modulus())
                    .filter(|&u| c.is_unit(u))
                    .any(|u| (u as u64 * pt as u64) % c.modulus() as u64 == r as u64);
                assert!(found, "{r} in Z_{p}^{k}");
            }
        }
    }

    #[test]
    fn crt_product_agrees_with_direct_arithmetic() {
        for spec in ["Z_2 x Z_3", "Z_4 x Z_3", "Z_2 x Z_5", "Z_4 x Z_9", "Z_2 x Z_3 x Z_5"] {
            let r: Pir = spec.parse().unwrap();
            let n = r.size() as i64;
            assert!(n <= 100 || spec == "Z_4 x Z_9");
            for a in 0..n {
                for b in 0..n {
                    let (ea, eb) = (r.from_integer(a), r.from_integer(b));
                    assert_eq!(r.add(ea, eb), r.from_integer(a + b));
                    assert_eq!(r.mul(ea, eb), r.from_integer(a * b));
                    assert_eq!(r.neg(ea), r.from_integer(-a));
                }
                assert_eq!(r.to_integer(r.from_integer(a)), Some(a as u64));
            }
        }
    }

    #[test]
    fn ideal_sizes_and_grading() {
        let r = Pir::chain(3, 2).unwrap();
        for e in 0..=2 {
            let id = Ideal { exponents: vec![e] };
            assert_eq!(r.ideal_size(&id), 3u64.pow(2 - e));
            assert_eq!(r.ideal_elements(&id).len() as u64, r.ideal_size(&id));
        }
        let lat = r.ideal_lattice();
        let h = lat.heights().unwrap();
        for (i, l) in lat.labels().iter().enumerate() {
            let Label::Vector(v) = l else { panic!() };
            assert_eq!(h[i] as i64, 2 - v[0]);
        }
    }

    #[test]
    fn ideal_lattices() {
        assert_eq!(Pir::chain(2, 3).unwrap().ideal_lattice().len(), 4);
        let z6 = "Z_2 x Z_3".parse::<Pir>().unwrap().ideal_lattice();
        assert_eq!(z6.len(), 4);
        assert_eq!(z6.atoms().len(), 2);
        let f2 = Pir::field(2).unwrap().ideal_lattice();
        assert_eq!(f2.len(), 2);
        assert!(Pir::chain(2, 3).unwrap().ideal_lattice().flags().is_distributive);
    }

    #[test]
    fn residue_fields() {
        assert_eq!(ChainRing::new(2, 3).unwrap().residue_field_size(), 2);
        assert_eq!(ChainRing::new(3, 2).unwrap().residue_field_size(), 3);
        assert_eq!(ChainRing::new(2, 2).unwrap().residue_field_size(), 2);
    }

    #[test]
    fn parsing() {
        let r: Pir = "Z_{2^2} x Z_{3^1}".parse().unwrap();
        assert_eq!(r.size(), 12);
        assert_eq!(r.to_string(), "Z_{2^2} x Z_{3^1}");
        assert_eq!("Z_8".parse::<Pir>().unwrap().factor(0).k(), 3);
        assert_eq!("Z_6".parse::<Pir>().unwrap().to_string(), "Z_{2^1} x Z_{3^1}");
        assert!("Z_{4^1}".parse::<Pir>().is_err());
        let r: Pir = "Z_2 x Z_2".parse().unwrap();
        assert!(!r.is_cyclic());
        assert!(r.parse_element("1").is_err());
        assert_eq!(r.coords(r.parse_element("(1,0)").unwrap()), vec![1, 0]);
    }

    #[test]
    fn coordinate_count_mismatch() {
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        assert!(matches!(r.element(&[1]), Err(Error::DimensionMismatch { .. })));
    }
}
