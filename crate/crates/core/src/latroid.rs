//! Latroids `(rho, ||.||, L)` over scalars in `Q^u` with the product order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::report::{ensure, Report};

/// A point of `Q^u`, compared in the product order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(pub Vec<Rational64>);

impl Scalar {
    pub fn zero(u: usize) -> Self {
        Scalar(vec![Rational64::zero(); u])
    }

    pub fn int(x: i64) -> Self {
        Scalar(vec![Rational64::from_integer(x)])
    }

    pub fn ints(xs: &[i64]) -> Self {
        Scalar(xs.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar(vec![Rational64::new(num, den)])
    }

    pub fn u(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn le(&self, other: &Scalar) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lt(&self, other: &Scalar) -> bool {
        self.le(other) && self != other
    }

    pub fn ge(&self, other: &Scalar) -> bool {
        other.le(self)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// The single coordinate of a `u = 1` scalar.
    pub fn single(&self) -> Option<Rational64> {
        match self.0.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    /// The single coordinate as an integer.
    pub fn as_int(&self) -> Option<i64> {
        self.single().filter(|x| x.is_integer()).map(|x| x.to_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.is_integral().then(|| self.0.iter().map(|x| x.to_integer()).collect())
    }

    /// Sum of the coordinates.
    pub fn total(&self) -> Rational64 {
        self.0.iter().copied().sum()
    }

    pub fn scale(&self, k: Rational64) -> Scalar {
        Scalar(self.0.iter().map(|&x| x * k).collect())
    }

    pub fn min(&self, other: &Scalar) -> Scalar {
        Scalar(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(self.0.iter().map(|a| -a).collect())
    }
}

fn fmt_rational(x: &Rational64) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.single() {
            return f.write_str(&fmt_rational(&x));
        }
        let s: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Integers serialize as numbers, other rationals as `"p/q"` strings.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            if x.is_integer() {
                seq.serialize_element(&x.to_integer())?;
            } else {
                seq.serialize_element(&fmt_rational(x))?;
            }
        }
        seq.end()
    }
}

/// A rank function and a length function on a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Latroid {
    lattice: Arc<FiniteLattice>,
    rho: Vec<Scalar>,
    len: Vec<Scalar>,
}

impl Latroid {
    /// Pairs the two functions with the lattice; see [`Latroid::validate`]
    /// for the axioms.
    pub fn new(lattice: Arc<FiniteLattice>, rho: Vec<Scalar>, len: Vec<Scalar>) -> Result<Latroid> {
        let n = lattice.len();
        for v in [&rho, &len] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let u = len[0].u();
        if let Some(bad) = rho.iter().chain(&len).find(|s| s.u() != u) {
            return Err(Error::DimensionMismatch {
                expected: u,
                got: bad.u(),
            });
        }
        Ok(Latroid { lattice, rho, len })
    }

    /// `(hgt, hgt, L)`.
    pub fn free(lattice: Arc<FiniteLattice>) -> Result<Latroid> {
        let len = heights(&lattice)?;
        Latroid::new(lattice, len.clone(), len)
    }

    /// `(||.||, ||.||, L)`.
    pub fn free_with(lattice: Arc<FiniteLattice>, len: Vec<Scalar>) -> Result<Latroid> {
        Latroid::new(lattice, len.clone(), len)
    }

    /// `rho_a(L) = ||L||` if `||L|| <= a`, and `a` otherwise.
    pub fn uniform(lattice: Arc<FiniteLattice>, len: Vec<Scalar>, a: &Scalar) -> Result<Latroid> {
        if !a.is_nonnegative() || a.is_zero() {
            return Err(Error::InvalidArgument(format!("uniform latroids need a > 0, got {a}")));
        }
        let rho = len
            .iter()
            .map(|l| if l.le(a) { l.clone() } else { a.clone() })
            .collect();
        Latroid::new(lattice, rho, len)
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn lattice_arc(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn rho(&self, a: usize) -> &Scalar {
        &self.rho[a]
    }

    pub fn len(&self, a: usize) -> &Scalar {
        &self.len[a]
    }

    pub fn rhos(&self) -> &[Scalar] {
        &self.rho
    }

    pub fn lens(&self) -> &[Scalar] {
        &self.len
    }

    pub fn u(&self) -> usize {
        self.len[0].u()
    }

    pub fn size(&self) -> usize {
        self.lattice.len()
    }

    pub fn top_rank(&self) -> &Scalar {
        &self.rho[self.lattice.top()]
    }

    /// `||L|| - rho(L)`.
    pub fn nullity(&self, a: usize) -> Scalar {
        &self.len[a] - &self.rho[a]
    }

    fn pair(&self, a: usize, b: usize) -> String {
        format!("L={}, M={}", self.lattice.label(a), self.lattice.label(b))
    }

    /// Checks L1-L5 exhaustively (and that the lattice is modular).
    pub fn validate(&self) -> Report {
        let lat = &*self.lattice;
        let n = lat.len();
        let (rho, len) = (&self.rho, &self.len);
        ensure!(lat.flags().is_modular, "modular lattice", "the lattice is not modular");
        let bot = lat.bottom();
        ensure!(
            rho[bot].is_zero() && len[bot].is_zero(),
            "L1",
            "rho(0)={}, ||0||={}",
            rho[bot],
            len[bot]
        );
        for a in 0..n {
            for b in lat.up_set(a).filter(|&b| b != a) {
                ensure!(len[a].lt(&len[b]), "L2", "{}", self.pair(a, b));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let (j, m) = (lat.join(a, b), lat.meet(a, b));
                ensure!(&len[a] + &len[b] == &len[j] + &len[m], "L3", "{}", self.pair(a, b));
            }
        }
        for a in 0..n {
            for b in lat.up_set(a).filter(|&b| b != a) {
                let dr = &rho[b] - &rho[a];
                let dl = &len[b] - &len[a];
                ensure!(dr.is_nonnegative() && dr.le(&dl), "L4", "{}", self.pair(a, b));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let (j, m) = (lat.join(a, b), lat.meet(a, b));
                ensure!(
                    (&rho[a] + &rho[b]).ge(&(&rho[j] + &rho[m])),
                    "L5",
                    "{}",
                    self.pair(a, b)
                );
            }
        }
        Report::ok()
    }

    /// `(rho_{[L1,L2]}, ||.||_{[L1,L2]}, [L1, L2])`.
    pub fn restrict(&self, l1: usize, l2: usize) -> Result<Latroid> {
        let (lat, map) = self.lattice.interval_with_map(l1, l2)?;
        let rho = map.iter().map(|&x| &self.rho[x] - &self.rho[l1]).collect();
        let len = map.iter().map(|&x| &self.len[x] - &self.len[l1]).collect();
        Latroid::new(Arc::new(lat), rho, len)
    }

    /// Direct sum on the product lattice; `(a, b)` has index `a * |other| + b`.
    pub fn direct_sum(&self, other: &Latroid) -> Result<Latroid> {
        if self.u() != other.u() {
            return Err(Error::DimensionMismatch {
                expected: self.u(),
                got: other.u(),
            });
        }
        let lat = self.lattice.product(&other.lattice)?;
        let n2 = other.size();
        let rho = (0..lat.len()).map(|i| &self.rho[i / n2] + &other.rho[i % n2]).collect();
        let len = (0..lat.len()).map(|i| &self.len[i / n2] + &other.len[i % n2]).collect();
        Latroid::new(Arc::new(lat), rho, len)
    }

    /// The dual latroid on the dual lattice (element `L^⊥` keeps the index of `L`).
    pub fn dual(&self) -> Latroid {
        let top = self.lattice.top();
        let len: Vec<Scalar> = self.len.iter().map(|l| &self.len[top] - l).collect();
        let rho = len
            .iter()
            .zip(&self.rho)
            .map(|(l, r)| &(l - &self.rho[top]) + r)
            .collect();
        Latroid {
            lattice: Arc::new(self.lattice.dual()),
            rho,
            len,
        }
    }

    /// Elements with `rho(L) = ||L||`.
    pub fn independents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.rho[a] == self.len[a]).collect()
    }

    /// Independent elements with `rho(L) = rho(1)`.
    pub fn bases(&self) -> Vec<usize> {
        let top = self.top_rank();
        (0..self.size())
            .filter(|&a| self.rho[a] == self.len[a] && &self.rho[a] == top)
            .collect()
    }

    /// Dependent elements all of whose strictly smaller elements are independent.
    pub fn circuits(&self) -> Vec<usize> {
        let lat = &*self.lattice;
        (0..self.size())
            .filter(|&a| self.rho[a].lt(&self.len[a]))
            .filter(|&a| {
                lat.down_set(a)
                    .filter(|&b| b != a)
                    .all(|b| self.rho[b] == self.len[b])
            })
            .collect()
    }

    /// `cl(L)`: join of all `M` with `rho(L v M) = rho(L)`.
    pub fn closure(&self, a: usize) -> usize {
        let lat = &*self.lattice;
        lat.join_all((0..self.size()).filter(|&m| self.rho[lat.join(a, m)] == self.rho[a]))
    }

    pub fn flats(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.closure(a) == a).collect()
    }

    /// Flats of rank `rho(1) - 1` (integer-valued latroids with `u = 1`).
    pub fn hyperplanes(&self) -> Result<Vec<usize>> {
        let top = self.top_rank().as_int().ok_or_else(|| {
            Error::InvalidArgument("hyperplanes need an integer-valued rank with u = 1".into())
        })?;
        let target = Scalar::int(top - 1);
        Ok(self.flats().into_iter().filter(|&a| self.rho[a] == target).collect())
    }

    /// `d_a = min { ||L|| : ||L|| - rho(L) >= a }`, or 0 when nothing qualifies.
    pub fn gen_weight(&self, a: &Scalar) -> Result<Rational64> {
        if self.u() != 1 || a.u() != 1 {
            return Err(Error::InvalidArgument(
                "generalized weights need a totally ordered codomain (u = 1)".into(),
            ));
        }
        Ok((0..self.size())
            .filter(|&l| self.nullity(l).ge(a))
            .map(|l| self.len[l].0[0])
            .min()
            .unwrap_or_else(Rational64::zero))
    }

    /// The minimal values of `||L||` over `L` with `||L|| - rho(L) >= a`, for
    /// any `u`; `[0]` when nothing qualifies.
    pub fn gen_weight_antichain(&self, a: &Scalar) -> Vec<Scalar> {
        let values: BTreeSet<Scalar> = (0..self.size())
            .filter(|&l| self.nullity(l).ge(a))
            .map(|l| self.len[l].clone())
            .collect();
        if values.is_empty() {
            return vec![Scalar::zero(self.u())];
        }
        values
            .iter()
            .filter(|v| !values.iter().any(|w| w.lt(v)))
            .cloned()
            .collect()
    }

    /// The `u = 1` latroid obtained by summing coordinates.
    pub fn collapse(&self) -> Latroid {
        let total = |s: &Scalar| Scalar(vec![s.total()]);
        Latroid {
            lattice: self.lattice.clone(),
            rho: self.rho.iter().map(total).collect(),
            len: self.len.iter().map(total).collect(),
        }
    }

    /// True when `||.||` is the height function and `rho` is integer valued.
    pub fn is_height_latroid(&self) -> bool {
        let Some(h) = self.lattice.heights() else {
            return false;
        };
        self.u() == 1
            && self.rho.iter().all(|r| r.as_int().is_some())
            && self.len.iter().zip(h).all(|(l, &h)| l.as_int() == Some(h as i64))
    }
}

fn heights(lat: &FiniteLattice) -> Result<Vec<Scalar>> {
    Ok(lat
        .heights()
        .ok_or(Error::NotGraded)?
        .iter()
        .map(|&h| Scalar::int(h as i64))
        .collect())
}

fn require_crypto_lattice(lat: &FiniteLattice) -> Result<&[u32]> {
    let f = lat.flags();
    if !(f.is_complemented && f.is_modular) {
        return Err(Error::Hypothesis(
            "the lattice must be complemented and modular".into(),
        ));
    }
    lat.heights().ok_or(Error::NotGraded)
}

fn maximal(lat: &FiniteLattice, items: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let items: Vec<usize> = items.into_iter().collect();
    items
        .iter()
        .copied()
        .filter(|&a| !items.iter().any(|&b| lat.lt(a, b)))
        .collect()
}

fn fmt_set(lat: &FiniteLattice, items: &[usize]) -> String {
    let s: Vec<String> = items.iter().map(|&a| lat.label(a).to_string()).collect();
    format!("{{{}}}", s.join(", "))
}

/// For each `L`, the maximal members of `set` below `L`.
fn maximal_below(lat: &FiniteLattice, set: &[usize]) -> Vec<Vec<usize>> {
    (0..lat.len())
        .map(|l| maximal(lat, set.iter().copied().filter(|&i| lat.leq(i, l))))
        .collect()
}

/// Checks I1-I4 for a candidate set of independent elements.
pub fn axioms_independent(lat: &FiniteLattice, set: &[usize]) -> Result<Report> {
    let h = require_crypto_lattice(lat)?;
    let member: BTreeSet<usize> = set.iter().copied().collect();
    let name = |a: usize| lat.label(a).to_string();
    Ok((|| {
        ensure!(member.contains(&lat.bottom()), "I1", "0 is missing");
        for &i1 in set {
            for i2 in lat.down_set(i1) {
                ensure!(member.contains(&i2), "I2", "I1={}, I2={}", name(i1), name(i2));
            }
        }
        for &i1 in set {
            for &i2 in set {
                if h[i2] < h[i1] {
                    let ok = lat
                        .atoms_below(i1)
                        .into_iter()
                        .any(|j| !lat.leq(j, i2) && member.contains(&lat.join(i2, j)));
                    ensure!(ok, "I3", "I1={}, I2={}", name(i1), name(i2));
                }
            }
        }
        let maxb = maximal_below(lat, set);
        for l1 in 0..lat.len() {
            for l2 in l1..lat.len() {
                let top = &maxb[lat.join(l1, l2)];
                for &i1 in &maxb[l1] {
                    for &i2 in &maxb[l2] {
                        let j = lat.join(i1, i2);
                        ensure!(
                            top.iter().any(|&i3| lat.leq(i3, j)),
                            "I4",
                            "L1={}, L2={}, I1={}, I2={}",
                            name(l1),
                            name(l2),
                            name(i1),
                            name(i2)
                        );
                    }
                }
            }
        }
        Report::ok()
    })())
}

/// Irredundant decompositions of `a` into `hgt(a)` atoms.
fn atom_decompositions(lat: &FiniteLattice, h: &[u32], a: usize) -> Vec<Vec<usize>> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        lat: &FiniteLattice,
        h: &[u32],
        atoms: &[usize],
        start: usize,
        acc: usize,
        cur: &mut Vec<usize>,
        target: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() as u32 == h[target] {
            if acc == target {
                out.push(cur.clone());
            }
            return;
        }
        for k in start..atoms.len() {
            let next = lat.join(acc, atoms[k]);
            if h[next] as usize == cur.len() + 1 {
                cur.push(atoms[k]);
                go(lat, h, atoms, k + 1, next, cur, target, out);
                cur.pop();
            }
        }
    }
    let atoms = lat.atoms_below(a);
    let mut out = Vec::new();
    go(lat, h, &atoms, 0, lat.bottom(), &mut Vec::new(), a, &mut out);
    out
}

/// Checks B1-B3 for a candidate set of bases. B2 ranges over all
/// decompositions of `B1` into `hgt` atoms and lets the exchanged atom be any
/// atom of `B2` outside `B1`; see [`basis_exchange_literal`].
pub fn axioms_bases(lat: &FiniteLattice, set: &[usize]) -> Result<Report> {
    let h = require_crypto_lattice(lat)?;
    let member: BTreeSet<usize> = set.iter().copied().collect();
    let name = |a: usize| lat.label(a).to_string();
    let decomps: HashMap<usize, Vec<Vec<usize>>> =
        set.iter().map(|&b| (b, atom_decompositions(lat, h, b))).collect();
    Ok((|| {
        ensure!(!set.is_empty(), "B1", "no bases");
        // the exchanged atom may be any atom of B2 outside B1
        for &b1 in set {
            for &b2 in set {
                let outside: Vec<usize> = lat.atoms_below(b2).into_iter().filter(|&t| !lat.leq(t, b1)).collect();
                for js in &decomps[&b1] {
                    for (i, &ji) in js.iter().enumerate() {
                        if lat.leq(ji, b2) {
                            continue;
                        }
                        let rest = join_except(lat, js, i);
                        ensure!(
                            outside.iter().any(|&t| member.contains(&lat.join(rest, t))),
                            "B2",
                            "B1={} as {}, B2={}, i={}",
                            name(b1),
                            fmt_set(lat, js),
                            name(b2),
                            i + 1
                        );
                    }
                }
            }
        }
        // maximal values of B ^ L for each L
        let maxmeet: Vec<Vec<usize>> = (0..lat.len())
            .map(|l| {
                let meets: BTreeSet<usize> = set.iter().map(|&b| lat.meet(b, l)).collect();
                maximal(lat, meets)
            })
            .collect();
        for l1 in 0..lat.len() {
            for l2 in l1..lat.len() {
                let top = &maxmeet[lat.join(l1, l2)];
                for &m1 in &maxmeet[l1] {
                    for &m2 in &maxmeet[l2] {
                        let j = lat.join(m1, m2);
                        ensure!(
                            top.iter().any(|&m3| lat.leq(m3, j)),
                            "B3",
                            "L1={}, L2={}, B1^L1={}, B2^L2={}",
                            name(l1),
                            name(l2),
                            name(m1),
                            name(m2)
                        );
                    }
                }
            }
        }
        Report::ok()
    })())
}

/// Basis exchange with the atom `T_s` drawn from a fixed decomposition
/// `B2 = T_1 v ... v T_m`, for every decomposition of both bases. On
/// non-distributive lattices this is stronger than what the bases of a
/// latroid satisfy.
pub fn basis_exchange_literal(lat: &FiniteLattice, set: &[usize]) -> Result<Report> {
    let h = require_crypto_lattice(lat)?;
    let member: BTreeSet<usize> = set.iter().copied().collect();
    let decomps: HashMap<usize, Vec<Vec<usize>>> =
        set.iter().map(|&b| (b, atom_decompositions(lat, h, b))).collect();
    Ok((|| {
        for &b1 in set {
            for &b2 in set {
                for js in &decomps[&b1] {
                    for ts in &decomps[&b2] {
                        for (i, &ji) in js.iter().enumerate() {
                            if lat.leq(ji, b2) {
                                continue;
                            }
                            let rest = join_except(lat, js, i);
                            let ok = ts
                                .iter()
                                .any(|&t| !lat.leq(t, b1) && member.contains(&lat.join(rest, t)));
                            ensure!(
                                ok,
                                "B2",
                                "B1={} as {}, B2={} as {}, i={}",
                                lat.label(b1),
                                fmt_set(lat, js),
                                lat.label(b2),
                                fmt_set(lat, ts),
                                i + 1
                            );
                        }
                    }
                }
            }
        }
        Report::ok()
    })())
}

fn join_except(lat: &FiniteLattice, atoms: &[usize], i: usize) -> usize {
    lat.join_all(atoms.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &j)| j))
}

/// Checks C1-C3 for a candidate set of circuits.
pub fn axioms_circuits(lat: &FiniteLattice, set: &[usize]) -> Result<Report> {
    let h = require_crypto_lattice(lat)?;
    let name = |a: usize| lat.label(a).to_string();
    Ok((|| {
        ensure!(!set.contains(&lat.bottom()), "C1", "0 is a circuit");
        for &c1 in set {
            for &c2 in set {
                ensure!(c1 == c2 || !lat.leq(c1, c2), "C2", "C1={}, C2={}", name(c1), name(c2));
            }
        }
        for (k, &c1) in set.iter().enumerate() {
            for &c2 in &set[k + 1..] {
                let j = lat.join(c1, c2);
                for l in lat.down_set(j).filter(|&l| h[l] + 1 == h[j]) {
                    let ok = set.iter().any(|&c3| lat.leq(c3, l));
                    ensure!(ok, "C3", "C1={}, C2={}, L={}", name(c1), name(c2), name(l));
                }
            }
        }
        Report::ok()
    })())
}

fn scalars(values: Vec<i64>) -> Vec<Scalar> {
    values.into_iter().map(Scalar::int).collect()
}

/// `rho(L) = hgt(I)` for `I` maximal among the independents below `L`.
pub fn rank_from_independents(lat: &FiniteLattice, set: &[usize]) -> Result<Vec<Scalar>> {
    let h = require_crypto_lattice(lat)?;
    let maxb = maximal_below(lat, set);
    let mut out = Vec::with_capacity(lat.len());
    for (l, ms) in maxb.iter().enumerate() {
        let hs: BTreeSet<u32> = ms.iter().map(|&i| h[i]).collect();
        match hs.len() {
            1 => out.push(*hs.iter().next().unwrap() as i64),
            0 => return Err(Error::AxiomViolation(format!("I1: nothing independent below {}", lat.label(l)))),
            _ => {
                return Err(Error::AxiomViolation(format!(
                    "maximal independents below {} have different heights",
                    lat.label(l)
                )))
            }
        }
    }
    Ok(scalars(out))
}

/// `rho(L) = hgt(L ^ B)` for `B` with `L ^ B` maximal.
pub fn rank_from_bases(lat: &FiniteLattice, set: &[usize]) -> Result<Vec<Scalar>> {
    let h = require_crypto_lattice(lat)?;
    if set.is_empty() {
        return Err(Error::AxiomViolation("B1: no bases".into()));
    }
    let mut out = Vec::with_capacity(lat.len());
    for l in 0..lat.len() {
        let meets: BTreeSet<usize> = set.iter().map(|&b| lat.meet(b, l)).collect();
        let hs: BTreeSet<u32> = maximal(lat, meets).iter().map(|&m| h[m]).collect();
        if hs.len() != 1 {
            return Err(Error::AxiomViolation(format!(
                "maximal meets with bases below {} have different heights",
                lat.label(l)
            )));
        }
        out.push(*hs.iter().next().unwrap() as i64);
    }
    Ok(scalars(out))
}

/// Length of a maximal chain of circuits dominated by `l`, checking that
/// every maximal chain has the same length.
pub fn kappa(lat: &FiniteLattice, circuits: &[usize], l: usize) -> Result<u32> {
    let below: Vec<usize> = circuits.iter().copied().filter(|&c| lat.leq(c, l)).collect();
    // lengths of all maximal continuations from a given join-so-far
    fn lengths(
        lat: &FiniteLattice,
        below: &[usize],
        j: usize,
        memo: &mut HashMap<usize, BTreeSet<u32>>,
    ) -> BTreeSet<u32> {
        if let Some(s) = memo.get(&j) {
            return s.clone();
        }
        let mut out = BTreeSet::new();
        for &c in below {
            if !lat.leq(c, j) {
                for x in lengths(lat, below, lat.join(j, c), memo) {
                    out.insert(x + 1);
                }
            }
        }
        if out.is_empty() {
            out.insert(0);
        }
        memo.insert(j, out.clone());
        out
    }
    let all = lengths(lat, &below, lat.bottom(), &mut HashMap::new());
    if all.len() != 1 {
        return Err(Error::AxiomViolation(format!(
            "maximal circuit chains below {} have lengths {:?}",
            lat.label(l),
            all
        )));
    }
    Ok(*all.iter().next().unwrap())
}

/// `rho = hgt - kappa`.
pub fn rank_from_circuits(lat: &FiniteLattice, set: &[usize]) -> Result<Vec<Scalar>> {
    let h = require_crypto_lattice(lat)?;
    (0..lat.len())
        .map(|l| Ok(Scalar::int(h[l] as i64 - kappa(lat, set, l)? as i64)))
        .collect()
}

/// Outcome of rank -> {independents, bases, circuits} -> rank.
#[derive(Clone, Debug, Serialize)]
pub struct CryptoReport {
    pub independents: Report,
    pub bases: Report,
    pub circuits: Report,
    pub rank_from_independents: bool,
    pub rank_from_bases: bool,
    pub rank_from_circuits: bool,
}

impl CryptoReport {
    pub fn is_ok(&self) -> bool {
        self.independents.is_ok()
            && self.bases.is_ok()
            && self.circuits.is_ok()
            && self.rank_from_independents
            && self.rank_from_bases
            && self.rank_from_circuits
    }
}

/// Runs every cryptomorphism on a latroid whose length is the height of a
/// complemented modular lattice.
pub fn crypto_roundtrip(lt: &Latroid) -> Result<CryptoReport> {
    let lat = lt.lattice();
    require_crypto_lattice(lat)?;
    if !lt.is_height_latroid() {
        return Err(Error::Hypothesis(
            "the length function must be the height and the rank integer valued".into(),
        ));
    }
    let (ind, bas, cir) = (lt.independents(), lt.bases(), lt.circuits());
    let same = |r: Result<Vec<Scalar>>| r.map(|v| v == lt.rhos()).unwrap_or(false);
    Ok(CryptoReport {
        independents: axioms_independent(lat, &ind)?,
        bases: axioms_bases(lat, &bas)?,
        circuits: axioms_circuits(lat, &cir)?,
        rank_from_independents: same(rank_from_independents(lat, &ind)),
        rank_from_bases: same(rank_from_bases(lat, &bas)),
        rank_from_circuits: same(rank_from_circuits(lat, &cir)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{boolean_lattice, grid_lattice, subspace_lattice};
    use crate::ring::Pir;

    fn arc(l: FiniteLattice) -> Arc<FiniteLattice> {
        Arc::new(l)
    }

    fn ints(v: &[Scalar]) -> Vec<i64> {
        v.iter().map(|s| s.as_int().unwrap()).collect()
    }

    /// Ideals of Z_8 with ||I|| = |I| - 1.
    fn z8(rho: impl Fn(u64) -> i64) -> Latroid {
        let ring = Pir::chain(2, 3).unwrap();
        let lat = ring.ideal_lattice();
        let sizes: Vec<u64> = ring.ideals().iter().map(|i| ring.ideal_size(i)).collect();
        let len = sizes.iter().map(|&s| Scalar::int(s as i64 - 1)).collect();
        let rho = sizes.iter().map(|&s| Scalar::int(rho(s))).collect();
        Latroid::new(arc(lat), rho, len).unwrap()
    }

    #[test]
    fn free_latroid_on_b3() {
        let lt = Latroid::free(arc(boolean_lattice(3).unwrap())).unwrap();
        assert!(lt.validate().is_ok());
        assert_eq!(lt.independents().len(), 8);
        assert_eq!(lt.bases(), vec![7]);
        assert!(lt.circuits().is_empty());
        for a in 0..8 {
            assert_eq!(lt.closure(a), a);
        }
        assert_eq!(lt.gen_weight(&Scalar::int(1)).unwrap(), Rational64::zero());
        assert_eq!(lt.gen_weight(&Scalar::int(0)).unwrap(), Rational64::zero());
    }

    #[test]
    fn z8_example() {
        // |I|/2 away from the zero ideal
        let half = z8(|s| if s == 1 { 0 } else { s as i64 / 2 });
        assert!(half.validate().is_ok());
        let lambda = z8(|s| s.trailing_zeros() as i64);
        assert!(lambda.validate().is_ok());
        let lat = half.lattice();
        let by_exp = |e: i64| lat.find(&crate::lattice::Label::Vector(vec![e])).unwrap();
        assert_eq!(half.independents(), lambda.independents());
        let mut ind = half.independents();
        ind.sort();
        let mut expected = vec![by_exp(3), by_exp(2)];
        expected.sort();
        assert_eq!(ind, expected);
        assert_eq!(half.top_rank().as_int(), Some(4));
        assert_eq!(lambda.top_rank().as_int(), Some(3));
        // taken literally, |0|/2 = 1/2 breaks L1
        let literal = Latroid::new(
            half.lattice_arc().clone(),
            (0..4).map(|e| Scalar::ratio(1 << (3 - e), 2)).collect(),
            half.lens().to_vec(),
        )
        .unwrap();
        assert_eq!(literal.validate().rule(), Some("L1"));
    }

    #[test]
    fn negative_rank_breaks_l4() {
        let lat = arc(boolean_lattice(2).unwrap());
        let rho = vec![Scalar::int(0), Scalar::int(0), Scalar::int(0), Scalar::int(-1)];
        let lt = Latroid::new(lat, rho, (0..4).map(|i: i64| Scalar::int(i.count_ones() as i64)).collect()).unwrap();
        assert_eq!(lt.validate().rule(), Some("L4"));
    }

    #[test]
    fn uniform_latroids() {
        let lat = arc(boolean_lattice(3).unwrap());
        let len = heights(&lat).unwrap();
        let u2 = Latroid::uniform(lat.clone(), len.clone(), &Scalar::int(2)).unwrap();
        assert!(u2.validate().is_ok());
        assert_eq!(u2.top_rank().as_int(), Some(2));
        let u3 = Latroid::uniform(lat.clone(), len.clone(), &Scalar::int(3)).unwrap();
        assert_eq!(u3, Latroid::free(lat.clone()).unwrap());
        assert!(Latroid::uniform(lat.clone(), len.clone(), &Scalar::int(0)).is_err());
        let one = Latroid::free(arc(boolean_lattice(0).unwrap())).unwrap();
        assert!(one.rhos().iter().all(|r| r.is_zero()));
        let u1 = Latroid::uniform(lat, len, &Scalar::int(1)).unwrap();
        let rt = crypto_roundtrip(&u1).unwrap();
        assert!(rt.is_ok(), "{rt:?}");
        assert_eq!(ints(&rank_from_bases(u1.lattice(), &u1.bases()).unwrap()), ints(u1.rhos()));
    }

    #[test]
    fn uniform_on_subspaces_satisfies_independence_axioms() {
        let lat = arc(subspace_lattice(2, 3).unwrap());
        let len = heights(&lat).unwrap();
        for a in 1..=3 {
            let lt = Latroid::uniform(lat.clone(), len.clone(), &Scalar::int(a)).unwrap();
            assert!(lt.validate().is_ok());
            let rt = crypto_roundtrip(&lt).unwrap();
            assert!(rt.is_ok(), "a={a}: {rt:?}");
        }
    }

    #[test]
    fn restriction_sum_dual() {
        let lat = arc(subspace_lattice(2, 3).unwrap());
        let len = heights(&lat).unwrap();
        let lt = Latroid::uniform(lat.clone(), len, &Scalar::int(2)).unwrap();
        assert_eq!(lt.restrict(lat.bottom(), lat.top()).unwrap(), lt);
        let d = lt.dual();
        assert!(d.validate().is_ok());
        assert_eq!(d.dual(), lt);
        let top = lat.top();
        for a in 0..lat.len() {
            assert_eq!(d.len(a), &(lt.len(top) - lt.len(a)));
        }
        let f1 = Latroid::free(arc(boolean_lattice(1).unwrap())).unwrap();
        let f2 = Latroid::free(arc(grid_lattice(&[1, 1]).unwrap())).unwrap();
        let s = f1.direct_sum(&f2).unwrap();
        assert!(s.validate().is_ok());
        assert_eq!(s, Latroid::free(s.lattice_arc().clone()).unwrap());
        let a = lat.atoms()[1];
        let r = lt.restrict(a, top).unwrap();
        assert!(r.validate().is_ok());
        assert!(lt.restrict(top, a).is_err());
    }

    #[test]
    fn dual_of_restriction_is_restriction_of_dual() {
        let lat = arc(boolean_lattice(3).unwrap());
        let len = heights(&lat).unwrap();
        let lt = Latroid::uniform(lat.clone(), len, &Scalar::int(2)).unwrap();
        let d = lt.dual();
        for l1 in 0..8 {
            for l2 in lat.up_set(l1).collect::<Vec<_>>() {
                let lhs = lt.restrict(l1, l2).unwrap().dual();
                // [L2^⊥, L1^⊥] in the dual lattice is [l2, l1] there
                let rhs = d.restrict(l2, l1).unwrap();
                assert_eq!(lhs.rhos(), rhs.rhos());
                assert_eq!(lhs.lens(), rhs.lens());
            }
        }
    }

    #[test]
    fn circuit_axioms_reject_nested_sets() {
        let lat = boolean_lattice(3).unwrap();
        let r = axioms_circuits(&lat, &[1, 3]).unwrap();
        assert_eq!(r.rule(), Some("C2"));
        let r = axioms_circuits(&lat, &[0]).unwrap();
        assert_eq!(r.rule(), Some("C1"));
        let chain = grid_lattice(&[2]).unwrap();
        assert!(matches!(axioms_circuits(&chain, &[1]), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn kappa_of_bottom_is_zero() {
        let lat = boolean_lattice(3).unwrap();
        assert_eq!(kappa(&lat, &[3, 5, 6], 0).unwrap(), 0);
        assert_eq!(kappa(&lat, &[3, 5, 6], 7).unwrap(), 2);
    }

    #[test]
    fn scalar_order_and_display() {
        let a = Scalar::ints(&[1, 2]);
        let b = Scalar::ints(&[2, 1]);
        assert!(!a.le(&b) && !b.le(&a));
        assert!(Scalar::ints(&[1, 1]).lt(&a));
        assert_eq!(Scalar::ratio(3, 2).to_string(), "3/2");
        assert_eq!(a.to_string(), "(1,2)");
        assert_eq!(serde_json::to_string(&Scalar::ratio(3, 2)).unwrap(), "[\"3/2\"]");
    }

    #[test]
    fn antichain_weights() {
        let lat = arc(grid_lattice(&[1, 1]).unwrap());
        let len: Vec<Scalar> = lat
            .labels()
            .iter()
            .map(|l| Scalar::ints(l.as_vector().unwrap()))
            .collect();
        let rho = vec![Scalar::zero(2); 4];
        let lt = Latroid::new(lat, rho, len).unwrap();
        assert!(lt.validate().is_ok());
        let w = lt.gen_weight_antichain(&Scalar::ints(&[0, 0]));
        assert_eq!(w, vec![Scalar::ints(&[0, 0])]);
        let w = lt.gen_weight_antichain(&Scalar::ints(&[1, 0]));
        assert_eq!(w, vec![Scalar::ints(&[1, 0])]);
        assert!(lt.gen_weight(&Scalar::int(1)).is_err());
    }
}
