//! Explicit finite lattices.
//!
//! A [`FiniteLattice`] stores its order as up-sets and down-sets, and full
//! join and meet tables. Every element carries a [`Label`] so that lattices
//! built by different routes can be compared element by element.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fq;
use crate::limits;
use crate::report::{ensure, Report};

/// Domain label of a lattice element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Label {
    /// Integer vectors: supports, subsets as indicators, ideal exponents.
    Vector(Vec<i64>),
    /// A reduced echelon basis of a subspace.
    Rows(Vec<Vec<u32>>),
    Pair(Box<Label>, Box<Label>),
    Name(String),
}

impl Label {
    pub fn as_vector(&self) -> Option<&[i64]> {
        match self {
            Label::Vector(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vector(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(","))
            }
            Label::Rows(rows) => {
                let s: Vec<String> = rows
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
                    .collect();
                write!(f, "<{}>", s.join(","))
            }
            Label::Pair(a, b) => write!(f, "({a}, {b})"),
            Label::Name(s) => f.write_str(s),
        }
    }
}

/// Structural predicates of a lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeFlags {
    pub is_graded: bool,
    pub is_modular: bool,
    pub is_distributive: bool,
    pub is_complemented: bool,
    pub is_relatively_complemented: bool,
}

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    atoms: Vec<usize>,
    heights: Option<Vec<u32>>,
    flags: OnceLock<LatticeFlags>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for FiniteLattice {}

impl FiniteLattice {
    /// Builds a lattice from labelled elements and an order relation,
    /// verifying that the relation is a partial order with all joins and meets.
    pub fn build(labels: Vec<Label>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidArgument("a lattice needs at least one element".into()));
        }
        limits::check("lattice", n as u128, limits::LATTICE_SIZE)?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, set) in up.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    set.insert(b);
                }
            }
        }
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotAPartialOrder(format!("{} is not below itself", labels[a])));
            }
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotAPartialOrder(format!(
                        "{} and {} are below each other",
                        labels[a], labels[b]
                    )));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::NotAPartialOrder(format!(
                        "order is not transitive through {}",
                        labels[b]
                    )));
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    fn from_up_sets(labels: Vec<Label>, up: Vec<FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, ups) in up.iter().enumerate() {
            for b in ups.ones() {
                down[b].insert(a);
            }
        }
        let join = Self::bound_table(&up, "join")?;
        let meet = Self::bound_table(&down, "meet")?;
        let bottom = (0..n).find(|&a| up[a].count_ones(..) == n).expect("lattices are bounded");
        let top = (0..n).find(|&a| down[a].count_ones(..) == n).expect("lattices are bounded");
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect::<HashMap<_, _>>();
        if index.len() != n {
            return Err(Error::InvalidArgument("lattice labels must be distinct".into()));
        }
        let mut lat = FiniteLattice {
            labels,
            index,
            up,
            down,
            join,
            meet,
            bottom,
            top,
            atoms: Vec::new(),
            heights: None,
            flags: OnceLock::new(),
        };
        lat.atoms = (0..n).filter(|&a| a != bottom && lat.lower_covers(a) == [bottom]).collect();
        lat.heights = lat.compute_heights();
        Ok(lat)
    }

    /// For each pair, the least element of the intersection of their up-sets.
    fn bound_table(up: &[FixedBitSet], what: &'static str) -> Result<Vec<u32>> {
        let n = up.len();
        let counts: Vec<usize> = up.iter().map(|s| s.count_ones(..)).collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n + a] = a as u32;
            for b in a + 1..n {
                let c = if up[a].contains(b) {
                    b
                } else if up[b].contains(a) {
                    a
                } else {
                    let mut s = up[a].clone();
                    s.intersect_with(&up[b]);
                    let size = s.count_ones(..);
                    s.ones()
                        .find(|&c| counts[c] == size)
                        .ok_or(Error::NotALattice(a, b, what))?
                };
                table[a * n + b] = c as u32;
                table[b * n + a] = c as u32;
            }
        }
        Ok(table)
    }

    fn compute_heights(&self) -> Option<Vec<u32>> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| self.down[a].count_ones(..));
        let mut shortest = vec![0u32; n];
        let mut longest = vec![0u32; n];
        for &c in &order {
            if c == self.bottom {
                continue;
            }
            let lc = self.lower_covers(c);
            shortest[c] = lc.iter().map(|&a| shortest[a] + 1).min().unwrap_or(0);
            longest[c] = lc.iter().map(|&a| longest[a] + 1).max().unwrap_or(0);
            if shortest[c] != longest[c] {
                return None;
            }
        }
        Some(shortest)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &Label {
        &self.labels[a]
    }

    pub fn find(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b] as usize
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    /// Elements `b >= a`.
    pub fn up_set(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[a].ones()
    }

    /// Elements `b <= a`.
    pub fn down_set(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.down[a].ones()
    }

    /// Elements covered by `a`.
    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        self.down[a]
            .ones()
            .filter(|&b| b != a)
            .filter(|&b| {
                let mut between = self.up[b].clone();
                between.intersect_with(&self.down[a]);
                between.count_ones(..) == 2
            })
            .collect()
    }

    /// Elements covering `a`.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.up[a]
            .ones()
            .filter(|&b| b != a)
            .filter(|&b| {
                let mut between = self.down[b].clone();
                between.intersect_with(&self.up[a]);
                between.count_ones(..) == 2
            })
            .collect()
    }

    /// Height function, present iff the lattice is graded.
    pub fn heights(&self) -> Option<&[u32]> {
        self.heights.as_deref()
    }

    pub fn height(&self, a: usize) -> Result<u32> {
        self.heights.as_ref().map(|h| h[a]).ok_or(Error::NotGraded)
    }

    pub fn is_graded(&self) -> bool {
        self.heights.is_some()
    }

    /// Atoms below `a`.
    pub fn atoms_below(&self, a: usize) -> Vec<usize> {
        self.atoms.iter().copied().filter(|&j| self.leq(j, a)).collect()
    }

    /// Elements in the closed interval `[a, b]`, in index order.
    pub fn interval_elements(&self, a: usize, b: usize) -> Vec<usize> {
        let mut s = self.up[a].clone();
        s.intersect_with(&self.down[b]);
        s.ones().collect()
    }

    pub fn flags(&self) -> LatticeFlags {
        *self.flags.get_or_init(|| LatticeFlags {
            is_graded: self.is_graded(),
            is_modular: self.is_modular(),
            is_distributive: self.is_distributive(),
            is_complemented: self.is_complemented(),
            is_relatively_complemented: self.is_relatively_complemented(),
        })
    }

    /// `a <= b` implies `a v (x ^ b) = (a v x) ^ b`.
    pub fn is_modular(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            self.up_set(a).all(|b| {
                (0..n).all(|x| self.join(a, self.meet(x, b)) == self.meet(self.join(a, x), b))
            })
        })
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (b..n).all(|c| {
                    self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))
                })
            })
        })
    }

    fn interval_complemented(&self, lo: usize, hi: usize) -> bool {
        let elems = self.interval_elements(lo, hi);
        elems.iter().all(|&a| {
            elems
                .iter()
                .any(|&b| self.join(a, b) == hi && self.meet(a, b) == lo)
        })
    }

    pub fn is_complemented(&self) -> bool {
        self.interval_complemented(self.bottom, self.top)
    }

    pub fn is_relatively_complemented(&self) -> bool {
        let n = self.len();
        (0..n).all(|lo| self.up_set(lo).all(|hi| self.interval_complemented(lo, hi)))
    }

    /// A complement of `a` in `[lo, hi]`, if any.
    pub fn relative_complement(&self, a: usize, lo: usize, hi: usize) -> Option<usize> {
        self.interval_elements(lo, hi)
            .into_iter()
            .find(|&b| self.join(a, b) == hi && self.meet(a, b) == lo)
    }

    /// The sublattice `[a, b]`, with elements in index order; the second
    /// component maps new indices to old ones.
    pub fn interval_with_map(&self, a: usize, b: usize) -> Result<(FiniteLattice, Vec<usize>)> {
        if !self.leq(a, b) {
            return Err(Error::InvalidArgument(format!(
                "{} is not below {}",
                self.labels[a], self.labels[b]
            )));
        }
        let elems = self.interval_elements(a, b);
        let m = elems.len();
        let up = elems
            .iter()
            .map(|&x| {
                let mut s = FixedBitSet::with_capacity(m);
                for (j, &y) in elems.iter().enumerate() {
                    if self.leq(x, y) {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        Ok((Self::from_up_sets(labels, up)?, elems))
    }

    pub fn interval(&self, a: usize, b: usize) -> Result<FiniteLattice> {
        Ok(self.interval_with_map(a, b)?.0)
    }

    /// The same elements with the order reversed; `L^⊥` has index `L`.
    pub fn dual(&self) -> FiniteLattice {
        Self::from_up_sets(self.labels.clone(), self.down.clone()).expect("dual of a lattice")
    }

    /// Coordinatewise product; element `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &FiniteLattice) -> Result<FiniteLattice> {
        let (n1, n2) = (self.len(), other.len());
        limits::check("lattice", (n1 * n2) as u128, limits::LATTICE_SIZE)?;
        let mut labels = Vec::with_capacity(n1 * n2);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(match (a, b) {
                    (Label::Vector(x), Label::Vector(y)) => {
                        Label::Vector(x.iter().chain(y).copied().collect())
                    }
                    _ => Label::Pair(Box::new(a.clone()), Box::new(b.clone())),
                });
            }
        }
        let up = (0..n1 * n2)
            .map(|i| {
                let (a, b) = (i / n2, i % n2);
                let mut s = FixedBitSet::with_capacity(n1 * n2);
                for c in self.up_set(a) {
                    for d in other.up_set(b) {
                        s.insert(c * n2 + d);
                    }
                }
                s
            })
            .collect();
        Self::from_up_sets(labels, up)
    }
}

/// The lattice of subsets of `{1..n}`; element `i` is the subset with bitmask `i`.
pub fn boolean_lattice(n: usize) -> Result<FiniteLattice> {
    limits::check("lattice", limits::pow_sat(2, n), limits::LATTICE_SIZE)?;
    let labels = (0..1usize << n)
        .map(|m| Label::Vector((0..n).map(|i| ((m >> i) & 1) as i64).collect()))
        .collect();
    FiniteLattice::build(labels, |a, b| a & !b == 0)
}

/// The grid `{0..b_1} x ... x {0..b_u}` under the product order, in mixed
/// radix order with coordinate 0 most significant.
pub fn grid_lattice(bounds: &[u32]) -> Result<FiniteLattice> {
    let size = bounds.iter().fold(1u128, |acc, &b| acc.saturating_mul(b as u128 + 1));
    limits::check("lattice", size, limits::LATTICE_SIZE)?;
    let mut points: Vec<Vec<i64>> = vec![vec![]];
    for &b in bounds {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=b as i64).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let leq = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let labels: Vec<Label> = points.iter().cloned().map(Label::Vector).collect();
    FiniteLattice::build(labels, |a, b| leq(&points[a], &points[b]))
}

/// Subspaces of `F_q^n` under inclusion, labelled by reduced echelon bases.
pub fn subspace_lattice(q: u32, n: usize) -> Result<FiniteLattice> {
    limits::check("ambient space F_q^n", limits::pow_sat(q as u64, n), limits::SUBSPACE_AMBIENT)?;
    crate::ring::ChainRing::new(q, 1)?;
    let subs = fq::all_subspaces(q, n, limits::LATTICE_SIZE)?;
    let labels = subs.iter().cloned().map(Label::Rows).collect();
    FiniteLattice::build(labels, |a, b| fq::subspace_le(&subs[a], &subs[b], q))
}

/// Every element is the join of the atoms below it.
pub fn atoms_join_check(lat: &FiniteLattice) -> Report {
    for a in 0..lat.len() {
        let j = lat.join_all(lat.atoms_below(a));
        ensure!(j == a, "join of atoms", "{}", lat.label(a));
    }
    Report::ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(n: i64) -> FiniteLattice {
        let d: Vec<i64> = (1..=n).filter(|x| n % x == 0).collect();
        let labels = d.iter().map(|&x| Label::Vector(vec![x])).collect();
        FiniteLattice::build(labels, |a, b| d[b] % d[a] == 0).unwrap()
    }

    #[test]
    fn boolean_lattice_b3() {
        let b3 = boolean_lattice(3).unwrap();
        assert_eq!(b3.len(), 8);
        let h = b3.heights().unwrap();
        for (i, &hi) in h.iter().enumerate() {
            assert_eq!(hi, (i as u32).count_ones());
        }
        let f = b3.flags();
        assert!(f.is_graded && f.is_modular && f.is_distributive);
        assert!(f.is_complemented && f.is_relatively_complemented);
        assert_eq!(b3.atoms(), &[1, 2, 4]);
        assert_eq!(boolean_lattice(0).unwrap().len(), 1);
    }

    #[test]
    fn divisors_of_12() {
        let l = divisors(12);
        let f = l.flags();
        assert!(f.is_distributive && f.is_modular);
        assert!(!f.is_complemented);
        let idx = |x: i64| l.find(&Label::Vector(vec![x])).unwrap();
        assert_eq!(l.join(idx(4), idx(6)), idx(12));
        assert_eq!(l.meet(idx(4), idx(6)), idx(2));
    }

    #[test]
    fn subspace_lattices() {
        let l = subspace_lattice(2, 2).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.height(l.top()).unwrap(), 2);
        let l3 = subspace_lattice(2, 3).unwrap();
        let f = l3.flags();
        assert!(f.is_modular && f.is_complemented && !f.is_distributive);
        assert!(f.is_relatively_complemented);
        assert!(atoms_join_check(&subspace_lattice(3, 2).unwrap()).is_ok());
    }

    #[test]
    fn chains_and_atoms() {
        let chain = grid_lattice(&[2]).unwrap();
        assert!(!chain.flags().is_complemented);
        let r = atoms_join_check(&chain);
        assert!(!r.is_ok());
        assert_eq!(r.witness.as_deref(), Some("(2)"));
        assert!(atoms_join_check(&boolean_lattice(4).unwrap()).is_ok());
    }

    #[test]
    fn grid_and_product() {
        let g = grid_lattice(&[2, 2]).unwrap();
        assert_eq!(g.len(), 9);
        let c = grid_lattice(&[1]).unwrap();
        let p = c.product(&c).unwrap();
        assert_eq!(p, grid_lattice(&[1, 1]).unwrap());
        let b2 = boolean_lattice(2).unwrap();
        assert_eq!(p.len(), b2.len());
        assert!(p.flags().is_distributive && p.flags().is_complemented);
    }

    #[test]
    fn dual_and_interval() {
        let l = subspace_lattice(2, 3).unwrap();
        assert_eq!(l.dual().dual(), l);
        let d = l.dual();
        assert_eq!(d.top(), l.bottom());
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(d.join(a, b), l.meet(a, b));
            }
        }
        assert_eq!(l.interval(l.bottom(), l.top()).unwrap(), l);
        let a = l.atoms()[0];
        assert!(l.interval(a, l.bottom()).is_err());
        assert_eq!(l.interval(a, l.top()).unwrap().len(), 5);
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable maximal elements
        let labels = (0..3).map(|i| Label::Vector(vec![i])).collect();
        let err = FiniteLattice::build(labels, |a, b| a == b || a == 0).unwrap_err();
        assert!(matches!(err, Error::NotALattice(1, 2, "join")));
        let labels = (0..2).map(|i| Label::Vector(vec![i])).collect();
        let err = FiniteLattice::build(labels, |_, _| true).unwrap_err();
        assert!(matches!(err, Error::NotAPartialOrder(_)));
    }

    #[test]
    fn non_graded_pentagon() {
        // N5: 0 < a < b < 1, 0 < c < 1
        let labels = (0..5).map(|i| Label::Vector(vec![i])).collect();
        let rel = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)];
        let l = FiniteLattice::build(labels, |a, b| a == b || rel.contains(&(a, b))).unwrap();
        assert!(!l.is_graded());
        assert!(!l.flags().is_modular);
        assert!(matches!(l.height(0), Err(Error::NotGraded)));
    }

    fn corpus() -> Vec<FiniteLattice> {
        vec![
            boolean_lattice(3).unwrap(),
            divisors(12),
            divisors(30),
            subspace_lattice(2, 3).unwrap(),
            subspace_lattice(3, 2).unwrap(),
            grid_lattice(&[2, 1]).unwrap(),
            grid_lattice(&[1, 1, 2]).unwrap(),
            subspace_lattice(2, 2).unwrap().product(&grid_lattice(&[1]).unwrap()).unwrap(),
        ]
    }

    #[test]
    fn modularity_matches_height_identity() {
        for l in corpus() {
            let f = l.flags();
            let by_height = l.heights().is_some_and(|h| {
                (0..l.len()).all(|a| {
                    (0..l.len()).all(|b| h[a] + h[b] == h[l.join(a, b)] + h[l.meet(a, b)])
                })
            });
            assert_eq!(f.is_modular, by_height);
            if f.is_distributive {
                assert!(f.is_modular);
            }
            if f.is_complemented && f.is_modular {
                assert!(f.is_relatively_complemented);
            }
        }
    }

    #[test]
    fn atoms_below_joins_in_distributive_lattices() {
        for l in corpus().into_iter().filter(|l| l.flags().is_distributive) {
            for a in 0..l.len() {
                for b in 0..l.len() {
                    for &j in l.atoms() {
                        if l.leq(j, l.join(a, b)) {
                            assert!(l.leq(j, a) || l.leq(j, b));
                        }
                    }
                }
            }
        }
    }
}
