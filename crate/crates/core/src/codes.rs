//! Linear codes over a [`Pir`], materialized as sorted codeword sets.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Label};
use crate::limits;
use crate::ring::{Ideal, Pir, RingElement, Vector};

/// An `R`-submodule of `R^n` with all of its codewords.
#[derive(Clone, Debug)]
pub struct Code {
    ring: Pir,
    n: usize,
    generators: Vec<Vector>,
    words: Vec<Vector>,
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.n == other.n && self.words == other.words
    }
}

impl Eq for Code {}

fn log_exact(size: u64, p: u32) -> Result<u32> {
    let mut s = size;
    let mut e = 0;
    while s > 1 && s.is_multiple_of(p as u64) {
        s /= p as u64;
        e += 1;
    }
    if s != 1 {
        return Err(Error::InvalidArgument(format!(
            "{size} is not a power of {p}; input is not a submodule"
        )));
    }
    Ok(e)
}

impl Code {
    /// The submodule generated by `generators`.
    pub fn span(ring: &Pir, n: usize, generators: Vec<Vector>) -> Result<Code> {
        if n == 0 {
            return Err(Error::InvalidArgument("code length must be at least 1".into()));
        }
        for g in &generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.len(),
                });
            }
            if g.iter().any(|e| e.code() >= ring.size()) {
                return Err(Error::InvalidArgument("generator entry outside the ring".into()));
            }
        }
        ring.space_size(n)?;
        let mut words: HashSet<Vector> = HashSet::from([ring.zero_vector(n)]);
        for g in &generators {
            let multiples: BTreeSet<Vector> = ring.elements().map(|r| ring.vec_scale(r, g)).collect();
            if multiples.iter().all(|m| words.contains(m)) {
                continue;
            }
            words = words
                .iter()
                .flat_map(|w| multiples.iter().map(move |m| ring.vec_add(w, m)))
                .collect();
        }
        let mut words: Vec<Vector> = words.into_iter().collect();
        words.sort();
        Ok(Code {
            ring: ring.clone(),
            n,
            generators,
            words,
        })
    }

    /// Span of integer generator rows (see [`Pir::from_integer`]).
    pub fn from_rows(ring: &Pir, n: usize, rows: &[Vec<i64>]) -> Result<Code> {
        Code::span(ring, n, rows.iter().map(|r| ring.vector(r)).collect())
    }

    pub fn zero(ring: &Pir, n: usize) -> Code {
        Code {
            ring: ring.clone(),
            n,
            generators: vec![],
            words: vec![ring.zero_vector(n)],
        }
    }

    /// All of `R^n`.
    pub fn full(ring: &Pir, n: usize) -> Result<Code> {
        let gens = (0..n)
            .map(|i| {
                let mut v = ring.zero_vector(n);
                v[i] = ring.one();
                v
            })
            .collect();
        Code::span(ring, n, gens)
    }

    /// Wraps a set already known to be a submodule.
    pub(crate) fn from_words_unchecked(ring: &Pir, n: usize, mut words: Vec<Vector>) -> Code {
        words.sort();
        words.dedup();
        Code {
            ring: ring.clone(),
            n,
            generators: vec![],
            words,
        }
    }

    pub fn ring(&self) -> &Pir {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn codewords(&self) -> &[Vector] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_zero(&self) -> bool {
        self.words.len() == 1
    }

    pub fn contains(&self, v: &[RingElement]) -> bool {
        self.words.binary_search_by(|w| w.as_slice().cmp(v)).is_ok()
    }

    pub fn is_subcode_of(&self, other: &Code) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }

    pub fn intersection(&self, other: &Code) -> Code {
        let words = self.words.iter().filter(|w| other.contains(w)).cloned().collect();
        Code::from_words_unchecked(&self.ring, self.n, words)
    }

    pub fn sum(&self, other: &Code) -> Code {
        let words: HashSet<Vector> = self
            .words
            .iter()
            .flat_map(|a| other.words.iter().map(move |b| self.ring.vec_add(a, b)))
            .collect();
        Code::from_words_unchecked(&self.ring, self.n, words.into_iter().collect())
    }

    /// `{ r c : c in C }`.
    pub fn scaled(&self, r: RingElement) -> Code {
        let words = self.words.iter().map(|w| self.ring.vec_scale(r, w)).collect();
        Code::from_words_unchecked(&self.ring, self.n, words)
    }

    /// The cyclic submodule generated by `v`.
    pub fn cyclic(ring: &Pir, v: &[RingElement]) -> Code {
        let words = ring.elements().map(|r| ring.vec_scale(r, v)).collect();
        let mut c = Code::from_words_unchecked(ring, v.len(), words);
        c.generators = vec![v.to_vec()];
        c
    }

    /// Image under a map `R^n -> R^m` that is `R`-linear.
    pub fn map(&self, m: usize, f: impl Fn(&[RingElement]) -> Vector) -> Code {
        let words = self.words.iter().map(|w| f(w)).collect();
        let mut c = Code::from_words_unchecked(&self.ring, m, words);
        c.generators = self.generators.iter().map(|g| f(g)).collect();
        c
    }

    /// `C_i = pi_i(C)` over the `i`-th factor ring.
    pub fn factor_code(&self, i: usize) -> Code {
        let fr = self.ring.factor_ring(i);
        let proj = |v: &[RingElement]| -> Vector { v.iter().map(|&e| self.ring.project(e, i)).collect() };
        let words = self.words.iter().map(|w| proj(w)).collect();
        let mut c = Code::from_words_unchecked(&fr, self.n, words);
        c.generators = self.generators.iter().map(|g| proj(g)).collect();
        c
    }

    /// Reassembles `C_1 x ... x C_l` from factor codes of equal length.
    pub fn from_factor_codes(ring: &Pir, parts: &[Code]) -> Result<Code> {
        if parts.len() != ring.num_factors() {
            return Err(Error::DimensionMismatch {
                expected: ring.num_factors(),
                got: parts.len(),
            });
        }
        let n = parts[0].n;
        if parts.iter().any(|c| c.n != n) {
            return Err(Error::InvalidArgument("factor codes must share a length".into()));
        }
        let mut gens = Vec::new();
        for (i, c) in parts.iter().enumerate() {
            if c.ring.factors() != [*ring.factor(i)] {
                return Err(Error::InvalidArgument(format!("factor code {i} is over the wrong ring")));
            }
            for g in &c.generators {
                gens.push(g.iter().map(|&e| ring.embed(i, e)).collect());
            }
        }
        let out = Code::span(ring, n, gens)?;
        let expected: usize = parts.iter().map(|c| c.size()).product();
        if out.size() != expected {
            return Err(Error::InvalidArgument("factor codes need generators".into()));
        }
        Ok(out)
    }

    /// `lambda(C_i)` for every factor.
    pub fn lambda_factors(&self) -> Result<Vec<u32>> {
        (0..self.ring.num_factors())
            .map(|i| log_exact(self.factor_code(i).size() as u64, self.ring.factor(i).p()))
            .collect()
    }

    /// Composition length `lambda(C) = sum_i log_{p_i} |C_i|`.
    pub fn lambda(&self) -> u32 {
        self.lambda_factors().expect("codes are submodules").iter().sum()
    }

    /// Minimal number of generators of each `C_i`, as `log_p |C_i| / |alpha C_i|`.
    pub fn mu_factors(&self) -> Vec<u32> {
        (0..self.ring.num_factors())
            .map(|i| {
                let ci = self.factor_code(i);
                let f = self.ring.factor(i);
                let alpha = ci.ring.from_integer(f.p() as i64);
                let quotient = ci.size() / ci.scaled(alpha).size();
                log_exact(quotient as u64, f.p()).expect("Nakayama quotient is a power of p")
            })
            .collect()
    }

    /// Minimal number of generators of `C` (the largest factor value).
    pub fn mu(&self) -> u32 {
        self.mu_factors().into_iter().max().unwrap_or(0)
    }

    /// `M(C) = mu(C_1) + ... + mu(C_l)`.
    pub fn big_m(&self) -> u32 {
        self.mu_factors().iter().sum()
    }

    /// All submodules, by join-closure of the cyclic submodules, sorted by
    /// size and then by codeword list.
    pub fn submodules(&self) -> Result<Vec<Code>> {
        limits::check("submodule enumeration", self.size() as u128, limits::SUBMODULE_CODE)?;
        let mut cyclic: Vec<Vec<Vector>> = self
            .words
            .iter()
            .map(|c| Code::cyclic(&self.ring, c).words)
            .collect();
        cyclic.sort();
        cyclic.dedup();
        let mut seen: HashSet<Vec<Vector>> = HashSet::new();
        let mut queue: Vec<Vec<Vector>> = vec![vec![self.ring.zero_vector(self.n)]];
        seen.insert(queue[0].clone());
        while let Some(d) = queue.pop() {
            let dc = Code::from_words_unchecked(&self.ring, self.n, d);
            for z in &cyclic {
                if z.iter().all(|w| dc.contains(w)) {
                    continue;
                }
                let s = dc.sum(&Code::from_words_unchecked(&self.ring, self.n, z.clone()));
                if seen.insert(s.words.clone()) {
                    queue.push(s.words);
                }
            }
        }
        let mut subs: Vec<Vec<Vector>> = seen.into_iter().collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(subs
            .into_iter()
            .map(|w| Code::from_words_unchecked(&self.ring, self.n, w))
            .collect())
    }

    /// `pi_1(C) x ... x pi_n(C)`.
    pub fn rectangular_closure(&self) -> RectangularModule {
        let l = self.ring.num_factors();
        let ideals = (0..self.n)
            .map(|j| {
                let exponents = (0..l)
                    .map(|i| {
                        self.words
                            .iter()
                            .map(|w| self.ring.valuation(w[j], i))
                            .min()
                            .unwrap_or(self.ring.factor(i).k())
                    })
                    .collect();
                Ideal { exponents }
            })
            .collect();
        RectangularModule { ideals }
    }

    pub fn format_word(&self, w: &[RingElement]) -> String {
        let parts: Vec<String> = w.iter().map(|&e| self.ring.format(e)).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| self.format_word(g)).collect();
        write!(
            f,
            "<{}> in ({})^{} ({} codewords)",
            gens.join(", "),
            self.ring,
            self.n,
            self.size()
        )
    }
}

/// A product of ideals `I_1 x ... x I_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectangularModule {
    pub ideals: Vec<Ideal>,
}

impl RectangularModule {
    pub fn contains(&self, ring: &Pir, v: &[RingElement]) -> bool {
        self.ideals.iter().zip(v).all(|(id, &e)| ring.ideal_contains(id, e))
    }

    pub fn le(&self, ring: &Pir, other: &RectangularModule) -> bool {
        self.ideals.iter().zip(&other.ideals).all(|(a, b)| ring.ideal_le(a, b))
    }

    pub fn size(&self, ring: &Pir) -> u64 {
        self.ideals.iter().map(|id| ring.ideal_size(id)).product()
    }

    pub fn to_code(&self, ring: &Pir) -> Code {
        let n = self.ideals.len();
        let gens = self
            .ideals
            .iter()
            .enumerate()
            .map(|(j, id)| {
                let mut v = ring.zero_vector(n);
                v[j] = ring.ideal_generator(id);
                v
            })
            .collect::<Vec<_>>();
        let mut c = Code::span(ring, n, gens).expect("rectangular module within caps");
        c.generators.retain(|g| !ring.vec_is_zero(g));
        c
    }

    /// Every rectangular module of `R^n`, in mixed-radix order of exponents.
    pub fn all(ring: &Pir, n: usize) -> Vec<RectangularModule> {
        let ideals = ring.ideals();
        let mut out: Vec<Vec<Ideal>> = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    ideals.iter().map(move |id| {
                        let mut q = p.clone();
                        q.push(id.clone());
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|ideals| RectangularModule { ideals }).collect()
    }

    pub fn intersection(&self, ring: &Pir, other: &RectangularModule) -> RectangularModule {
        RectangularModule {
            ideals: self
                .ideals
                .iter()
                .zip(&other.ideals)
                .map(|(a, b)| ring.ideal_intersection(a, b))
                .collect(),
        }
    }

    pub fn sum(&self, ring: &Pir, other: &RectangularModule) -> RectangularModule {
        RectangularModule {
            ideals: self
                .ideals
                .iter()
                .zip(&other.ideals)
                .map(|(a, b)| ring.ideal_sum(a, b))
                .collect(),
        }
    }
}

/// The lattice of submodules of a code together with the modules themselves.
#[derive(Clone, Debug)]
pub struct ModuleLattice {
    pub lattice: FiniteLattice,
    pub modules: Vec<Code>,
}

impl ModuleLattice {
    /// Submodules of `code` under inclusion, labelled by their codeword lists.
    pub fn of(code: &Code) -> Result<ModuleLattice> {
        let modules = code.submodules()?;
        limits::check("lattice", modules.len() as u128, limits::LATTICE_SIZE)?;
        let labels = modules
            .iter()
            .map(|m| Label::Rows(m.words.iter().map(|w| w.iter().map(|e| e.code()).collect()).collect()))
            .collect();
        let lattice = FiniteLattice::build(labels, |a, b| {
            modules[a].size() <= modules[b].size() && modules[a].is_subcode_of(&modules[b])
        })?;
        Ok(ModuleLattice { lattice, modules })
    }

    pub fn index_of(&self, c: &Code) -> Option<usize> {
        self.modules.iter().position(|m| m == c)
    }
}

/// The submodule lattice of `code`.
pub fn submodule_lattice(code: &Code) -> Result<FiniteLattice> {
    Ok(ModuleLattice::of(code)?.lattice)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Pir {
        Pir::chain(2, 2).unwrap()
    }

    fn words(c: &Code) -> Vec<Vec<i64>> {
        c.codewords()
            .iter()
            .map(|w| w.iter().map(|e| e.code() as i64).collect())
            .collect()
    }

    #[test]
    fn span_examples() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        assert_eq!(words(&c), vec![vec![0, 0], vec![1, 2], vec![2, 0], vec![3, 2]]);
        assert_eq!(Code::span(&z4(), 3, vec![]).unwrap().size(), 1);
        let f2 = Pir::field(2).unwrap();
        assert_eq!(Code::from_rows(&f2, 3, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap().size(), 4);
        assert!(Code::from_rows(&z4(), 2, &[vec![1]]).is_err());
    }

    #[test]
    fn invariants_lambda_mu() {
        let r = z4();
        let c = Code::from_rows(&r, 2, &[vec![1, 2]]).unwrap();
        assert_eq!((c.lambda(), c.mu()), (2, 1));
        let z = Code::zero(&r, 2);
        assert_eq!((z.lambda(), z.mu(), z.big_m()), (0, 0, 0));
        let full = Code::full(&r, 2).unwrap();
        assert_eq!((full.lambda(), full.mu()), (4, 2));
        let z8 = Pir::chain(2, 3).unwrap();
        assert_eq!(Code::from_rows(&z8, 1, &[vec![2]]).unwrap().lambda(), 2);
    }

    #[test]
    fn submodule_examples() {
        let r = z4();
        let c = Code::from_rows(&r, 2, &[vec![1, 2]]).unwrap();
        let subs = c.submodules().unwrap();
        assert_eq!(subs.len(), 3);
        assert_eq!(words(&subs[1]), vec![vec![0, 0], vec![2, 0]]);
        assert_eq!(subs[2], c);
        assert_eq!(Code::zero(&r, 2).submodules().unwrap().len(), 1);
        let f2 = Pir::field(2).unwrap();
        assert_eq!(Code::full(&f2, 2).unwrap().submodules().unwrap().len(), 5);
    }

    #[test]
    fn submodules_closed_under_sum_and_intersection() {
        for c in [
            Code::full(&z4(), 2).unwrap(),
            Code::full(&Pir::chain(2, 3).unwrap(), 1).unwrap(),
            Code::from_rows(&"Z_2 x Z_3".parse().unwrap(), 2, &[vec![1, 2], vec![3, 3]]).unwrap(),
        ] {
            let subs = c.submodules().unwrap();
            for a in &subs {
                assert_eq!(a.size() as u64, {
                    let lf = a.lambda_factors().unwrap();
                    c.ring().factors().iter().zip(lf).map(|(f, l)| (f.p() as u64).pow(l)).product::<u64>()
                });
                for b in &subs {
                    assert!(subs.contains(&a.sum(b)));
                    assert!(subs.contains(&a.intersection(b)));
                }
            }
        }
    }

    #[test]
    fn mu_is_at_most_lambda() {
        for c in [Code::full(&z4(), 2).unwrap(), Code::full(&Pir::chain(2, 3).unwrap(), 1).unwrap()] {
            for d in c.submodules().unwrap() {
                assert!(d.mu() <= d.lambda());
                // mu = lambda exactly when alpha D = 0, i.e. D is an F_p-space
                let two = d.ring().from_integer(2);
                assert_eq!(d.mu() == d.lambda(), d.scaled(two).is_zero());
            }
        }
    }

    #[test]
    fn rectangular_closure_examples() {
        let r = z4();
        let c = Code::from_rows(&r, 2, &[vec![1, 2]]).unwrap();
        let cl = c.rectangular_closure();
        assert_eq!(cl.ideals[0].exponents, vec![0]);
        assert_eq!(cl.ideals[1].exponents, vec![1]);
        let z = Code::zero(&r, 2).rectangular_closure();
        assert!(z.ideals.iter().all(|i| i.exponents == vec![2]));
        let c2 = Code::from_rows(&r, 2, &[vec![2, 0]]).unwrap().rectangular_closure();
        assert_eq!((c2.ideals[0].exponents[0], c2.ideals[1].exponents[0]), (1, 2));
    }

    #[test]
    fn rectangular_closure_is_minimal() {
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        for c in [
            Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap(),
            Code::from_rows(&z4(), 2, &[vec![2, 2]]).unwrap(),
            Code::from_rows(&r, 2, &[vec![2, 3]]).unwrap(),
        ] {
            let ring = c.ring().clone();
            let cl = c.rectangular_closure();
            assert!(c.codewords().iter().all(|w| cl.contains(&ring, w)));
            for m in RectangularModule::all(&ring, 2) {
                if c.codewords().iter().all(|w| m.contains(&ring, w)) {
                    assert!(cl.le(&ring, &m));
                }
            }
        }
    }

    #[test]
    fn factor_codes_round_trip() {
        let r: Pir = "Z_2 x Z_3".parse().unwrap();
        let c = Code::from_rows(&r, 2, &[vec![1, 0], vec![2, 3]]).unwrap();
        let parts: Vec<Code> = (0..2).map(|i| c.factor_code(i)).collect();
        assert_eq!(Code::from_factor_codes(&r, &parts).unwrap(), c);
        assert_eq!(c.size(), parts[0].size() * parts[1].size());
        assert_eq!(c.big_m(), parts[0].mu() + parts[1].mu());
    }
}
