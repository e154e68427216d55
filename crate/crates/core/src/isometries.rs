//! Weight-preserving automorphisms of `R^n` given by matrices.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::code_latroids::{code_gen_weights_dbar_all, code_gen_weights_dr_all};
use crate::codes::Code;
use crate::enumerators::weight_distribution;
use crate::error::{Error, Result};
use crate::ring::{Pir, RingElement, Vector};
use crate::supports::{SupportFn, SupportKind};

/// A square matrix acting on column vectors of `R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    ring: Pir,
    rows: Vec<Vector>,
}

impl RingMatrix {
    pub fn from_elements(ring: &Pir, rows: Vec<Vector>) -> Result<RingMatrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: r.len(),
            });
        }
        Ok(RingMatrix {
            ring: ring.clone(),
            rows,
        })
    }

    /// Entries read as integers and reduced into `R`.
    pub fn from_ints(ring: &Pir, rows: &[Vec<i64>]) -> Result<RingMatrix> {
        RingMatrix::from_elements(ring, rows.iter().map(|r| ring.vector(r)).collect())
    }

    pub fn identity(ring: &Pir, n: usize) -> RingMatrix {
        let rows = (0..n)
            .map(|i| {
                let mut r = ring.zero_vector(n);
                r[i] = ring.one();
                r
            })
            .collect();
        RingMatrix {
            ring: ring.clone(),
            rows,
        }
    }

    /// The matrix sending `e_j` to `e_perm[j]`.
    pub fn permutation(ring: &Pir, perm: &[usize]) -> RingMatrix {
        let n = perm.len();
        let mut m = RingMatrix::from_elements(ring, vec![ring.zero_vector(n); n]).expect("square");
        for (j, &i) in perm.iter().enumerate() {
            m.rows[i][j] = ring.one();
        }
        m
    }

    pub fn diagonal(ring: &Pir, d: &[RingElement]) -> RingMatrix {
        let mut m = RingMatrix::identity(ring, d.len());
        for (i, &x) in d.iter().enumerate() {
            m.rows[i][i] = x;
        }
        m
    }

    pub fn ring(&self) -> &Pir {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    /// `N v`.
    pub fn apply(&self, v: &[RingElement]) -> Vector {
        let r = &self.ring;
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(r.zero(), |acc, (&a, &b)| r.add(acc, r.mul(a, b)))
            })
            .collect()
    }

    pub fn mul(&self, other: &RingMatrix) -> RingMatrix {
        let n = self.n();
        let cols: Vec<Vector> = (0..n)
            .map(|j| self.apply(&other.rows.iter().map(|r| r[j]).collect::<Vec<_>>()))
            .collect();
        let rows = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        RingMatrix {
            ring: self.ring.clone(),
            rows,
        }
    }

    /// Entrywise projection to the `i`-th factor ring.
    pub fn project(&self, i: usize) -> RingMatrix {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| self.ring.project(e, i)).collect())
            .collect();
        RingMatrix {
            ring: self.ring.factor_ring(i),
            rows,
        }
    }

    /// True when `v -> N v` is a bijection of `R^n`.
    pub fn is_invertible(&self) -> Result<bool> {
        let n = self.n();
        let mut seen = vec![false; self.ring.space_size(n)? as usize];
        for v in self.ring.all_vectors(n)? {
            let i = self.ring.vector_index(&self.apply(&v)) as usize;
            if std::mem::replace(&mut seen[i], true) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The inverse matrix, found by solving `N x = e_j` exhaustively.
    pub fn inverse(&self) -> Result<RingMatrix> {
        let n = self.n();
        let mut cols: Vec<Option<Vector>> = vec![None; n];
        for v in self.ring.all_vectors(n)? {
            let w = self.apply(&v);
            let unit = w.iter().filter(|e| e.code() != 0).count() == 1;
            if let (true, Some(j)) = (unit, w.iter().position(|&e| e == self.ring.one())) {
                cols[j].get_or_insert(v);
            }
        }
        let cols: Vec<Vector> = cols
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument("matrix is not invertible".into()))?;
        let rows = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        Ok(RingMatrix {
            ring: self.ring.clone(),
            rows,
        })
    }

    /// Rows of integers; entries of non-cyclic rings are their element codes.
    pub fn to_ints(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&e| self.ring.to_integer(e).map_or(e.code() as i64, |x| x as i64))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let e: Vec<String> = r.iter().map(|&x| self.ring.format(x)).collect();
                format!("[{}]", e.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl Serialize for RingMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_ints().serialize(s)
    }
}

fn check_support(n: &RingMatrix, s: &SupportFn) -> Result<()> {
    if s.ring() != n.ring() || s.n() != n.n() {
        return Err(Error::InvalidArgument("support and matrix do not match".into()));
    }
    Ok(())
}

/// True when `v -> N v` is bijective on `R^n` and `wt(N v) = wt(v)` for all `v`.
pub fn is_isometry(n: &RingMatrix, s: &SupportFn) -> Result<bool> {
    check_support(n, s)?;
    if !n.is_invertible()? {
        return Ok(false);
    }
    for v in n.ring().all_vectors(n.n())? {
        if s.weight(&n.apply(&v)) != s.weight(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_standard_modular(s: &SupportFn) -> Result<()> {
    if !s.is_standard() {
        return Err(Error::Hypothesis("the support must be standard".into()));
    }
    let r = s.validate_modular()?;
    if !r.is_ok() {
        return Err(Error::NotModular(r.to_string()));
    }
    Ok(())
}

/// `N = D P` with `D` invertible diagonal and `P` a permutation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialDecomposition {
    pub d: RingMatrix,
    pub p: RingMatrix,
    /// `perm[j]` is the row of the invertible entry of column `j`.
    pub perm: Vec<usize>,
}

/// Splits an isometry of `R^n` over a chain ring as `D P`.
///
/// Columns are visited by increasing `|supp_j(1)|` (ties by index). Each
/// column must carry a single nonzero entry, which is a unit in a row not
/// used before; anything else is reported as an axiom violation.
pub fn decompose_chain_isometry(n: &RingMatrix, s: &SupportFn) -> Result<MonomialDecomposition> {
    let ring = n.ring();
    if !ring.is_chain_ring() {
        return Err(Error::Hypothesis("a chain ring is required".into()));
    }
    require_standard_modular(s)?;
    if !is_isometry(n, s)? {
        return Err(Error::NotIsometry(format!("{n} does not preserve the weight")));
    }
    let size = n.n();
    let unit_weight = |j: usize| {
        let mut e = ring.zero_vector(size);
        e[j] = ring.one();
        s.weight(&e)
    };
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&j| unit_weight(j));
    let mut perm = vec![usize::MAX; size];
    let mut used = vec![false; size];
    let mut diag = vec![ring.zero(); size];
    for &j in &order {
        let nonzero: Vec<usize> = (0..size).filter(|&i| n.entry(i, j).code() != 0).collect();
        let [i] = nonzero.as_slice() else {
            return Err(Error::AxiomViolation(format!(
                "column {j} of {n} has {} nonzero entries",
                nonzero.len()
            )));
        };
        if used[*i] || !ring.is_unit(n.entry(*i, j)) {
            return Err(Error::AxiomViolation(format!(
                "column {j} of {n} has no fresh invertible entry"
            )));
        }
        used[*i] = true;
        perm[j] = *i;
        diag[*i] = n.entry(*i, j);
    }
    let d = RingMatrix::diagonal(ring, &diag);
    let p = RingMatrix::permutation(ring, &perm);
    if &d.mul(&p) != n {
        return Err(Error::AxiomViolation(format!("D P does not reproduce {n}")));
    }
    Ok(MonomialDecomposition { d, p, perm })
}

/// The support on `R_i^n` induced through the embedding into `R^n`; it
/// stays a coordinatewise product when `s` is one.
pub fn factor_support(s: &SupportFn, i: usize) -> Result<SupportFn> {
    let ring = s.ring();
    let fr = ring.factor_ring(i);
    let lift = |v: &[RingElement]| -> Vector { v.iter().map(|&e| ring.embed(i, e)).collect() };
    let widths: Vec<usize> = match s.kind() {
        SupportKind::Hamming => vec![1; s.n()],
        SupportKind::Chain => vec![ring.num_factors(); s.n()],
        SupportKind::StandardProduct(parts) => parts.iter().map(SupportFn::u).collect(),
        SupportKind::Custom(_) => {
            return SupportFn::from_fn_unchecked(&fr, s.n(), s.u(), |v| s.eval(&lift(v)).0);
        }
    };
    let mut parts = Vec::with_capacity(s.n());
    let mut offset = 0;
    for (j, &w) in widths.iter().enumerate() {
        parts.push(SupportFn::from_fn_unchecked(&fr, 1, w, |x| {
            let mut v = fr.zero_vector(s.n());
            v[j] = x[0];
            s.eval(&lift(&v)).0[offset..offset + w].to_vec()
        })?);
        offset += w;
    }
    SupportFn::standard_product(parts)
}

/// The factor maps `phi_i` of an isometry over a product ring, each checked
/// to be an isometry for the induced support.
pub fn pir_isometry_projections(n: &RingMatrix, s: &SupportFn) -> Result<Vec<(usize, RingMatrix)>> {
    require_standard_modular(s)?;
    if !is_isometry(n, s)? {
        return Err(Error::NotIsometry(format!("{n} does not preserve the weight")));
    }
    let ring = n.ring();
    (0..ring.num_factors())
        .map(|i| {
            let m = n.project(i);
            // phi_i must agree with phi on the embedded factor
            for v in m.ring().all_vectors(n.n())? {
                let lifted: Vector = v.iter().map(|&e| ring.embed(i, e)).collect();
                let image: Vector = n.apply(&lifted).iter().map(|&e| ring.project(e, i)).collect();
                if image != m.apply(&v) {
                    return Err(Error::AxiomViolation(format!("projection {i} does not commute")));
                }
            }
            if !is_isometry(&m, &factor_support(s, i)?)? {
                return Err(Error::AxiomViolation(format!("projection {i} is not an isometry")));
            }
            Ok((i, m))
        })
        .collect()
}

/// A random `D P` over `ring` with unit diagonal and uniform permutation.
pub fn random_monomial<G: Rng>(ring: &Pir, n: usize, rng: &mut G) -> (Vec<RingElement>, Vec<usize>, RingMatrix) {
    let units: Vec<RingElement> = ring.elements().filter(|&e| ring.is_unit(e)).collect();
    let d: Vec<RingElement> = (0..n).map(|_| *units.choose(rng).expect("1 is a unit")).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let m = RingMatrix::diagonal(ring, &d).mul(&RingMatrix::permutation(ring, &perm));
    (d, perm, m)
}

/// Invariants of `C` and `N C` side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub big_m: (u32, u32),
    pub dr: (Vec<u32>, Vec<u32>),
    pub dbar: (Vec<u32>, Vec<u32>),
    pub distribution: (Vec<u64>, Vec<u64>),
}

impl InvarianceReport {
    pub fn is_ok(&self) -> bool {
        self.big_m.0 == self.big_m.1
            && self.dr.0 == self.dr.1
            && self.dbar.0 == self.dbar.1
            && self.distribution.0 == self.distribution.1
    }
}

/// Maps `C` through an isometry and compares its invariants.
pub fn equivalence_invariance_check(c: &Code, n: &RingMatrix, s: &SupportFn) -> Result<InvarianceReport> {
    if !is_isometry(n, s)? {
        return Err(Error::NotIsometry(format!("{n} does not preserve the weight")));
    }
    let image = c.map(c.n(), |v| n.apply(v));
    Ok(InvarianceReport {
        big_m: (c.big_m(), image.big_m()),
        dr: (code_gen_weights_dr_all(c, s)?, code_gen_weights_dr_all(&image, s)?),
        dbar: (code_gen_weights_dbar_all(c, s)?, code_gen_weights_dbar_all(&image, s)?),
        distribution: (weight_distribution(c, s)?, weight_distribution(&image, s)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supports::z6_product_support;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z6() -> Pir {
        "Z_2 x Z_3".parse().unwrap()
    }

    #[test]
    fn z6_example() {
        let s = z6_product_support(2).unwrap();
        let m = RingMatrix::from_ints(&z6(), &[vec![2, 3], vec![3, 2]]).unwrap();
        assert!(is_isometry(&m, &s).unwrap());
        let proj = pir_isometry_projections(&m, &s).unwrap();
        assert_eq!(proj[0].1.to_ints(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(proj[1].1.to_ints(), vec![vec![2, 0], vec![0, 2]]);
        for (i, pm) in &proj {
            let fs = factor_support(&s, *i).unwrap();
            let dec = decompose_chain_isometry(pm, &fs).unwrap();
            assert_eq!(&dec.d.mul(&dec.p), pm);
        }
        let c = Code::span(&z6(), 2, vec![z6().vector(&[1, 0])]).unwrap();
        assert!(equivalence_invariance_check(&c, &m, &s).unwrap().is_ok());
    }

    #[test]
    fn basic_matrices() {
        let z4 = Pir::chain(2, 2).unwrap();
        let s = SupportFn::chain(&z4, 2);
        assert!(is_isometry(&RingMatrix::identity(&z4, 2), &s).unwrap());
        let two = RingMatrix::from_ints(&z4, &[vec![2]]).unwrap();
        assert!(!is_isometry(&two, &SupportFn::chain(&z4, 1)).unwrap());
        let d = RingMatrix::from_ints(&z4, &[vec![3, 0], vec![0, 1]]).unwrap();
        let dec = decompose_chain_isometry(&d, &s).unwrap();
        assert_eq!(dec.d, d);
        assert_eq!(dec.p, RingMatrix::identity(&z4, 2));
        let p = RingMatrix::permutation(&z4, &[1, 0]);
        let dec = decompose_chain_isometry(&p, &s).unwrap();
        assert_eq!(dec.p, p);
        assert_eq!(dec.d, RingMatrix::identity(&z4, 2));
        let shear = RingMatrix::from_ints(&z4, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(matches!(decompose_chain_isometry(&shear, &s), Err(Error::NotIsometry(_))));
    }

    #[test]
    fn random_monomials_round_trip() {
        let z8 = Pir::chain(2, 3).unwrap();
        let s = SupportFn::chain(&z8, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let (d, perm, m) = random_monomial(&z8, 3, &mut rng);
            let dec = decompose_chain_isometry(&m, &s).unwrap();
            assert_eq!(dec.perm, perm);
            assert_eq!(dec.d, RingMatrix::diagonal(&z8, &d));
            let inv = m.inverse().unwrap();
            assert_eq!(inv.mul(&m), RingMatrix::identity(&z8, 3));
            assert!(is_isometry(&inv, &s).unwrap());
            let (_, _, m2) = random_monomial(&z8, 3, &mut rng);
            assert!(is_isometry(&m.mul(&m2), &s).unwrap());
        }
    }

    #[test]
    fn unit_scaling_over_z9() {
        let z9 = Pir::chain(3, 2).unwrap();
        let s = SupportFn::chain(&z9, 2);
        let m = RingMatrix::from_ints(&z9, &[vec![2, 0], vec![0, 4]]).unwrap();
        let c = Code::from_rows(&z9, 2, &[vec![1, 3]]).unwrap();
        let r = equivalence_invariance_check(&c, &m, &s).unwrap();
        assert!(r.is_ok());
        let p = RingMatrix::permutation(&z9, &[1, 0]);
        assert!(equivalence_invariance_check(&c, &p, &s).unwrap().is_ok());
    }
}
