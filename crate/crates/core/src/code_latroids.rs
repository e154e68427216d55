//! Latroids attached to codes, and generalized weights computed both from
//! the latroid and directly from subcodes.

use std::sync::Arc;

use serde::Serialize;

use crate::codes::{Code, ModuleLattice, RectangularModule};
use crate::error::{Error, Result};
use crate::fq::{self, Row};
use crate::lattice::{boolean_lattice, grid_lattice, subspace_lattice, FiniteLattice, Label};
use crate::latroid::{Latroid, Scalar};
use crate::limits;
use crate::report::{ensure, Report};
use crate::ring::{Ideal, Pir, RingElement};
use crate::supports::SupportFn;

/// A length functional on submodules of `R^n`.
#[derive(Clone, Debug)]
pub enum LengthFn {
    /// Composition length `lambda`.
    Lambda,
    /// The support vector `supp(M)`.
    Support(SupportFn),
    /// The support weight `|supp(M)|`.
    SupportWeight(SupportFn),
}

impl LengthFn {
    pub fn eval(&self, m: &Code) -> Scalar {
        match self {
            LengthFn::Lambda => Scalar::int(m.lambda() as i64),
            LengthFn::Support(s) => Scalar::ints(&s.code_support(m).to_i64()),
            LengthFn::SupportWeight(s) => Scalar::int(s.code_weight(m) as i64),
        }
    }
}

fn sv(s: &crate::supports::SupportVec) -> Scalar {
    Scalar::ints(&s.to_i64())
}

fn dim_from_count(count: usize, q: u32) -> i64 {
    let (mut c, mut d) = (count, 0);
    while c > 1 {
        debug_assert_eq!(c % q as usize, 0);
        c /= q as usize;
        d += 1;
    }
    d
}

/// `rho_C(M) = ||M|| - ||M ∩ C||` on a lattice of submodules.
pub fn latroid_from_code(c: &Code, len: &LengthFn, lat: &ModuleLattice) -> Result<Latroid> {
    if let Some(m) = lat.modules.first() {
        if m.ring() != c.ring() || m.n() != c.n() {
            return Err(Error::InvalidArgument(
                "the code and the lattice live in different ambient modules".into(),
            ));
        }
    }
    let lattice = Arc::new(lat.lattice.clone());
    let lens: Vec<Scalar> = lat.modules.iter().map(|m| len.eval(m)).collect();
    let free = Latroid::free_with(lattice.clone(), lens.clone())?;
    let report = free.validate();
    if !report.is_ok() {
        return Err(Error::AxiomViolation(format!("length function: {report}")));
    }
    let rho = lat
        .modules
        .iter()
        .zip(&lens)
        .map(|(m, l)| l - &len.eval(&m.intersection(c)))
        .collect();
    Latroid::new(lattice, rho, lens)
}

fn subcode_in_rect(c: &Code, m: &RectangularModule) -> Code {
    let ring = c.ring();
    let words = c.codewords().iter().filter(|w| m.contains(ring, w)).cloned().collect();
    Code::from_words_unchecked(ring, c.n(), words)
}

/// The rectangular module whose chain support is the grid point `p`.
fn rect_with_support(ring: &Pir, n: usize, p: &[i64]) -> RectangularModule {
    let l = ring.num_factors();
    let ideals = (0..n)
        .map(|j| Ideal {
            exponents: (0..l).map(|i| ring.factor(i).k() - p[j * l + i] as u32).collect(),
        })
        .collect();
    RectangularModule { ideals }
}

/// `rho_C(supp(M)) = |supp(M)| - lambda(M ∩ C)` on the chain support grid.
/// Over a product ring both sides are `l`-tuples of factor values.
pub fn chain_support_latroid(c: &Code) -> Result<Latroid> {
    let ring = c.ring();
    let (n, l) = (c.n(), ring.num_factors());
    let bounds = SupportFn::chain(ring, n).ambient_support().0;
    let lattice = grid_lattice(&bounds)?;
    let mut rho = Vec::with_capacity(lattice.len());
    let mut len = Vec::with_capacity(lattice.len());
    for a in 0..lattice.len() {
        let p = lattice.label(a).as_vector().expect("grid labels are vectors");
        let m = rect_with_support(ring, n, p);
        let lam = subcode_in_rect(c, &m).lambda_factors()?;
        let norms: Vec<i64> = (0..l).map(|i| (0..n).map(|j| p[j * l + i]).sum()).collect();
        rho.push(Scalar::ints(
            &norms.iter().zip(&lam).map(|(&x, &y)| x - y as i64).collect::<Vec<_>>(),
        ));
        len.push(Scalar::ints(&norms));
    }
    Latroid::new(Arc::new(lattice), rho, len)
}

/// The lattice of rectangular submodules of `R^n`, labelled by flattened
/// exponent tuples, with the modules in the same order.
pub fn rectangular_lattice(ring: &Pir, n: usize) -> Result<(FiniteLattice, Vec<RectangularModule>)> {
    let count = limits::pow_sat(ring.ideals().len() as u64, n);
    limits::check("lattice", count, limits::LATTICE_SIZE)?;
    let rects = RectangularModule::all(ring, n);
    let labels = rects
        .iter()
        .map(|m| {
            Label::Vector(
                m.ideals
                    .iter()
                    .flat_map(|id| id.exponents.iter().map(|&e| e as i64))
                    .collect(),
            )
        })
        .collect();
    let lattice = FiniteLattice::build(labels, |a, b| rects[a].le(ring, &rects[b]))?;
    Ok((lattice, rects))
}

/// `rho(M) = supp(M) - supp(M ∩ C̄)` on rectangular modules, where `C̄` is
/// the rectangular closure of `C`.
pub fn rect_supp_latroid(c: &Code, s: &SupportFn) -> Result<Latroid> {
    if s.ring() != c.ring() || s.n() != c.n() {
        return Err(Error::InvalidArgument("support and code do not match".into()));
    }
    if !s.is_standard() {
        return Err(Error::Hypothesis("the support must be standard".into()));
    }
    let modular = s.validate_modular()?;
    if !modular.is_ok() {
        return Err(Error::NotModular(modular.to_string()));
    }
    let ring = c.ring();
    let (lattice, rects) = rectangular_lattice(ring, c.n())?;
    let closure = c.rectangular_closure();
    let len: Vec<Scalar> = rects.iter().map(|m| sv(&s.rect_support(m))).collect();
    let rho = rects
        .iter()
        .zip(&len)
        .map(|(m, l)| l - &sv(&s.rect_support(&m.intersection(ring, &closure))))
        .collect();
    Latroid::new(Arc::new(lattice), rho, len)
}

fn require_field(c: &Code) -> Result<u32> {
    if !c.ring().is_prime_field() {
        return Err(Error::Hypothesis("a code over a prime field is required".into()));
    }
    Ok(c.ring().factor(0).p())
}

fn hamming_mask(w: &[RingElement]) -> usize {
    w.iter()
        .enumerate()
        .filter(|(_, e)| e.code() != 0)
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// `rho(L) = |L| - dim C(L)` on subsets of `[n]`, with `C(L)` the codewords
/// supported inside `L`.
pub fn block_matroid(c: &Code) -> Result<Latroid> {
    let q = require_field(c)?;
    let lattice = boolean_lattice(c.n())?;
    let masks: Vec<usize> = c.codewords().iter().map(|w| hamming_mask(w)).collect();
    let mut rho = Vec::with_capacity(lattice.len());
    let mut len = Vec::with_capacity(lattice.len());
    for l in 0..lattice.len() {
        let inside = masks.iter().filter(|&&m| m & !l == 0).count();
        let size = l.count_ones() as i64;
        rho.push(Scalar::int(size - dim_from_count(inside, q)));
        len.push(Scalar::int(size));
    }
    Latroid::new(Arc::new(lattice), rho, len)
}

/// An `F_q`-linear code of tuples of matrices. Block `i` has shape
/// `m_i x n_i` and is stored row-major inside a vector of length
/// `sum m_i n_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCode {
    q: u32,
    shapes: Vec<(usize, usize)>,
    code: Code,
}

impl MatrixCode {
    /// The span of `generators`, each a flat row-major vector.
    pub fn new(q: u32, shapes: Vec<(usize, usize)>, generators: &[Vec<i64>]) -> Result<MatrixCode> {
        if shapes.is_empty() || shapes.iter().any(|&(m, n)| m == 0 || n == 0) {
            return Err(Error::InvalidArgument("matrix blocks must be nonempty".into()));
        }
        let ring = Pir::field(q)?;
        let total = shapes.iter().map(|&(m, n)| m * n).sum();
        let code = Code::from_rows(&ring, total, generators)?;
        Ok(MatrixCode { q, shapes, code })
    }

    /// A single-block code spanned by `m x n` matrices.
    pub fn from_matrices(q: u32, m: usize, n: usize, mats: &[Vec<Vec<i64>>]) -> Result<MatrixCode> {
        let flat: Vec<Vec<i64>> = mats
            .iter()
            .map(|x| {
                if x.len() != m || x.iter().any(|r| r.len() != n) {
                    return Err(Error::DimensionMismatch {
                        expected: m * n,
                        got: x.iter().map(|r| r.len()).sum(),
                    });
                }
                Ok(x.concat())
            })
            .collect::<Result<_>>()?;
        MatrixCode::new(q, vec![(m, n)], &flat)
    }

    /// `C_1 x ... x C_l` for single-block codes over the same field.
    pub fn product(parts: &[MatrixCode]) -> Result<MatrixCode> {
        let q = parts.first().ok_or_else(|| Error::InvalidArgument("empty product".into()))?.q;
        if parts.iter().any(|p| p.q != q) {
            return Err(Error::InvalidArgument("blocks over different fields".into()));
        }
        let shapes: Vec<(usize, usize)> = parts.iter().flat_map(|p| p.shapes.clone()).collect();
        let total: usize = shapes.iter().map(|&(m, n)| m * n).sum();
        let mut gens = Vec::new();
        let mut offset = 0;
        for p in parts {
            let width = p.code.n();
            for g in p.code.generators() {
                let mut v = vec![0i64; total];
                for (k, e) in g.iter().enumerate() {
                    v[offset + k] = e.code() as i64;
                }
                gens.push(v);
            }
            offset += width;
        }
        MatrixCode::new(q, shapes, &gens)
    }

    /// Every block transposed.
    pub fn transpose(&self) -> MatrixCode {
        let map = |w: &[RingElement]| {
            let mut out = Vec::with_capacity(w.len());
            let mut offset = 0;
            for &(m, n) in &self.shapes {
                for j in 0..n {
                    for i in 0..m {
                        out.push(w[offset + i * n + j]);
                    }
                }
                offset += m * n;
            }
            out
        };
        MatrixCode {
            q: self.q,
            shapes: self.shapes.iter().map(|&(m, n)| (n, m)).collect(),
            code: self.code.map(self.code.n(), map),
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn shapes(&self) -> &[(usize, usize)] {
        &self.shapes
    }

    pub fn num_blocks(&self) -> usize {
        self.shapes.len()
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn dim(&self) -> u32 {
        self.code.lambda()
    }

    /// Block `b` of a codeword as a list of rows.
    pub fn block(&self, w: &[RingElement], b: usize) -> Vec<Row> {
        let offset: usize = self.shapes[..b].iter().map(|&(m, n)| m * n).sum();
        let (m, n) = self.shapes[b];
        (0..m)
            .map(|i| (0..n).map(|j| w[offset + i * n + j].code()).collect())
            .collect()
    }

    /// Row space of block `b`, in reduced echelon form.
    pub fn rowspace(&self, w: &[RingElement], b: usize) -> Vec<Row> {
        fq::rref(&self.block(w, b), self.q)
    }

    /// Row space of block `b` summed over a set of codewords.
    pub fn rowspace_of(&self, words: &[Vec<RingElement>], b: usize) -> Vec<Row> {
        let rows: Vec<Row> = words.iter().flat_map(|w| self.block(w, b)).collect();
        fq::rref(&rows, self.q)
    }
}

/// For each codeword and block, the index of its row space in `subs[block]`.
fn rowspace_indices(c: &MatrixCode, subs: &[Vec<Vec<Row>>]) -> Vec<Vec<usize>> {
    c.code
        .codewords()
        .iter()
        .map(|w| {
            (0..c.num_blocks())
                .map(|b| {
                    let r = c.rowspace(w, b);
                    subs[b].iter().position(|s| *s == r).expect("every row space is listed")
                })
                .collect()
        })
        .collect()
}

fn subspaces(q: u32, n: usize) -> Result<(FiniteLattice, Vec<Vec<Row>>)> {
    let lat = subspace_lattice(q, n)?;
    let subs = lat
        .labels()
        .iter()
        .map(|l| match l {
            Label::Rows(r) => r.clone(),
            _ => unreachable!("subspace labels are row bases"),
        })
        .collect();
    Ok((lat, subs))
}

fn require_single(c: &MatrixCode) -> Result<(usize, usize)> {
    match c.shapes.as_slice() {
        [s] => Ok(*s),
        _ => Err(Error::Hypothesis("a single-block matrix code is required".into())),
    }
}

/// `dim C(V)` for every subspace `V` of `F_q^n`, where `C(V)` is the subcode
/// of matrices with row space inside `V`.
fn anticode_dims(c: &MatrixCode, lat: &FiniteLattice, subs: &[Vec<Row>]) -> Vec<i64> {
    let idx = rowspace_indices(c, &[subs.to_vec()]);
    (0..lat.len())
        .map(|v| {
            let count = idx.iter().filter(|i| lat.leq(i[0], v)).count();
            dim_from_count(count, c.q)
        })
        .collect()
}

/// `(m dim(V) - dim C(V), m dim, M(F_q^n))`.
pub fn rank_metric_latroid(c: &MatrixCode) -> Result<Latroid> {
    let (m, n) = require_single(c)?;
    let (lat, subs) = subspaces(c.q, n)?;
    let dims = anticode_dims(c, &lat, &subs);
    let len: Vec<Scalar> = subs.iter().map(|s| Scalar::int((m * s.len()) as i64)).collect();
    let rho = len.iter().zip(&dims).map(|(l, &d)| l - &Scalar::int(d)).collect();
    Latroid::new(Arc::new(lat), rho, len)
}

/// `((dim C - dim C(V^⊥)) / m, dim, M(F_q^n))`.
pub fn tilde_polymatroid(c: &MatrixCode) -> Result<Latroid> {
    let (m, n) = require_single(c)?;
    let (lat, subs) = subspaces(c.q, n)?;
    let dims = anticode_dims(c, &lat, &subs);
    let k = c.dim() as i64;
    let rho = subs
        .iter()
        .map(|s| {
            let perp = fq::orthogonal(s, n, c.q);
            let p = lat.find(&Label::Rows(perp)).expect("complements are subspaces");
            Scalar::ratio(k - dims[p], m as i64)
        })
        .collect();
    let len = subs.iter().map(|s| Scalar::int(s.len() as i64)).collect();
    Latroid::new(Arc::new(lat), rho, len)
}

/// Checks the `q`-polymatroid axioms with `||.||` as the dimension:
/// `0 <= rho <= dim`, monotone, submodular.
pub fn validate_q_polymatroid(lt: &Latroid) -> Report {
    let lat = lt.lattice();
    let n = lt.size();
    let label = |a: usize| lat.label(a).to_string();
    for a in 0..n {
        let r = lt.rho(a);
        ensure!(
            r.is_nonnegative() && r.le(lt.len(a)),
            "P1",
            "V={}, rho={}",
            label(a),
            r
        );
    }
    for a in 0..n {
        for b in 0..n {
            if lat.leq(a, b) {
                ensure!(
                    lt.rho(a).le(lt.rho(b)),
                    "P2",
                    "V={}, W={}",
                    label(a),
                    label(b)
                );
            }
            let lhs = lt.rho(lat.join(a, b)) + lt.rho(lat.meet(a, b));
            let rhs = lt.rho(a) + lt.rho(b);
            ensure!(lhs.le(&rhs), "P3", "V={}, W={}", label(a), label(b));
        }
    }
    Report::ok()
}

/// How a block constrains a lattice element of the sum-rank latroid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumRankConvention {
    /// Column spaces: a block of shape `a x b` has `b` columns in `F_q^a`.
    #[default]
    Column,
    /// Row spaces: a block of shape `a x b` has `a` rows in `F_q^b`.
    Row,
}

/// `rho_C(L) = ||L|| - dim C(L)` on a product of subspace lattices, with
/// `||(V_1..V_l)|| = sum m_i dim V_i`, where `m_i` counts the vectors
/// spanning the relevant space of block `i`. Block 0 is the most
/// significant index of the product.
pub fn sum_rank_latroid(c: &MatrixCode, convention: SumRankConvention) -> Result<Latroid> {
    let c = match convention {
        SumRankConvention::Row => c.clone(),
        SumRankConvention::Column => c.transpose(),
    };
    let mut parts = Vec::with_capacity(c.num_blocks());
    for &(_, n) in &c.shapes {
        parts.push(subspaces(c.q, n)?);
    }
    let mut lattice = parts[0].0.clone();
    for (lat, _) in &parts[1..] {
        lattice = lattice.product(lat)?;
    }
    let subs: Vec<Vec<Vec<Row>>> = parts.iter().map(|(_, s)| s.clone()).collect();
    let idx = rowspace_indices(&c, &subs);
    let sizes: Vec<usize> = parts.iter().map(|(l, _)| l.len()).collect();
    let mut rho = Vec::with_capacity(lattice.len());
    let mut len = Vec::with_capacity(lattice.len());
    for a in 0..lattice.len() {
        let mut comps = vec![0; sizes.len()];
        let mut rest = a;
        for b in (0..sizes.len()).rev() {
            comps[b] = rest % sizes[b];
            rest /= sizes[b];
        }
        let norm: i64 = comps
            .iter()
            .enumerate()
            .map(|(b, &v)| (c.shapes[b].0 * subs[b][v].len()) as i64)
            .sum();
        let count = idx
            .iter()
            .filter(|i| (0..sizes.len()).all(|b| parts[b].0.leq(i[b], comps[b])))
            .count();
        rho.push(Scalar::int(norm - dim_from_count(count, c.q)));
        len.push(Scalar::int(norm));
    }
    Latroid::new(Arc::new(lattice), rho, len)
}

/// Minimal nonzero row spaces of the codewords of a single-block code.
pub fn minimal_rowspace_supports(c: &MatrixCode) -> Result<Vec<Vec<Row>>> {
    require_single(c)?;
    let mut spaces: Vec<Vec<Row>> = c
        .code
        .codewords()
        .iter()
        .map(|w| c.rowspace(w, 0))
        .filter(|r| !r.is_empty())
        .collect();
    spaces.sort();
    spaces.dedup();
    let minimal = spaces
        .iter()
        .filter(|a| {
            !spaces
                .iter()
                .any(|b| b != *a && fq::subspace_le(b, a, c.q))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

fn check_support(c: &Code, s: &SupportFn) -> Result<()> {
    if s.ring() != c.ring() || s.n() != c.n() {
        return Err(Error::InvalidArgument("support and code do not match".into()));
    }
    Ok(())
}

fn weights_by(
    c: &Code,
    s: &SupportFn,
    top: u32,
    size: impl Fn(&Code) -> u32,
) -> Result<Vec<u32>> {
    check_support(c, s)?;
    let subs = c.submodules()?;
    (1..=top)
        .map(|r| {
            subs.iter()
                .filter(|d| size(d) >= r)
                .map(|d| s.code_weight(d))
                .min()
                .ok_or_else(|| Error::Hypothesis(format!("no submodule reaches r = {r}")))
        })
        .collect()
}

/// `d_r(C)` for `r = 1..=M(C)`: least `|supp(D)|` over submodules with `M(D) >= r`.
pub fn code_gen_weights_dr_all(c: &Code, s: &SupportFn) -> Result<Vec<u32>> {
    weights_by(c, s, c.big_m(), Code::big_m)
}

/// `d̄_r(C)` for `r = 1..=lambda(C)`: least `|supp(D)|` over submodules with
/// `lambda(D) >= r`.
pub fn code_gen_weights_dbar_all(c: &Code, s: &SupportFn) -> Result<Vec<u32>> {
    weights_by(c, s, c.lambda(), Code::lambda)
}

fn in_range(r: u32, top: u32, what: &str) -> Result<usize> {
    if r == 0 || r > top {
        return Err(Error::OutOfRange(format!("r = {r} outside 1..={top} ({what})")));
    }
    Ok(r as usize - 1)
}

pub fn code_gen_weight_dr(c: &Code, s: &SupportFn, r: u32) -> Result<u32> {
    let i = in_range(r, c.big_m(), "M(C)")?;
    Ok(code_gen_weights_dr_all(c, s)?[i])
}

pub fn code_gen_weight_dbar(c: &Code, s: &SupportFn, r: u32) -> Result<u32> {
    let i = in_range(r, c.lambda(), "lambda(C)")?;
    Ok(code_gen_weights_dbar_all(c, s)?[i])
}

/// One row of a weight comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightComparison {
    pub r: u32,
    pub code: i64,
    pub latroid: i64,
    pub equal: bool,
}

pub fn all_equal(rows: &[WeightComparison]) -> bool {
    rows.iter().all(|w| w.equal)
}

fn latroid_weights(lt: &Latroid, top: u32) -> Result<Vec<i64>> {
    (1..=top)
        .map(|r| {
            let w = lt.gen_weight(&Scalar::int(r as i64))?;
            Ok(w.to_integer())
        })
        .collect()
}

fn compare(code: Vec<i64>, latroid: Vec<i64>) -> Vec<WeightComparison> {
    code.into_iter()
        .zip(latroid)
        .enumerate()
        .map(|(i, (c, l))| WeightComparison {
            r: i as u32 + 1,
            code: c,
            latroid: l,
            equal: c == l,
        })
        .collect()
}

/// `d̄_r(C)` against `d_r` of the (collapsed) chain support latroid.
pub fn latroid_weights_equal_code_weights(c: &Code) -> Result<Vec<WeightComparison>> {
    let s = SupportFn::chain(c.ring(), c.n());
    let code: Vec<i64> = code_gen_weights_dbar_all(c, &s)?.into_iter().map(i64::from).collect();
    let lt = chain_support_latroid(c)?.collapse();
    Ok(compare(code, latroid_weights(&lt, c.lambda())?))
}

/// Generalized sum-rank weights from subcodes: least `sum_i dim rowsp_i(D)`
/// over subcodes with `dim D >= r`. With one block these are the
/// generalized rank weights.
pub fn sum_rank_gen_weights(c: &MatrixCode) -> Result<Vec<i64>> {
    let subs = c.code.submodules()?;
    let weighted: Vec<(u32, i64)> = subs
        .iter()
        .map(|d| {
            let w = (0..c.num_blocks())
                .map(|b| c.rowspace_of(d.codewords(), b).len() as i64)
                .sum();
            (d.lambda(), w)
        })
        .collect();
    Ok((1..=c.dim())
        .map(|r| {
            weighted
                .iter()
                .filter(|(k, _)| *k >= r)
                .map(|(_, w)| *w)
                .min()
                .expect("C itself reaches every r")
        })
        .collect())
}

/// `m d_r(C)` against `d_r` of the rank-metric latroid; needs `m > n`.
pub fn rank_weights_equal(c: &MatrixCode) -> Result<Vec<WeightComparison>> {
    let (m, n) = require_single(c)?;
    if m <= n {
        return Err(Error::Hypothesis(format!("needs m > n, got {m}x{n}")));
    }
    let code = sum_rank_gen_weights(c)?.into_iter().map(|w| w * m as i64).collect();
    let lt = rank_metric_latroid(c)?;
    Ok(compare(code, latroid_weights(&lt, c.dim())?))
}

/// `m d_r(C)` against `d_r` of the row-convention sum-rank latroid; needs
/// all `m_i` equal to some `m` with `m > n_i`.
pub fn sum_rank_weights_equal(c: &MatrixCode) -> Result<Vec<WeightComparison>> {
    let m = c.shapes[0].0;
    if c.shapes.iter().any(|&(mi, ni)| mi != m || mi <= ni) {
        return Err(Error::Hypothesis("needs equal m_i with m_i > n_i".into()));
    }
    let code = sum_rank_gen_weights(c)?.into_iter().map(|w| w * m as i64).collect();
    let lt = sum_rank_latroid(c, SumRankConvention::Row)?;
    Ok(compare(code, latroid_weights(&lt, c.dim())?))
}

/// Hamming generalized weights from subcodes against `d_r` of the block matroid.
pub fn block_matroid_weights_equal(c: &Code) -> Result<Vec<WeightComparison>> {
    require_field(c)?;
    let s = SupportFn::hamming(c.ring(), c.n());
    let code = code_gen_weights_dbar_all(c, &s)?.into_iter().map(i64::from).collect();
    let lt = block_matroid(c)?;
    Ok(compare(code, latroid_weights(&lt, c.lambda())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latroid::crypto_roundtrip;
    use num_rational::Rational64;

    fn z4() -> Pir {
        Pir::chain(2, 2).unwrap()
    }

    fn f2() -> Pir {
        Pir::field(2).unwrap()
    }

    fn idx(lt: &Latroid, v: &[i64]) -> usize {
        lt.lattice().find(&Label::Vector(v.to_vec())).unwrap()
    }

    #[test]
    fn chain_support_example() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let lt = chain_support_latroid(&c).unwrap();
        assert!(lt.validate().is_ok());
        assert_eq!(lt.rho(idx(&lt, &[2, 1])), &Scalar::int(1));
        assert_eq!(lt.rho(idx(&lt, &[0, 0])), &Scalar::int(0));
        assert_eq!(lt.gen_weight(&Scalar::int(1)).unwrap(), Rational64::from(1));
        let zero = chain_support_latroid(&Code::zero(&z4(), 2)).unwrap();
        assert_eq!(zero.rhos(), zero.lens());
    }

    #[test]
    fn dbar_example_and_equality() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let s = SupportFn::chain(&z4(), 2);
        assert_eq!(code_gen_weights_dbar_all(&c, &s).unwrap(), vec![1, 3]);
        assert_eq!(code_gen_weight_dbar(&c, &s, 1).unwrap(), s.min_max_weight(&c).unwrap().0);
        assert!(code_gen_weight_dbar(&c, &s, 3).is_err());
        assert!(code_gen_weight_dr(&c, &s, 0).is_err());
        let rows = latroid_weights_equal_code_weights(&c).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(all_equal(&rows));
        assert!(latroid_weights_equal_code_weights(&Code::zero(&z4(), 2)).unwrap().is_empty());
    }

    #[test]
    fn pir_chain_support_is_tuple_valued() {
        let z6 = Pir::new(vec![
            crate::ring::ChainRing::new(2, 1).unwrap(),
            crate::ring::ChainRing::new(3, 1).unwrap(),
        ])
        .unwrap();
        let c = Code::span(&z6, 2, vec![z6.vector(&[1, 1])]).unwrap();
        let lt = chain_support_latroid(&c).unwrap();
        assert_eq!(lt.u(), 2);
        assert!(lt.validate().is_ok());
        assert!(lt.collapse().validate().is_ok());
        assert!(all_equal(&latroid_weights_equal_code_weights(&c).unwrap()));
    }

    #[test]
    fn sublattice_latroid() {
        let full = Code::full(&z4(), 2).unwrap();
        let lat = ModuleLattice::of(&full).unwrap();
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let lt = latroid_from_code(&c, &LengthFn::Lambda, &lat).unwrap();
        assert!(lt.validate().is_ok());
        let free = latroid_from_code(&Code::zero(&z4(), 2), &LengthFn::Lambda, &lat).unwrap();
        assert_eq!(free.rhos(), free.lens());
        let all = latroid_from_code(&full, &LengthFn::Lambda, &lat).unwrap();
        assert!(all.rhos().iter().all(|r| r.is_zero()));
        // the chain support weight is not modular on all submodules of Z_4^2
        let weight = LengthFn::SupportWeight(SupportFn::chain(&z4(), 2));
        assert!(matches!(
            latroid_from_code(&c, &weight, &lat),
            Err(Error::AxiomViolation(_))
        ));
    }

    #[test]
    fn rect_supp_matches_chain_latroid_of_closure() {
        let s = SupportFn::chain(&z4(), 2);
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let rect = rect_supp_latroid(&c, &s).unwrap();
        assert!(rect.validate().is_ok());
        let closure = c.rectangular_closure().to_code(&z4());
        let chain = chain_support_latroid(&closure).unwrap().collapse();
        let collapsed = rect.collapse();
        for m in 0..rect.size() {
            let point = rect.len(m).to_ints().unwrap();
            let g = idx(&chain, &point);
            assert_eq!(collapsed.rho(m), chain.rho(g));
        }
        // C itself differs at the grid point (2,1)
        let own = chain_support_latroid(&c).unwrap();
        let m = (0..rect.size()).find(|&m| rect.len(m) == &Scalar::ints(&[2, 1])).unwrap();
        assert_eq!(collapsed.rho(m), &Scalar::int(0));
        assert_eq!(own.rho(idx(&own, &[2, 1])), &Scalar::int(1));
        let zero = rect_supp_latroid(&Code::zero(&z4(), 2), &s).unwrap();
        assert_eq!(zero.rhos(), zero.lens());
        let tau = SupportFn::tau(&z4(), 2).unwrap();
        assert!(rect_supp_latroid(&c, &tau).is_err());
    }

    #[test]
    fn block_matroid_examples() {
        let c = Code::from_rows(&f2(), 2, &[vec![1, 1]]).unwrap();
        let lt = block_matroid(&c).unwrap();
        assert!(lt.validate().is_ok());
        assert_eq!(lt.rho(0b11), &Scalar::int(1));
        assert_eq!(lt.rho(0), &Scalar::int(0));
        assert_eq!(lt.circuits(), vec![0b11]);
        let rep = Code::from_rows(&f2(), 3, &[vec![1, 1, 1]]).unwrap();
        assert_eq!(block_matroid(&rep).unwrap().circuits(), vec![0b111]);
        let h = Code::from_rows(&f2(), 4, &[vec![1, 1, 0, 0], vec![0, 1, 1, 1]]).unwrap();
        assert!(all_equal(&block_matroid_weights_equal(&h).unwrap()));
        assert!(crypto_roundtrip(&block_matroid(&h).unwrap()).unwrap().is_ok());
    }

    fn rank_one() -> MatrixCode {
        MatrixCode::from_matrices(2, 3, 2, &[vec![vec![1, 0], vec![1, 0], vec![0, 0]]]).unwrap()
    }

    #[test]
    fn rank_metric_examples() {
        let c = rank_one();
        let lt = rank_metric_latroid(&c).unwrap();
        assert!(lt.validate().is_ok());
        assert_eq!(lt.gen_weight(&Scalar::int(1)).unwrap(), Rational64::from(3));
        let rows = rank_weights_equal(&c).unwrap();
        assert_eq!(rows, vec![WeightComparison { r: 1, code: 3, latroid: 3, equal: true }]);
        let zero = MatrixCode::new(2, vec![(3, 2)], &[]).unwrap();
        let z = rank_metric_latroid(&zero).unwrap();
        assert_eq!(z.rhos(), z.lens());
        let square = MatrixCode::from_matrices(3, 2, 2, &[vec![vec![1, 0], vec![0, 1]]]).unwrap();
        assert!(rank_weights_equal(&square).is_err());
        assert!(rank_metric_latroid(&square).unwrap().validate().is_ok());
    }

    #[test]
    fn tilde_relation_and_circuits() {
        let c = MatrixCode::from_matrices(
            2,
            3,
            2,
            &[
                vec![vec![1, 0], vec![0, 1], vec![0, 0]],
                vec![vec![0, 1], vec![0, 0], vec![1, 1]],
            ],
        )
        .unwrap();
        let (m, n) = (3i64, 2);
        let lt = rank_metric_latroid(&c).unwrap();
        let tilde = tilde_polymatroid(&c).unwrap();
        assert!(tilde.validate().is_ok());
        assert!(validate_q_polymatroid(&tilde).is_ok());
        let lat = lt.lattice();
        for v in 0..lt.size() {
            let Label::Rows(basis) = lat.label(v) else { panic!() };
            let perp = lat.find(&Label::Rows(fq::orthogonal(basis, n, 2))).unwrap();
            let dim_perp = lt.len(perp).as_int().unwrap() / m;
            let expected = (lt.rho(perp).as_int().unwrap() - m * dim_perp + c.dim() as i64, m);
            assert_eq!(tilde.rho(v), &Scalar::ratio(expected.0, expected.1));
        }
        let mut circuits: Vec<Vec<Row>> = lt
            .circuits()
            .iter()
            .map(|&a| match lat.label(a) {
                Label::Rows(r) => r.clone(),
                _ => unreachable!(),
            })
            .collect();
        circuits.sort();
        assert_eq!(circuits, minimal_rowspace_supports(&c).unwrap());
    }

    #[test]
    fn sum_rank_identities() {
        let a = rank_one();
        let b = MatrixCode::from_matrices(2, 3, 2, &[vec![vec![0, 1], vec![1, 1], vec![1, 0]]]).unwrap();
        let prod = MatrixCode::product(&[a.clone(), b.clone()]).unwrap();
        let row = sum_rank_latroid(&prod, SumRankConvention::Row).unwrap();
        assert!(row.validate().is_ok());
        let ds = rank_metric_latroid(&a)
            .unwrap()
            .direct_sum(&rank_metric_latroid(&b).unwrap())
            .unwrap();
        assert_eq!(row, ds);
        assert!(all_equal(&sum_rank_weights_equal(&prod).unwrap()));
        assert_eq!(sum_rank_latroid(&a, SumRankConvention::Row).unwrap(), rank_metric_latroid(&a).unwrap());
        let col = sum_rank_latroid(&a, SumRankConvention::Column).unwrap();
        assert_eq!(col, rank_metric_latroid(&a.transpose()).unwrap());
        let col2 = sum_rank_latroid(&prod, SumRankConvention::Column).unwrap();
        assert!(col2.validate().is_ok());
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn literal_basis_exchange_fails_on_subspaces() {
        let f2 = Pir::field(2).unwrap();
        let c = Code::from_rows(&f2, 3, &[vec![1, 1, 0]]).unwrap();
        let lat = ModuleLattice::of(&Code::full(&f2, 3).unwrap()).unwrap();
        let lt = latroid_from_code(&c, &LengthFn::Lambda, &lat).unwrap();
        let report = crypto_roundtrip(&lt).unwrap();
        assert!(report.is_ok());
        let literal = crate::latroid::basis_exchange_literal(lt.lattice(), &lt.bases()).unwrap();
        assert_eq!(literal.rule(), Some("B2"));
    }
}
