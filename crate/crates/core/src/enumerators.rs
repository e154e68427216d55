//! Weight enumerators and weighted Tutte-Whitney rank generating functions
//! as sparse integer polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::Serialize;

use crate::code_latroids::chain_support_latroid;
use crate::codes::Code;
use crate::error::{Error, Result};
use crate::latroid::Latroid;
use crate::report::{ensure, Report};
use crate::ring::Pir;
use crate::supports::{SupportFn, SupportVec};

/// A polynomial with integer coefficients in a fixed list of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// `["x1", ..., "xn"]`.
pub fn block(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn layout(blocks: &[(&str, usize)]) -> Vec<String> {
    blocks.iter().flat_map(|&(p, n)| block(p, n)).collect()
}

impl ExpPoly {
    pub fn zero(vars: Vec<String>) -> ExpPoly {
        ExpPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: Vec<String>) -> ExpPoly {
        let n = vars.len();
        ExpPoly::monomial(vars, vec![0; n], BigInt::one())
    }

    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, coeff: BigInt) -> ExpPoly {
        let mut p = ExpPoly::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector does not fit the variables");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// Sum of the coefficients, the value at all variables equal to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Re-expresses every monomial in new variables.
    pub fn map_exponents(&self, vars: Vec<String>, f: impl Fn(&[u32]) -> Vec<u32>) -> ExpPoly {
        let mut out = ExpPoly::zero(vars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> ExpPoly {
        let mut out = ExpPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Terms by descending total degree, then descending exponents.
    pub fn graded_terms(&self) -> Vec<(&Vec<u32>, &BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        t
    }

    fn check_vars(&self, other: &ExpPoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }
}

impl Add for &ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        self.check_vars(rhs);
        let mut out = ExpPoly::zero(self.vars.clone());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(i, j)| i + j).collect(), x * y);
            }
        }
        out
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.graded_terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&d, _)| d > 0)
                .map(|(&d, v)| if d == 1 { v.clone() } else { format!("{v}^{d}") })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            match k {
                0 if c.is_negative() => f.write_str("-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

struct Coefficient<'a>(&'a BigInt);

impl Serialize for Coefficient<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct Term<'a>(&'a [u32], &'a BigInt);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("exponents", self.0)?;
        m.serialize_entry("coefficient", &Coefficient(self.1))?;
        m.end()
    }
}

/// `{"variables": [...], "terms": [{"exponents", "coefficient"}]}` in graded order;
/// coefficients beyond `i64` become decimal strings.
impl Serialize for ExpPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .graded_terms()
            .into_iter()
            .map(|(e, c)| Term(e, c))
            .collect();
        let mut st = s.serialize_struct("ExpPoly", 2)?;
        st.serialize_field("variables", &self.vars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn check_support(c: &Code, s: &SupportFn) -> Result<()> {
    if s.ring() != c.ring() || s.n() != c.n() {
        return Err(Error::InvalidArgument("support and code do not match".into()));
    }
    Ok(())
}

/// `sum_c x^supp(c) y^(supp(R^n) - supp(c))` in variables `x1..xu, y1..yu`.
pub fn refined_enumerator(c: &Code, s: &SupportFn) -> Result<ExpPoly> {
    check_support(c, s)?;
    let u = s.u();
    let amb = s.ambient_support();
    let mut p = ExpPoly::zero(layout(&[("x", u), ("y", u)]));
    for w in c.codewords() {
        let sv = s.eval(w);
        let mut e = sv.0.clone();
        e.extend(amb.0.iter().zip(&sv.0).map(|(a, b)| a - b));
        p.add_term(e, BigInt::one());
    }
    Ok(p)
}

/// Sets every `x_i` to `x` and every `y_i` to `y` in a refined enumerator.
pub fn homogenize(refined: &ExpPoly) -> ExpPoly {
    let u = refined.vars().len() / 2;
    refined.map_exponents(vec!["x".into(), "y".into()], |e| {
        vec![e[..u].iter().sum(), e[u..].iter().sum()]
    })
}

/// `sum_c x^wt(c) y^(wt(R^n) - wt(c))`.
pub fn homogeneous_enumerator(c: &Code, s: &SupportFn) -> Result<ExpPoly> {
    Ok(homogenize(&refined_enumerator(c, s)?))
}

/// `A_0, ..., A_wt(R^n)` with `A_w` the number of codewords of weight `w`.
pub fn weight_distribution(c: &Code, s: &SupportFn) -> Result<Vec<u64>> {
    check_support(c, s)?;
    let mut a = vec![0u64; s.ambient_support().norm() as usize + 1];
    for w in c.codewords() {
        a[s.weight(w) as usize] += 1;
    }
    Ok(a)
}

/// `A^(r)_w` for `w = 0..=wt(R^n)`: the number of submodules `D` with
/// `lambda(D) = r` and `wt(D) = w`.
pub fn generalized_distribution(c: &Code, s: &SupportFn, r: u32) -> Result<Vec<u64>> {
    check_support(c, s)?;
    if r > c.lambda() {
        return Err(Error::OutOfRange(format!("r = {r} above lambda(C) = {}", c.lambda())));
    }
    let mut a = vec![0u64; s.ambient_support().norm() as usize + 1];
    for d in c.submodules()? {
        if d.lambda() == r {
            a[s.code_weight(&d) as usize] += 1;
        }
    }
    Ok(a)
}

/// `W^(r) = sum_w A^(r)_w x^(wt(R^n) - w) y^w`.
pub fn generalized_enumerator(c: &Code, s: &SupportFn, r: u32) -> Result<ExpPoly> {
    let a = generalized_distribution(c, s, r)?;
    let total = (a.len() - 1) as u32;
    let mut p = ExpPoly::zero(vec!["x".into(), "y".into()]);
    for (w, &count) in a.iter().enumerate() {
        p.add_term(vec![total - w as u32, w as u32], BigInt::from(count));
    }
    Ok(p)
}

/// `d̄_r = min { w : A^(j)_w != 0 for some j >= r }` for `r = 1..=lambda(C)`.
pub fn dbar_from_generalized(c: &Code, s: &SupportFn) -> Result<Vec<u32>> {
    let lam = c.lambda();
    let dists: Vec<Vec<u64>> = (0..=lam)
        .map(|r| generalized_distribution(c, s, r))
        .collect::<Result<_>>()?;
    Ok((1..=lam)
        .map(|r| {
            dists[r as usize..]
                .iter()
                .filter_map(|a| a.iter().position(|&x| x > 0))
                .min()
                .expect("C has lambda(C)") as u32
        })
        .collect())
}

fn nonneg(v: &[i64], what: &str) -> Result<Vec<u32>> {
    v.iter()
        .map(|&x| {
            u32::try_from(x)
                .map_err(|_| Error::InvalidArgument(format!("negative exponent in {what}")))
        })
        .collect()
}

struct TutteParts {
    point: Vec<u32>,
    tilde: Vec<u32>,
    perp: Vec<u32>,
    u: Vec<u32>,
    v: Vec<u32>,
}

fn tutte_parts(lt: &Latroid) -> Result<Vec<TutteParts>> {
    let lat = lt.lattice();
    let vec_of = |a: usize| {
        lat.label(a)
            .as_vector()
            .map(<[i64]>::to_vec)
            .ok_or_else(|| Error::InvalidArgument("the lattice must be labelled by integer vectors".into()))
    };
    let top = vec_of(lat.top())?;
    let top_rho = lt.top_rank();
    (0..lt.size())
        .map(|a| {
            let m = vec_of(a)?;
            let ints = |s: crate::latroid::Scalar, what: &str| {
                s.to_ints()
                    .ok_or_else(|| Error::InvalidArgument(format!("{what} is not integral")))
                    .and_then(|v| nonneg(&v, what))
            };
            Ok(TutteParts {
                point: nonneg(&m, "lattice point")?,
                tilde: nonneg(
                    &m.iter().zip(&top).map(|(&x, &t)| (x + 1).min(t)).collect::<Vec<_>>(),
                    "lattice point",
                )?,
                perp: nonneg(&top.iter().zip(&m).map(|(t, x)| t - x).collect::<Vec<_>>(), "complement")?,
                u: ints(top_rho - lt.rho(a), "rho(1) - rho(M)")?,
                v: ints(lt.nullity(a), "||M|| - rho(M)")?,
            })
        })
        .collect()
}

/// `R = sum_M x^M y^(1-M) u^(rho(1)-rho(M)) v^(||M||-rho(M))` in variables
/// `x, y` (one per lattice coordinate) and `u, v` (one per scalar coordinate).
pub fn tutte_whitney_r(lt: &Latroid) -> Result<ExpPoly> {
    let parts = tutte_parts(lt)?;
    let w = parts.first().map_or(0, |p| p.point.len());
    let mut p = ExpPoly::zero(layout(&[("x", w), ("y", w), ("u", lt.u()), ("v", lt.u())]));
    for t in parts {
        let e = [t.point, t.perp, t.u, t.v].concat();
        p.add_term(e, BigInt::one());
    }
    Ok(p)
}

/// `R' = sum_M x^M z^(M~ - M) y^(1-M) u^.. v^..` with `M~ = (M + 1) ∧ 1`,
/// in variables `x, z, y, u, v`.
pub fn tutte_whitney_rprime(lt: &Latroid) -> Result<ExpPoly> {
    let parts = tutte_parts(lt)?;
    let w = parts.first().map_or(0, |p| p.point.len());
    let vars = layout(&[("x", w), ("z", w), ("y", w), ("u", lt.u()), ("v", lt.u())]);
    let mut p = ExpPoly::zero(vars);
    for t in parts {
        let z: Vec<u32> = t.tilde.iter().zip(&t.point).map(|(a, b)| a - b).collect();
        let e = [t.point, z, t.perp, t.u, t.v].concat();
        p.add_term(e, BigInt::one());
    }
    Ok(p)
}

/// `R'` with every `z_i = 1`, which is `R`.
pub fn rprime_at_z_one(rp: &ExpPoly, w: usize) -> ExpPoly {
    let vars = [&rp.vars()[..w], &rp.vars()[2 * w..]].concat();
    rp.map_exponents(vars, |e| [&e[..w], &e[2 * w..]].concat())
}

/// `(y_i - x_i)^e` expanded binomially.
fn binomial_power(vars: &[String], x: usize, y: usize, e: u32) -> ExpPoly {
    let mut p = ExpPoly::zero(vars.to_vec());
    let mut binom = BigInt::one();
    for k in 0..=e {
        let mut exps = vec![0; vars.len()];
        exps[x] = k;
        exps[y] = e - k;
        let sign = if k % 2 == 1 { -binom.clone() } else { binom.clone() };
        p.add_term(exps, sign);
        binom = binom * (e - k) / (k + 1);
    }
    p
}

/// Evaluates `R'` at `z = (y - x)/y` and the given values of `u` and `v`.
/// The `y` denominators cancel against `y^(1-M)`, so the result is an
/// integer polynomial in `x1..xw, y1..yw`.
pub fn evaluate_rprime(rp: &ExpPoly, w: usize, u_vals: &[u64], v_vals: &[u64]) -> Result<ExpPoly> {
    let g = u_vals.len();
    if rp.vars().len() != 3 * w + 2 * g || v_vals.len() != g {
        return Err(Error::DimensionMismatch {
            expected: 3 * w + 2 * g,
            got: rp.vars().len(),
        });
    }
    let vars = layout(&[("x", w), ("y", w)]);
    let mut out = ExpPoly::zero(vars.clone());
    for (e, c) in rp.terms() {
        let (x, rest) = e.split_at(w);
        let (z, rest) = rest.split_at(w);
        let (y, rest) = rest.split_at(w);
        let (u, v) = rest.split_at(g);
        let mut coeff = c.clone();
        for (base, &exp) in u_vals.iter().zip(u).chain(v_vals.iter().zip(v)) {
            coeff *= BigInt::from(*base).pow(exp);
        }
        let mut exps = x.to_vec();
        for i in 0..w {
            let ye = y[i].checked_sub(z[i]).ok_or_else(|| {
                Error::InvalidArgument("z exponent exceeds y exponent; cannot clear denominators".into())
            })?;
            exps.push(ye);
        }
        let mut term = ExpPoly::monomial(vars.clone(), exps, coeff);
        for (i, &ze) in z.iter().enumerate() {
            if ze > 0 {
                term = &term * &binomial_power(&vars, i, w + i, ze);
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

fn residue_sizes(ring: &Pir) -> Vec<u64> {
    ring.factors().iter().map(|f| f.residue_field_size() as u64).collect()
}

/// The refined enumerator (chain support) recovered from `R'` of the chain
/// support latroid with `u = 1` and `v_i = |R_i/(alpha_i)|`, the exponent of
/// `v` being the length of `C_B`.
pub fn enumerator_from_tutte(c: &Code) -> Result<ExpPoly> {
    let lt = chain_support_latroid(c)?;
    let rp = tutte_whitney_rprime(&lt)?;
    let w = SupportFn::chain(c.ring(), c.n()).u();
    let sizes = residue_sizes(c.ring());
    evaluate_rprime(&rp, w, &vec![1; sizes.len()], &sizes)
}

/// Places the factor-`i` variables of a polynomial in blocks of `n`
/// coordinates into the interleaved layout of an `l`-factor ring, where
/// coordinate `j` of factor `i` becomes `j * l + i`. `blocks` lists the
/// block sizes: `n` for coordinate blocks and `1` for per-factor blocks.
fn embed_factor(p: &ExpPoly, target: &[String], blocks: &[usize], l: usize, i: usize) -> ExpPoly {
    p.map_exponents(target.to_vec(), |e| {
        let mut out = vec![0; target.len()];
        let (mut src, mut dst) = (0, 0);
        for &b in blocks {
            for j in 0..b {
                out[dst + j * l + i] = e[src + j];
            }
            src += b;
            dst += b * l;
        }
        out
    })
}

/// `prod_i W_{C_i}(x_i, y_i)` for the factor codes, in the layout of the
/// refined enumerator of `C` with the chain support of the product ring.
pub fn enumerator_product(c: &Code) -> Result<ExpPoly> {
    let ring = c.ring();
    let (n, l) = (c.n(), ring.num_factors());
    let target = layout(&[("x", n * l), ("y", n * l)]);
    let mut acc = ExpPoly::one(target.clone());
    for i in 0..l {
        let ci = c.factor_code(i);
        let wi = refined_enumerator(&ci, &SupportFn::chain(ci.ring(), n))?;
        acc = &acc * &embed_factor(&wi, &target, &[n, n], l, i);
    }
    Ok(acc)
}

/// The three identities behind the product-ring form of the Tutte-Whitney
/// theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    /// `W_C = prod_i W_{C_i}`.
    pub product_lemma: bool,
    /// `R'(C) = prod_i R'(C_i)`.
    pub rprime_factorization: bool,
    /// `W_C` from `R'(C)` with `v_i = |R_i/(alpha_i)|`.
    pub tutte_identity: bool,
}

impl CorollaryReport {
    pub fn is_ok(&self) -> bool {
        self.product_lemma && self.rprime_factorization && self.tutte_identity
    }
}

pub fn pir_tutte_corollary(c: &Code) -> Result<CorollaryReport> {
    let ring = c.ring();
    let (n, l) = (c.n(), ring.num_factors());
    let refined = refined_enumerator(c, &SupportFn::chain(ring, n))?;
    let rp = tutte_whitney_rprime(&chain_support_latroid(c)?)?;
    let mut prod = ExpPoly::one(rp.vars().to_vec());
    for i in 0..l {
        let ri = tutte_whitney_rprime(&chain_support_latroid(&c.factor_code(i))?)?;
        prod = &prod * &embed_factor(&ri, rp.vars(), &[n, n, n, 1, 1], l, i);
    }
    Ok(CorollaryReport {
        product_lemma: enumerator_product(c)? == refined,
        rprime_factorization: prod == rp,
        tutte_identity: enumerator_from_tutte(c)? == refined,
    })
}

/// Checks `n_C(A) = sum_{A-1 <= B <= A} (-1)^(|A|-|B|) |C_B|` at every point
/// of the chain support grid, with `C_B = {c : supp(c) <= B}`.
pub fn lat1_check(c: &Code) -> Result<Report> {
    let s = SupportFn::chain(c.ring(), c.n());
    let supports: Vec<SupportVec> = c.codewords().iter().map(|w| s.eval(w)).collect();
    let amb = s.ambient_support();
    let lt = chain_support_latroid(c)?;
    let lat = lt.lattice();
    let c_b = |b: &SupportVec| supports.iter().filter(|x| SupportVec::le(x, b)).count() as i64;
    Ok((|| {
        for a in 0..lat.len() {
            let point = SupportVec(lat.label(a).as_vector().unwrap().iter().map(|&x| x as u32).collect());
            let exact = supports.iter().filter(|x| **x == point).count() as i64;
            let movable: Vec<usize> = (0..amb.len()).filter(|&i| point.0[i] > 0).collect();
            let mut alt = 0i64;
            for mask in 0..1usize << movable.len() {
                let mut b = point.clone();
                for (k, &i) in movable.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        b.0[i] -= 1;
                    }
                }
                let sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
                alt += sign * c_b(&b);
            }
            ensure!(exact == alt, "inclusion-exclusion", "A={:?}: {} != {}", point.0, exact, alt);
        }
        Report::ok()
    })())
}

/// Which side of the `{0,1}^u` binomial identity to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialForm {
    /// `x^B (y - x)^(1 - B)`, the form the enumerator derivation relies on.
    Corrected,
    /// `y^B (y - x)^(1 - B)`.
    Literal,
}

/// Compares `lhs(B)` with `sum_{B <= A <= 1} (-1)^(|A|-|B|) x^A y^(1-A)` for
/// every `B` in `{0,1}^u`.
pub fn lat2_check(u: usize, form: BinomialForm) -> Report {
    let vars = layout(&[("x", u), ("y", u)]);
    for b in 0..1usize << u {
        let bit = |m: usize, i: usize| (m >> i & 1) as u32;
        let mut lhs = ExpPoly::one(vars.clone());
        for i in 0..u {
            if bit(b, i) == 1 {
                let mut e = vec![0; 2 * u];
                match form {
                    BinomialForm::Corrected => e[i] = 1,
                    BinomialForm::Literal => e[u + i] = 1,
                }
                lhs = &lhs * &ExpPoly::monomial(vars.clone(), e, BigInt::one());
            } else {
                lhs = &lhs * &binomial_power(&vars, i, u + i, 1);
            }
        }
        let mut rhs = ExpPoly::zero(vars.clone());
        for a in (0..1usize << u).filter(|a| a & b == b) {
            let mut e: Vec<u32> = (0..u).map(|i| bit(a, i)).collect();
            e.extend((0..u).map(|i| 1 - bit(a, i)));
            let sign = if (a.count_ones() - b.count_ones()) % 2 == 1 { -1 } else { 1 };
            rhs.add_term(e, BigInt::from(sign));
        }
        ensure!(lhs == rhs, "binomial identity", "B={b:0width$b}", width = u);
    }
    Report::ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::grid_lattice;
    use crate::latroid::Scalar;
    use crate::ring::ChainRing;
    use std::sync::Arc;

    fn z4() -> Pir {
        Pir::chain(2, 2).unwrap()
    }

    fn z6() -> Pir {
        Pir::new(vec![ChainRing::new(2, 1).unwrap(), ChainRing::new(3, 1).unwrap()]).unwrap()
    }

    #[test]
    fn distribution_example() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let s = SupportFn::chain(&z4(), 2);
        assert_eq!(weight_distribution(&c, &s).unwrap(), vec![1, 1, 0, 2, 0]);
        let h = homogeneous_enumerator(&c, &s).unwrap();
        assert_eq!(h.coefficient_sum(), BigInt::from(4));
        assert_eq!(h.to_string(), "2*x^3*y + x*y^3 + y^4");
        let zero = refined_enumerator(&Code::zero(&z4(), 2), &s).unwrap();
        assert_eq!(zero.to_string(), "y1^2*y2^2");
    }

    #[test]
    fn generalized_example() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let s = SupportFn::chain(&z4(), 2);
        assert_eq!(generalized_distribution(&c, &s, 0).unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(generalized_distribution(&c, &s, 1).unwrap()[1], 1);
        assert_eq!(
            dbar_from_generalized(&c, &s).unwrap(),
            crate::code_latroids::code_gen_weights_dbar_all(&c, &s).unwrap()
        );
        assert!(generalized_enumerator(&c, &s, 3).is_err());
    }

    #[test]
    fn tutte_of_free_grid() {
        let lat = Arc::new(grid_lattice(&[1]).unwrap());
        let lt = Latroid::free_with(lat, vec![Scalar::int(0), Scalar::int(1)]).unwrap();
        let r = tutte_whitney_r(&lt).unwrap();
        assert_eq!(r.to_string(), "y1*u1 + x1");
        let rp = tutte_whitney_rprime(&lt).unwrap();
        assert_eq!(rprime_at_z_one(&rp, 1), r);
    }

    #[test]
    fn tutte_identity_examples() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let s = SupportFn::chain(&z4(), 2);
        assert_eq!(enumerator_from_tutte(&c).unwrap(), refined_enumerator(&c, &s).unwrap());
        let zero = Code::zero(&z4(), 1);
        let r = tutte_whitney_r(&chain_support_latroid(&zero).unwrap()).unwrap();
        assert_eq!(r.num_terms(), 3);
        assert!(r.terms().all(|(e, _)| e[3] == 0));
        let s1 = SupportFn::chain(&z4(), 1);
        assert_eq!(enumerator_from_tutte(&zero).unwrap(), refined_enumerator(&zero, &s1).unwrap());
        let z2 = Pir::chain(2, 1).unwrap();
        let full = Code::full(&z2, 2).unwrap();
        assert_eq!(
            enumerator_from_tutte(&full).unwrap(),
            refined_enumerator(&full, &SupportFn::chain(&z2, 2)).unwrap()
        );
    }

    #[test]
    fn swapped_substitution_fails() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        let rp = tutte_whitney_rprime(&chain_support_latroid(&c).unwrap()).unwrap();
        let swapped = evaluate_rprime(&rp, 2, &[2], &[1]).unwrap();
        assert_ne!(swapped, refined_enumerator(&c, &SupportFn::chain(&z4(), 2)).unwrap());
    }

    #[test]
    fn z6_product_example() {
        let c = Code::span(&z6(), 1, vec![z6().vector(&[3])]).unwrap();
        assert_eq!(c.size(), 2);
        let w = enumerator_product(&c).unwrap();
        assert_eq!(w.to_string(), "x1*y2 + y1*y2");
        let report = pir_tutte_corollary(&c).unwrap();
        assert!(report.is_ok(), "{report:?}");
        let d = Code::span(&z6(), 2, vec![z6().vector(&[1, 2]), z6().vector(&[0, 3])]).unwrap();
        assert!(pir_tutte_corollary(&d).unwrap().is_ok());
    }

    #[test]
    fn internal_identities() {
        let c = Code::from_rows(&z4(), 2, &[vec![1, 2]]).unwrap();
        assert!(lat1_check(&c).unwrap().is_ok());
        for u in 1..=3 {
            assert!(lat2_check(u, BinomialForm::Corrected).is_ok());
            assert!(!lat2_check(u, BinomialForm::Literal).is_ok());
        }
    }

    #[test]
    fn json_layout() {
        let p = ExpPoly::monomial(vec!["x".into()], vec![2], BigInt::from(-3));
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"variables":["x"],"terms":[{"exponents":[2],"coefficient":-3}]}"#);
    }
}
