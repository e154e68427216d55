//! Linear algebra over prime fields `F_p`, with vectors as `u32` residues.

use crate::error::Result;
use crate::limits;

pub type Row = Vec<u32>;

fn inv(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Reduced row echelon form with zero rows removed.
pub fn rref(rows: &[Row], p: u32) -> Vec<Row> {
    let mut m: Vec<Row> = rows.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut lead = 0;
    for col in 0..ncols {
        let Some(piv) = (lead..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(lead, piv);
        let s = inv(m[lead][col], p);
        for x in m[lead].iter_mut() {
            *x = (*x as u64 * s as u64 % p as u64) as u32;
        }
        for i in 0..m.len() {
            if i != lead && m[i][col] != 0 {
                let f = m[i][col] as u64;
                let pivot_row = m[lead].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    let sub = f * y as u64 % p as u64;
                    *x = ((*x as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        lead += 1;
        if lead == m.len() {
            break;
        }
    }
    m.truncate(lead);
    m
}

pub fn rank(rows: &[Row], p: u32) -> usize {
    rref(rows, p).len()
}

/// Pivot columns of a matrix already in reduced echelon form.
pub fn pivots(rref_rows: &[Row]) -> Vec<usize> {
    rref_rows
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("rref rows are nonzero"))
        .collect()
}

/// True when the row space of `a` lies inside that of `b`.
pub fn subspace_le(a: &[Row], b: &[Row], p: u32) -> bool {
    let mut all = b.to_vec();
    all.extend_from_slice(a);
    rank(&all, p) == rank(b, p)
}

pub fn sum(a: &[Row], b: &[Row], p: u32) -> Vec<Row> {
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    rref(&all, p)
}

/// Basis of `{x : <x, r> = 0 for every row r}` in reduced echelon form.
pub fn orthogonal(rows: &[Row], n: usize, p: u32) -> Vec<Row> {
    let r = rref(rows, p);
    let piv = pivots(&r);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    let basis: Vec<Row> = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u32; n];
            v[f] = 1;
            for (row, &pc) in r.iter().zip(&piv) {
                v[pc] = (p - row[f] % p) % p;
            }
            v
        })
        .collect();
    rref(&basis, p)
}

pub fn intersection(a: &[Row], b: &[Row], n: usize, p: u32) -> Vec<Row> {
    let oa = orthogonal(a, n, p);
    let ob = orthogonal(b, n, p);
    orthogonal(&sum(&oa, &ob, p), n, p)
}

/// Every element of the row space.
pub fn span(rows: &[Row], n: usize, p: u32) -> Vec<Row> {
    let mut out = vec![vec![0u32; n]];
    for r in rref(rows, p) {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for v in &out {
            for c in 0..p {
                next.push(
                    v.iter()
                        .zip(&r)
                        .map(|(&x, &y)| ((x as u64 + c as u64 * y as u64) % p as u64) as u32)
                        .collect(),
                );
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32) - 1);
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    num / den
}

/// All subspaces of `F_q^n` as reduced echelon bases, by dimension then
/// lexicographically.
pub fn all_subspaces(q: u32, n: usize, cap: u64) -> Result<Vec<Vec<Row>>> {
    let total: u128 = (0..=n).map(|k| gaussian_binomial(n, k, q)).sum();
    limits::check("subspace lattice", total, cap)?;
    let mut out = Vec::with_capacity(total as usize);
    for k in 0..=n {
        let mut group = Vec::new();
        for piv in combinations(n, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let piv = &piv;
                    (piv[r] + 1..n).filter(move |c| !piv.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let count = (q as u64).pow(free.len() as u32);
            for mut idx in 0..count {
                let mut m = vec![vec![0u32; n]; k];
                for (r, &c) in piv.iter().enumerate() {
                    m[r][c] = 1;
                }
                for &(r, c) in &free {
                    m[r][c] = (idx % q as u64) as u32;
                    idx /= q as u64;
                }
                group.push(m);
            }
        }
        group.sort();
        out.extend(group);
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
