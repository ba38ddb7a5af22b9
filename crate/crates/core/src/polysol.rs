//! Polynomial solutions: a degree bound from the weight b-function, then an
//! exact linear solve over the bounded ansatz.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::arith::{CommPoly, RatMatrix, Rational};
use crate::bfunction::{weight_bfunction, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::gb::ModulePresentation;
use crate::weyl::WeylElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySolutionBasis {
    pub solutions: Vec<CommPoly>,
    pub weight_used: Vec<i64>,
    pub k1: Option<i64>,
}

fn check_negative(w: &[i64], n: usize) -> Result<()> {
    if w.len() != n || w.iter().any(|&v| v >= 0) {
        return Err(Error::Invalid("weight must be strictly negative of length n".into()));
    }
    Ok(())
}

/// `k_1 = −(smallest integer root)` of the `(−w,w)` b-function; `None` when
/// no integer root is `≤ 0`.
pub fn exponent_bound(ideal: &ModulePresentation, w: &[i64], cap: usize) -> Result<Option<i64>> {
    check_negative(w, ideal.n())?;
    let b = weight_bfunction(ideal, w, cap)?;
    Ok(b.integer_roots.first().filter(|&&r| r <= 0).map(|r| -r))
}

/// Exponents `p ≥ 0` with `p·(−w) ≤ k`.
pub fn ansatz_exponents(w: &[i64], k: i64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; w.len()];
    fn rec(i: usize, budget: i64, w: &[i64], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            out.push(cur.clone());
            return;
        }
        let step = -w[i];
        let mut e = 0;
        while e * step <= budget {
            cur[i] = e as u32;
            rec(i + 1, budget - e * step, w, cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    rec(0, k, w, &mut cur, &mut out);
    out
}

/// Degrevlex on commutative exponents, larger first.
fn degrevlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return x.cmp(y);
            }
        }
        Ordering::Equal
    })
}

/// `P • x^p` as a map from exponents to coefficients.
fn apply_monomial(p: &WeylElement, e: &[u32]) -> BTreeMap<Vec<u32>, Rational> {
    let n = p.ring().n();
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    'terms: for (k, c) in p.terms() {
        let (alpha, beta) = (&k[..n], &k[n..2 * n]);
        let mut coeff = c.clone();
        let mut res = Vec::with_capacity(n);
        for i in 0..n {
            if beta[i] > e[i] {
                continue 'terms;
            }
            for j in 0..beta[i] {
                coeff = &coeff * &Rational::from((e[i] - j) as i64);
            }
            res.push(e[i] - beta[i] + alpha[i]);
        }
        let slot = out.entry(res).or_insert_with(Rational::zero);
        *slot = &*slot + &coeff;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Polynomials annihilated by every generator, among those supported on
/// `exps`. The basis is in reduced echelon form with respect to degrevlex.
pub fn solve_ansatz(ideal: &ModulePresentation, exps: &[Vec<u32>]) -> Vec<CommPoly> {
    let mut exps = exps.to_vec();
    exps.sort_by(|a, b| degrevlex_desc(a, b));
    let gens = ideal.generators();
    let mut rows: BTreeMap<(usize, Vec<u32>), Vec<(usize, Rational)>> = BTreeMap::new();
    for (col, e) in exps.iter().enumerate() {
        for (g, p) in gens.iter().enumerate() {
            for (r, c) in apply_monomial(p, e) {
                rows.entry((g, r)).or_default().push((col, c));
            }
        }
    }
    let mut m = RatMatrix::zeros(rows.len(), exps.len());
    for (i, entries) in rows.values().enumerate() {
        for (j, c) in entries {
            m.set(i, *j, c.clone());
        }
    }
    let ns = m.nullspace();
    if ns.is_empty() {
        return Vec::new();
    }
    let basis = crate::arith::matrix::echelon_basis(&ns, exps.len());
    let ring = ideal.ring.poly_ring();
    basis
        .into_iter()
        .map(|v| CommPoly::from_terms(ring, exps.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero())))
        .collect()
}

/// Basis of the polynomial solutions; the default weight is `(−1,…,−1)`.
pub fn polynomial_solutions(ideal: &ModulePresentation, w: Option<&[i64]>, cap: usize) -> Result<PolySolutionBasis> {
    let n = ideal.n();
    let w: Vec<i64> = w.map(|w| w.to_vec()).unwrap_or_else(|| vec![-1; n]);
    let k1 = exponent_bound(ideal, &w, cap)?;
    let solutions = match k1 {
        None => Vec::new(),
        Some(k) => solve_ansatz(ideal, &ansatz_exponents(&w, k)),
    };
    Ok(PolySolutionBasis { solutions, weight_used: w, k1 })
}

pub fn polynomial_solutions_default(ideal: &ModulePresentation) -> Result<PolySolutionBasis> {
    polynomial_solutions(ideal, None, DEFAULT_DEGREE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylRing;

    #[test]
    fn ansatz_shape() {
        // p + 2q ≤ 3: (0,0),(1,0),(2,0),(3,0),(0,1),(1,1).
        assert_eq!(ansatz_exponents(&[-1, -2], 3).len(), 6);
        assert_eq!(ansatz_exponents(&[-1], 0), vec![vec![0]]);
    }

    #[test]
    fn euler_operator_has_monomial_solution() {
        let r = WeylRing::new(&["x"]);
        let p = crate::io::parse_operator("x*dx - 3", &r).unwrap();
        let m = ModulePresentation::cyclic(&r, vec![p]);
        assert_eq!(exponent_bound(&m, &[-1], 40).unwrap(), Some(3));
        let s = polynomial_solutions_default(&m).unwrap();
        assert_eq!(s.solutions.len(), 1);
        assert_eq!(s.solutions[0].to_string(), "x^3");
    }
}
