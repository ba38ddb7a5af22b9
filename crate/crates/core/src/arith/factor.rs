//! Extraction of monomial and degree-one factors over Q.

use super::gcd::squarefree_part;
use super::poly::CommPoly;
use super::rational::Rational;
use super::univar::UnivarPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearFactorization {
    /// `input = unit * Π factor^mult * residual`.
    pub unit: Rational,
    pub factors: Vec<(CommPoly, usize)>,
    /// Monic cofactor with no linear factor; `None` when it is constant.
    pub residual: Option<CommPoly>,
}

impl LinearFactorization {
    pub fn is_complete(&self) -> bool {
        self.residual.is_none()
    }

    pub fn expand(&self, like: &CommPoly) -> CommPoly {
        let mut p = CommPoly::constant(like.ring(), self.unit.clone());
        for (f, m) in &self.factors {
            p = p.mul(&f.pow(*m as u32));
        }
        if let Some(r) = &self.residual {
            p = p.mul(r);
        }
        p
    }
}

/// Deterministic small integer points, varied per attempt.
fn probe_point(n: usize, attempt: usize) -> Vec<Rational> {
    let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ (attempt as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    (0..n)
        .map(|_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let span = 3 + 2 * (attempt as i64 / 4).min(20);
            Rational::from(((state >> 33) as i64 % (2 * span + 1)) - span)
        })
        .collect()
}

fn restrict_to_line(p: &CommPoly, j: usize, c: &[Rational]) -> UnivarPoly {
    let coeffs = p.coefficients_in(j);
    UnivarPoly::new("t", coeffs.iter().map(|q| q.eval(c)).collect())
}

/// Linear factors of squarefree `s` through variable `j`.
fn linear_factors_in(s: &CommPoly, j: usize) -> Vec<CommPoly> {
    let ring = s.ring();
    let n = ring.nvars();
    let d = s.degree_in(j) as usize;
    let grads: Vec<CommPoly> = (0..n).map(|i| s.derivative(i)).collect();
    for attempt in 0..64 {
        let c = probe_point(n, attempt);
        let u = restrict_to_line(s, j, &c);
        if u.degree() != Some(d) {
            continue;
        }
        if u.gcd(&u.derivative()).degree() != Some(0) {
            continue;
        }
        let mut found = Vec::new();
        for r in u.rational_roots() {
            let mut pt = c.clone();
            pt[j] = r.clone();
            let dj = grads[j].eval(&pt);
            if dj.is_zero() {
                continue;
            }
            // ℓ = (x_j − r) + Σ_{i≠j} β_i (x_i − c_i), β_i = ∂_i s / ∂_j s at the root.
            let mut l = CommPoly::var(ring, j).sub(&CommPoly::constant(ring, r.clone()));
            for i in (0..n).filter(|&i| i != j) {
                let beta = &grads[i].eval(&pt) / &dj;
                if beta.is_zero() {
                    continue;
                }
                let xi = CommPoly::var(ring, i).sub(&CommPoly::constant(ring, c[i].clone()));
                l = l.add(&xi.scale(&beta));
            }
            if s.div_exact(&l).is_some() {
                found.push(l.monic());
            }
        }
        return found;
    }
    Vec::new()
}

fn sort_key(p: &CommPoly) -> (usize, String) {
    (p.support_vars().first().copied().unwrap_or(usize::MAX), p.to_string())
}

pub fn factor_linear(p: &CommPoly) -> LinearFactorization {
    let ring = p.ring().clone();
    let n = ring.nvars();
    if p.is_zero() {
        return LinearFactorization { unit: Rational::zero(), factors: Vec::new(), residual: None };
    }
    let mut factors: Vec<(CommPoly, usize)> = Vec::new();
    let mut rest = p.clone();

    let mut mono = vec![u32::MAX; n];
    for e in rest.terms().keys() {
        for (m, &k) in mono.iter_mut().zip(e) {
            *m = (*m).min(k);
        }
    }
    for (i, &k) in mono.iter().enumerate() {
        if k > 0 {
            factors.push((CommPoly::var(&ring, i), k as usize));
        }
    }
    if mono.iter().any(|&k| k > 0) {
        let m = CommPoly::monomial(&ring, mono.clone(), Rational::one());
        rest = rest.div_exact(&m).expect("monomial content divides");
    }

    let mut linear: Vec<CommPoly> = Vec::new();
    if !rest.is_constant() {
        let mut s = squarefree_part(&rest).expect("nonzero");
        for j in 0..n {
            if s.degree_in(j) == 0 {
                continue;
            }
            for l in linear_factors_in(&s, j) {
                if let Some(q) = s.div_exact(&l) {
                    s = q;
                    linear.push(l);
                }
            }
        }
    }
    linear.sort_by_key(sort_key);
    for l in linear {
        let mut m = 0;
        while let Some(q) = rest.div_exact(&l) {
            rest = q;
            m += 1;
        }
        factors.push((l, m));
    }

    let (unit, residual) = if rest.is_constant() {
        (rest.constant_value().unwrap(), None)
    } else {
        (rest.leading_coeff(), Some(rest.monic()))
    };
    LinearFactorization { unit, factors, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::PolyRing;

    #[test]
    fn cubic_splits() {
        let r = PolyRing::new(&["x"]);
        let x = CommPoly::var(&r, 0);
        let p = x.pow(3).sub(&x);
        let f = factor_linear(&p);
        assert!(f.is_complete());
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(&p), p);
    }

    #[test]
    fn sum_of_squares_is_residual() {
        let r = PolyRing::new(&["x", "y"]);
        let x = CommPoly::var(&r, 0);
        let y = CommPoly::var(&r, 1);
        let p = x.pow(2).add(&y.pow(2));
        let f = factor_linear(&p);
        assert!(f.factors.is_empty());
        assert_eq!(f.residual.as_ref(), Some(&p));
    }
}
