//! Dense univariate polynomials over Q. Every b-function lives here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivarPoly {
    var: String,
    /// Lowest degree first; no trailing zeros.
    coeffs: Vec<Rational>,
}

impl UnivarPoly {
    pub fn new(var: &str, mut coeffs: Vec<Rational>) -> UnivarPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivarPoly { var: var.to_string(), coeffs }
    }

    pub fn zero(var: &str) -> UnivarPoly {
        UnivarPoly::new(var, vec![])
    }

    pub fn constant(var: &str, c: Rational) -> UnivarPoly {
        UnivarPoly::new(var, vec![c])
    }

    /// The monic polynomial (s - r_1)(s - r_2)...
    pub fn from_roots(var: &str, roots: &[i64]) -> UnivarPoly {
        let mut p = UnivarPoly::constant(var, Rational::one());
        for &r in roots {
            p = p.mul(&UnivarPoly::new(var, vec![Rational::from(-r), Rational::one()]));
        }
        p
    }

    pub fn from_i64(var: &str, coeffs: &[i64]) -> UnivarPoly {
        UnivarPoly::new(var, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, o: &UnivarPoly) -> UnivarPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c = vec![Rational::zero(); n];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in o.coeffs.iter().enumerate() {
            c[i] += v;
        }
        UnivarPoly::new(&self.var, c)
    }

    pub fn scale(&self, k: &Rational) -> UnivarPoly {
        UnivarPoly::new(&self.var, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn sub(&self, o: &UnivarPoly) -> UnivarPoly {
        self.add(&o.scale(&Rational::from(-1)))
    }

    pub fn mul(&self, o: &UnivarPoly) -> UnivarPoly {
        if self.is_zero() || o.is_zero() {
            return UnivarPoly::zero(&self.var);
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        UnivarPoly::new(&self.var, c)
    }

    pub fn monic(&self) -> UnivarPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().recip();
        self.scale(&l)
    }

    pub fn derivative(&self) -> UnivarPoly {
        UnivarPoly::new(
            &self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &UnivarPoly) -> (UnivarPoly, UnivarPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lc = d.leading();
        if r.len() <= dd {
            return (UnivarPoly::zero(&self.var), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] / &lc;
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &f * c;
                r[i - dd + j] -= &t;
            }
            q[i - dd] = f;
        }
        (UnivarPoly::new(&self.var, q), UnivarPoly::new(&self.var, r))
    }

    pub fn gcd(&self, o: &UnivarPoly) -> UnivarPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p(a*s + b).
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> UnivarPoly {
        let lin = UnivarPoly::new(&self.var, vec![b.clone(), a.clone()]);
        let mut acc = UnivarPoly::zero(&self.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UnivarPoly::constant(&self.var, c.clone()));
        }
        acc
    }

    pub fn with_var(&self, var: &str) -> UnivarPoly {
        UnivarPoly { var: var.to_string(), coeffs: self.coeffs.clone() }
    }

    /// Integer coefficient vector proportional to `self` with content 1.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let den = common_denominator(self.coeffs.iter());
        let mut v: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &v {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in v.iter_mut() {
                *c = &*c / &g;
            }
        }
        v
    }

    pub fn squarefree(&self) -> UnivarPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Upper bound on the absolute value of every complex root.
    fn cauchy_bound(&self) -> Rational {
        let lc = self.leading().abs();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = &c.abs() / &lc;
            if r > m {
                m = r;
            }
        }
        &m + &Rational::one()
    }

    fn sturm_sequence(&self) -> Vec<UnivarPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&Rational::from(-1)));
        }
        seq
    }

    fn sign_changes(seq: &[UnivarPoly], x: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0i32;
        for p in seq {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_negative() {
                -1
            } else {
                1
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Disjoint half-open intervals (lo, hi], each containing exactly one real
    /// root, of width at most `width`.
    pub fn isolate_real_roots(&self, width: &Rational) -> Vec<(Rational, Rational)> {
        let sq = self.squarefree();
        if sq.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let seq = sq.sturm_sequence();
        let b = sq.cauchy_bound();
        let mut out = vec![];
        let mut stack = vec![(-b.clone(), b)];
        let two = Rational::from(2);
        while let Some((lo, hi)) = stack.pop() {
            let count = Self::sign_changes(&seq, &lo) - Self::sign_changes(&seq, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 && &(&hi - &lo) <= width {
                out.push((lo, hi));
                continue;
            }
            let mid = &(&lo + &hi) / &two;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort();
        out
    }

    /// All rational roots, ascending, without multiplicity.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() {
            return vec![];
        }
        let ints = self.primitive_integer();
        let lc = ints.last().unwrap().abs();
        // Distinct fractions with denominators <= lc differ by at least 1/lc^2.
        let width = Rational::new(BigInt::one(), BigInt::from(2) * &lc * &lc);
        let mut roots = vec![];
        for (lo, hi) in self.isolate_real_roots(&width) {
            let cand = simplest_closed(&lo, &hi);
            if self.eval(&cand).is_zero() {
                roots.push(cand);
            }
        }
        roots
    }

    /// All integer roots, ascending, without multiplicity.
    pub fn integer_roots(&self) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Err(Error::ZeroBFunction);
        }
        let mut roots = vec![];
        for r in self.rational_roots() {
            if r.is_integer() {
                let v: i64 = r
                    .numer()
                    .try_into()
                    .map_err(|_| Error::Arithmetic("integer root out of range".into()))?;
                roots.push(v);
            }
        }
        Ok(roots)
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        let mut p = self.clone();
        let lin = UnivarPoly::new(&self.var, vec![-r, Rational::one()]);
        let mut m = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.div_rem(&lin).0;
            m += 1;
        }
        m
    }
}

/// A fraction of smallest denominator in the closed interval [lo, hi],
/// found by continued-fraction descent.
fn simplest_closed(lo: &Rational, hi: &Rational) -> Rational {
    let c = ceil(lo);
    if &Rational::from_bigint(c.clone()) <= hi {
        return Rational::from_bigint(c);
    }
    let fl = floor(lo);
    let base = Rational::from_bigint(fl);
    let l = lo - &base;
    let h = hi - &base;
    let inner = simplest_closed(&h.recip(), &l.recip());
    &base + &inner.recip()
}

fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

fn ceil(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "{}", self.var)?;
                    } else {
                        write!(f, "{}^{}", self.var, i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Factored rendering `(s+5)*(s-2)^2*...` of the rational linear factors,
/// followed by any remaining cofactor.
pub fn factored_form(p: &UnivarPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut rest = p.monic();
    let mut parts = vec![];
    for r in p.rational_roots() {
        let m = rest.root_multiplicity(&r);
        let lin = UnivarPoly::new(p.var(), vec![-&r, Rational::one()]);
        for _ in 0..m {
            rest = rest.div_rem(&lin).0;
        }
        let f = if r.is_zero() {
            p.var().to_string()
        } else if r.is_negative() {
            format!("({}+{})", p.var(), r.abs())
        } else {
            format!("({}-{})", p.var(), r)
        };
        if m > 1 {
            parts.push(format!("{}^{}", f, m));
        } else {
            parts.push(f);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(format!("({})", rest));
    }
    if parts.is_empty() {
        return "1".into();
    }
    parts.join("*")
}
