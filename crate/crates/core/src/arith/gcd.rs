//! Multivariate gcd by recursive primitive remainder sequences.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::CommPoly;
use super::rational::{common_denominator, Rational};
use crate::error::{Error, Result};

/// Monic gcd. `gcd(0, 0) = 0`.
pub fn gcd(a: &CommPoly, b: &CommPoly) -> CommPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let mut vars = a.support_vars();
    vars.extend(b.support_vars());
    let Some(&v) = vars.iter().min() else {
        return CommPoly::one(a.ring());
    };
    let in_a = a.degree_in(v) > 0;
    let in_b = b.degree_in(v) > 0;
    if !in_a {
        return gcd(a, &content(b, v));
    }
    if !in_b {
        return gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd(&ca, &cb);
    c.mul(&prs(pa, pb, v)).monic()
}

/// Gcd of the coefficients with respect to variable `v`.
pub fn content(p: &CommPoly, v: usize) -> CommPoly {
    let mut g = CommPoly::zero(p.ring());
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// Primitive part over `k[others]`, scaled to coprime integer coefficients
/// so that remainder sequences do not swell.
fn primitive(p: &CommPoly, v: usize) -> CommPoly {
    let c = content(p, v);
    integral(&p.div_exact(&c).expect("content divides"))
}

fn integral(p: &CommPoly) -> CommPoly {
    use num_integer::Integer;
    let den = common_denominator(p.terms().values());
    let mut num = BigInt::zero();
    for c in p.terms().values() {
        num = num.gcd(&(c.numer() * &den / c.denom()));
    }
    if num.is_zero() {
        return p.clone();
    }
    p.scale(&Rational::new(den, num))
}

fn prs(a: CommPoly, b: CommPoly, v: usize) -> CommPoly {
    if coprime_image(&a, &b, v) {
        return CommPoly::one(a.ring());
    }
    let (mut a, mut b) = (integral(&a), integral(&b));
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return b.monic();
        }
        if r.degree_in(v) == 0 {
            return CommPoly::one(a.ring());
        }
        a = b;
        b = primitive(&r, v);
    }
}

/// Exact coprimality certificate. If `lc_v(a)` survives a specialization of
/// the other variables and the specialized images are coprime, any common
/// factor of positive `v`-degree would survive too, so `a` and `b` (both
/// primitive in `v`) are coprime.
fn coprime_image(a: &CommPoly, b: &CommPoly, v: usize) -> bool {
    let others: Vec<usize> = a.support_vars().into_iter().chain(b.support_vars()).filter(|&i| i != v).collect();
    if others.is_empty() {
        return false;
    }
    let lc = a.coefficients_in(v).pop().expect("positive degree");
    for shift in 0..3i64 {
        let point = |p: &CommPoly| {
            others.iter().enumerate().fold(p.clone(), |q, (k, &i)| {
                q.substitute(i, &CommPoly::constant(p.ring(), Rational::from_int(2 + shift + 3 * k as i64)))
            })
        };
        if point(&lc).is_zero() {
            continue;
        }
        let (sa, sb) = (point(a), point(b));
        if sb.degree_in(v) == 0 {
            return !sb.is_zero();
        }
        return prs(sa, sb, v).is_constant();
    }
    false
}

pub fn pseudo_remainder(a: &CommPoly, b: &CommPoly, v: usize) -> CommPoly {
    let db = b.degree_in(v);
    let bc = b.coefficients_in(v);
    let lb = &bc[db as usize];
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.coefficients_in(v).swap_remove(dr as usize);
        let mut e = vec![0; a.ring().nvars()];
        e[v] = dr - db;
        let shifted = b.mul(&lr).mul_monomial(&e, &super::rational::Rational::one());
        r = r.mul(lb).sub(&shifted);
    }
    r
}

/// Product of the distinct irreducible factors of `p`, monic.
pub fn squarefree_part(p: &CommPoly) -> Result<CommPoly> {
    if p.is_zero() {
        return Err(Error::ZeroInput("squarefree_part of the zero polynomial"));
    }
    let mut g = p.clone();
    for v in p.support_vars() {
        g = gcd(&g, &p.derivative(v));
        if g.is_constant() {
            break;
        }
    }
    Ok(p.div_exact(&g).expect("gcd divides").monic())
}
