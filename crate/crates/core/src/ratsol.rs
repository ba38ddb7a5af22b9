//! Rational solutions with poles along the singular locus.
//!
//! A solution `g / Π f_i^{k_i}` of `I` corresponds to a polynomial solution
//! `g` of the conjugated ideal `F·I·F^{-1}`, `F = Π f_i^{k_i}`. The pole
//! orders `k_i` come from global b-functions along each factor.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{factor_linear, gcd, squarefree_part, CommPoly, PolyRing, Rational, RationalFunction};
use crate::bfunction::{global_bfunction, BFunctionResult};
use crate::error::{Error, Result};
use crate::gb::basis::default_order;
use crate::gb::ops::{char_dimension, require_holonomic, saturate_eliminate};
use crate::gb::{buchberger, ModulePresentation};
use crate::polysol::polynomial_solutions;
use crate::weyl::{WeightVector, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorData {
    pub factor: CommPoly,
    pub b: BFunctionResult,
    /// Largest integer root of `b`.
    pub r: Option<i64>,
    /// Pole-order bound `max(r + 1, 0)`.
    pub k: Option<i64>,
}

/// `numerator / Π factor^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSolution {
    pub numerator: CommPoly,
    pub exponents: Vec<(CommPoly, u32)>,
}

impl RationalSolution {
    pub fn denominator(&self) -> CommPoly {
        let mut d = CommPoly::one(self.numerator.ring());
        for (f, e) in &self.exponents {
            d = d.mul(&f.pow(*e));
        }
        d
    }

    pub fn to_function(&self) -> RationalFunction {
        RationalFunction::new(self.numerator.clone(), self.denominator())
    }
}

impl fmt::Display for RationalSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .exponents
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(p, e)| {
                let base = if p.nterms() > 1 { format!("({})", p) } else { p.to_string() };
                if *e == 1 { base } else { format!("{}^{}", base, e) }
            })
            .collect();
        let num = if self.numerator.nterms() > 1 && !den.is_empty() {
            format!("({})", self.numerator)
        } else {
            self.numerator.to_string()
        };
        match den.len() {
            0 => write!(f, "{}", num),
            1 => write!(f, "{}/{}", num, den[0]),
            _ => write!(f, "{}/({})", num, den.join("*")),
        }
    }
}

/// Principal symbols of a `(0,e)` Gröbner basis, as polynomials in `(x, ξ)`.
pub fn principal_symbols(ideal: &ModulePresentation) -> (std::sync::Arc<PolyRing>, Vec<CommPoly>) {
    let ring = &ideal.ring;
    let n = ring.n();
    let mut names: Vec<String> = ring.x_names().to_vec();
    names.extend(ring.d_names().iter().cloned());
    let pr = PolyRing::new(&names);
    let wv = WeightVector::zero_e(n);
    let mut w = vec![0i64; n];
    w.extend(std::iter::repeat(1).take(n));
    let gb = buchberger(ring, 1, &ideal.relations, &default_order(ring).push_weight(&w, vec![]));
    let syms = gb
        .ideal_elements()
        .iter()
        .map(|g| {
            let s = g.initial_form(&wv);
            CommPoly::from_terms(&pr, s.terms().map(|(e, c)| (e.to_vec(), c.clone())))
        })
        .collect();
    (pr, syms)
}

/// Squarefree polynomial defining the codimension-one part of the singular
/// locus; `1` when it is empty.
pub fn singular_locus(ideal: &ModulePresentation) -> Result<CommPoly> {
    if ideal.rank != 1 {
        return Err(Error::Invalid("singular locus expects a cyclic presentation".into()));
    }
    let n = ideal.n();
    let (pr, syms) = principal_symbols(ideal);
    let xring = ideal.ring.poly_ring();
    let xi: Vec<usize> = (n..2 * n).collect();
    let mut acc = CommPoly::one(xring);
    for i in 0..n {
        let e = saturate_eliminate(&pr, &syms, &CommPoly::var(&pr, n + i), &xi);
        let mut g = CommPoly::zero(xring);
        for p in &e {
            let px = CommPoly::from_terms(xring, p.terms().iter().map(|(k, c)| (k[..n].to_vec(), c.clone())));
            g = if g.is_zero() { px.monic() } else { gcd(&g, &px) };
        }
        if g.is_zero() {
            return Err(Error::NotHolonomic { dim: char_dimension(ideal), n });
        }
        // lcm(acc, g)
        let d = gcd(&acc, &g);
        acc = acc.mul(&g).div_exact(&d).expect("gcd divides");
    }
    squarefree_part(&acc).map(|p| p.monic())
}

/// Global b-function data along each factor.
pub fn exponent_bounds(ideal: &ModulePresentation, factors: &[CommPoly], cap: usize) -> Result<Vec<FactorData>> {
    let mut out = Vec::new();
    for f in factors {
        if f.is_constant() {
            return Err(Error::Invalid("factors must be non-constant".into()));
        }
        let b = global_bfunction(ideal, f, cap)?;
        let r = b.integer_roots.last().copied();
        if r.is_none() {
            return Err(Error::NoRationalSolutions(format!("b-function along {} has no integer root", f)));
        }
        let k = r.map(|r| (r + 1).max(0));
        out.push(FactorData { factor: f.clone(), b, r, k });
    }
    Ok(out)
}

/// Generators of `f^m · F I F^{-1}` with `F = Π f_j^{k_j}`, `f = Π f_j` and
/// `m` the order of each generator.
pub fn twist_ideal(ideal: &ModulePresentation, factors: &[CommPoly], k: &[u32]) -> Vec<WeylElement> {
    let ring = &ideal.ring;
    let n = ring.n();
    let pr = ring.poly_ring();
    let active: Vec<(&CommPoly, u32)> = factors.iter().zip(k.iter().copied()).filter(|(_, e)| *e > 0).collect();
    let mut f = CommPoly::one(pr);
    for fj in factors {
        f = f.mul(fj);
    }
    // h_i = Σ_j k_j (f / f_j) ∂_i f_j, so f·(F ∂_i F^{-1}) = f ∂_i − h_i.
    let h: Vec<CommPoly> = (0..n)
        .map(|i| {
            let mut s = CommPoly::zero(pr);
            for (fj, e) in &active {
                let cof = f.div_exact(fj).expect("factor divides product");
                s = s.add(&cof.mul(&fj.derivative(i)).scale(&Rational::from(*e as i64)));
            }
            s
        })
        .collect();
    let fw = WeylElement::from_poly(ring, &f);
    let mut xcache: BTreeMap<Vec<u32>, WeylElement> = BTreeMap::new();
    xcache.insert(vec![0; n], WeylElement::one(ring));
    ideal
        .generators()
        .iter()
        .map(|p| {
            let m = p.order().unwrap_or(0);
            let mut t = WeylElement::zero(ring);
            for (beta, a) in p.d_coefficients() {
                let d: u32 = beta.iter().sum();
                let x = twisted_power(&mut xcache, &beta, &fw, &f, &h, ring);
                let coeff = a.mul(&f.pow(m - d));
                t = t.add(&x.mul_poly_left(&coeff));
            }
            t
        })
        .collect()
}

/// `X_β = f^{|β|} Π_i (∂_i − h_i/f)^{β_i}`, built by
/// `X_{β+e_i} = f ∂_i X_β − (h_i + |β| ∂_i f) X_β`.
fn twisted_power(
    cache: &mut BTreeMap<Vec<u32>, WeylElement>,
    beta: &[u32],
    fw: &WeylElement,
    f: &CommPoly,
    h: &[CommPoly],
    ring: &std::sync::Arc<crate::weyl::WeylRing>,
) -> WeylElement {
    if let Some(x) = cache.get(beta) {
        return x.clone();
    }
    let i = beta.iter().position(|&b| b > 0).expect("β ≠ 0 at this point");
    let mut prev = beta.to_vec();
    prev[i] -= 1;
    let xp = twisted_power(cache, &prev, fw, f, h, ring);
    let d: u32 = prev.iter().sum();
    let corr = h[i].add(&f.derivative(i).scale(&Rational::from(d as i64)));
    let x = fw.mul(&WeylElement::d(ring, i)).mul(&xp).sub(&xp.mul_poly_left(&corr));
    cache.insert(beta.to_vec(), x.clone());
    x
}

/// Divide each operator on the left by the gcd of its coefficients.
pub fn partial_closure(gens: &[WeylElement]) -> Vec<WeylElement> {
    gens.iter()
        .map(|p| {
            let parts = p.d_coefficients();
            let mut g: Option<CommPoly> = None;
            for c in parts.values() {
                g = Some(match g {
                    None => c.monic(),
                    Some(g) => gcd(&g, c),
                });
            }
            match g {
                Some(g) if !g.is_constant() => {
                    let q: BTreeMap<Vec<u32>, CommPoly> =
                        parts.iter().map(|(b, c)| (b.clone(), c.div_exact(&g).expect("content divides"))).collect();
                    WeylElement::from_d_coefficients(p.ring(), &q)
                }
                _ => p.clone(),
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RationalSolutions {
    pub singular_locus: CommPoly,
    pub factors: Vec<FactorData>,
    pub closed: ModulePresentation,
    pub solutions: Vec<RationalSolution>,
}

/// Basis of the rational solutions of a holonomic ideal.
pub fn rational_solutions(
    ideal: &ModulePresentation,
    factor_override: Option<&[CommPoly]>,
    cap: usize,
) -> Result<RationalSolutions> {
    let n = ideal.n();
    require_holonomic(ideal)?;
    let sing = singular_locus(ideal)?;
    let factors: Vec<CommPoly> = match factor_override {
        Some(f) => f.to_vec(),
        None if sing.is_constant() => Vec::new(),
        None => {
            let lf = factor_linear(&sing);
            if let Some(r) = lf.residual {
                return Err(Error::FactorizationIncomplete(r.to_string()));
            }
            lf.factors.into_iter().map(|(f, _)| f).collect()
        }
    };
    let data = exponent_bounds(ideal, &factors, cap)?;
    let ks: Vec<u32> = data.iter().map(|d| d.k.unwrap_or(0) as u32).collect();
    let twisted = twist_ideal(ideal, &factors, &ks);
    let closed = ModulePresentation::cyclic(&ideal.ring, partial_closure(&twisted));
    let cdim = char_dimension(&closed);
    if cdim != n {
        return Err(Error::ClosureNotHolonomic);
    }
    let polys = polynomial_solutions(&closed, None, cap)?;
    let solutions = polys
        .solutions
        .into_iter()
        .map(|g| reduce(g, &factors, &ks))
        .collect();
    Ok(RationalSolutions { singular_locus: sing, factors: data, closed, solutions })
}

/// Cancel common factors between `g` and `Π f_j^{k_j}`.
fn reduce(mut g: CommPoly, factors: &[CommPoly], ks: &[u32]) -> RationalSolution {
    let mut exponents = Vec::new();
    for (f, &k) in factors.iter().zip(ks) {
        let mut e = k;
        while e > 0 {
            match g.div_exact(f) {
                Some(q) => {
                    g = q;
                    e -= 1;
                }
                None => break,
            }
        }
        if e > 0 {
            exponents.push((f.monic(), e));
        }
    }
    // Solutions are determined up to a scalar, so monic factors suffice.
    RationalSolution { numerator: g.monic(), exponents }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_operator, parse_poly};
    use crate::weyl::WeylRing;

    #[test]
    fn one_variable_pipeline() {
        let r = WeylRing::new(&["x"]);
        let m = ModulePresentation::cyclic(&r, vec![parse_operator("x*dx + 1", &r).unwrap()]);
        assert_eq!(singular_locus(&m).unwrap().to_string(), "x");
        let sols = rational_solutions(&m, None, 40).unwrap();
        assert_eq!(sols.solutions.len(), 1);
        assert_eq!(sols.solutions[0].to_string(), "1/x");
    }

    #[test]
    fn twist_of_derivative() {
        let r = WeylRing::new(&["x"]);
        let m = ModulePresentation::cyclic(&r, vec![WeylElement::d(&r, 0)]);
        let t = twist_ideal(&m, &[parse_poly("x", &r).unwrap()], &[1]);
        assert_eq!(t[0].to_string(), "x*dx - 1");
    }

    #[test]
    fn content_division() {
        let r = WeylRing::new(&["x"]);
        let p = parse_operator("x^2*dx - x", &r).unwrap();
        assert_eq!(partial_closure(&[p])[0].to_string(), "x*dx - 1");
    }
}
