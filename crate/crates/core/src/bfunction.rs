//! Weight, global and integration b-functions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::arith::{CommPoly, Rational, RatMatrix, UnivarPoly};
use crate::error::{Error, Result};
use crate::gb::basis::{buchberger, default_order, initial_module, GroebnerBasis};
use crate::gb::ModulePresentation;
use crate::weyl::{WeightVector, WeylElement, WeylRing};

pub const DEFAULT_DEGREE_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFunctionResult {
    pub b: UnivarPoly,
    pub integer_roots: Vec<i64>,
    pub context: String,
}

impl BFunctionResult {
    fn new(b: UnivarPoly, context: String) -> Result<BFunctionResult> {
        let integer_roots = b.integer_roots()?;
        Ok(BFunctionResult { b, integer_roots, context })
    }
}

/// Monic generator of `{b : b(s)·e_comp ∈ gb}`, found as the first linear
/// dependence among the normal forms of `s^k e_comp`.
pub fn minimal_polynomial(gb: &GroebnerBasis, s: &WeylElement, comp: usize, cap: usize) -> Result<UnivarPoly> {
    let ring = gb.ring.clone();
    let rank = gb.rank;
    let unit = |w: WeylElement| {
        let mut v = vec![WeylElement::zero(&ring); rank];
        v[comp] = w;
        v
    };
    let mut cols: Vec<BTreeMap<(usize, Vec<u32>), Rational>> = Vec::new();
    let mut index: BTreeMap<(usize, Vec<u32>), usize> = BTreeMap::new();
    let mut cur = gb.normal_form(&unit(WeylElement::one(&ring)));
    for k in 0..=cap {
        let mut col = BTreeMap::new();
        for (j, w) in cur.iter().enumerate() {
            for (e, c) in w.terms() {
                let key = (j, e.to_vec());
                let n = index.len();
                index.entry(key.clone()).or_insert(n);
                col.insert(key, c.clone());
            }
        }
        cols.push(col);
        if let Some(b) = dependence(&cols, &index) {
            return Ok(UnivarPoly::new("s", b).monic());
        }
        if k == cap {
            break;
        }
        let next: Vec<WeylElement> = cur.iter().map(|w| s.mul(w)).collect();
        cur = gb.normal_form(&next);
    }
    Err(Error::DegreeCapExceeded(cap))
}

/// Coefficients `c_0..c_k` with `Σ c_j col_j = 0` and `c_k = 1`, if the
/// last column depends on the others.
fn dependence(
    cols: &[BTreeMap<(usize, Vec<u32>), Rational>],
    index: &BTreeMap<(usize, Vec<u32>), usize>,
) -> Option<Vec<Rational>> {
    let k = cols.len();
    let rows = index.len();
    if rows == 0 {
        // The first normal form is already zero.
        return if k == 1 { Some(vec![Rational::one()]) } else { None };
    }
    let mut m = RatMatrix::zeros(rows, k);
    for (j, col) in cols.iter().enumerate() {
        for (key, c) in col {
            m.set(index[key], j, c.clone());
        }
    }
    let ns = m.nullspace();
    // Earlier columns are independent, so the kernel is at most one-dimensional.
    let v = ns.into_iter().next()?;
    let last = v[k - 1].clone();
    if last.is_zero() {
        return None;
    }
    Some(v.iter().map(|c| c / &last).collect())
}

/// `s = Σ w_i θ_i`.
pub fn euler_weight(ring: &Arc<WeylRing>, w: &[i64]) -> WeylElement {
    let mut s = WeylElement::zero(ring);
    for (i, &wi) in w.iter().enumerate() {
        s = s.add(&WeylElement::theta(ring, i).scale(&Rational::from(wi)));
    }
    s
}

fn require_cyclic(m: &ModulePresentation) -> Result<()> {
    if m.rank != 1 {
        return Err(Error::Invalid("expected a cyclic presentation".into()));
    }
    Ok(())
}

/// Generator of `in_{(−w,w)}(I) ∩ k[s]`, `s = Σ w_i θ_i`.
pub fn weight_bfunction(ideal: &ModulePresentation, w: &[i64], cap: usize) -> Result<BFunctionResult> {
    require_cyclic(ideal)?;
    let n = ideal.n();
    if w.len() != n || w.iter().all(|&v| v == 0) {
        return Err(Error::Invalid("weight must be a nonzero vector of length n".into()));
    }
    crate::gb::ops::require_holonomic(ideal)?;
    let wv = WeightVector::neg_pos(w);
    let init = initial_module(&ideal.ring, 1, &ideal.relations, &wv, &[0]);
    let gb = buchberger(&ideal.ring, 1, &init, &default_order(&ideal.ring));
    let s = euler_weight(&ideal.ring, w);
    let b = minimal_polynomial(&gb, &s, 0, cap)?;
    BFunctionResult::new(b, format!("weight (-w,w), w = {:?}", w))
}

fn fresh_name(ring: &WeylRing, base: &str) -> String {
    let names = ring.names();
    let mut cand = base.to_string();
    while names.iter().any(|n| *n == cand || *n == format!("d{}", cand)) {
        cand.push('_');
    }
    cand
}

/// Global b-function of `f^s u` for the class `u` of 1 in `D/I`.
pub fn global_bfunction(ideal: &ModulePresentation, f: &CommPoly, cap: usize) -> Result<BFunctionResult> {
    require_cyclic(ideal)?;
    if f.is_zero() {
        return Err(Error::ZeroInput("global b-function of the zero polynomial"));
    }
    let ring = &ideal.ring;
    let n = ring.n();
    let t = fresh_name(ring, "t");
    let mut xs: Vec<String> = ring.x_names().to_vec();
    xs.push(t.clone());
    let mut ds: Vec<String> = ring.d_names().to_vec();
    ds.push(format!("d{}", t));
    let big = WeylRing::with_names(&xs, &ds, false)?;
    let f = f.map_ring(ring.poly_ring()).ok_or_else(|| Error::RingMismatch("f uses unknown variables".into()))?;
    let map: Vec<usize> = (0..n).collect();
    let fb = WeylElement::from_poly(ring, &f).embed(&big, &map);
    let dt = WeylElement::d(&big, n);
    let ximg: Vec<WeylElement> = (0..n).map(|i| WeylElement::x(&big, i)).collect();
    let dimg: Vec<WeylElement> = (0..n)
        .map(|i| {
            let fi = WeylElement::from_poly(ring, &f.derivative(i)).embed(&big, &map);
            WeylElement::d(&big, i).add(&fi.mul(&dt))
        })
        .collect();
    let mut gens: Vec<Vec<WeylElement>> =
        ideal.generators().iter().map(|p| vec![p.substitute(&big, &ximg, &dimg)]).collect();
    gens.push(vec![WeylElement::x(&big, n).sub(&fb)]);

    let mut u = vec![0; n + 1];
    let mut v = vec![0; n + 1];
    u[n] = -1;
    v[n] = 1;
    let wv = WeightVector { u, v };
    let init = initial_module(&big, 1, &gens, &wv, &[0]);
    let gb = buchberger(&big, 1, &init, &default_order(&big));
    let tdt = WeylElement::theta(&big, n);
    let bt = minimal_polynomial(&gb, &tdt, 0, cap)?;
    // b(s) = b_t(−s − 1)
    let b = bt.compose_affine(&Rational::from(-1), &Rational::from(-1)).monic();
    BFunctionResult::new(b, format!("global, f = {}", f))
}

/// Minimal `b` with `b(Σ w_i ∂_i x_i) e_j ∈ in_{(w,−w)}[m](N)` for every
/// generator, combined as `lcm_j b_j(s − m_j)`.
pub fn integration_bfunction(module: &ModulePresentation, w: &[i64], cap: usize) -> Result<BFunctionResult> {
    if w.iter().any(|&v| v <= 0) || w.len() != module.n() {
        return Err(Error::Invalid("integration weight must be strictly positive".into()));
    }
    let ring = &module.ring;
    let wv = WeightVector::pos_neg(w);
    let init = initial_module(ring, module.rank, &module.relations, &wv, &module.shifts);
    let gb = buchberger(ring, module.rank, &init, &default_order(ring));
    // σ = Σ w_i ∂_i x_i = Σ w_i (θ_i + 1)
    let mut sigma = euler_weight(ring, w);
    sigma = sigma.add(&WeylElement::constant(ring, Rational::from(w.iter().sum::<i64>())));
    let mut b = UnivarPoly::constant("s", Rational::one());
    for j in 0..module.rank {
        let bj = minimal_polynomial(&gb, &sigma, j, cap)?;
        let shifted = bj.compose_affine(&Rational::one(), &Rational::from(-module.shifts[j]));
        b = lcm(&b, &shifted);
    }
    BFunctionResult::new(b, format!("integration (w,-w), w = {:?}", w))
}

fn lcm(a: &UnivarPoly, b: &UnivarPoly) -> UnivarPoly {
    let g = a.gcd(b);
    a.mul(b).div_rem(&g).0.monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_poly;
    use crate::systems::appell_f1_int;

    #[test]
    fn one_variable_cases() {
        let r = WeylRing::new(&["x"]);
        // D/D∂ with w = 1: initial ideal D∂, b(θ) = θ.
        let m = ModulePresentation::cyclic(&r, vec![WeylElement::d(&r, 0)]);
        let b = weight_bfunction(&m, &[1], 40).unwrap();
        assert_eq!(b.b, UnivarPoly::from_roots("s", &[0]));
        let b = integration_bfunction(&m, &[1], 40).unwrap();
        assert_eq!(b.b, UnivarPoly::from_roots("s", &[1]));
        // f = x: b(s) = s + 1.
        let g = global_bfunction(&m, &parse_poly("x", &r).unwrap(), 40).unwrap();
        assert_eq!(g.b, UnivarPoly::from_roots("s", &[-1]));
        // f = x^2: (s+1)(s+1/2).
        let g = global_bfunction(&m, &parse_poly("x^2", &r).unwrap(), 40).unwrap();
        assert_eq!(g.b.degree(), Some(2));
        assert_eq!(g.integer_roots, vec![-1]);
        assert!(g.b.eval(&Rational::new(-1, 2)).is_zero());
    }

    #[test]
    fn appell_weight_bfunction() {
        let f1 = appell_f1_int(2, -3, -2, 5);
        let b = weight_bfunction(&f1, &[-1, -2], 40).unwrap();
        assert_eq!(b.integer_roots, vec![-7, 0, 4]);
    }

    #[test]
    fn non_holonomic_is_rejected() {
        let r = WeylRing::new(&["x", "y"]);
        let m = ModulePresentation::cyclic(&r, vec![WeylElement::d(&r, 0)]);
        assert!(matches!(weight_bfunction(&m, &[1, 1], 40), Err(Error::NotHolonomic { dim: 3, n: 2 })));
    }
}
