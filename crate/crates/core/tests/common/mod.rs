//! Random inputs and oracles shared by the property suites and the
//! acceptance run.
#![allow(dead_code)]

use std::sync::Arc;

use holonomic::arith::{CommPoly, RatMatrix, Rational};
use holonomic::gb::ModulePresentation;
use holonomic::weyl::{WeylElement, WeylRing};
use proptest::prelude::*;

pub fn x_ring() -> Arc<WeylRing> {
    WeylRing::new(&["x"])
}

/// Up to `terms` monomials `c·x^α ∂^β` with entries of `α, β` at most `deg`.
pub fn element(ring: Arc<WeylRing>, terms: usize, deg: u32) -> impl Strategy<Value = WeylElement> {
    let n = ring.n();
    prop::collection::vec((prop::collection::vec(0..=deg, 2 * n), -4i64..=4), 0..=terms)
        .prop_map(move |ts| WeylElement::from_terms(&ring, ts.into_iter().map(|(e, c)| (e, Rational::from_int(c)))))
}

pub fn poly(ring: Arc<WeylRing>, terms: usize, deg: u32) -> impl Strategy<Value = CommPoly> {
    let n = ring.n();
    prop::collection::vec((prop::collection::vec(0..=deg, n), -5i64..=5), 0..=terms).prop_map(move |ts| {
        CommPoly::from_terms(ring.poly_ring(), ts.into_iter().map(|(e, c)| (e, Rational::from_int(c))))
    })
}

/// Dimension of the polynomial solutions of degree at most `deg`, by linear
/// algebra on the action of the generators on monomials.
pub fn brute_force_dim(ideal: &ModulePresentation, deg: u32) -> usize {
    let ring = &ideal.ring;
    let images: Vec<Vec<CommPoly>> = (0..=deg)
        .map(|k| {
            let m = CommPoly::monomial(ring.poly_ring(), vec![k], Rational::one());
            ideal.generators().iter().map(|g| g.apply_poly(&m)).collect()
        })
        .collect();
    let mut keys: Vec<(usize, Vec<u32>)> = images
        .iter()
        .flat_map(|row| row.iter().enumerate().flat_map(|(i, p)| p.terms().keys().map(move |e| (i, e.clone()))))
        .collect();
    keys.sort();
    keys.dedup();
    if keys.is_empty() {
        return deg as usize + 1;
    }
    let rows = images
        .iter()
        .map(|row| keys.iter().map(|(i, e)| row[*i].terms().get(e).cloned().unwrap_or_else(Rational::zero)).collect())
        .collect();
    deg as usize + 1 - RatMatrix::from_rows(keys.len(), rows).rank()
}

/// A first-order factor of an ordinary differential operator in `x`.
pub fn factor(ring: Arc<WeylRing>) -> impl Strategy<Value = WeylElement> {
    let r1 = ring.clone();
    let r2 = ring.clone();
    prop_oneof![
        // θ − a has the solution x^a.
        (0i64..6).prop_map(move |a| {
            let t = WeylElement::x(&r1, 0).mul(&WeylElement::d(&r1, 0));
            t.sub(&WeylElement::constant(&r1, Rational::from_int(a)))
        }),
        // p∂ − p′ has the solution p.
        poly(ring.clone(), 3, 3).prop_filter("nonzero", |p| !p.is_zero()).prop_map(move |p| {
            WeylElement::from_poly(&r2, &p)
                .mul(&WeylElement::d(&r2, 0))
                .sub(&WeylElement::from_poly(&r2, &p.derivative(0)))
        }),
        element(ring, 3, 2).prop_filter("nonzero", |e| !e.is_zero()),
    ]
}

/// Ordinary differential operators built as products of factors, so that
/// solutions exist often but not always.
pub fn ode() -> impl Strategy<Value = ModulePresentation> {
    let ring = x_ring();
    prop::collection::vec(factor(ring.clone()), 1..=2).prop_map(move |fs| {
        let op = fs.iter().skip(1).fold(fs[0].clone(), |acc, f| acc.mul(f));
        ModulePresentation::cyclic(&ring, vec![op])
    })
}
