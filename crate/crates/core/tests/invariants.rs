//! Algebraic invariants of the arithmetic, Gröbner and b-function layers,
//! checked on random inputs.

use std::sync::Arc;

use holonomic::arith::{factor_linear, gcd, squarefree_part, CommPoly, PolyRing, RatMatrix, Rational, UnivarPoly};
use holonomic::bfunction::{weight_bfunction, DEFAULT_DEGREE_CAP as CAP};
use holonomic::gb::basis::{buchberger, default_order, groebner_default, initial_ideal};
use holonomic::gb::ops::{char_dimension, comm_groebner, eliminate, holonomic_rank};
use holonomic::gb::{ModulePresentation, TermOrder};
use holonomic::polysol::polynomial_solutions;
use holonomic::systems::{appell_f1_int, xy_ring};
use holonomic::weyl::{WeightVector, WeylElement, WeylRing};
use proptest::prelude::*;

mod common;
use common::element;

fn cpoly(ring: Arc<PolyRing>, terms: usize, deg: u32) -> impl Strategy<Value = CommPoly> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=deg, n), -5i64..=5), 1..=terms)
        .prop_map(move |ts| CommPoly::from_terms(&ring, ts.into_iter().map(|(e, c)| (e, Rational::from_int(c)))))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn univar(max_deg: usize) -> impl Strategy<Value = UnivarPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1)
        .prop_map(|cs| UnivarPoly::from_i64("s", &cs))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// `b(s)` evaluated at an operator.
fn eval_at(b: &UnivarPoly, s: &WeylElement) -> WeylElement {
    let ring = s.ring();
    b.coeffs().iter().rev().fold(WeylElement::zero(ring), |acc, c| acc.mul(s).add(&WeylElement::constant(ring, c.clone())))
}

/// `Σ w_i θ_i` with `θ_i = x_i ∂_i`.
fn euler(ring: &Arc<WeylRing>, w: &[i64]) -> WeylElement {
    w.iter().enumerate().fold(WeylElement::zero(ring), |acc, (i, &wi)| {
        acc.add(&WeylElement::x(ring, i).mul(&WeylElement::d(ring, i)).scale(&Rational::from_int(wi)))
    })
}

fn first_order_ode() -> impl Strategy<Value = ModulePresentation> {
    let ring = WeylRing::new(&["x"]);
    // (x∂ − a)(p∂ − p′)·… keeps the ideals holonomic and the roots varied.
    (0i64..5, prop::collection::vec(-3i64..=3, 1..=3), element(WeylRing::new(&["x"]), 2, 2)).prop_map(move |(a, p, extra)| {
        let x = WeylElement::x(&ring, 0);
        let d = WeylElement::d(&ring, 0);
        let theta = x.mul(&d).sub(&WeylElement::constant(&ring, Rational::from_int(a)));
        let pp = CommPoly::from_terms(
            ring.poly_ring(),
            p.iter().enumerate().map(|(k, &c)| (vec![k as u32], Rational::from_int(c))),
        );
        let op = if pp.is_zero() {
            theta
        } else {
            theta.mul(&WeylElement::from_poly(&ring, &pp).mul(&d).sub(&WeylElement::from_poly(&ring, &pp.derivative(0))))
        };
        let op = if extra.is_zero() { op } else { op.add(&extra.mul(&op).mul(&x)) };
        ModulePresentation::cyclic(&ring, vec![op])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn nullspace_vectors_are_exact_and_independent(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..=4),
    ) {
        let m = RatMatrix::from_rows(5, rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect());
        let ns = m.nullspace();
        prop_assert_eq!(ns.len(), 5 - m.rank());
        for v in &ns {
            prop_assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
        }
        prop_assert_eq!(RatMatrix::from_rows(5, ns.clone()).rank(), ns.len());
    }

    #[test]
    fn integer_roots_are_exact_and_complete(b in univar(6)) {
        let roots = b.integer_roots().unwrap();
        for r in &roots {
            prop_assert!(b.eval(&Rational::from_int(*r)).is_zero());
        }
        // Every integer root divides the lowest nonzero coefficient, so it is
        // bounded by its size.
        let low = b.coeffs().iter().find(|c| !c.is_zero()).unwrap().abs();
        let bound: i64 = low.numer().try_into().unwrap_or(i64::MAX).min(10_000);
        for r in -bound..=bound {
            if b.eval(&Rational::from_int(r)).is_zero() {
                prop_assert!(roots.contains(&r), "missed root {}", r);
            }
        }
    }

    #[test]
    fn planted_roots_are_found(roots in prop::collection::vec(-9i64..=9, 1..=5), tail in univar(2)) {
        let b = UnivarPoly::from_roots("s", &roots).mul(&tail);
        let found = b.integer_roots().unwrap();
        for r in &roots {
            prop_assert!(found.contains(r));
        }
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree(
        a in cpoly(PolyRing::new(&["x", "y"]), 3, 1),
        b in cpoly(PolyRing::new(&["x", "y"]), 3, 2),
    ) {
        let p = a.pow(2).mul(&b);
        let sq = squarefree_part(&p).unwrap();
        prop_assert!(p.div_exact(&sq).is_some());
        // A square factor involving v would survive in gcd(sq, ∂_v sq).
        for v in sq.support_vars() {
            prop_assert_eq!(gcd(&sq, &sq.derivative(v)).degree_in(v), 0);
        }
        // Same radical: p divides a power of its square-free part.
        prop_assert!(sq.pow(p.total_degree().unwrap().max(1)).div_exact(&p).is_some());
    }

    #[test]
    fn linear_factorizations_multiply_back(
        ls in prop::collection::vec((-3i64..=3, -3i64..=3, -3i64..=3), 1..=3),
        rest in cpoly(PolyRing::new(&["x", "y"]), 3, 2),
    ) {
        let r = PolyRing::new(&["x", "y"]);
        let mut p = rest;
        for (a, b, c) in ls {
            let lin = CommPoly::from_terms(&r, [
                (vec![1, 0], Rational::from_int(a)),
                (vec![0, 1], Rational::from_int(b)),
                (vec![0, 0], Rational::from_int(c)),
            ]);
            p = p.mul(&lin);
        }
        prop_assert_eq!(factor_linear(&p).expand(&p), p);
    }

    #[test]
    fn initial_forms_are_multiplicative(
        a in element(xy_ring(), 4, 2),
        b in element(xy_ring(), 4, 2),
        w in prop::collection::vec(-3i64..=3, 2),
    ) {
        let wv = WeightVector::neg_pos(&w);
        let ia = a.initial_form(&wv);
        // The initial form keeps exactly the top-weight terms.
        let top = a.max_weight(&wv);
        for (k, c) in a.terms() {
            prop_assert_eq!(ia.coeff(k) == *c && !c.is_zero(), wv.weight(k) == top.unwrap());
        }
        prop_assert_eq!(a.mul(&b).initial_form(&wv), ia.mul(&b.initial_form(&wv)));
    }

    #[test]
    fn elimination_stays_in_the_ideal(
        g1 in cpoly(PolyRing::new(&["x", "y", "t"]), 3, 2),
        g2 in cpoly(PolyRing::new(&["x", "y", "t"]), 3, 2),
    ) {
        let r = PolyRing::new(&["x", "y", "t"]);
        let gens = vec![g1, g2];
        let base = comm_groebner(&r, &gens, TermOrder::degrevlex(3));
        for e in eliminate(&r, &gens, &[2]) {
            prop_assert_eq!(e.degree_in(2), 0);
            let mut with = gens.clone();
            with.push(e);
            prop_assert_eq!(comm_groebner(&r, &with, TermOrder::degrevlex(3)), base.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Initial forms of members lie in the initial ideal.
    #[test]
    fn initial_forms_of_members_lie_in_the_initial_ideal(
        g1 in element(xy_ring(), 3, 1),
        g2 in element(xy_ring(), 2, 1),
        a in element(xy_ring(), 2, 1),
        b in element(xy_ring(), 2, 1),
        w in prop::collection::vec(-2i64..=2, 2),
    ) {
        let r = xy_ring();
        let m = ModulePresentation::cyclic(&r, vec![g1.clone(), g2.clone()]);
        let wv = WeightVector::neg_pos(&w);
        let init = buchberger(&r, 1, &initial_ideal(&m, &wv), &default_order(&r));
        let member = a.mul(&g1).add(&b.mul(&g2));
        prop_assert!(init.contains(&[member.initial_form(&wv)]));
    }

    /// Rank and dimension of ordinary systems against staircase counts.
    #[test]
    fn ode_rank_and_dimension(ideal in first_order_ode()) {
        let gb = groebner_default(&ideal);
        prop_assert_eq!(char_dimension(&ideal), if gb.is_unit() { 0 } else { 1 });
        // Over k(x) the rank is the order of the gcd of the operators, here
        // of the single generator.
        let ord = ideal.relations[0][0].order().unwrap() as usize;
        prop_assert_eq!(holonomic_rank(&ideal), Some(ord));
    }

    /// The b-function is monic, `b(s)` lies in the initial ideal and no
    /// proper factor does.
    #[test]
    fn bfunctions_are_minimal_witnesses(ideal in first_order_ode(), w in prop_oneof![Just(-1i64), Just(1), Just(-2)]) {
        let res = weight_bfunction(&ideal, &[w], CAP).unwrap();
        let b = &res.b;
        prop_assert!(b.leading().is_one());
        let r = &ideal.ring;
        let wv = WeightVector::neg_pos(&[w]);
        let init = buchberger(r, 1, &initial_ideal(&ideal, &wv), &default_order(r));
        let s = euler(r, &[w]);
        prop_assert!(init.contains(&[eval_at(b, &s)]));
        for root in b.rational_roots() {
            let lin = UnivarPoly::new("s", vec![-root.clone(), Rational::one()]);
            let (q, rem) = b.div_rem(&lin);
            prop_assert!(rem.is_zero());
            prop_assert!(!init.contains(&[eval_at(&q, &s)]), "proper factor {} passes", q);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Solutions respect the degree bound and their lowest-weight parts are
    /// killed by the initial forms of the generators.
    #[test]
    fn polynomial_solutions_respect_weights(
        a in -3i64..=3, b in -3i64..=3, bp in -3i64..=3, c in -3i64..=3,
        w in prop::sample::select(vec![[-1i64, -1], [-1, -2], [-2, -1], [-3, -1]]),
    ) {
        let m = appell_f1_int(a, b, bp, c);
        let sols = polynomial_solutions(&m, Some(&w), CAP).unwrap();
        let wv = WeightVector::neg_pos(&w);
        for p in &sols.solutions {
            let k1 = sols.k1.expect("solutions need a root");
            let wt = |e: &[u32]| e.iter().zip(&w).map(|(&ei, &wi)| ei as i64 * wi).sum::<i64>();
            prop_assert!(p.terms().keys().all(|e| wt(e) >= -k1));
            let low = p.terms().keys().map(|e| wt(e)).min().unwrap();
            let fw = CommPoly::from_terms(p.ring(), p.terms().iter().filter(|(e, _)| wt(e) == low).map(|(e, c)| (e.clone(), c.clone())));
            for g in m.generators() {
                prop_assert!(g.initial_form(&wv).apply_poly(&fw).is_zero());
            }
        }
    }
}

#[test]
fn transforms_preserve_commutation_relations() {
    let r = WeylRing::new(&["x", "y"]);
    let xs = [WeylElement::x(&r, 0), WeylElement::x(&r, 1)];
    let ds = [WeylElement::d(&r, 0), WeylElement::d(&r, 1)];
    for t in [
        |e: &WeylElement| e.fourier(),
        |e: &WeylElement| e.eta_transform().unwrap(),
    ] {
        let tx: Vec<WeylElement> = xs.iter().map(t).collect();
        let td: Vec<WeylElement> = ds.iter().map(t).collect();
        for i in 0..2 {
            for j in 0..2 {
                let delta = if i == j { WeylElement::one(&r) } else { WeylElement::zero(&r) };
                assert_eq!(td[i].commutator(&tx[j]), delta);
                assert!(tx[i].commutator(&tx[j]).is_zero());
                assert!(td[i].commutator(&td[j]).is_zero());
            }
        }
    }
}
