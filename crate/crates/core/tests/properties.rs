use holonomic::arith::RationalFunction;
use holonomic::bfunction::DEFAULT_DEGREE_CAP as CAP;
use holonomic::gb::basis::groebner_default;
use holonomic::gb::ModulePresentation;
use holonomic::homological::poly_ext;
use holonomic::io::{parse_operator, parse_poly, parse_problem};
use holonomic::polysol::polynomial_solutions;
use holonomic::systems::{appell_f1_int, xy_ring};
use proptest::prelude::*;

mod common;
use common::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn adjoint_is_an_involutive_antiautomorphism(
        a in element(xy_ring(), 4, 2),
        b in element(xy_ring(), 4, 2),
    ) {
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert_eq!(a.mul(&b).adjoint(), b.adjoint().mul(&a.adjoint()));
        prop_assert_eq!(a.add(&b).adjoint(), a.adjoint().add(&b.adjoint()));
    }

    #[test]
    fn multiplication_is_associative_and_distributive(
        a in element(xy_ring(), 3, 2),
        b in element(xy_ring(), 3, 2),
        c in element(xy_ring(), 3, 2),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn fourier_is_an_automorphism(a in element(xy_ring(), 4, 2), b in element(xy_ring(), 4, 2)) {
        prop_assert_eq!(a.mul(&b).fourier(), a.fourier().mul(&b.fourier()));
        // Four applications of x ↦ ∂, ∂ ↦ −x return to the start.
        prop_assert_eq!(a.fourier().fourier().fourier().fourier(), a);
    }

    #[test]
    fn action_on_functions_is_a_module_action(
        a in element(xy_ring(), 3, 2),
        b in element(xy_ring(), 3, 2),
        p in poly(xy_ring(), 4, 3),
        s in element(xy_ring(), 3, 1),
        t in element(xy_ring(), 3, 1),
        q in poly(xy_ring(), 2, 1).prop_filter("nonzero", |q| !q.is_zero()),
    ) {
        prop_assert_eq!(a.mul(&b).apply_poly(&p), a.apply_poly(&b.apply_poly(&p)));
        let f = RationalFunction::new(p.clone(), q);
        prop_assert_eq!(s.mul(&t).apply(&f), s.apply(&t.apply(&f)));
        prop_assert_eq!(s.add(&t).apply(&f), s.apply(&f).add(&t.apply(&f)));
    }

    #[test]
    fn operators_round_trip_through_text(a in element(xy_ring(), 5, 3), p in poly(xy_ring(), 5, 3)) {
        let r = xy_ring();
        prop_assert_eq!(parse_operator(&a.to_string(), &r).unwrap(), a);
        prop_assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groebner_bases_are_stable_and_contain_the_ideal(
        g1 in element(xy_ring(), 3, 1),
        g2 in element(xy_ring(), 2, 1),
        a in element(xy_ring(), 2, 1),
        b in element(xy_ring(), 2, 1),
    ) {
        let r = xy_ring();
        let gb = groebner_default(&ModulePresentation::cyclic(&r, vec![g1.clone(), g2.clone()]));
        prop_assert!(gb.contains(&[g1.clone()]));
        prop_assert!(gb.contains(&[g2.clone()]));
        prop_assert!(gb.contains(&[a.mul(&g1).add(&b.mul(&g2))]));
        let again = groebner_default(&ModulePresentation::cyclic(&r, gb.ideal_elements()));
        prop_assert_eq!(again.elements(), gb.elements());
    }

    #[test]
    fn problem_files_round_trip(g1 in element(xy_ring(), 4, 2), g2 in element(xy_ring(), 4, 2)) {
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let src = format!("# generated\nring x, y;\nideal I = {},\n  {};\nmodule M rank 2 = [{}, {}];\n", g1, g2, g2, g1);
        let p = parse_problem(&src).unwrap();
        prop_assert_eq!(p.primary().generators(), vec![g1.clone(), g2.clone()]);
        prop_assert_eq!(&p.module("M").unwrap().relations, &vec![vec![g2, g1]]);
    }

    /// Polynomial solutions agree with a brute-force search, every returned
    /// solution is annihilated, and the Ext table into `k[x]` starts with
    /// the same dimension and has the Euler characteristic of its complex.
    #[test]
    fn ode_solutions_match_brute_force(ideal in ode()) {
        let sols = polynomial_solutions(&ideal, Some(&[-1]), CAP).unwrap();
        for s in &sols.solutions {
            for g in ideal.generators() {
                prop_assert!(g.apply_poly(s).is_zero(), "{} does not annihilate {}", g, s);
            }
            prop_assert!(s.total_degree().unwrap_or(0) as i64 <= sols.k1.unwrap_or(0));
        }
        let deg = sols.k1.unwrap_or(0).max(0) as u32 + 6;
        prop_assert_eq!(sols.solutions.len(), brute_force_dim(&ideal, deg));

        let (ext, int) = poly_ext(&ideal, &[1], CAP).unwrap();
        prop_assert_eq!(ext.dims[0], sols.solutions.len());
        let tor_euler: i64 = int.tor.iter().enumerate().map(|(j, &t)| if j % 2 == 0 { t as i64 } else { -(t as i64) }).sum();
        match &int.complex {
            Some(c) => {
                prop_assert!(c.is_complex());
                prop_assert_eq!(c.euler_characteristic(), tor_euler);
            }
            // No integer root: the window is empty.
            None => prop_assert!(int.tor.iter().all(|&t| t == 0)),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn appell_polynomial_solutions_are_sound(
        a in -3i64..=3, b in -3i64..=3, bp in -3i64..=3, c in -3i64..=3,
    ) {
        let m = appell_f1_int(a, b, bp, c);
        let sols = polynomial_solutions(&m, Some(&[-1, -2]), CAP).unwrap();
        for s in &sols.solutions {
            for g in m.generators() {
                prop_assert!(g.apply_poly(s).is_zero(), "F1({},{},{},{}): {} fails", a, b, bp, c, g);
            }
        }
    }
}
