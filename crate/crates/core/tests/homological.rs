use holonomic::arith::{CommPoly, RationalFunction};
use holonomic::bfunction::DEFAULT_DEGREE_CAP as CAP;
use holonomic::gb::basis::groebner_default;
use holonomic::gb::ops::{char_dimension, holonomic_rank};
use holonomic::gb::ModulePresentation;
use holonomic::homological::*;
use holonomic::io::{parse_operator, parse_poly};
use holonomic::polysol::polynomial_solutions;
use holonomic::systems::{appell_f1_int, inverse_linear_form, xy_ring};
use holonomic::weyl::WeylElement;

fn cyclic(ops: &[&str]) -> ModulePresentation {
    let r = xy_ring();
    ModulePresentation::cyclic(&r, ops.iter().map(|s| parse_operator(s, &r).unwrap()).collect())
}

fn same_ideal(a: &ModulePresentation, b: &ModulePresentation) -> bool {
    groebner_default(a).elements() == groebner_default(b).elements()
}

/// Row `v` of `G_{j+1}` times the matrix of `G_{j+1} → G_j`.
fn apply_map(v: &[WeylElement], map: &[Vec<WeylElement>], zero: &WeylElement) -> Vec<WeylElement> {
    let cols = map.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|c| v.iter().zip(map).fold(zero.clone(), |acc, (a, row)| acc.add(&a.mul(&row[c]))))
        .collect()
}

fn localization(f: &str) -> ModulePresentation {
    let r = xy_ring();
    inverse_linear_form(&r, &parse_poly(f, &r).unwrap()).unwrap()
}

#[test]
fn appell_dual_is_appell() {
    let m = appell_f1_int(2, -3, -2, 5);
    let d = holonomic_dual(&m).unwrap();
    assert_eq!(d.rank, 1);
    assert!(same_ideal(&d, &appell_f1_int(-1, 4, 2, -3)));
    assert_eq!(holonomic_rank(&d), Some(3));
    // The dual depends on the presentation, so the double dual is taken of
    // the standard presentation of the dual system.
    let dd = holonomic_dual(&appell_f1_int(-1, 4, 2, -3)).unwrap();
    assert!(same_ideal(&dd, &m));
    assert_eq!(holonomic_rank(&holonomic_dual(&d).unwrap()), Some(3));
}

#[test]
fn dual_appell_strict_resolution() {
    let n = appell_f1_int(-1, 4, 2, -3);
    let r = strict_resolution(&n, &[1, 2], 3).unwrap();
    assert_eq!(r.ranks(), vec![1, 2, 1]);
    assert_eq!(r.shifts, vec![vec![0], vec![1, 0], vec![1]]);
    let zero = WeylElement::zero(&n.ring);
    for j in 0..r.maps.len() - 1 {
        for row in &r.maps[j + 1] {
            assert!(apply_map(row, &r.maps[j], &zero).iter().all(|e| e.is_zero()));
        }
    }
    // Each image has the order its target shift promises.
    for (j, map) in r.maps.iter().enumerate() {
        for (a, row) in map.iter().enumerate() {
            assert_eq!(r.order(j, row), Some(-r.shifts[j + 1][a]));
        }
    }
}

#[test]
fn dual_appell_truncated_complex() {
    let n = appell_f1_int(-1, 4, 2, -3);
    let int = integration_to_origin(&n, &[1, 2], CAP).unwrap();
    assert_eq!(int.bfunction.b.to_string(), "s^3 - 2*s^2 - 25*s + 50");
    let c = int.complex.as_ref().unwrap();
    assert_eq!((c.lo, c.hi), (-6, 5));
    assert_eq!(c.dims, vec![12, 28, 16]);
    assert_eq!(c.euler_characteristic(), 0);
    assert!(c.is_complex());
    assert_eq!(int.tor, vec![1, 2, 1]);
}

#[test]
fn appell_polynomial_ext() {
    let m = appell_f1_int(2, -3, -2, 5);
    let (e, _) = poly_ext(&m, &[1, 2], CAP).unwrap();
    assert_eq!(e.dims, vec![1, 2, 1]);
    assert_eq!(e.to_string(), "{0: 1, 1: 2, 2: 1}");
    let sols = polynomial_solutions(&m, Some(&[-1, -2]), CAP).unwrap();
    assert_eq!(sols.solutions.len(), e.dims[0]);
}

#[test]
fn localized_dual_integration() {
    // Dual of the Appell system localized along x = 0.
    let j = cyclic(&[
        "(tx*ty + ty^2 + 8*ty + 2*tx + 12) - (tx+ty+4)*dy",
        "(tx*ty + 2*tx + 7*ty + 14) - (tx+10)*x*dy",
    ]);
    let int = integration_to_origin(&j, &[1, 2], CAP).unwrap();
    assert_eq!(int.bfunction.b.to_string(), "s^3 + 19*s^2 + 94*s + 120");
    let c = int.complex.as_ref().unwrap();
    assert_eq!(c.euler_characteristic(), int.tor[0] as i64 - int.tor[1] as i64 + int.tor[2] as i64);
    assert!(c.is_complex());
    assert_eq!(int.tor, vec![3, 5, 2]);
}

#[test]
fn localization_presentations_annihilate_inverse() {
    let r = xy_ring();
    for f in ["x", "y", "x-1", "x-y", "y-1"] {
        let n = localization(f);
        assert_eq!(char_dimension(&n), 2, "{}", f);
        assert_eq!(holonomic_rank(&n), Some(1), "{}", f);
        let inv = RationalFunction::new(CommPoly::one(&r.poly_ring()), parse_poly(f, &r).unwrap());
        for g in &n.relations {
            assert!(g[0].apply(&inv).is_zero(), "{} kills 1/{}", g[0], f);
        }
    }
}

#[test]
fn appell_ext_into_point_modules() {
    let m = appell_f1_int(2, -3, -2, 5);
    let (e, int) = d_ext(&m, &cyclic(&["x", "dy"]), &[1, 1, 1, 1], CAP).unwrap();
    assert_eq!(e.dims, vec![1, 3, 2]);
    assert!(int.complex.as_ref().unwrap().is_complex());
    let (e, _) = d_ext(&m, &cyclic(&["x", "y"]), &[1, 1, 1, 1], CAP).unwrap();
    assert_eq!(e.dims, vec![0, 1, 2]);
}

#[test]
fn appell_ext_into_polynomials_agrees_with_poly_ext() {
    let m = appell_f1_int(2, -3, -2, 5);
    let (e, _) = d_ext(&m, &cyclic(&["dx", "dy"]), &[1, 1, 1, 1], CAP).unwrap();
    assert_eq!(e.dims, vec![1, 2, 1]);
}

#[test]
fn appell_ext_into_localizations() {
    let m = appell_f1_int(2, -3, -2, 5);
    let r = xy_ring();
    for (f, dims) in [("x", vec![2, 5, 3]), ("y", vec![2, 5, 3]), ("x-1", vec![1, 3, 2])] {
        let poly = parse_poly(f, &r).unwrap();
        let (e, _) = ratl_ext(&m, &poly, Some(&localization(f)), &[1, 1, 1, 1], CAP).unwrap();
        assert_eq!(e.dims, dims, "f = {}", f);
    }
}

#[test]
fn brute_force_finds_the_polynomial_solution() {
    let m = appell_f1_int(2, -3, -2, 5);
    let found = brute_force_solutions(&m, &cyclic(&["dx", "dy"]), 1, 8).unwrap();
    assert_eq!(found.len(), 1);
    let sol = polynomial_solutions(&m, Some(&[-1, -2]), CAP).unwrap().solutions.remove(0);
    let r = xy_ring();
    let image = &found[0][0];
    let expected = WeylElement::from_poly(&r, &sol);
    let (_, ca) = image.terms().next().unwrap();
    let (_, cb) = expected.terms().next().unwrap();
    assert_eq!(image.scale(cb), expected.scale(ca));
}
