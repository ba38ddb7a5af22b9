//! Standard systems used in examples and tests.

use std::sync::Arc;

use crate::arith::{CommPoly, Rational};
use crate::error::{Error, Result};
use crate::gb::ModulePresentation;
use crate::io::parse_operator;
use crate::weyl::{WeylElement, WeylRing};

pub fn xy_ring() -> Arc<WeylRing> {
    WeylRing::new(&["x", "y"])
}

/// Appell's `F_1(a, b, b', c)` in the variables `x, y`.
pub fn appell_f1(a: Rational, b: Rational, bp: Rational, c: Rational) -> ModulePresentation {
    let r = xy_ring();
    let src = [
        format!("tx*(tx+ty+({})-1) - x*(tx+ty+({}))*(tx+({}))", c, a, b),
        format!("ty*(tx+ty+({})-1) - y*(tx+ty+({}))*(ty+({}))", c, a, bp),
        format!("(x-y)*dx*dy - ({})*dx + ({})*dy", bp, b),
    ];
    let gens = src.iter().map(|s| parse_operator(s, &r).expect("well-formed")).collect();
    ModulePresentation::cyclic(&r, gens)
}

pub fn appell_f1_int(a: i64, b: i64, bp: i64, c: i64) -> ModulePresentation {
    appell_f1(a.into(), b.into(), bp.into(), c.into())
}

/// `k[x][1/f]` for a linear form `f = c + Σ a_i x_i`, generated by `1/f`.
/// Its annihilator is spanned by `f·∂_i + a_i`, by `∂_i` where `a_i = 0`, and
/// by `a_j·∂_i − a_i·∂_j`; the module is holonomic of rank 1.
pub fn inverse_linear_form(ring: &Arc<WeylRing>, f: &CommPoly) -> Result<ModulePresentation> {
    if f.total_degree() != Some(1) {
        return Err(Error::Invalid("expected a polynomial of degree 1".into()));
    }
    let n = ring.n();
    let fw = WeylElement::from_poly(ring, f);
    let a: Vec<WeylElement> = (0..n).map(|i| WeylElement::from_poly(ring, &f.derivative(i))).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        let di = WeylElement::d(ring, i);
        if a[i].is_zero() {
            gens.push(di);
            continue;
        }
        gens.push(fw.mul(&di).add(&a[i]));
        for j in i + 1..n {
            if !a[j].is_zero() {
                gens.push(a[j].mul(&di).sub(&a[i].mul(&WeylElement::d(ring, j))));
            }
        }
    }
    Ok(ModulePresentation::cyclic(ring, gens))
}
