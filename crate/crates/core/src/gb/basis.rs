use std::sync::Arc;

use num_bigint::BigInt;

use super::engine::{Algebra, Ctx, EPoly, Mono, Position, Tie, TermOrder, MAXV};
use crate::arith::{Int, Rational};
use crate::error::{Error, Result};
use crate::weyl::{WeightVector, WeylElement, WeylRing};

/// `D^r[m] / (row space of relations)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub ring: Arc<WeylRing>,
    pub rank: usize,
    pub shifts: Vec<i64>,
    pub relations: Vec<Vec<WeylElement>>,
}

impl ModulePresentation {
    pub fn new(ring: &Arc<WeylRing>, rank: usize, relations: Vec<Vec<WeylElement>>) -> Result<ModulePresentation> {
        if relations.iter().any(|r| r.len() != rank) {
            return Err(Error::Invalid("relation length differs from module rank".into()));
        }
        Ok(ModulePresentation { ring: ring.clone(), rank, shifts: vec![0; rank], relations })
    }

    /// `D / D·gens`.
    pub fn cyclic(ring: &Arc<WeylRing>, gens: Vec<WeylElement>) -> ModulePresentation {
        ModulePresentation {
            ring: ring.clone(),
            rank: 1,
            shifts: vec![0],
            relations: gens.into_iter().map(|g| vec![g]).collect(),
        }
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> ModulePresentation {
        assert_eq!(shifts.len(), self.rank);
        self.shifts = shifts;
        self
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    /// Generators of a cyclic presentation.
    pub fn generators(&self) -> Vec<WeylElement> {
        self.relations.iter().map(|r| r[0].clone()).collect()
    }
}

pub fn algebra_of(ring: &WeylRing) -> Algebra {
    Algebra::weyl(ring.n(), ring.is_homogenized())
}

/// Integer engine element from a vector of rational operators.
pub fn to_epoly(ctx: &Ctx, v: &[WeylElement]) -> EPoly {
    let mut den = BigInt::from(1);
    for w in v {
        den = num_integer::Integer::lcm(&den, &crate::arith::rational::common_denominator(w.terms().map(|t| t.1)));
    }
    let mut terms = Vec::new();
    for (j, w) in v.iter().enumerate() {
        for (e, c) in w.terms() {
            let mut m = Mono::one(j as u32);
            for (i, &k) in e.iter().enumerate() {
                m.e[i] = u16::try_from(k).expect("exponent overflow");
            }
            let num = c.numer() * (&den / c.denom());
            terms.push((m, Int::from_big(num)));
        }
    }
    ctx.from_terms(terms)
}

/// Rational vector of length `rank`, scaled so the leading coefficient is 1.
pub fn from_epoly(ring: &Arc<WeylRing>, rank: usize, p: &EPoly) -> Vec<WeylElement> {
    let mut out = vec![WeylElement::zero(ring); rank];
    if p.is_zero() {
        return out;
    }
    let lc = p.lc().to_big();
    let kl = ring.key_len();
    for (m, c) in &p.terms {
        let e: Vec<u32> = m.e[..kl].iter().map(|&v| v as u32).collect();
        out[m.comp as usize].add_term(e, &Rational::new(c.to_big(), lc.clone()));
    }
    out
}

/// Unscaled rational conversion: integer coefficients kept as they are.
pub fn from_epoly_raw(ring: &Arc<WeylRing>, rank: usize, p: &EPoly) -> Vec<WeylElement> {
    let mut out = vec![WeylElement::zero(ring); rank];
    let kl = ring.key_len();
    for (m, c) in &p.terms {
        let e: Vec<u32> = m.e[..kl].iter().map(|&v| v as u32).collect();
        out[m.comp as usize].add_term(e, &Rational::from_bigint(c.to_big()));
    }
    out
}

/// Engine weight on `(x, ∂[, h])` from `(u, v)`.
pub fn engine_weight(wv: &WeightVector) -> Vec<i64> {
    let mut w = wv.u.clone();
    w.extend_from_slice(&wv.v);
    w
}

/// Pad each entry with `h` so that `deg + dshift[j]` is constant.
pub fn homogenize_vec(v: &[WeylElement], hring: &Arc<WeylRing>, dshift: &[i64]) -> Vec<WeylElement> {
    let top = v
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(j, w)| w.degree().unwrap() as i64 + dshift[j])
        .max()
        .unwrap_or(0);
    v.iter()
        .enumerate()
        .map(|(j, w)| {
            if w.is_zero() {
                WeylElement::zero(hring)
            } else {
                w.homogenize_to(hring, (top - dshift[j]) as u32)
            }
        })
        .collect()
}

pub fn dehomogenize_vec(v: &[WeylElement], plain: &Arc<WeylRing>) -> Vec<WeylElement> {
    v.iter().map(|w| w.dehomogenize(plain)).collect()
}

/// Terms of maximal `weight + shift[j]` across all entries.
pub fn initial_form_vec(v: &[WeylElement], wv: &WeightVector, shifts: &[i64]) -> Vec<WeylElement> {
    let best = v
        .iter()
        .enumerate()
        .filter_map(|(j, w)| w.max_weight(wv).map(|m| m + shifts[j]))
        .max();
    let Some(best) = best else { return v.to_vec() };
    v.iter()
        .enumerate()
        .map(|(j, w)| match w.max_weight(wv) {
            Some(m) if m + shifts[j] == best => w.initial_form(wv),
            _ => WeylElement::zero(w.ring()),
        })
        .collect()
}

/// `max(weight + shift)` over the terms of a vector.
pub fn vec_order(v: &[WeylElement], wv: &WeightVector, shifts: &[i64]) -> Option<i64> {
    v.iter().enumerate().filter_map(|(j, w)| w.max_weight(wv).map(|m| m + shifts[j])).max()
}

/// Degrevlex on all variables; `h`, when present, is last.
pub fn default_order(ring: &WeylRing) -> TermOrder {
    TermOrder::degrevlex(ring.key_len())
}

/// Order refining `(u, v)[shifts]`, ties by degrevlex, for homogenized rings.
pub fn weight_order(hring: &WeylRing, wv: &WeightVector, shifts: &[i64]) -> TermOrder {
    TermOrder::degrevlex(hring.key_len()).push_weight(&engine_weight(wv), shifts.to_vec())
}

/// Reduced Gröbner basis of a submodule of `D^r` under a well-order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: Arc<WeylRing>,
    pub rank: usize,
    pub ctx: Ctx,
    pub elems: Vec<EPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.ctx.ord
    }

    /// Monic generators, ascending leading monomials.
    pub fn elements(&self) -> Vec<Vec<WeylElement>> {
        self.elems.iter().map(|p| from_epoly(&self.ring, self.rank, p)).collect()
    }

    /// Single-component view for ideals.
    pub fn ideal_elements(&self) -> Vec<WeylElement> {
        self.elements().into_iter().map(|mut v| v.swap_remove(0)).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.rank == 1 && self.elems.iter().any(|p| p.len() == 1 && p.lm().degree() == 0)
    }

    /// Leading monomials as `(exponents, component)`.
    pub fn leading_monomials(&self) -> Vec<(Vec<u32>, usize)> {
        let kl = self.ring.key_len();
        self.elems.iter().map(|p| (p.lm().e[..kl].iter().map(|&v| v as u32).collect(), p.lm().comp as usize)).collect()
    }

    pub fn reduce_engine(&self, p: EPoly) -> (EPoly, Int) {
        let red = super::engine::Reducers::new(&self.elems);
        self.ctx.reduce_tracked(p, &red)
    }

    /// Remainder of `v` with no term divisible by a leading monomial.
    pub fn normal_form(&self, v: &[WeylElement]) -> Vec<WeylElement> {
        let p = to_epoly(&self.ctx, v);
        let (r, m) = self.reduce_engine(p);
        // v ≡ r / m; restore the original scale of v.
        let den = {
            let mut d = BigInt::from(1);
            for w in v {
                d = num_integer::Integer::lcm(&d, &crate::arith::rational::common_denominator(w.terms().map(|t| t.1)));
            }
            d
        };
        let scale = Rational::new(BigInt::from(1), m.to_big() * den);
        from_epoly_raw(&self.ring, self.rank, &r).into_iter().map(|w| w.scale(&scale)).collect()
    }

    pub fn contains(&self, v: &[WeylElement]) -> bool {
        let p = to_epoly(&self.ctx, v);
        self.reduce_engine(p).0.is_zero()
    }
}

/// Gröbner basis of the rows in `gens` under `ord`. Orders with negative
/// weights are handled by homogenizing; the result is then the
/// dehomogenized basis, whose initial forms generate the initial module.
pub fn buchberger(ring: &Arc<WeylRing>, rank: usize, gens: &[Vec<WeylElement>], ord: &TermOrder) -> GroebnerBasis {
    if ord.has_negative_weight() && !ring.is_homogenized() {
        let hring = ring.homogenized();
        let hord = homogenized_order(ord, ring.key_len());
        let dshift = vec![0; rank];
        let hg: Vec<Vec<WeylElement>> = gens.iter().map(|g| homogenize_vec(g, &hring, &dshift)).collect();
        let hb = buchberger(&hring, rank, &hg, &hord);
        let ctx = Ctx::new(algebra_of(ring), ord.clone());
        let elems = hb
            .elements()
            .iter()
            .map(|v| to_epoly(&ctx, &dehomogenize_vec(v, ring)))
            .collect();
        return GroebnerBasis { ring: ring.clone(), rank, ctx, elems };
    }
    let ctx = Ctx::new(algebra_of(ring), ord.clone());
    let input: Vec<EPoly> = gens.iter().map(|g| to_epoly(&ctx, g)).collect();
    let elems = ctx.groebner(&input);
    GroebnerBasis { ring: ring.clone(), rank, ctx, elems }
}

/// Extend an order on `D` to `D^(h)`: `h` gets weight 0 and is appended
/// last to the final tie-break block.
pub fn homogenized_order(ord: &TermOrder, plain_len: usize) -> TermOrder {
    let mut o = ord.clone();
    for (_, vars) in o.blocks.iter_mut() {
        vars.retain(|&v| v < plain_len);
    }
    if let Some((tie, vars)) = o.blocks.last_mut() {
        *tie = Tie::DegRevLex;
        vars.push(plain_len);
    }
    o
}

/// Generators of `in_{(u,v)}[shifts]` of the row module.
pub fn initial_module(
    ring: &Arc<WeylRing>,
    rank: usize,
    gens: &[Vec<WeylElement>],
    wv: &WeightVector,
    shifts: &[i64],
) -> Vec<Vec<WeylElement>> {
    let std = weight_standard_basis(ring, rank, gens, wv, shifts);
    std.iter().map(|v| initial_form_vec(v, wv, shifts)).collect()
}

/// Dehomogenized Gröbner basis in `D^(h)` for an order refining the weight.
pub fn weight_standard_basis(
    ring: &Arc<WeylRing>,
    rank: usize,
    gens: &[Vec<WeylElement>],
    wv: &WeightVector,
    shifts: &[i64],
) -> Vec<Vec<WeylElement>> {
    let hring = ring.homogenized();
    let ord = weight_order(&hring, wv, shifts).with_position(Position::Top);
    let dshift = vec![0; rank];
    let hg: Vec<Vec<WeylElement>> = gens.iter().map(|g| homogenize_vec(g, &hring, &dshift)).collect();
    let hb = buchberger(&hring, rank, &hg, &ord);
    hb.elements().iter().map(|v| dehomogenize_vec(v, ring)).collect()
}

pub fn initial_ideal(ideal: &ModulePresentation, wv: &WeightVector) -> Vec<Vec<WeylElement>> {
    initial_module(&ideal.ring, ideal.rank, &ideal.relations, wv, &ideal.shifts)
}

/// Reduced degrevlex Gröbner basis.
pub fn groebner_default(m: &ModulePresentation) -> GroebnerBasis {
    buchberger(&m.ring, m.rank, &m.relations, &default_order(&m.ring))
}

/// Is the set of monomials `e` (full key length) small enough for the kernel?
pub fn fits_kernel(ring: &WeylRing) -> bool {
    ring.key_len() < MAXV
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ideal_and_normal_forms() {
        let r = WeylRing::new(&["x"]);
        let x = WeylElement::x(&r, 0);
        let d = WeylElement::d(&r, 0);
        let gb = buchberger(&r, 1, &[vec![x.clone()], vec![d.clone()]], &default_order(&r));
        assert!(gb.is_unit());
        assert!(gb.contains(&[WeylElement::one(&r)]));
        let gd = buchberger(&r, 1, &[vec![d.clone()]], &default_order(&r));
        assert_eq!(gd.normal_form(&[x.clone()]), vec![x.clone()]);
        assert!(gd.normal_form(&[d.scale(&Rational::new(3, 7))])[0].is_zero());
    }

    #[test]
    fn normal_form_keeps_scale() {
        let r = WeylRing::new(&["x"]);
        let x = WeylElement::x(&r, 0);
        let d = WeylElement::d(&r, 0);
        let gd = buchberger(&r, 1, &[vec![d.scale(&Rational::from(2))]], &default_order(&r));
        let v = x.mul(&d).add(&x.scale(&Rational::new(1, 3)));
        assert_eq!(gd.normal_form(&[v]), vec![x.scale(&Rational::new(1, 3))]);
    }
}
