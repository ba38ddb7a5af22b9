//! Syzygies, resolutions, dimension and rank, and commutative elimination.

use std::sync::Arc;

use super::basis::{algebra_of, buchberger, default_order, from_epoly_raw, groebner_default, to_epoly, GroebnerBasis, ModulePresentation};
use super::engine::{Algebra, Ctx, EPoly, Mono, Position, Tie, TermOrder};
use crate::arith::{CommPoly, Int, PolyRing, Rational};
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylRing};

/// Generators of the syzygies of `gens ⊂ D^rank`, computed by eliminating the
/// first `rank` components of `[g_i | e_i]`. `base` orders `D^rank`.
pub fn syzygies(ring: &Arc<WeylRing>, rank: usize, gens: &[Vec<WeylElement>], base: &TermOrder) -> Vec<Vec<WeylElement>> {
    let s = gens.len();
    let total = rank + s;
    let rows: Vec<Vec<WeylElement>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut r = g.clone();
            r.resize(total, WeylElement::zero(ring));
            r[rank + i] = WeylElement::one(ring);
            r
        })
        .collect();
    eliminate_components(ring, total, &rows, rank, base)
}

/// Generators of `U ∩ (0 ⊕ D^{total−drop})` for the submodule `U` spanned by
/// `rows`, restricted to the surviving components.
pub fn eliminate_components(
    ring: &Arc<WeylRing>,
    total: usize,
    rows: &[Vec<WeylElement>],
    drop: usize,
    base: &TermOrder,
) -> Vec<Vec<WeylElement>> {
    let mut shifts = vec![1i64; drop];
    shifts.extend(std::iter::repeat(0).take(total - drop));
    let ord = base.clone().prepend_weight(&[], shifts);
    let gb = buchberger(ring, total, rows, &ord);
    gb.elems
        .iter()
        .filter(|p| p.lm().comp as usize >= drop)
        .map(|p| {
            let v = from_epoly_raw(ring, total, p);
            debug_assert!(v[..drop].iter().all(|w| w.is_zero()));
            v[drop..].to_vec()
        })
        .collect()
}

/// Cofactors expressing each target as `Σ_i c_i·gens_i`, or `None` when some
/// target is outside the submodule. Runs a Gröbner basis computation that
/// carries cofactors but never forms the syzygy module.
pub fn lift(
    ring: &Arc<WeylRing>,
    rank: usize,
    gens: &[Vec<WeylElement>],
    targets: &[Vec<WeylElement>],
) -> Option<Vec<Vec<WeylElement>>> {
    let s = gens.len();
    let total = rank + s;
    let pad = |v: &Vec<WeylElement>, unit: Option<usize>| {
        let mut r = v.clone();
        r.resize(total, WeylElement::zero(ring));
        if let Some(i) = unit {
            r[rank + i] = WeylElement::one(ring);
        }
        r
    };
    let rows: Vec<Vec<WeylElement>> = gens.iter().enumerate().map(|(i, g)| pad(g, Some(i))).collect();
    let mut shifts = vec![1i64; rank];
    shifts.extend(std::iter::repeat(0).take(s));
    let ord = TermOrder::degrevlex(ring.key_len()).prepend_weight(&[], shifts);
    let mut ctx = Ctx::new(algebra_of(ring), ord);
    ctx.discard_from = Some(rank as u32);
    let input: Vec<EPoly> = rows.iter().map(|r| to_epoly(&ctx, r)).collect();
    let elems = ctx.groebner(&input);
    let gb = GroebnerBasis { ring: ring.clone(), rank: total, ctx, elems };
    targets
        .iter()
        .map(|t| {
            let nf = gb.normal_form(&pad(t, None));
            if nf[..rank].iter().any(|w| !w.is_zero()) {
                return None;
            }
            Some(nf[rank..].iter().map(|w| w.neg()).collect())
        })
        .collect()
}

/// Drop generators lying in the submodule spanned by the others. Higher
/// degree generators are tried first, earlier ones first among equals; the
/// surviving generators keep their input order.
pub fn minimize_generators(ring: &Arc<WeylRing>, rank: usize, gens: &[Vec<WeylElement>]) -> Vec<Vec<WeylElement>> {
    let mut keep: Vec<Option<&Vec<WeylElement>>> =
        gens.iter().map(|g| g.iter().any(|w| !w.is_zero()).then_some(g)).collect();
    let degree = |g: &Vec<WeylElement>| g.iter().filter_map(|w| w.degree()).max().unwrap_or(0);
    let mut tries: Vec<usize> = (0..gens.len()).filter(|&i| keep[i].is_some()).collect();
    tries.sort_by_key(|&i| std::cmp::Reverse(degree(&gens[i])));
    for i in tries {
        let others: Vec<Vec<WeylElement>> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).filter_map(|(_, g)| g.cloned()).collect();
        if others.is_empty() {
            break;
        }
        if buchberger(ring, rank, &others, &default_order(ring)).contains(&gens[i]) {
            keep[i] = None;
        }
    }
    keep.into_iter().flatten().cloned().collect()
}

/// A free resolution `… → D^{r_1} → D^{r_0} → M → 0`; `maps[k]` holds the
/// rows of the map `D^{r_{k+1}} → D^{r_k}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: Arc<WeylRing>,
    pub ranks: Vec<usize>,
    pub maps: Vec<Vec<Vec<WeylElement>>>,
}

/// Resolution of length at most `max_len`, with redundant generators removed
/// and unit entries pruned at each step.
pub fn free_resolution(m: &ModulePresentation, max_len: usize) -> FreeResolution {
    let ring = m.ring.clone();
    let mut ranks = vec![m.rank];
    let mut maps: Vec<Vec<Vec<WeylElement>>> = Vec::new();
    let mut cur = minimize_generators(&ring, m.rank, &m.relations);
    let mut rank = m.rank;
    for _ in 0..max_len {
        if cur.is_empty() {
            break;
        }
        let syz = minimize_generators(&ring, cur.len(), &syzygies(&ring, rank, &cur, &default_order(&ring)));
        let (rows, syz) = prune_units(cur, syz);
        ranks.push(rows.len());
        maps.push(rows.clone());
        rank = rows.len();
        cur = syz;
    }
    FreeResolution { ring, ranks, maps }
}

/// If a syzygy has a constant entry at `k`, relation `k` is redundant: drop
/// it and eliminate column `k` from the remaining syzygies.
fn prune_units(
    mut rows: Vec<Vec<WeylElement>>,
    mut syz: Vec<Vec<WeylElement>>,
) -> (Vec<Vec<WeylElement>>, Vec<Vec<WeylElement>>) {
    loop {
        let hit = syz.iter().enumerate().find_map(|(a, s)| {
            s.iter().position(|w| w.is_constant() && !w.is_zero()).map(|k| (a, k))
        });
        let Some((a, k)) = hit else { break };
        let pivot = syz.remove(a);
        let c = pivot[k].terms().next().unwrap().1.recip();
        // Relation k = −c Σ_{j≠k} pivot_j rows_j, so in every other syzygy
        // replace s_j by s_j − s_k c pivot_j.
        for s in syz.iter_mut() {
            let sk = s[k].scale(&c);
            if !sk.is_zero() {
                for j in 0..s.len() {
                    if j != k {
                        s[j] = s[j].sub(&sk.mul(&pivot[j]));
                    }
                }
            }
            s.remove(k);
        }
        rows.remove(k);
        syz.retain(|s| s.iter().any(|w| !w.is_zero()));
    }
    (rows, syz)
}

/// Simplify a presentation `D^rank / relations` by eliminating every
/// generator that some relation expresses through the others.
pub fn prune_presentation(
    ring: &Arc<WeylRing>,
    rank: usize,
    relations: Vec<Vec<WeylElement>>,
) -> (usize, Vec<Vec<WeylElement>>) {
    let slots: Vec<Vec<WeylElement>> = vec![Vec::new(); rank];
    let (slots, rels) = prune_units(slots, relations);
    let rank = slots.len();
    if rank == 0 {
        return (0, Vec::new());
    }
    (rank, minimize_generators(ring, rank, &rels))
}

/// Dimension of the characteristic variety: Krull dimension of the monomial
/// ideal of leading monomials under an order refining `(0, e)`.
pub fn char_dimension(m: &ModulePresentation) -> usize {
    let ring = if m.ring.is_homogenized() { m.ring.plain() } else { m.ring.clone() };
    let n = ring.n();
    let mut w = vec![0i64; n];
    w.extend(std::iter::repeat(1).take(n));
    let ord = default_order(&ring).push_weight(&w, vec![]);
    let gb = buchberger(&ring, m.rank, &m.relations, &ord);
    let lms = gb.leading_monomials();
    (0..m.rank)
        .map(|j| {
            let supports: Vec<u32> = lms
                .iter()
                .filter(|(_, c)| *c == j)
                .map(|(e, _)| e.iter().enumerate().filter(|(_, &k)| k > 0).fold(0u32, |acc, (i, _)| acc | (1 << i)))
                .collect();
            monomial_dimension(&supports, 2 * n)
        })
        .max()
        .unwrap_or(0)
}

/// Whether every basis vector lies in the relation module, i.e. `M = 0`.
pub fn is_zero_module(m: &ModulePresentation) -> bool {
    let lms = groebner_default(m).leading_monomials();
    (0..m.rank).all(|j| lms.iter().any(|(e, c)| *c == j && e.iter().all(|&k| k == 0)))
}

/// `M = 0` or `dim Ch(M) = n`.
pub fn require_holonomic(m: &ModulePresentation) -> Result<()> {
    let n = m.n();
    let dim = char_dimension(m);
    if dim != n && !is_zero_module(m) {
        return Err(Error::NotHolonomic { dim, n });
    }
    Ok(())
}

/// Largest set of variables containing no support of a generator.
pub fn monomial_dimension(supports: &[u32], nv: usize) -> usize {
    if supports.iter().any(|&s| s == 0) {
        return 0;
    }
    let mut best = 0;
    for set in 0u32..(1u32 << nv) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Gröbner basis under ∂ ≫ x (blockwise degrevlex); its ∂-leading
/// exponents generate the leading ideal over rational function coefficients.
pub fn rank_basis(m: &ModulePresentation) -> GroebnerBasis {
    let n = m.n();
    let ord = default_order(&m.ring)
        .with_blocks(vec![(Tie::DegRevLex, (n..2 * n).collect()), (Tie::DegRevLex, (0..n).collect())])
        .with_position(Position::Pot);
    buchberger(&m.ring, m.rank, &m.relations, &ord)
}

/// Holonomic rank, `None` when infinite.
pub fn holonomic_rank(m: &ModulePresentation) -> Option<usize> {
    let n = m.n();
    let gb = rank_basis(m);
    let lms = gb.leading_monomials();
    let mut total = 0;
    for j in 0..m.rank {
        let ds: Vec<Vec<u32>> =
            lms.iter().filter(|(_, c)| *c == j).map(|(e, _)| e[n..2 * n].to_vec()).collect();
        total += count_standard(&ds, n)?;
    }
    Some(total)
}

/// Number of exponents not divisible by any of `gens`, if finite.
pub fn count_standard(gens: &[Vec<u32>], n: usize) -> Option<usize> {
    if gens.iter().any(|g| g.iter().all(|&v| v == 0)) {
        return Some(0);
    }
    let mut bound = vec![0u32; n];
    for (i, b) in bound.iter_mut().enumerate() {
        *b = gens
            .iter()
            .filter(|g| g.iter().enumerate().all(|(k, &v)| k == i || v == 0))
            .map(|g| g[i])
            .min()?;
    }
    let mut count = 0;
    let mut e = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Some(count);
            }
            e[i] += 1;
            if e[i] < bound[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

fn comm_epoly(ctx: &Ctx, p: &CommPoly) -> EPoly {
    let den = crate::arith::rational::common_denominator(p.terms().values());
    let terms = p
        .terms()
        .iter()
        .map(|(e, c)| {
            let mut m = Mono::one(0);
            for (i, &k) in e.iter().enumerate() {
                m.e[i] = k as u16;
            }
            (m, Int::from_big(c.numer() * (&den / c.denom())))
        })
        .collect();
    ctx.from_terms(terms)
}

fn comm_poly(ring: &Arc<PolyRing>, p: &EPoly) -> CommPoly {
    let nv = ring.nvars();
    CommPoly::from_terms(
        ring,
        p.terms.iter().map(|(m, c)| (m.e[..nv].iter().map(|&v| v as u32).collect(), Rational::from_bigint(c.to_big()))),
    )
}

/// Reduced Gröbner basis of a polynomial ideal.
pub fn comm_groebner(ring: &Arc<PolyRing>, gens: &[CommPoly], ord: TermOrder) -> Vec<CommPoly> {
    let ctx = Ctx::new(Algebra::commutative(ring.nvars()), ord);
    let input: Vec<EPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| comm_epoly(&ctx, g)).collect();
    ctx.groebner(&input).iter().map(|p| comm_poly(ring, p)).collect()
}

/// Generators of `I ∩ k[vars ∖ elim]`.
pub fn eliminate(ring: &Arc<PolyRing>, gens: &[CommPoly], elim: &[usize]) -> Vec<CommPoly> {
    let nv = ring.nvars();
    let mut w = vec![0i64; nv];
    for &i in elim {
        w[i] = 1;
    }
    let ord = TermOrder::degrevlex(nv).push_weight(&w, vec![]);
    comm_groebner(ring, gens, ord)
        .into_iter()
        .filter(|g| elim.iter().all(|&i| g.degree_in(i) == 0))
        .collect()
}

/// Generators of `(I : g^∞) ∩ k[vars ∖ elim]`, via an auxiliary variable `z`
/// and the relation `1 − z g`.
pub fn saturate_eliminate(ring: &Arc<PolyRing>, gens: &[CommPoly], g: &CommPoly, elim: &[usize]) -> Vec<CommPoly> {
    let mut names = ring.vars().to_vec();
    let mut z = "z".to_string();
    while names.contains(&z) {
        z.push('_');
    }
    names.push(z);
    let big = PolyRing::new(&names);
    let zi = names.len() - 1;
    let lift = |p: &CommPoly| {
        CommPoly::from_terms(
            &big,
            p.terms().iter().map(|(e, c)| {
                let mut e = e.clone();
                e.push(0);
                (e, c.clone())
            }),
        )
    };
    let mut input: Vec<CommPoly> = gens.iter().map(lift).collect();
    input.push(CommPoly::one(&big).sub(&CommPoly::var(&big, zi).mul(&lift(g))));
    let mut e = elim.to_vec();
    e.push(zi);
    eliminate(&big, &input, &e)
        .into_iter()
        .map(|p| {
            CommPoly::from_terms(ring, p.terms().iter().map(|(e, c)| (e[..zi].to_vec(), c.clone())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_operator;

    fn cyclic(ring: &Arc<WeylRing>, gens: &[&str]) -> ModulePresentation {
        ModulePresentation::cyclic(ring, gens.iter().map(|g| parse_operator(g, ring).unwrap()).collect())
    }

    #[test]
    fn zero_module_is_holonomic() {
        let r = WeylRing::new(&["x", "y"]);
        assert!(require_holonomic(&cyclic(&r, &["x*dx - 1", "x*dx"])).is_ok());
        assert!(is_zero_module(&cyclic(&r, &["x*dx - 1", "x*dx"])));
        assert!(!is_zero_module(&cyclic(&r, &["dx", "dy"])));
        assert!(matches!(require_holonomic(&cyclic(&r, &["dx"])), Err(Error::NotHolonomic { dim: 3, n: 2 })));
    }

    #[test]
    fn rank_and_dimension_of_simple_systems() {
        let r = WeylRing::new(&["x", "y"]);
        let m = cyclic(&r, &["dx", "dy"]);
        assert_eq!(holonomic_rank(&m), Some(1));
        assert_eq!(char_dimension(&m), 2);
        let m = cyclic(&r, &["dx"]);
        assert_eq!(holonomic_rank(&m), None);
        assert_eq!(char_dimension(&m), 3);
        // x^2 y' with an extra relation: rank counts over k(x,y).
        let m = cyclic(&r, &["x*dx - 2", "y*dy^2 + dy"]);
        assert_eq!(holonomic_rank(&m), Some(2));
    }

    #[test]
    fn appell_rank_three_holonomic() {
        let f1 = crate::systems::appell_f1_int(2, -3, -2, 5);
        assert_eq!(holonomic_rank(&f1), Some(3));
        assert_eq!(char_dimension(&f1), 2);
    }

    #[test]
    fn syzygies_of_commuting_pair() {
        let r = WeylRing::new(&["x", "y"]);
        let dx = WeylElement::d(&r, 0);
        let dy = WeylElement::d(&r, 1);
        let syz = syzygies(&r, 1, &[vec![dx.clone()], vec![dy.clone()]], &default_order(&r));
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        assert!(s[0].mul(&dx).add(&s[1].mul(&dy)).is_zero());
    }

    #[test]
    fn lift_recovers_cofactors() {
        let r = WeylRing::new(&["x", "y"]);
        let gens = vec![vec![WeylElement::d(&r, 0)], vec![WeylElement::x(&r, 1)]];
        let t = WeylElement::x(&r, 0).mul(&WeylElement::d(&r, 0)).add(&WeylElement::d(&r, 1).mul(&WeylElement::x(&r, 1)));
        let c = lift(&r, 1, &gens, &[vec![t.clone()]]).unwrap();
        assert_eq!(c[0][0].mul(&gens[0][0]).add(&c[0][1].mul(&gens[1][0])), t);
        assert!(lift(&r, 1, &gens, &[vec![WeylElement::one(&r)]]).is_none());
    }

    #[test]
    fn resolution_prunes_redundant_relations() {
        let r = WeylRing::new(&["x"]);
        let m = cyclic(&r, &["dx", "x*dx", "dx^2"]);
        let res = free_resolution(&m, 3);
        assert_eq!(res.ranks, vec![1, 1]);
    }

    #[test]
    fn elimination_and_saturation() {
        let ring = PolyRing::new(&["t", "x", "y"]);
        let t = CommPoly::var(&ring, 0);
        let x = CommPoly::var(&ring, 1);
        let y = CommPoly::var(&ring, 2);
        let e = eliminate(&ring, &[x.sub(&t), y.sub(&t.mul(&t))], &[0]);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].monic(), y.sub(&x.mul(&x)).monic());
        // (x^2 y) : y^∞ ∩ k[x] contains x^2.
        let s = saturate_eliminate(&ring, &[x.mul(&x).mul(&y)], &y, &[0, 2]);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].monic(), x.mul(&x));
    }

    #[test]
    fn monomial_dimensions() {
        // (x1 x2) in 3 variables: dimension 2.
        assert_eq!(monomial_dimension(&[0b011], 3), 2);
        assert_eq!(monomial_dimension(&[0b001, 0b010], 3), 1);
        assert_eq!(count_standard(&[vec![2, 0], vec![0, 3]], 2), Some(6));
        assert_eq!(count_standard(&[vec![1, 1]], 2), None);
    }
}
