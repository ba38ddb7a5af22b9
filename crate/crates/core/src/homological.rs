//! Holonomic duals, strict resolutions, integration and restriction to the
//! origin, and the Ext dimension tables built from them.
//!
//! Filtration convention: in `G_j = D^{r_j}[m⃗_j]` the term `x^α ∂^β e_a` has
//! order `w·α − w·β − m_a`. The Gröbner engine works with the opposite sign
//! (`weight + shift`), so engine shifts are `−m⃗`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::arith::{Rational, RatMatrix, SparseMatrix};
use crate::bfunction::{integration_bfunction, BFunctionResult};
use crate::error::{Error, Result};
use crate::gb::basis::{buchberger, default_order, engine_weight, homogenize_vec, initial_form_vec, vec_order, weight_standard_basis};
use crate::gb::{Position, TermOrder};
use crate::gb::ops::{free_resolution, is_zero_module, require_holonomic, lift, minimize_generators, prune_presentation, syzygies};
use crate::gb::ModulePresentation;
use crate::polysol::ansatz_exponents;
use crate::weyl::{WeightVector, WeylElement, WeylRing};


fn is_nonzero(v: &[WeylElement]) -> bool {
    v.iter().any(|w| !w.is_zero())
}

/// `τ(A) = [τ(a_ji)]`: a `p × q` matrix becomes `q × p`.
pub fn transpose_adjoint(rows: &[Vec<WeylElement>], cols: usize) -> Vec<Vec<WeylElement>> {
    (0..cols).map(|i| rows.iter().map(|r| r[i].adjoint()).collect()).collect()
}

/// Presentation of `K / (K ∩ span(im))` where `K ⊂ D^rank` is spanned by
/// `ker` and `im ⊂ K`.
fn subquotient(
    ring: &Arc<WeylRing>,
    rank: usize,
    ker: Vec<Vec<WeylElement>>,
    im: Vec<Vec<WeylElement>>,
) -> (usize, Vec<Vec<WeylElement>>) {
    let k = ker.len();
    let mut stack = ker;
    stack.extend(im);
    let rels = syzygies(ring, rank, &stack, &default_order(ring))
        .into_iter()
        .map(|v| v[..k].to_vec())
        .filter(|v| is_nonzero(v))
        .collect();
    (k, rels)
}

/// The holonomic dual `D(M)`, read off at position `n` of a free resolution.
pub fn holonomic_dual(m: &ModulePresentation) -> Result<ModulePresentation> {
    require_holonomic(m)?;
    let ring = &m.ring;
    let n = m.n();
    if is_zero_module(m) {
        return Ok(ModulePresentation::cyclic(ring, vec![WeylElement::one(ring)]));
    }
    let res = free_resolution(m, n + 1);
    if res.ranks.len() <= n {
        return Err(Error::Invalid("resolution ends before position n; the module is zero".into()));
    }
    let rn = res.ranks[n];
    let tq = transpose_adjoint(&res.maps[n - 1], res.ranks[n - 1]);
    let (rank, rels) = match res.maps.get(n) {
        Some(p) if !p.is_empty() => {
            let tp = transpose_adjoint(p, rn);
            let ker = minimize_generators(ring, rn, &syzygies(ring, p.len(), &tp, &default_order(ring)));
            subquotient(ring, rn, ker, tq)
        }
        _ => (rn, tq),
    };
    let (rank, rels) = prune_presentation(ring, rank, rels);
    ModulePresentation::new(ring, rank, rels)
}

/// A `(w,−w)`-strict free resolution `… → G_1 → G_0`.
#[derive(Clone, Debug)]
pub struct FilteredResolution {
    pub ring: Arc<WeylRing>,
    pub weight: Vec<i64>,
    /// `shifts[j] = m⃗_j`.
    pub shifts: Vec<Vec<i64>>,
    /// Rows of `G_{j+1} → G_j`.
    pub maps: Vec<Vec<Vec<WeylElement>>>,
}

impl FilteredResolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.shifts.iter().map(|s| s.len()).collect()
    }

    fn weights(&self) -> WeightVector {
        WeightVector::pos_neg(&self.weight)
    }

    /// Filtration order of a row of `G_j`: `max(w·α − w·β − m_a)`.
    pub fn order(&self, j: usize, v: &[WeylElement]) -> Option<i64> {
        let sh: Vec<i64> = self.shifts[j].iter().map(|m| -m).collect();
        vec_order(v, &self.weights(), &sh)
    }

    /// Initial form of a row of `G_j` under the shifted filtration.
    pub fn initial(&self, j: usize, v: &[WeylElement]) -> Vec<WeylElement> {
        let sh: Vec<i64> = self.shifts[j].iter().map(|m| -m).collect();
        initial_form_vec(v, &self.weights(), &sh)
    }
}

/// Drop elements of a standard basis that are not needed either for the
/// module or for its initial module. Both checks are required: the `(w,−w)`
/// filtration is not a well-order, so generating the initial module does not
/// imply generating the module.
fn minimize_strict(
    ring: &Arc<WeylRing>,
    rank: usize,
    std: Vec<Vec<WeylElement>>,
    wv: &WeightVector,
    sh: &[i64],
) -> Vec<Vec<WeylElement>> {
    let mut keep: Vec<Vec<WeylElement>> = std.into_iter().filter(|g| is_nonzero(g)).collect();
    let mut i = keep.len();
    while i > 0 {
        i -= 1;
        if keep.len() == 1 {
            break;
        }
        let others: Vec<Vec<WeylElement>> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        if spans_strictly(ring, rank, &others, &[&keep[i]], wv, sh) {
            keep.remove(i);
        }
    }
    keep
}

/// Do `gens` generate both `targets` and their initial forms? Beyond
/// `COMPACT_MAX_VARS` this may answer `false` for targets in the module.
fn spans_strictly(
    ring: &Arc<WeylRing>,
    rank: usize,
    gens: &[Vec<WeylElement>],
    targets: &[&Vec<WeylElement>],
    wv: &WeightVector,
    sh: &[i64],
) -> bool {
    let init: Vec<Vec<WeylElement>> = gens.iter().map(|g| initial_form_vec(g, wv, sh)).collect();
    let gin = buchberger(ring, rank, &init, &default_order(ring));
    if !targets.iter().all(|t| gin.contains(&initial_form_vec(t, wv, sh))) {
        return false;
    }
    // Membership of the homogenizations implies membership and only needs
    // the degree-by-degree completion in D^(h).
    let hring = ring.homogenized();
    let flat = vec![0; rank];
    let hg: Vec<Vec<WeylElement>> = gens.iter().map(|g| homogenize_vec(g, &hring, &flat)).collect();
    let gb = buchberger(&hring, rank, &hg, &default_order(&hring));
    if targets.iter().all(|t| gb.contains(&homogenize_vec(t, &hring, &flat))) {
        return true;
    }
    if ring.n() > COMPACT_MAX_VARS {
        return false;
    }
    let gb = buchberger(ring, rank, gens, &default_order(ring));
    targets.iter().all(|t| gb.contains(t))
}

/// Replace two elements of equal order by `g_i + c·g_j` for a small integer
/// `c` whenever the result is still a standard basis of the same module.
/// Subsets of a Gröbner basis are rarely minimal in this sense, because a left
/// ideal of `D` needs few generators. Returns the merged elements with their
/// coefficients over the input.
fn merge_strict(
    ring: &Arc<WeylRing>,
    rank: usize,
    input: &[Vec<WeylElement>],
    wv: &WeightVector,
    sh: &[i64],
) -> (Vec<Vec<WeylElement>>, Vec<Vec<Rational>>) {
    const MULTIPLIERS: [i64; 6] = [1, -1, 2, -2, 3, -3];
    let s = input.len();
    let mut keep = input.to_vec();
    let mut combos = identity_rows(s);
    'search: loop {
        let orders: Vec<Option<i64>> = keep.iter().map(|g| vec_order(g, wv, sh)).collect();
        for i in 0..keep.len() {
            for j in 0..keep.len() {
                if i == j || orders[i] != orders[j] {
                    continue;
                }
                for c in MULTIPLIERS {
                    let c = Rational::from(c);
                    let merged: Vec<WeylElement> =
                        keep[i].iter().zip(&keep[j]).map(|(a, b)| a.add(&b.scale(&c))).collect();
                    let mut cand: Vec<Vec<WeylElement>> =
                        keep.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, g)| g.clone()).collect();
                    cand.push(merged);
                    if spans_strictly(ring, rank, &cand, &[&keep[i], &keep[j]], wv, sh) {
                        let coef: Vec<Rational> = combos[i].iter().zip(&combos[j]).map(|(a, b)| a + &(b * &c)).collect();
                        combos = combos.into_iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, v)| v).collect();
                        combos.push(coef);
                        keep = cand;
                        continue 'search;
                    }
                }
            }
        }
        return (keep, combos);
    }
}

/// A strict standard basis `gens = combos · pre`, where `pre` is a subset of
/// a homogenized Gröbner basis. Syzygies are computed on `pre`, which is
/// cheap, and transported to `gens`.
struct StrictBasis {
    gens: Vec<Vec<WeylElement>>,
    pre: Vec<Vec<WeylElement>>,
    combos: Vec<Vec<Rational>>,
}

/// Up to this many variables strict bases are made as small as possible:
/// exact membership tests and merging. Beyond it both cost far more than
/// the smaller ranks save.
const COMPACT_MAX_VARS: usize = 2;

fn identity_rows(s: usize) -> Vec<Vec<Rational>> {
    (0..s).map(|i| (0..s).map(|j| Rational::from((i == j) as i64)).collect()).collect()
}

fn strict_basis(
    ring: &Arc<WeylRing>,
    rank: usize,
    gens: &[Vec<WeylElement>],
    wv: &WeightVector,
    sh: &[i64],
) -> StrictBasis {
    let std = weight_standard_basis(ring, rank, gens, wv, sh);
    let pre = minimize_strict(ring, rank, std, wv, sh);
    if ring.n() > COMPACT_MAX_VARS {
        let combos = identity_rows(pre.len());
        return StrictBasis { gens: pre.clone(), pre, combos };
    }
    let (gens, combos) = merge_strict(ring, rank, &pre, wv, sh);
    StrictBasis { gens, pre, combos }
}

fn shifted_order(ring: &Arc<WeylRing>, wv: &WeightVector, shifts: Vec<i64>) -> TermOrder {
    TermOrder::degrevlex(ring.key_len()).push_weight(&engine_weight(wv), shifts).with_position(Position::Top)
}

/// Syzygies of `b.gens`. With `pre = L·gens` and `gens = combos·pre`, they
/// are generated by `Syz(pre)·L` and the rows of `I − combos·L`.
fn strict_syzygies(
    ring: &Arc<WeylRing>,
    rank: usize,
    b: &StrictBasis,
    wv: &WeightVector,
    sh: &[i64],
) -> Vec<Vec<WeylElement>> {
    let pre_orders: Vec<i64> = b.pre.iter().map(|g| vec_order(g, wv, sh).unwrap()).collect();
    let mut both = sh.to_vec();
    both.extend_from_slice(&pre_orders);
    let syz = syzygies(ring, rank, &b.pre, &shifted_order(ring, wv, both));
    if b.gens.len() == b.pre.len() {
        // No merges happened, so `combos` is the identity.
        return syz;
    }
    let l = lift(ring, rank, &b.gens, &b.pre).expect("merged basis generates the module");
    let k = b.gens.len();
    let times_l = |y: &[WeylElement]| -> Vec<WeylElement> {
        (0..k)
            .map(|c| y.iter().zip(&l).fold(WeylElement::zero(ring), |acc, (yi, li)| acc.add(&yi.mul(&li[c]))))
            .collect()
    };
    let mut out: Vec<Vec<WeylElement>> = syz.iter().map(|y| times_l(y)).collect();
    for (r, coef) in b.combos.iter().enumerate() {
        let y: Vec<WeylElement> = coef.iter().map(|c| WeylElement::constant(ring, c.clone())).collect();
        let mut row: Vec<WeylElement> = times_l(&y).iter().map(|e| e.neg()).collect();
        row[r] = row[r].add(&WeylElement::one(ring));
        out.push(row);
    }
    out.retain(|v| is_nonzero(v));
    out
}

/// Strict resolution with at most `len` maps. Each `G_{j+1} → G_j` sends
/// `e_a` to a minimized standard basis element `g_a`, and
/// `m_{j+1,a} = −ord(g_a)`; the kernel is resolved the same way.
pub fn strict_resolution(module: &ModulePresentation, w: &[i64], len: usize) -> Result<FilteredResolution> {
    if w.len() != module.n() || w.iter().any(|&v| v <= 0) {
        return Err(Error::Invalid("strict resolution weight must be strictly positive".into()));
    }
    let ring = &module.ring;
    let wv = WeightVector::pos_neg(w);
    let mut sh = module.shifts.clone();
    let mut rank = module.rank;
    let mut cur = strict_basis(ring, rank, &module.relations, &wv, &sh);
    let mut shifts = vec![sh.iter().map(|v| -v).collect::<Vec<i64>>()];
    let mut maps = Vec::new();
    for _ in 0..len {
        if cur.gens.is_empty() {
            break;
        }
        let next: Vec<i64> = cur.gens.iter().map(|g| vec_order(g, &wv, &sh).unwrap()).collect();
        let syz = strict_syzygies(ring, rank, &cur, &wv, &sh);
        rank = cur.gens.len();
        maps.push(cur.gens);
        shifts.push(next.iter().map(|v| -v).collect());
        sh = next;
        cur = if syz.is_empty() {
            StrictBasis { gens: Vec::new(), pre: Vec::new(), combos: Vec::new() }
        } else {
            strict_basis(ring, rank, &syz, &wv, &sh)
        };
    }
    Ok(FilteredResolution { ring: ring.clone(), weight: w.to_vec(), shifts, maps })
}

/// `F^{hi}(Ω ⊗ G•) / F^{lo}(Ω ⊗ G•)` with `Ω = D/∂D`, on the monomial
/// basis `x^α e_a` with `lo < w·α − m_a ≤ hi`.
#[derive(Clone, Debug)]
pub struct TruncatedComplex {
    pub lo: i64,
    pub hi: i64,
    /// `dims[j] = dim C_j`.
    pub dims: Vec<usize>,
    /// `boundaries[j]: C_{j+1} → C_j`, acting on row vectors.
    pub boundaries: Vec<SparseMatrix>,
}

impl TruncatedComplex {
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(j, &d)| if j % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// `dim H_j = dim C_j − rank d_j − rank d_{j+1}` for `j < dims.len() − 1`;
    /// the last space only serves as the source of `d_top`.
    pub fn homology(&self, top: usize) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(|b| b.rank()).collect();
        (0..=top)
            .map(|j| {
                let dim = self.dims.get(j).copied().unwrap_or(0);
                let out = if j > 0 { ranks.get(j - 1).copied().unwrap_or(0) } else { 0 };
                let inc = ranks.get(j).copied().unwrap_or(0);
                dim - out - inc
            })
            .collect()
    }

    pub fn is_complex(&self) -> bool {
        self.boundaries.windows(2).all(|p| p[1].mul(&p[0]).is_zero())
    }
}

/// Integration of a module to the origin. `tor[j]` is the dimension of
/// `Tor_j^D(D/∂D, N)`, which sits in cohomological degree `j − n` of the
/// shifted integration complex.
#[derive(Clone, Debug)]
pub struct Integration {
    pub tor: Vec<usize>,
    pub bfunction: BFunctionResult,
    pub resolution: FilteredResolution,
    pub complex: Option<TruncatedComplex>,
}

/// Exponents `α ≥ 0` with `lo < w·α ≤ hi`.
fn window_exponents(w: &[i64], lo: i64, hi: i64) -> Vec<Vec<u32>> {
    let neg: Vec<i64> = w.iter().map(|v| -v).collect();
    ansatz_exponents(&neg, hi)
        .into_iter()
        .filter(|a| a.iter().zip(w).map(|(&e, &wi)| e as i64 * wi).sum::<i64>() > lo)
        .collect()
}

fn build_complex(res: &FilteredResolution, lo: i64, hi: i64, top: usize) -> TruncatedComplex {
    let w = &res.weight;
    let n = w.len();
    let levels = (top + 2).min(res.shifts.len());
    let mut bases: Vec<Vec<(usize, Vec<u32>)>> = Vec::new();
    let mut index: Vec<HashMap<(usize, Vec<u32>), usize>> = Vec::new();
    for j in 0..levels {
        let mut basis = Vec::new();
        for (a, &m) in res.shifts[j].iter().enumerate() {
            for e in window_exponents(w, lo + m, hi + m) {
                basis.push((a, e));
            }
        }
        index.push(basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect());
        bases.push(basis);
    }
    let mut boundaries = Vec::new();
    for j in 0..levels.saturating_sub(1) {
        let rows = bases[j + 1]
            .iter()
            .map(|(a, alpha)| {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for (b, entry) in res.maps[j][*a].iter().enumerate() {
                    // [x^α]·P = τ(P) • x^α in D/∂D ≅ k[x].
                    'terms: for (k, c) in entry.terms() {
                        let mut coeff = c.clone();
                        let mut gamma = Vec::with_capacity(n);
                        for i in 0..n {
                            let top = alpha[i] + k[i];
                            let d = k[n + i];
                            if d > top {
                                continue 'terms;
                            }
                            for t in 0..d {
                                coeff = &coeff * &Rational::from(-((top - t) as i64));
                            }
                            gamma.push(top - d);
                        }
                        if let Some(&col) = index[j].get(&(b, gamma)) {
                            *row.entry(col).or_insert_with(Rational::zero) += &coeff;
                        }
                    }
                }
                row
            })
            .collect();
        boundaries.push(SparseMatrix::from_maps(bases[j].len(), rows));
    }
    TruncatedComplex { lo, hi, dims: bases.iter().map(|b| b.len()).collect(), boundaries }
}

/// Dimensions of `Tor_j^D(D/∂D, N)` for `j = 0..=top`.
pub fn integration_upto(module: &ModulePresentation, w: &[i64], top: usize, cap: usize) -> Result<Integration> {
    let bfunction = integration_bfunction(module, w, cap)?;
    let resolution = strict_resolution(module, w, top + 1)?;
    let (Some(&k0), Some(&k1)) = (bfunction.integer_roots.first(), bfunction.integer_roots.last()) else {
        return Ok(Integration { tor: vec![0; top + 1], bfunction, resolution, complex: None });
    };
    let complex = build_complex(&resolution, -k1 - 1, -k0, top);
    let tor = complex.homology(top);
    Ok(Integration { tor, bfunction, resolution, complex: Some(complex) })
}

pub fn integration_to_origin(module: &ModulePresentation, w: &[i64], cap: usize) -> Result<Integration> {
    integration_upto(module, w, module.n(), cap)
}

/// The same presentation with every entry Fourier transformed.
pub fn fourier_module(m: &ModulePresentation) -> ModulePresentation {
    let rels = m.relations.iter().map(|r| r.iter().map(|w| w.fourier()).collect()).collect();
    ModulePresentation { relations: rels, ..m.clone() }
}

/// Derived restriction to the origin, `Tor_j^D(D/xD, N)` for `j = 0..=top`,
/// computed as the integration of the Fourier transform.
pub fn restriction_upto(module: &ModulePresentation, w: &[i64], top: usize, cap: usize) -> Result<Integration> {
    integration_upto(&fourier_module(module), w, top, cap)
}

pub fn restriction_to_origin(module: &ModulePresentation, w: &[i64], cap: usize) -> Result<Integration> {
    restriction_upto(module, w, module.n(), cap)
}

/// `dims[i] = dim Ext^i_D(M, N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub dims: Vec<usize>,
}

impl ExtTable {
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    fn from_tor(tor: &[usize], n: usize) -> ExtTable {
        ExtTable { dims: (0..=n).map(|i| tor[n - i]).collect() }
    }
}

impl fmt::Display for ExtTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().enumerate().map(|(i, d)| format!("{}: {}", i, d)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `Ext^i_D(M, k[x]) ≅ Tor_{n−i}(D/∂D, D(M))`.
pub fn poly_ext(m: &ModulePresentation, w: &[i64], cap: usize) -> Result<(ExtTable, Integration)> {
    let n = m.n();
    let dual = holonomic_dual(m)?;
    let int = integration_upto(&dual, w, n, cap)?;
    Ok((ExtTable::from_tor(&int.tor, n), int))
}

fn fresh(taken: &mut Vec<String>, base: &str) -> String {
    let mut cand = format!("{}2", base);
    while taken.contains(&cand) || taken.contains(&format!("d{}", cand)) {
        cand.push('_');
    }
    taken.push(cand.clone());
    cand
}

/// `A ⊠ B` over `D_{2n}`: the first block of variables acts on `A`, the
/// second on `B`, and component `(p, q)` has index `p·rank(B) + q`.
pub fn external_product(a: &ModulePresentation, b: &ModulePresentation) -> Result<ModulePresentation> {
    if a.ring.names() != b.ring.names() {
        return Err(Error::RingMismatch("external product needs modules over the same ring".into()));
    }
    let n = a.n();
    let mut taken = a.ring.names();
    let mut xs: Vec<String> = a.ring.x_names().to_vec();
    let mut ds: Vec<String> = a.ring.d_names().to_vec();
    for s in a.ring.x_names() {
        let t = fresh(&mut taken, s);
        ds.push(format!("d{}", t));
        xs.push(t);
    }
    let big = WeylRing::with_names(&xs, &ds, false)?;
    let first: Vec<usize> = (0..n).collect();
    let second: Vec<usize> = (n..2 * n).collect();
    let (ra, rb) = (a.rank, b.rank);
    let mut rels = Vec::new();
    for r in &a.relations {
        for q in 0..rb {
            let mut v = vec![WeylElement::zero(&big); ra * rb];
            for (p, e) in r.iter().enumerate() {
                v[p * rb + q] = e.embed(&big, &first);
            }
            rels.push(v);
        }
    }
    for s in &b.relations {
        for p in 0..ra {
            let mut v = vec![WeylElement::zero(&big); ra * rb];
            for (q, e) in s.iter().enumerate() {
                v[p * rb + q] = e.embed(&big, &second);
            }
            rels.push(v);
        }
    }
    ModulePresentation::new(&big, ra * rb, rels)
}

/// `Ext^i_D(M, N) ≅ Tor_{n−i}` of the restriction of `η(D(M) ⊠ N)` to the
/// origin of `k^{2n}`. `w` has length `2n`.
pub fn d_ext(m: &ModulePresentation, nmod: &ModulePresentation, w: &[i64], cap: usize) -> Result<(ExtTable, Integration)> {
    require_holonomic(nmod)?;
    let n = m.n();
    let dual = holonomic_dual(m)?;
    let prod = external_product(&dual, nmod)?;
    let rels: Result<Vec<Vec<WeylElement>>> =
        prod.relations.iter().map(|r| r.iter().map(|e| e.eta_transform()).collect()).collect();
    let eta = ModulePresentation { relations: rels?, ..prod };
    let int = restriction_upto(&eta, w, n, cap)?;
    Ok((ExtTable::from_tor(&int.tor, n), int))
}

/// `Ext^i_D(M, k[x][1/f])` through a caller-supplied presentation of the
/// localization; there is no localization algorithm here.
pub fn ratl_ext(
    m: &ModulePresentation,
    f: &crate::arith::CommPoly,
    localization: Option<&ModulePresentation>,
    w: &[i64],
    cap: usize,
) -> Result<(ExtTable, Integration)> {
    let Some(nmod) = localization else { return Err(Error::LocalizationRequired) };
    if f.is_zero() {
        return Err(Error::ZeroInput("localization at the zero polynomial"));
    }
    d_ext(m, nmod, w, cap)
}

/// Morphisms `M → N` for cyclic `N = D/J`, found by solving for images in
/// `B^i(N)` (classes of operators of total degree `≤ i`) for increasing `i`
/// until `d` independent ones appear. Each solution lists the images of the
/// generators of `M` as normal forms modulo `J`.
pub fn brute_force_solutions(
    m: &ModulePresentation,
    nmod: &ModulePresentation,
    d: usize,
    max_level: u32,
) -> Result<Vec<Vec<WeylElement>>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    if nmod.rank != 1 {
        return Err(Error::Invalid("brute-force search needs a cyclic target module".into()));
    }
    if m.ring.names() != nmod.ring.names() {
        return Err(Error::RingMismatch("modules over different rings".into()));
    }
    let ring = &nmod.ring;
    let kl = ring.key_len();
    let gb = buchberger(ring, 1, &nmod.relations, &default_order(ring));
    let lms: Vec<Vec<u32>> = gb.leading_monomials().into_iter().map(|(e, _)| e).collect();
    let ones = vec![-1i64; kl];
    for level in 0..=max_level {
        let std: Vec<Vec<u32>> = ansatz_exponents(&ones, level as i64)
            .into_iter()
            .filter(|e| !lms.iter().any(|l| l.iter().zip(e).all(|(a, b)| a <= b)))
            .collect();
        let unknowns: Vec<(usize, &Vec<u32>)> = (0..m.rank).flat_map(|j| std.iter().map(move |e| (j, e))).collect();
        let mut rows: BTreeMap<(usize, Vec<u32>), Vec<(usize, Rational)>> = BTreeMap::new();
        for (col, (j, e)) in unknowns.iter().enumerate() {
            let mono = WeylElement::monomial(ring, (*e).clone(), Rational::one());
            for (i, rel) in m.relations.iter().enumerate() {
                if rel[*j].is_zero() {
                    continue;
                }
                let nf = gb.normal_form(&[rel[*j].mul(&mono)]);
                for (k, c) in nf[0].terms() {
                    rows.entry((i, k.to_vec())).or_default().push((col, c.clone()));
                }
            }
        }
        let mut mat = RatMatrix::zeros(rows.len(), unknowns.len());
        for (r, entries) in rows.values().enumerate() {
            for (c, v) in entries {
                let cur = mat.get(r, *c).clone();
                mat.set(r, *c, &cur + v);
            }
        }
        let ns = mat.nullspace();
        if ns.len() > d {
            return Err(Error::TooManySolutions { found: ns.len(), expected: d });
        }
        if ns.len() == d {
            let basis = crate::arith::matrix::echelon_basis(&ns, unknowns.len());
            return Ok(basis
                .into_iter()
                .map(|v| {
                    let mut out = vec![WeylElement::zero(ring); m.rank];
                    for (c, (j, e)) in v.iter().zip(&unknowns) {
                        if !c.is_zero() {
                            out[*j].add_term((*e).clone(), c);
                        }
                    }
                    out
                })
                .collect());
        }
    }
    Err(Error::IterationCap(max_level as usize))
}
