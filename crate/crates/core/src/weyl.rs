//! The Weyl algebra D_n and its homogenization D_n^(h).
//!
//! Elements are stored in normal order: the key `e` of a term is the
//! exponent vector `(α, β[, k])` of `x^α ∂^β h^k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::poly::{fmt_monomial, fmt_sum};
use crate::arith::{CommPoly, PolyRing, Rational, RationalFunction};
use crate::error::{Error, Result};

pub const H_NAME: &str = "h";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylRing {
    xs: Vec<String>,
    ds: Vec<String>,
    homogenized: bool,
    xring: Arc<PolyRing>,
}

impl WeylRing {
    /// `D_n` on the given position variables, derivations named `d<x>`.
    pub fn new<S: AsRef<str>>(xs: &[S]) -> Arc<WeylRing> {
        let ds: Vec<String> = xs.iter().map(|x| format!("d{}", x.as_ref())).collect();
        WeylRing::with_names(xs, &ds, false).expect("generated names are distinct")
    }

    pub fn with_names<S: AsRef<str>, T: AsRef<str>>(
        xs: &[S],
        ds: &[T],
        homogenized: bool,
    ) -> Result<Arc<WeylRing>> {
        let xs: Vec<String> = xs.iter().map(|s| s.as_ref().to_string()).collect();
        let ds: Vec<String> = ds.iter().map(|s| s.as_ref().to_string()).collect();
        if xs.len() != ds.len() {
            return Err(Error::Invalid("variable and derivation counts differ".into()));
        }
        let mut all: Vec<&String> = xs.iter().chain(ds.iter()).collect();
        if homogenized {
            if all.iter().any(|s| *s == H_NAME) {
                return Err(Error::Invalid("`h` is reserved in homogenized rings".into()));
            }
        }
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("variable names must be distinct".into()));
        }
        let xring = PolyRing::new(&xs);
        Ok(Arc::new(WeylRing { xs, ds, homogenized, xring }))
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn is_homogenized(&self) -> bool {
        self.homogenized
    }

    /// Length of an exponent key.
    pub fn key_len(&self) -> usize {
        2 * self.n() + usize::from(self.homogenized)
    }

    pub fn x_names(&self) -> &[String] {
        &self.xs
    }

    pub fn d_names(&self) -> &[String] {
        &self.ds
    }

    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = self.xs.iter().chain(self.ds.iter()).cloned().collect();
        if self.homogenized {
            v.push(H_NAME.into());
        }
        v
    }

    /// `k[x]` on the same position variables.
    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.xring
    }

    pub fn homogenized(&self) -> Arc<WeylRing> {
        WeylRing::with_names(&self.xs, &self.ds, true).expect("valid names")
    }

    pub fn plain(&self) -> Arc<WeylRing> {
        WeylRing::with_names(&self.xs, &self.ds, false).expect("valid names")
    }

    /// Same ring with every name suffixed, for building tensor products.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Arc<WeylRing> {
        let xs: Vec<String> = self.xs.iter().map(|s| f(s)).collect();
        let ds: Vec<String> = self.ds.iter().map(|s| f(s)).collect();
        WeylRing::with_names(&xs, &ds, self.homogenized).expect("renaming keeps names distinct")
    }
}

/// Degree-reverse-lexicographic key on `(α, β[, k])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WKey(pub Vec<u32>);

impl WKey {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for WKey {
    fn cmp(&self, o: &WKey) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&o.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for WKey {
    fn partial_cmp(&self, o: &WKey) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    ring: Arc<WeylRing>,
    terms: BTreeMap<WKey, Rational>,
}

/// Integer weights `(u, v)` on `(x, ∂)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
}

impl WeightVector {
    pub fn new(u: Vec<i64>, v: Vec<i64>) -> Result<WeightVector> {
        if u.len() != v.len() {
            return Err(Error::Invalid("weight halves differ in length".into()));
        }
        if u.iter().zip(&v).any(|(a, b)| a + b < 0) {
            return Err(Error::Invalid("weight requires u_i + v_i >= 0".into()));
        }
        Ok(WeightVector { u, v })
    }

    /// `(−w, w)`.
    pub fn neg_pos(w: &[i64]) -> WeightVector {
        WeightVector { u: w.iter().map(|a| -a).collect(), v: w.to_vec() }
    }

    /// `(w, −w)`.
    pub fn pos_neg(w: &[i64]) -> WeightVector {
        WeightVector { u: w.to_vec(), v: w.iter().map(|a| -a).collect() }
    }

    /// `(0, e)`.
    pub fn zero_e(n: usize) -> WeightVector {
        WeightVector { u: vec![0; n], v: vec![1; n] }
    }

    pub fn weight(&self, e: &[u32]) -> i64 {
        let n = self.u.len();
        (0..n).map(|i| self.u[i] * e[i] as i64 + self.v[i] * e[n + i] as i64).sum()
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = &r * &Rational::new(n - i, i + 1);
    }
    r
}

fn factorial(k: u32) -> Rational {
    let mut r = Rational::one();
    for i in 2..=k {
        r = &r * &Rational::from(i as i64);
    }
    r
}

/// Normally ordered expansion of `x^a ∂^b · x^c ∂^d`, calling `emit` per term.
pub(crate) fn leibniz(
    n: usize,
    homog: bool,
    a: &[u32],
    b: &[u32],
    emit: &mut dyn FnMut(Vec<u32>, Rational),
) {
    // a, b have the full key layout; `b` is the right factor.
    let kmax: Vec<u32> = (0..n).map(|i| a[n + i].min(b[i])).collect();
    let mut kappa = vec![0u32; n];
    loop {
        let mut c = Rational::one();
        let mut e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
        let mut tot = 0;
        for i in 0..n {
            let k = kappa[i];
            if k > 0 {
                c = &c * &(&(&binomial(a[n + i], k) * &binomial(b[i], k)) * &factorial(k));
                e[i] -= k;
                e[n + i] -= k;
                tot += k;
            }
        }
        if homog {
            e[2 * n] += 2 * tot;
        }
        emit(e, c);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if kappa[i] < kmax[i] {
                kappa[i] += 1;
                break;
            }
            kappa[i] = 0;
            i += 1;
        }
    }
}

impl WeylElement {
    pub fn zero(ring: &Arc<WeylRing>) -> WeylElement {
        WeylElement { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<WeylRing>, c: Rational) -> WeylElement {
        WeylElement::monomial(ring, vec![0; ring.key_len()], c)
    }

    pub fn one(ring: &Arc<WeylRing>) -> WeylElement {
        WeylElement::constant(ring, Rational::one())
    }

    pub fn monomial(ring: &Arc<WeylRing>, e: Vec<u32>, c: Rational) -> WeylElement {
        assert_eq!(e.len(), ring.key_len());
        let mut w = WeylElement::zero(ring);
        w.add_term(e, &c);
        w
    }

    pub fn x(ring: &Arc<WeylRing>, i: usize) -> WeylElement {
        let mut e = vec![0; ring.key_len()];
        e[i] = 1;
        WeylElement::monomial(ring, e, Rational::one())
    }

    pub fn d(ring: &Arc<WeylRing>, i: usize) -> WeylElement {
        let mut e = vec![0; ring.key_len()];
        e[ring.n() + i] = 1;
        WeylElement::monomial(ring, e, Rational::one())
    }

    pub fn h(ring: &Arc<WeylRing>) -> WeylElement {
        assert!(ring.is_homogenized());
        let mut e = vec![0; ring.key_len()];
        e[2 * ring.n()] = 1;
        WeylElement::monomial(ring, e, Rational::one())
    }

    /// Euler operator `θ_i = x_i ∂_i`.
    pub fn theta(ring: &Arc<WeylRing>, i: usize) -> WeylElement {
        let mut e = vec![0; ring.key_len()];
        e[i] = 1;
        e[ring.n() + i] = 1;
        WeylElement::monomial(ring, e, Rational::one())
    }

    pub fn from_poly(ring: &Arc<WeylRing>, p: &CommPoly) -> WeylElement {
        let mut w = WeylElement::zero(ring);
        for (e, c) in p.terms() {
            let mut k = vec![0; ring.key_len()];
            k[..ring.n()].copy_from_slice(e);
            w.add_term(k, c);
        }
        w
    }

    pub fn from_terms(ring: &Arc<WeylRing>, it: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> WeylElement {
        let mut w = WeylElement::zero(ring);
        for (e, c) in it {
            w.add_term(e, &c);
        }
        w
    }

    pub fn ring(&self) -> &Arc<WeylRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degrevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(k, c)| (k.0.as_slice(), c))
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(&WKey(e.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let k = WKey(e);
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    fn check(&self, o: &WeylElement) {
        assert!(Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring, "ring mismatch");
    }

    pub fn try_mul(&self, o: &WeylElement) -> Result<WeylElement> {
        if !(Arc::ptr_eq(&self.ring, &o.ring) || self.ring == o.ring) {
            return Err(Error::RingMismatch("factors live in different Weyl algebras".into()));
        }
        Ok(self.mul(o))
    }

    pub fn add(&self, o: &WeylElement) -> WeylElement {
        self.check(o);
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.0.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &WeylElement) -> WeylElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> WeylElement {
        self.scale(&Rational::from(-1))
    }

    pub fn scale(&self, k: &Rational) -> WeylElement {
        if k.is_zero() {
            return WeylElement::zero(&self.ring);
        }
        WeylElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Normally ordered product `self · o`.
    pub fn mul(&self, o: &WeylElement) -> WeylElement {
        self.check(o);
        let n = self.ring.n();
        let homog = self.ring.is_homogenized();
        let mut r = WeylElement::zero(&self.ring);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let c12 = c1 * c2;
                leibniz(n, homog, &k1.0, &k2.0, &mut |e, c| r.add_term(e, &(&c * &c12)));
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> WeylElement {
        let mut r = WeylElement::one(&self.ring);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn commutator(&self, o: &WeylElement) -> WeylElement {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.0.iter().all(|&v| v == 0))
    }

    /// Total degree `|α| + |β| (+ k)`, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|k| k.degree())
    }

    /// Highest derivative order `|β|`.
    pub fn order(&self) -> Option<u32> {
        let n = self.ring.n();
        self.terms.keys().map(|k| k.0[n..2 * n].iter().sum()).max()
    }

    /// Coefficients in `k[x]` of each `∂^β`, keyed by `β`.
    pub fn d_coefficients(&self) -> BTreeMap<Vec<u32>, CommPoly> {
        assert!(!self.ring.is_homogenized());
        let n = self.ring.n();
        let mut out: BTreeMap<Vec<u32>, CommPoly> = BTreeMap::new();
        for (k, c) in &self.terms {
            let beta = k.0[n..].to_vec();
            out.entry(beta)
                .or_insert_with(|| CommPoly::zero(self.ring.poly_ring()))
                .add_term(k.0[..n].to_vec(), c);
        }
        out
    }

    /// Rebuild from `Σ p_β(x) ∂^β`.
    pub fn from_d_coefficients(ring: &Arc<WeylRing>, parts: &BTreeMap<Vec<u32>, CommPoly>) -> WeylElement {
        let n = ring.n();
        let mut w = WeylElement::zero(ring);
        for (beta, p) in parts {
            for (a, c) in p.terms() {
                let mut e = a.clone();
                e.extend_from_slice(&beta[..n]);
                w.add_term(e, c);
            }
        }
        w
    }

    /// Left multiplication by a polynomial in `x`.
    pub fn mul_poly_left(&self, p: &CommPoly) -> WeylElement {
        WeylElement::from_poly(&self.ring, p).mul(self)
    }

    /// The adjoint anti-automorphism `x^α ∂^β ↦ (−∂)^β x^α`.
    pub fn adjoint(&self) -> WeylElement {
        assert!(!self.ring.is_homogenized(), "adjoint is defined on D_n");
        let n = self.ring.n();
        let mut r = WeylElement::zero(&self.ring);
        for (k, c) in &self.terms {
            let mut left = vec![0; 2 * n];
            let mut right = vec![0; 2 * n];
            left[n..].copy_from_slice(&k.0[n..]);
            right[..n].copy_from_slice(&k.0[..n]);
            let sign: u32 = k.0[n..].iter().sum();
            let c = if sign % 2 == 1 { -c } else { c.clone() };
            leibniz(n, false, &left, &right, &mut |e, m| r.add_term(e, &(&m * &c)));
        }
        r
    }

    /// Automorphism `x_i ↦ ∂_i`, `∂_i ↦ −x_i`.
    pub fn fourier(&self) -> WeylElement {
        assert!(!self.ring.is_homogenized(), "fourier is defined on D_n");
        let n = self.ring.n();
        let mut r = WeylElement::zero(&self.ring);
        for (k, c) in &self.terms {
            // x^α ∂^β ↦ ∂^α (−x)^β
            let mut left = vec![0; 2 * n];
            let mut right = vec![0; 2 * n];
            left[n..].copy_from_slice(&k.0[..n]);
            right[..n].copy_from_slice(&k.0[n..]);
            let sign: u32 = k.0[n..].iter().sum();
            let c = if sign % 2 == 1 { -c } else { c.clone() };
            leibniz(n, false, &left, &right, &mut |e, m| r.add_term(e, &(&m * &c)));
        }
        r
    }

    /// Algebra map sending `x_i ↦ xs[i]` and `∂_i ↦ ds[i]`.
    pub fn substitute(&self, target: &Arc<WeylRing>, xs: &[WeylElement], ds: &[WeylElement]) -> WeylElement {
        let n = self.ring.n();
        let mut cache: BTreeMap<(usize, u32), WeylElement> = BTreeMap::new();
        let mut power = |slot: usize, k: u32| -> WeylElement {
            cache
                .entry((slot, k))
                .or_insert_with(|| {
                    let base = if slot < n { &xs[slot] } else { &ds[slot - n] };
                    base.pow(k)
                })
                .clone()
        };
        let mut r = WeylElement::zero(target);
        for (k, c) in &self.terms {
            let mut t = WeylElement::constant(target, c.clone());
            for slot in 0..2 * n {
                if k.0[slot] > 0 {
                    t = t.mul(&power(slot, k.0[slot]));
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Coordinate change on `D_2n` with variables `(x, y; ∂, δ)`:
    /// `x ↦ ½x − δ`, `y ↦ −½x − δ`, `∂ ↦ ½y + ∂`, `δ ↦ ½y − ∂`.
    pub fn eta_transform(&self) -> Result<WeylElement> {
        let ring = &self.ring;
        if ring.is_homogenized() || ring.n() % 2 != 0 {
            return Err(Error::Invalid("eta_transform needs D_2n with paired variables".into()));
        }
        let m = ring.n() / 2;
        let half = Rational::new(1, 2);
        let x = |i| WeylElement::x(ring, i);
        let d = |i| WeylElement::d(ring, i);
        let mut xs = Vec::new();
        let mut ds = Vec::new();
        for i in 0..m {
            xs.push(x(i).scale(&half).sub(&d(m + i)));
            ds.push(x(m + i).scale(&half).add(&d(i)));
        }
        for i in 0..m {
            xs.push(x(i).scale(&half).neg().sub(&d(m + i)));
            ds.push(x(m + i).scale(&half).sub(&d(i)));
        }
        Ok(self.substitute(ring, &xs, &ds))
    }

    /// Terms of maximal `(u, v)`-weight.
    pub fn initial_form(&self, wv: &WeightVector) -> WeylElement {
        let best = self.terms.keys().map(|k| wv.weight(&k.0)).max();
        let Some(best) = best else { return self.clone() };
        WeylElement {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| wv.weight(&k.0) == best)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Maximal weight of a term; `None` for zero.
    pub fn max_weight(&self, wv: &WeightVector) -> Option<i64> {
        self.terms.keys().map(|k| wv.weight(&k.0)).max()
    }

    /// Pad every term with `h` to total degree `max(deg, target)`.
    pub fn homogenize_to(&self, hring: &Arc<WeylRing>, target: u32) -> WeylElement {
        assert!(hring.is_homogenized() && hring.n() == self.ring.n());
        let d = self.degree().unwrap_or(0).max(target);
        let mut r = WeylElement::zero(hring);
        for (k, c) in &self.terms {
            let mut e = k.0.clone();
            if self.ring.is_homogenized() {
                let last = e.len() - 1;
                e[last] += d - k.degree();
            } else {
                e.push(d - k.degree());
            }
            r.add_term(e, c);
        }
        r
    }

    pub fn homogenize(&self, hring: &Arc<WeylRing>) -> WeylElement {
        self.homogenize_to(hring, 0)
    }

    /// Set `h = 1`.
    pub fn dehomogenize(&self, plain: &Arc<WeylRing>) -> WeylElement {
        assert!(self.ring.is_homogenized() && !plain.is_homogenized());
        let mut r = WeylElement::zero(plain);
        for (k, c) in &self.terms {
            let mut e = k.0.clone();
            e.pop();
            r.add_term(e, c);
        }
        r
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|k| k.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Re-embed into a ring with the same variable count.
    pub fn with_ring(&self, ring: &Arc<WeylRing>) -> WeylElement {
        assert_eq!(ring.key_len(), self.ring.key_len());
        WeylElement { ring: ring.clone(), terms: self.terms.clone() }
    }

    /// Embed into a larger ring, mapping variable `i` to `map[i]`.
    pub fn embed(&self, target: &Arc<WeylRing>, map: &[usize]) -> WeylElement {
        assert_eq!(map.len(), self.ring.n());
        let (n, tn) = (self.ring.n(), target.n());
        let mut r = WeylElement::zero(target);
        for (k, c) in &self.terms {
            let mut e = vec![0; target.key_len()];
            for i in 0..n {
                e[map[i]] = k.0[i];
                e[tn + map[i]] = k.0[n + i];
            }
            r.add_term(e, c);
        }
        r
    }

    /// Action on `k(x)`: `x_i` multiplies and `∂_i` differentiates.
    pub fn apply(&self, g: &RationalFunction) -> RationalFunction {
        assert!(!self.ring.is_homogenized());
        let n = self.ring.n();
        let pr = self.ring.poly_ring();
        let mut derivs: BTreeMap<Vec<u32>, RationalFunction> = BTreeMap::new();
        let mut acc = RationalFunction::from_poly(CommPoly::zero(pr));
        for (beta, coeff) in self.d_coefficients() {
            let dg = derivative_cached(&mut derivs, g, &beta, n);
            if !dg.is_zero() {
                acc = acc.add(&dg.mul_poly(&coeff));
            }
        }
        acc
    }

    /// Action on `k[x]`.
    pub fn apply_poly(&self, p: &CommPoly) -> CommPoly {
        assert!(!self.ring.is_homogenized());
        let n = self.ring.n();
        let mut out = CommPoly::zero(p.ring());
        for (k, c) in &self.terms {
            let mut q = p.clone();
            for i in 0..n {
                for _ in 0..k.0[n + i] {
                    q = q.derivative(i);
                }
            }
            if !q.is_zero() {
                out = out.add(&q.mul_monomial(&k.0[..n], c));
            }
        }
        out
    }
}

fn derivative_cached(
    cache: &mut BTreeMap<Vec<u32>, RationalFunction>,
    g: &RationalFunction,
    beta: &[u32],
    n: usize,
) -> RationalFunction {
    if let Some(v) = cache.get(beta) {
        return v.clone();
    }
    let r = match (0..n).find(|&i| beta[i] > 0) {
        None => g.clone(),
        Some(i) => {
            let mut b = beta.to_vec();
            b[i] -= 1;
            derivative_cached(cache, g, &b, n).derivative(i)
        }
    };
    cache.insert(beta.to_vec(), r.clone());
    r
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ring.names();
        let mut s = String::new();
        fmt_sum(
            self.terms.iter().rev().map(|(k, c)| {
                let mut m = String::new();
                fmt_monomial(&names, &k.0, &mut m);
                (m, c)
            }),
            &mut s,
        );
        write!(f, "{}", s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d1() -> Arc<WeylRing> {
        WeylRing::new(&["x"])
    }

    #[test]
    fn defining_relation() {
        let r = d1();
        let x = WeylElement::x(&r, 0);
        let d = WeylElement::d(&r, 0);
        assert_eq!(d.mul(&x).to_string(), "x*dx + 1");
        assert_eq!(d.pow(2).mul(&x.pow(2)).to_string(), "x^2*dx^2 + 4*x*dx + 2");
        let t = WeylElement::theta(&r, 0);
        assert_eq!(t.mul(&t).to_string(), "x^2*dx^2 + x*dx");
    }

    #[test]
    fn homogenized_relation() {
        let r = d1().homogenized();
        let x = WeylElement::x(&r, 0);
        let d = WeylElement::d(&r, 0);
        assert_eq!(d.mul(&x).to_string(), "x*dx + h^2");
    }

    #[test]
    fn adjoint_examples() {
        let r = WeylRing::new(&["x", "y"]);
        let t = WeylElement::theta(&r, 0);
        assert_eq!(t.adjoint().to_string(), "-x*dx - 1");
        assert_eq!(WeylElement::d(&r, 1).adjoint().to_string(), "-dy");
    }

    #[test]
    fn fourier_examples() {
        let r = d1();
        let x = WeylElement::x(&r, 0);
        let d = WeylElement::d(&r, 0);
        assert_eq!(x.fourier(), d);
        assert_eq!(d.mul(&x).fourier().to_string(), "-x*dx");
        let (fx, fd) = (x.fourier(), d.fourier());
        assert_eq!(fd.mul(&fx).sub(&fx.mul(&fd)), WeylElement::one(&r));
    }

    #[test]
    fn eta_examples() {
        let r = WeylRing::with_names(&["x", "y"], &["dx", "dy"], false).unwrap();
        let x = WeylElement::x(&r, 0);
        let y = WeylElement::x(&r, 1);
        let dx = WeylElement::d(&r, 0);
        let dy = WeylElement::d(&r, 1);
        assert_eq!(x.sub(&y).eta_transform().unwrap(), x);
        assert_eq!(dx.add(&dy).eta_transform().unwrap(), y);
        let (ex, ed) = (x.eta_transform().unwrap(), dx.eta_transform().unwrap());
        assert_eq!(ed.mul(&ex).sub(&ex.mul(&ed)), WeylElement::one(&r));
    }

    #[test]
    fn initial_forms() {
        let r = d1();
        let x = WeylElement::x(&r, 0);
        let d = WeylElement::d(&r, 0);
        let three = WeylElement::constant(&r, Rational::from(3));
        let w = WeightVector::pos_neg(&[1]);
        let a = x.mul(&d).sub(&three);
        assert_eq!(a.initial_form(&w), a);
        let b = d.sub(&WeylElement::one(&r));
        assert_eq!(b.initial_form(&w).to_string(), "-1");
    }

    #[test]
    fn homogenize_round_trip() {
        let r = d1();
        let hr = r.homogenized();
        let a = WeylElement::theta(&r, 0).sub(&WeylElement::constant(&r, Rational::from(3)));
        let ha = a.homogenize(&hr);
        assert_eq!(ha.to_string(), "x*dx - 3*h^2");
        assert_eq!(ha.dehomogenize(&r), a);
    }

    #[test]
    fn action_on_functions() {
        let r = d1();
        let pr = r.poly_ring().clone();
        let x = CommPoly::var(&pr, 0);
        let a = WeylElement::theta(&r, 0).sub(&WeylElement::constant(&r, Rational::from(3)));
        assert!(a.apply_poly(&x.pow(3)).is_zero());
        let inv = RationalFunction::new(CommPoly::one(&pr), x.clone());
        let got = WeylElement::d(&r, 0).apply(&inv);
        assert_eq!(got, RationalFunction::new(CommPoly::one(&pr).neg(), x.pow(2)));
    }
}
