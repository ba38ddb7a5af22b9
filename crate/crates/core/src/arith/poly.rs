//! Sparse commutative multivariate polynomials over Q.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::rational::Rational;

/// Exponent vector, one entry per ring variable.
pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Arc<PolyRing> {
        Arc::new(PolyRing { vars: vars.iter().map(|s| s.as_ref().to_string()).collect() })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A polynomial in `ring`. Terms are keyed by exponent vector; the
/// lexicographically largest key is the leading term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Exponent, Rational>,
}

impl CommPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> CommPoly {
        CommPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> CommPoly {
        let mut p = CommPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(vec![0; ring.nvars()], c);
        }
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> CommPoly {
        CommPoly::constant(ring, Rational::one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> CommPoly {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        CommPoly::monomial(ring, e, Rational::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, e: Exponent, c: Rational) -> CommPoly {
        assert_eq!(e.len(), ring.nvars());
        let mut p = CommPoly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(ring: &Arc<PolyRing>, it: impl IntoIterator<Item = (Exponent, Rational)>) -> CommPoly {
        let mut p = CommPoly::zero(ring);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn add_term(&mut self, e: Exponent, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn add(&self, o: &CommPoly) -> CommPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &CommPoly) -> CommPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), &-c);
        }
        r
    }

    pub fn neg(&self) -> CommPoly {
        self.scale(&Rational::from(-1))
    }

    pub fn scale(&self, k: &Rational) -> CommPoly {
        if k.is_zero() {
            return CommPoly::zero(&self.ring);
        }
        CommPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, o: &CommPoly) -> CommPoly {
        let mut r = CommPoly::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, &(c1 * c2));
            }
        }
        r
    }

    pub fn mul_monomial(&self, e: &[u32], c: &Rational) -> CommPoly {
        let mut r = CommPoly::zero(&self.ring);
        for (e1, c1) in &self.terms {
            let ee: Exponent = e1.iter().zip(e).map(|(a, b)| a + b).collect();
            r.add_term(ee, &(c1 * c));
        }
        r
    }

    pub fn pow(&self, k: u32) -> CommPoly {
        let mut r = CommPoly::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                r = r.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    pub fn derivative(&self, i: usize) -> CommPoly {
        let mut r = CommPoly::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ee = e.clone();
                ee[i] -= 1;
                r.add_term(ee, &(c * &Rational::from(e[i] as i64)));
            }
        }
        r
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &point[i].pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitute `val` for variable `i`.
    pub fn substitute(&self, i: usize, val: &CommPoly) -> CommPoly {
        let mut r = CommPoly::zero(&self.ring);
        let maxd = self.degree_in(i);
        let mut powers = vec![CommPoly::one(&self.ring)];
        for k in 1..=maxd {
            let next = powers[(k - 1) as usize].mul(val);
            powers.push(next);
        }
        for (e, c) in &self.terms {
            let mut ee = e.clone();
            let k = ee[i];
            ee[i] = 0;
            let t = powers[k as usize].mul_monomial(&ee, c);
            r = r.add(&t);
        }
        r
    }

    /// Divide every coefficient by the leading one.
    pub fn monic(&self) -> CommPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &CommPoly) -> Option<CommPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = CommPoly::zero(&self.ring);
        while let Some((e, c)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponent = e.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = &c / &dc;
            r = r.sub(&d.mul_monomial(&qe, &qc));
            q.add_term(qe, &qc);
        }
        Some(q)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    /// Coefficients with respect to variable `i`, lowest power first.
    pub fn coefficients_in(&self, i: usize) -> Vec<CommPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![CommPoly::zero(&self.ring); d + 1];
        for (e, c) in &self.terms {
            let mut ee = e.clone();
            let k = ee[i] as usize;
            ee[i] = 0;
            out[k].add_term(ee, c);
        }
        out
    }

    /// Re-embed into another ring by variable name.
    pub fn map_ring(&self, target: &Arc<PolyRing>) -> Option<CommPoly> {
        let idx: Option<Vec<usize>> = self.ring.vars.iter().map(|v| target.index_of(v)).collect();
        let idx = idx?;
        let mut r = CommPoly::zero(target);
        for (e, c) in &self.terms {
            let mut ee = vec![0; target.nvars()];
            for (i, &k) in e.iter().enumerate() {
                ee[idx[i]] += k;
            }
            r.add_term(ee, c);
        }
        Some(r)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = None;
        for e in self.terms.keys() {
            let s: u32 = e.iter().sum();
            match d {
                None => d = Some(s),
                Some(v) if v != s => return false,
                _ => {}
            }
        }
        true
    }
}

pub(crate) fn fmt_monomial(names: &[String], e: &[u32], out: &mut String) {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&names[i]);
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

/// Shared renderer for `coefficient * monomial` sums in descending order.
pub(crate) fn fmt_sum<'a>(
    terms: impl Iterator<Item = (String, &'a Rational)>,
    out: &mut String,
) {
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        first = false;
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&a.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    if first {
        out.push('0');
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        // Graded display: total degree descending, then lex descending.
        let mut terms: Vec<(&Exponent, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        fmt_sum(
            terms.into_iter().map(|(e, c)| {
                let mut m = String::new();
                fmt_monomial(&self.ring.vars, e, &mut m);
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

    fn xy() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y"])
    }

    #[test]
    fn arithmetic_and_display() {
        let r = xy();
        let x = CommPoly::var(&r, 0);
        let y = CommPoly::var(&r, 1);
        let p = x.sub(&y).mul(&x.add(&y));
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.derivative(0).to_string(), "2*x");
        let q = p.div_exact(&x.sub(&y)).unwrap();
        assert_eq!(q, x.add(&y));
        assert!(p.div_exact(&x).is_none());
    }

    #[test]
    fn substitution() {
        let r = xy();
        let x = CommPoly::var(&r, 0);
        let y = CommPoly::var(&r, 1);
        let p = x.pow(2).add(&y);
        let s = p.substitute(0, &y.add(&CommPoly::one(&r)));
        assert_eq!(s.to_string(), "y^2 + 3*y + 1");
    }
}
