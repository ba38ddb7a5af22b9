//! Fraction-free Buchberger kernel for left submodules of free modules over
//! PBW algebras of Weyl type: `k[c…]⟨x…, ∂…⟩` optionally with a central
//! homogenizing variable `h` satisfying `∂_i x_i = x_i ∂_i + h²`.
//!
//! Variable layout: `x_0..x_{p-1}, ∂_0..∂_{p-1}, c_0..c_{q-1}[, h]`.

use std::cmp::Ordering;

use crate::arith::Int;

pub const MAXV: usize = 16;

pub type Exps = [u16; MAXV];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mono {
    pub e: Exps,
    pub comp: u32,
}

impl Mono {
    pub fn one(comp: u32) -> Mono {
        Mono { e: [0; MAXV], comp }
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().map(|&v| v as u32).sum()
    }

    pub fn divides(&self, o: &Mono) -> bool {
        self.comp == o.comp && self.e.iter().zip(&o.e).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, o: &Mono) -> Mono {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(&o.e) {
            *a = (*a).max(*b);
        }
        Mono { e, comp: self.comp }
    }

    /// `o − self` as an exponent vector; requires `self | o`.
    pub fn quotient(&self, o: &Mono) -> Exps {
        let mut e = o.e;
        for (a, b) in e.iter_mut().zip(&self.e) {
            *a -= *b;
        }
        e
    }

    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &v) in self.e.iter().enumerate() {
            if v > 0 {
                m |= 1 << i;
            }
            if v > 1 {
                m |= 1 << (i + MAXV);
            }
            if v > 3 {
                m |= 1 << (i + 2 * MAXV);
            }
        }
        m | (1u64 << (48 + (self.comp % 16)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub pairs: usize,
    pub central: usize,
    pub homog: bool,
}

impl Algebra {
    pub fn weyl(n: usize, homog: bool) -> Algebra {
        Algebra { pairs: n, central: 0, homog }
    }

    pub fn commutative(n: usize) -> Algebra {
        Algebra { pairs: 0, central: n, homog: false }
    }

    pub fn nvars(&self) -> usize {
        2 * self.pairs + self.central + usize::from(self.homog)
    }

    pub fn h_index(&self) -> Option<usize> {
        self.homog.then(|| 2 * self.pairs + self.central)
    }

    pub fn is_commutative(&self) -> bool {
        self.pairs == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tie {
    DegRevLex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    /// Component first; lower index is larger.
    Pot,
    /// Component last; lower index is larger.
    Top,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub w: [i64; MAXV],
    pub shifts: Vec<i64>,
}

impl Weight {
    pub fn eval(&self, m: &Mono) -> i64 {
        let mut s = self.shifts.get(m.comp as usize).copied().unwrap_or(0);
        for (a, &b) in self.w.iter().zip(&m.e) {
            if *a != 0 && b != 0 {
                s += a * b as i64;
            }
        }
        s
    }
}

/// Weights, then blockwise tie-breaks, with the component compared first
/// (`Pot`) or last (`Top`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub weights: Vec<Weight>,
    pub blocks: Vec<(Tie, Vec<usize>)>,
    pub pos: Position,
}

impl TermOrder {
    pub fn degrevlex(nv: usize) -> TermOrder {
        TermOrder { weights: vec![], blocks: vec![(Tie::DegRevLex, (0..nv).collect())], pos: Position::Top }
    }

    pub fn lex(nv: usize) -> TermOrder {
        TermOrder { weights: vec![], blocks: vec![(Tie::Lex, (0..nv).collect())], pos: Position::Top }
    }

    pub fn with_position(mut self, pos: Position) -> TermOrder {
        self.pos = pos;
        self
    }

    pub fn push_weight(mut self, w: &[i64], shifts: Vec<i64>) -> TermOrder {
        let mut a = [0i64; MAXV];
        a[..w.len()].copy_from_slice(w);
        self.weights.push(Weight { w: a, shifts });
        self
    }

    pub fn prepend_weight(mut self, w: &[i64], shifts: Vec<i64>) -> TermOrder {
        let mut a = [0i64; MAXV];
        a[..w.len()].copy_from_slice(w);
        self.weights.insert(0, Weight { w: a, shifts });
        self
    }

    pub fn with_blocks(mut self, blocks: Vec<(Tie, Vec<usize>)>) -> TermOrder {
        self.blocks = blocks;
        self
    }

    /// True if some weight is negative on a variable.
    pub fn has_negative_weight(&self) -> bool {
        self.weights.iter().any(|w| w.w.iter().any(|&v| v < 0))
    }

    #[inline]
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        if self.pos == Position::Pot && a.comp != b.comp {
            return b.comp.cmp(&a.comp);
        }
        for w in &self.weights {
            let o = w.eval(a).cmp(&w.eval(b));
            if o != Ordering::Equal {
                return o;
            }
        }
        for (tie, vars) in &self.blocks {
            let o = match tie {
                Tie::DegRevLex => {
                    let da: u32 = vars.iter().map(|&i| a.e[i] as u32).sum();
                    let db: u32 = vars.iter().map(|&i| b.e[i] as u32).sum();
                    da.cmp(&db).then_with(|| {
                        for &i in vars.iter().rev() {
                            if a.e[i] != b.e[i] {
                                return b.e[i].cmp(&a.e[i]);
                            }
                        }
                        Ordering::Equal
                    })
                }
                Tie::Lex => {
                    let mut o = Ordering::Equal;
                    for &i in vars {
                        if a.e[i] != b.e[i] {
                            o = a.e[i].cmp(&b.e[i]);
                            break;
                        }
                    }
                    o
                }
            };
            if o != Ordering::Equal {
                return o;
            }
        }
        b.comp.cmp(&a.comp)
    }
}

/// A module element with terms in strictly descending order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EPoly {
    pub terms: Vec<(Mono, Int)>,
}

impl EPoly {
    pub fn zero() -> EPoly {
        EPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Int {
        &self.terms[0].1
    }

    /// Gcd of coefficients, signed like the leading coefficient.
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms.first().is_some_and(|t| t.1.is_negative()) {
            g = g.neg();
        }
        g
    }

    pub fn div_int(&mut self, c: &Int) {
        if c.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 = t.1.div_exact(c);
        }
    }

    /// Divide out the content; returns the factor removed.
    pub fn make_primitive(&mut self) -> Int {
        if self.is_zero() {
            return Int::one();
        }
        let c = self.content();
        self.div_int(&c);
        c
    }

    pub fn scale(&mut self, c: &Int) {
        if c.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 = t.1.mul(c);
        }
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.comp).max()
    }
}

fn binom_u128(n: u16, k: u16) -> Option<u128> {
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r.checked_mul(n as u128 - i)? / (i + 1);
    }
    Some(r)
}

fn leibniz_coeff(b: u16, c: u16, k: u16) -> Int {
    let quick = (|| {
        let mut f: u128 = 1;
        for i in 2..=k as u128 {
            f = f.checked_mul(i)?;
        }
        let v = binom_u128(b, k)?.checked_mul(binom_u128(c, k)?)?.checked_mul(f)?;
        i64::try_from(v).ok()
    })();
    match quick {
        Some(v) => Int::from(v),
        None => {
            use num_bigint::BigInt;
            let mut r = BigInt::from(1);
            for i in 0..k as u64 {
                r = r * (b as u64 - i) / (i + 1);
            }
            let mut s = BigInt::from(1);
            for i in 0..k as u64 {
                s = s * (c as u64 - i) / (i + 1);
            }
            let mut f = BigInt::from(1);
            for i in 2..=k as u64 {
                f *= i;
            }
            Int::from_big(r * s * f)
        }
    }
}

/// Algebra plus order: everything needed to multiply and reduce.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub alg: Algebra,
    pub ord: TermOrder,
    /// New basis elements leading in a component at or past this index are
    /// dropped. With bookkeeping components ordered last this tracks
    /// cofactors without computing the syzygies among them.
    pub discard_from: Option<u32>,
}

impl Ctx {
    pub fn new(alg: Algebra, ord: TermOrder) -> Ctx {
        assert!(alg.nvars() <= MAXV, "too many variables for the kernel");
        Ctx { alg, ord, discard_from: None }
    }

    pub fn sort(&self, terms: &mut Vec<(Mono, Int)>) {
        terms.sort_by(|a, b| self.ord.cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, Int)> = Vec::with_capacity(terms.len());
        for (m, c) in terms.drain(..) {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        *terms = out;
    }

    pub fn from_terms(&self, mut terms: Vec<(Mono, Int)>) -> EPoly {
        self.sort(&mut terms);
        EPoly { terms }
    }

    /// `a·p + b·q`.
    pub fn lin(&self, a: &Int, p: &EPoly, b: &Int, q: &EPoly) -> EPoly {
        let mut out = Vec::with_capacity(p.len() + q.len());
        let (mut i, mut j) = (0, 0);
        let (pt, qt) = (&p.terms, &q.terms);
        while i < pt.len() && j < qt.len() {
            match self.ord.cmp(&pt[i].0, &qt[j].0) {
                Ordering::Greater => {
                    out.push((pt[i].0, pt[i].1.mul(a)));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((qt[j].0, qt[j].1.mul(b)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = pt[i].1.mul(a).add(&qt[j].1.mul(b));
                    if !c.is_zero() {
                        out.push((pt[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for t in &pt[i..] {
            out.push((t.0, t.1.mul(a)));
        }
        for t in &qt[j..] {
            out.push((t.0, t.1.mul(b)));
        }
        EPoly { terms: out }
    }

    /// `c · x^e · p` (monomial on the left), normally ordered.
    pub fn mul_term_left(&self, e: &Exps, c: &Int, p: &EPoly) -> EPoly {
        let np = self.alg.pairs;
        let hidx = self.alg.h_index();
        let mut main = Vec::with_capacity(p.len());
        let mut corr: Vec<(Mono, Int)> = Vec::new();
        let needs_corr = (0..np).any(|i| e[np + i] > 0);
        for (t, tc) in &p.terms {
            let mut m = *t;
            for (a, b) in m.e.iter_mut().zip(e) {
                *a += *b;
            }
            let cc = c.mul(tc);
            if needs_corr {
                let kmax: Vec<u16> = (0..np).map(|i| e[np + i].min(t.e[i])).collect();
                if kmax.iter().any(|&k| k > 0) {
                    let mut kappa = vec![0u16; np];
                    loop {
                        let mut i = 0;
                        while i < np {
                            if kappa[i] < kmax[i] {
                                kappa[i] += 1;
                                break;
                            }
                            kappa[i] = 0;
                            i += 1;
                        }
                        if i == np {
                            break;
                        }
                        let mut mm = m;
                        let mut coef = cc.clone();
                        let mut tot = 0u16;
                        for i in 0..np {
                            let k = kappa[i];
                            if k > 0 {
                                coef = coef.mul(&leibniz_coeff(e[np + i], t.e[i], k));
                                mm.e[i] -= k;
                                mm.e[np + i] -= k;
                                tot += k;
                            }
                        }
                        if let Some(h) = hidx {
                            mm.e[h] += 2 * tot;
                        }
                        corr.push((mm, coef));
                    }
                }
            }
            main.push((m, cc));
        }
        let main = EPoly { terms: main };
        if corr.is_empty() {
            return main;
        }
        self.sort(&mut corr);
        self.lin(&Int::one(), &main, &Int::one(), &EPoly { terms: corr })
    }

    /// Left product `a · p` for a single-component element `a` (component ignored).
    pub fn mul_left(&self, a: &EPoly, p: &EPoly) -> EPoly {
        let mut acc = EPoly::zero();
        for (m, c) in &a.terms {
            let t = self.mul_term_left(&m.e, c, p);
            acc = self.lin(&Int::one(), &acc, &Int::one(), &t);
        }
        acc
    }
}

#[derive(Clone, Debug)]
struct Elem {
    p: EPoly,
    lm: Mono,
    mask: u64,
    active: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

/// Reducer set with fast divisibility filtering.
pub struct Reducers<'a> {
    elems: Vec<(&'a EPoly, Mono, u64)>,
}

impl<'a> Reducers<'a> {
    pub fn new(basis: &'a [EPoly]) -> Reducers<'a> {
        Reducers { elems: basis.iter().filter(|p| !p.is_zero()).map(|p| (p, *p.lm(), p.lm().mask())).collect() }
    }

    fn find(&self, m: &Mono) -> Option<(&'a EPoly, Mono)> {
        let mk = m.mask();
        for (p, lm, mask) in &self.elems {
            if mask & !mk == 0 && lm.divides(m) {
                return Some((p, *lm));
            }
        }
        None
    }
}

impl Ctx {
    /// One reduction step of the leading term of `p` by `g`; `p` is
    /// replaced by `a·p − b·(m·g)` and `a` is returned.
    fn reduce_step(&self, p: &EPoly, g: &EPoly, glm: &Mono, lead: &Mono, lc: &Int) -> (EPoly, Int) {
        let q = glm.quotient(lead);
        let gl = g.lc();
        let d = gl.gcd(lc);
        let a = gl.div_exact(&d);
        let b = lc.div_exact(&d);
        let mg = self.mul_term_left(&q, &Int::one(), g);
        (self.lin(&a, p, &b.neg(), &mg), a)
    }

    /// Reduce until the leading term is irreducible.
    pub fn top_reduce(&self, mut p: EPoly, red: &Reducers) -> EPoly {
        let mut steps = 0usize;
        while !p.is_zero() {
            let lead = *p.lm();
            let Some((g, glm)) = red.find(&lead) else { break };
            let lc = p.lc().clone();
            p = self.reduce_step(&p, g, &glm, &lead, &lc).0;
            steps += 1;
            if steps % 8 == 0 {
                p.make_primitive();
            }
        }
        p.make_primitive();
        p
    }

    /// Full reduction. Returns `(r, m)` with `m·p − r` in the module
    /// generated by the reducers; `r` is not made primitive.
    pub fn reduce_tracked(&self, mut p: EPoly, red: &Reducers) -> (EPoly, Int) {
        let mut rem: Vec<(Mono, Int)> = Vec::new();
        let mut mult = Int::one();
        let mut steps = 0usize;
        while !p.is_zero() {
            let lead = *p.lm();
            match red.find(&lead) {
                None => {
                    let t = p.terms.remove(0);
                    rem.push(t);
                }
                Some((g, glm)) => {
                    let lc = p.lc().clone();
                    let (np, a) = self.reduce_step(&p, g, &glm, &lead, &lc);
                    p = np;
                    if !a.is_one() {
                        for t in &mut rem {
                            t.1 = t.1.mul(&a);
                        }
                        mult = mult.mul(&a);
                    }
                    steps += 1;
                    if steps % 8 == 0 {
                        let mut gg = mult.clone();
                        for t in p.terms.iter().chain(rem.iter()) {
                            if gg.is_one() {
                                break;
                            }
                            gg = gg.gcd(&t.1);
                        }
                        let gg = gg.abs();
                        if !gg.is_one() && !gg.is_zero() {
                            p.div_int(&gg);
                            for t in &mut rem {
                                t.1 = t.1.div_exact(&gg);
                            }
                            mult = mult.div_exact(&gg);
                        }
                    }
                }
            }
        }
        (EPoly { terms: rem }, mult)
    }

    pub fn full_reduce(&self, p: EPoly, red: &Reducers) -> EPoly {
        let mut r = self.reduce_tracked(p, red).0;
        r.make_primitive();
        r
    }

    fn spoly(&self, f: &EPoly, g: &EPoly, lcm: &Mono) -> EPoly {
        let qf = f.lm().quotient(lcm);
        let qg = g.lm().quotient(lcm);
        let d = f.lc().gcd(g.lc());
        let a = g.lc().div_exact(&d);
        let b = f.lc().div_exact(&d);
        let mf = self.mul_term_left(&qf, &a, f);
        let mg = self.mul_term_left(&qg, &b, g);
        self.lin(&Int::one(), &mf, &Int::from(-1), &mg)
    }

    /// Reduced Gröbner basis: primitive, positive leading coefficients,
    /// interreduced, sorted by ascending leading monomial.
    pub fn groebner(&self, gens: &[EPoly]) -> Vec<EPoly> {
        let mut elems: Vec<Elem> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut sorted = true;
        // The product criterion needs commutativity and a cyclic module.
        let comm = self.alg.is_commutative() && gens.iter().all(|g| g.max_comp().unwrap_or(0) == 0);
        let homog = self.alg.h_index().is_some();

        let mut input: Vec<EPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        input.sort_by(|a, b| self.ord.cmp(a.lm(), b.lm()));
        for g in input {
            let h = {
                let red = Reducers {
                    elems: elems.iter().filter(|e| e.active).map(|e| (&e.p, e.lm, e.mask)).collect(),
                };
                self.top_reduce(g, &red)
            };
            if !h.is_zero() {
                self.update(&mut elems, &mut pairs, h, comm);
                sorted = false;
            }
        }

        loop {
            if !sorted {
                // Homogenized inputs are completed degree by degree.
                pairs.sort_by(|a, b| {
                    let by_degree =
                        if homog { b.lcm.degree().cmp(&a.lcm.degree()) } else { std::cmp::Ordering::Equal };
                    by_degree
                        .then_with(|| self.ord.cmp(&b.lcm, &a.lcm))
                        .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
                });
                sorted = true;
            }
            let Some(pr) = pairs.pop() else { break };
            let s = self.spoly(&elems[pr.i].p, &elems[pr.j].p, &pr.lcm);
            if s.is_zero() {
                continue;
            }
            let h = {
                let red = Reducers {
                    elems: elems.iter().filter(|e| e.active).map(|e| (&e.p, e.lm, e.mask)).collect(),
                };
                self.top_reduce(s, &red)
            };
            if !h.is_zero() && self.discard_from.map_or(true, |d| h.lm().comp < d) {
                self.update(&mut elems, &mut pairs, h, comm);
                sorted = false;
            }
        }

        let mut basis: Vec<EPoly> = elems.into_iter().filter(|e| e.active).map(|e| e.p).collect();
        self.interreduce(&mut basis);
        basis
    }

    fn update(&self, elems: &mut Vec<Elem>, pairs: &mut Vec<Pair>, h: EPoly, comm: bool) {
        let t = elems.len();
        let hlm = *h.lm();
        let mut cand: Vec<Pair> = elems
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active && e.lm.comp == hlm.comp)
            .map(|(i, e)| Pair { i, j: t, lcm: e.lm.lcm(&hlm) })
            .collect();
        let coprime = |p: &Pair, elems: &Vec<Elem>| {
            let a = &elems[p.i].lm;
            a.e.iter().zip(&hlm.e).all(|(x, y)| *x == 0 || *y == 0)
        };

        // Chain criterion among the new pairs.
        let mut keep: Vec<Pair> = Vec::new();
        for (k, p) in cand.iter().enumerate() {
            let dominated = cand.iter().enumerate().any(|(l, q)| {
                l != k && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || l < k)
            });
            if !dominated {
                keep.push(p.clone());
            }
        }
        if comm {
            let eq_coprime: Vec<Mono> = cand.iter().filter(|p| coprime(p, elems)).map(|p| p.lcm).collect();
            keep.retain(|p| !eq_coprime.contains(&p.lcm));
        }
        cand.clear();

        pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = elems[p.i].lm.lcm(&hlm);
            let lj = elems[p.j].lm.lcm(&hlm);
            li == p.lcm || lj == p.lcm
        });
        pairs.extend(keep);

        for e in elems.iter_mut() {
            if e.active && hlm.divides(&e.lm) {
                e.active = false;
            }
        }
        elems.push(Elem { mask: hlm.mask(), lm: hlm, p: h, active: true });
    }

    pub fn interreduce(&self, basis: &mut Vec<EPoly>) {
        basis.retain(|p| !p.is_zero());
        basis.sort_by(|a, b| self.ord.cmp(a.lm(), b.lm()));
        // Drop elements whose leading monomial is divisible by another's.
        let mut min: Vec<EPoly> = Vec::new();
        for p in basis.drain(..) {
            if min.iter().any(|q| q.lm().divides(p.lm())) {
                continue;
            }
            min.push(p);
        }
        let snapshot = min.clone();
        for (i, p) in min.iter_mut().enumerate() {
            let others: Vec<EPoly> =
                snapshot.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            let red = Reducers::new(&others);
            let lead = p.terms[0].clone();
            let tail = EPoly { terms: p.terms[1..].to_vec() };
            let (r, m) = self.reduce_tracked(tail, &red);
            let mut terms = vec![(lead.0, lead.1.mul(&m))];
            terms.extend(r.terms);
            *p = EPoly { terms };
            p.make_primitive();
        }
        *basis = min;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Mono {
        let mut m = Mono::one(0);
        m.e[..e.len()].copy_from_slice(e);
        m
    }

    #[test]
    fn x_and_d_generate_unit() {
        let ctx = Ctx::new(Algebra::weyl(1, false), TermOrder::degrevlex(2));
        let x = ctx.from_terms(vec![(mono(&[1, 0]), Int::one())]);
        let d = ctx.from_terms(vec![(mono(&[0, 1]), Int::one())]);
        let g = ctx.groebner(&[x, d]);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].terms, vec![(mono(&[0, 0]), Int::one())]);
    }

    #[test]
    fn commutative_elimination() {
        // x - t, y - t^2 with t eliminated: variables (t, x, y).
        let ord = TermOrder::degrevlex(3).prepend_weight(&[1, 0, 0], vec![]);
        let ctx = Ctx::new(Algebra::commutative(3), ord);
        let f = ctx.from_terms(vec![(mono(&[0, 1, 0]), Int::one()), (mono(&[1, 0, 0]), Int::from(-1))]);
        let g = ctx.from_terms(vec![(mono(&[0, 0, 1]), Int::one()), (mono(&[2, 0, 0]), Int::from(-1))]);
        let gb = ctx.groebner(&[f, g]);
        let target = ctx.from_terms(vec![(mono(&[0, 0, 1]), Int::one()), (mono(&[0, 2, 0]), Int::from(-1))]);
        let target = {
            let mut t = target;
            t.make_primitive();
            t
        };
        assert!(gb.iter().any(|p| *p == target), "{:?}", gb);
    }
}
