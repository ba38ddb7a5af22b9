use std::fmt;

use super::gcd::gcd;
use super::poly::CommPoly;
use super::rational::Rational;

/// `num / den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: CommPoly,
    den: CommPoly,
}

impl RationalFunction {
    pub fn new(num: CommPoly, den: CommPoly) -> RationalFunction {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction { den: CommPoly::one(num.ring()), num };
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = d.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RationalFunction { num: n, den: d }
    }

    pub fn from_poly(p: CommPoly) -> RationalFunction {
        let den = CommPoly::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn numer(&self) -> &CommPoly {
        &self.num
    }

    pub fn denom(&self) -> &CommPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(self.num.add(&o.num), self.den.clone());
        }
        RationalFunction::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn scale(&self, k: &Rational) -> RationalFunction {
        RationalFunction { num: self.num.scale(k), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &CommPoly) -> RationalFunction {
        RationalFunction::new(self.num.mul(p), self.den.clone())
    }

    pub fn derivative(&self, i: usize) -> RationalFunction {
        let dn = self.num.derivative(i);
        let dd = self.den.derivative(i);
        if dd.is_zero() {
            return RationalFunction::new(dn, self.den.clone());
        }
        RationalFunction::new(
            dn.mul(&self.den).sub(&self.num.mul(&dd)),
            self.den.mul(&self.den),
        )
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &CommPoly| {
            let s = p.to_string();
            if p.nterms() > 1 || s.contains('/') {
                format!("({})", s)
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
