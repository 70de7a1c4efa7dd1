//! Scalars: the field Q(i) of Gaussian rationals with arbitrary-precision
//! components. Every value is kept in lowest terms by construction (the
//! underlying `BigRational` normalizes on every operation), so equality is
//! structural and no rounding can occur anywhere downstream.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rational = num::BigRational;

/// An element of Q(i): `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a real scalar. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::new(r, Rational::zero())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|² = re² + im²`, a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero (exact arithmetic has no NaN
    /// to hide behind).
    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of zero scalar");
        Scalar::new(&self.re / &n, -&self.im / &n)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    /// Canonical rendering: `0`, `3`, `-1/2`, `i`, `-2/3i`, `1+i`, `1/2-3i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag_part(r: &Rational) -> String {
            if r.is_one() {
                "i".to_string()
            } else if (-r).is_one() {
                "-i".to_string()
            } else {
                format!("{r}i")
            }
        }
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}", imag_part(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}-{}", self.re, imag_part(&-&self.im).trim_start_matches('-'))
        } else {
            write!(f, "{}+{}", self.re, imag_part(&self.im))
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Scalar::new(&a.re + &b.re, &a.im + &b.im));
binop!(Sub, sub, |a, b| Scalar::new(&a.re - &b.re, &a.im - &b.im));
binop!(Mul, mul, |a, b| Scalar::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
binop!(Div, div, |a, b| a * &b.inv());

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

/// Parse a rational literal `p` or `p/q` (optional leading `-`).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mut parts = s.splitn(2, '/');
    let p: BigInt = parts.next()?.parse().ok()?;
    let q: BigInt = match parts.next() {
        Some(q) => q.parse().ok()?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return None;
    }
    let r = Rational::new(p, q);
    Some(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::from_ratio(p, d)
    }

    #[test]
    fn field_basics() {
        let a = Scalar::new(Rational::from_integer(1.into()), Rational::new(2.into(), 3.into()));
        let b = Scalar::new(Rational::new((-1).into(), 2.into()), Rational::from_integer(5.into()));
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &Scalar::one()), &a * &b + &a);
        assert_eq!(&a * &a.inv(), Scalar::one());
        assert_eq!(&a - &a, Scalar::zero());
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn conjugation() {
        let z = &Scalar::from_int(2) + &(&Scalar::i() * &q(3, 4));
        assert_eq!(z.conj().conj(), z);
        assert_eq!((&z * &z.conj()).im(), &Rational::zero());
        assert!(q(7, -3).is_real());
        assert_eq!(q(7, -3), q(-7, 3)); // normalized denominators
    }

    #[test]
    fn display_canonical() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(q(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!((&Scalar::one() + &Scalar::i()).to_string(), "1+i");
        assert_eq!((&q(1, 2) - &(&Scalar::i() * &Scalar::from_int(3))).to_string(), "1/2-3i");
        assert_eq!((&Scalar::i() * &q(-2, 3)).to_string(), "-2/3i");
    }

    #[test]
    fn parse_rational_literals() {
        assert_eq!(parse_rational("5/2"), Some(Rational::new(5.into(), 2.into())));
        assert_eq!(parse_rational("-3"), Some(Rational::from_integer((-3).into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
