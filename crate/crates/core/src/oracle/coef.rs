//! Exact rationals that stay on machine words while they fit.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// A rational number, always stored in lowest terms with positive
/// denominator; `Small` whenever both parts fit in `i64`, so the derived
/// equality is numeric equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Coef {
    Small(i64, i64),
    Big(BigRational),
}

impl Coef {
    pub fn zero() -> Self {
        Coef::Small(0, 1)
    }

    pub fn one() -> Self {
        Coef::Small(1, 1)
    }

    pub fn int(n: i64) -> Self {
        Coef::Small(n, 1)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::reduce(i128::from(n), i128::from(d))
    }

    fn reduce(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Coef::Small(n, d),
            _ => Coef::Big(BigRational::new(n.into(), d.into())),
        }
    }

    pub fn from_big(x: &BigRational) -> Self {
        match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(n), Some(d)) => Coef::Small(n, d),
            _ => Coef::Big(x.clone()),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coef::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Coef::Big(x) => x.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coef::Small(0, _))
    }

    pub fn add(&self, o: &Coef) -> Coef {
        match (self, o) {
            (Coef::Small(a, 1), Coef::Small(c, 1)) => match a.checked_add(*c) {
                Some(n) => Coef::Small(n, 1),
                None => Self::reduce(i128::from(*a) + i128::from(*c), 1),
            },
            (Coef::Small(a, b), Coef::Small(c, d)) => {
                let (a, b, c, d) = (i128::from(*a), i128::from(*b), i128::from(*c), i128::from(*d));
                if b == d {
                    Self::reduce(a + c, b)
                } else {
                    Self::reduce(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(&(self.to_big() + o.to_big())),
        }
    }

    pub fn mul(&self, o: &Coef) -> Coef {
        match (self, o) {
            (Coef::Small(a, b), Coef::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Coef::Small(p, 1);
                    }
                }
                // cross-cancel so the result is already in lowest terms
                if *a == 0 || *c == 0 {
                    return Coef::zero();
                }
                if *a != i64::MIN && *c != i64::MIN {
                    let (g1, g2) = (a.gcd(d), c.gcd(b));
                    if let (Some(n), Some(m)) = ((a / g1).checked_mul(c / g2), (b / g2).checked_mul(d / g1)) {
                        return Coef::Small(n, m);
                    }
                }
                Self::reduce(i128::from(*a) * i128::from(*c), i128::from(*b) * i128::from(*d))
            }
            _ => Self::from_big(&(self.to_big() * o.to_big())),
        }
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_big())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_arithmetic() {
        assert_eq!(Coef::ratio(2, -4), Coef::Small(-1, 2));
        assert_eq!(Coef::ratio(1, 2).add(&Coef::ratio(1, 3)), Coef::ratio(5, 6));
        assert_eq!(Coef::ratio(1, 2).add(&Coef::ratio(-1, 2)), Coef::zero());
        assert_eq!(Coef::ratio(2, 3).mul(&Coef::ratio(3, 4)), Coef::ratio(1, 2));
    }

    #[test]
    fn promotes_and_demotes() {
        let m = Coef::int(i64::MAX);
        let sq = m.mul(&m);
        assert!(matches!(sq, Coef::Big(_)));
        assert_eq!(sq.to_big(), big(i64::MAX, 1) * big(i64::MAX, 1));
        let back = sq.mul(&Coef::ratio(1, i64::MAX));
        assert_eq!(back, Coef::int(i64::MAX));
        assert_eq!(Coef::int(i64::MIN).mul(&Coef::int(-1)).to_big(), -big(i64::MIN, 1));
        let s = m.add(&m);
        let minus = m.mul(&Coef::int(-1));
        assert_eq!(s.add(&minus).add(&minus), Coef::zero());
        assert_eq!(Coef::ratio(0, 5).mul(&Coef::ratio(3, 7)), Coef::zero());
        assert_eq!(Coef::ratio(2, 3).mul(&Coef::ratio(0, 1)), Coef::zero());
    }

    #[test]
    fn round_trip() {
        for (n, d) in [(0, 1), (-7, 3), (5, 1), (1, 1 << 40)] {
            assert_eq!(Coef::from_big(&big(n, d)).to_big(), big(n, d));
        }
    }
}
