//! Exact field elements: rationals with unbounded integers, or residues
//! modulo an odd prime.
//!
//! Arithmetic between scalars of different fields is a programming error and
//! panics; every public constructor that accepts external data checks the
//! field first and reports [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// GF(p). Characteristic 2 is refused along with every non-prime.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::ModP {
                residue: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Parses `"n"` or `"num/den"` into an element of this field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::InvalidCoefficient {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (trimmed, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| bad("numerator is not an integer"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let modulus = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &modulus) + &modulus) % &modulus;
                    r.try_into().expect("residue fits in u64")
                };
                let n = Scalar::ModP {
                    residue: reduce(&num),
                    p,
                };
                let d = Scalar::ModP {
                    residue: reduce(&den),
                    p,
                };
                n.div(&d).map_err(|_| bad("denominator vanishes modulo p"))
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of ℚ or GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Always normalized: lowest terms, positive denominator.
    Rational(BigRational),
    ModP {
        residue: u64,
        p: u64,
    },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::ModP { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::ModP { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::ModP { residue, .. } => *residue == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::ModP { residue, p } => Scalar::ModP {
                residue: pow_mod(*residue, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplies by a machine integer without building a second scalar first.
    pub fn scale_int(&self, n: i64) -> Scalar {
        self * &self.field().from_int(n)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[track_caller]
fn same_modulus(p: u64, q: u64) -> u64 {
    assert_eq!(p, q, "arithmetic between scalars of different fields");
    p
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::ModP { residue: a, p }, Scalar::ModP { residue: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::ModP {
                    residue: ((*a as u128 + *b as u128) % p as u128) as u64,
                    p,
                }
            }
            _ => panic!("arithmetic between scalars of different fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::ModP { residue: a, p }, Scalar::ModP { residue: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::ModP {
                    residue: mul_mod(*a, *b, p),
                    p,
                }
            }
            _ => panic!("arithmetic between scalars of different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::ModP { residue, p } => Scalar::ModP {
                residue: (p - residue) % p,
                p: *p,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::ModP { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Scalar {
    /// Sign used when printing vectors; residues are always nonnegative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two_and_composites() {
        assert_eq!(Field::prime(2), Err(Error::InvalidModulus(2)));
        assert_eq!(Field::prime(9), Err(Error::InvalidModulus(9)));
        assert_eq!(Field::prime(1), Err(Error::InvalidModulus(1)));
        assert!(Field::prime(3).is_ok());
        assert!(Field::prime(101).is_ok());
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x, q.parse("-3/2").unwrap());
        assert_eq!(x.to_string(), "-3/2");
        let y = x.inv().unwrap();
        assert_eq!(y.to_string(), "-2/3");
        assert!((&x * &y).is_one());
    }

    #[test]
    fn division_by_zero_is_rejected() {
        for f in [Field::Rational, Field::Prime(7)] {
            assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
            assert_eq!(f.one().div(&f.zero()), Err(Error::DivisionByZero));
        }
        assert!(Field::Prime(5).parse("1/5").is_err());
        assert!(Field::Rational.parse("1/0").is_err());
    }

    #[test]
    fn residues_reduce_into_range() {
        let f = Field::Prime(7);
        assert_eq!(f.from_int(-1), Scalar::ModP { residue: 6, p: 7 });
        assert_eq!(f.parse("1/2").unwrap(), Scalar::ModP { residue: 4, p: 7 });
        assert_eq!(f.parse("-15").unwrap(), Scalar::ModP { residue: 6, p: 7 });
    }

    #[test]
    fn fermat_little_theorem() {
        for p in [3u64, 5, 7, 11, 13, 1_000_003] {
            let f = Field::Prime(p);
            for a in 1..20i64 {
                let x = f.from_int(a);
                if !x.is_zero() {
                    assert!(x.pow(p - 1).is_one(), "{a}^{} mod {p}", p - 1);
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = &Field::Prime(3).one() + &Field::Rational.one();
    }

    #[test]
    fn large_rationals_do_not_wrap() {
        let q = Field::Rational;
        let big = q.parse("9223372036854775807").unwrap();
        let sq = &big * &big;
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
    }
}
