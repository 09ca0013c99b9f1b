use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::modular::{add_mod, inv_mod, is_prime, mul_mod, pow_mod, sub_mod};
use super::PolyError;

/// The field the coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffDomain {
    Rationals,
    PrimeField(u64),
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular(u64),
}

impl CoeffDomain {
    pub fn prime_field(p: u64) -> Result<Self, PolyError> {
        if !is_prime(p) {
            return Err(PolyError::InvalidModulus(p));
        }
        Ok(CoeffDomain::PrimeField(p))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoeffDomain::Rationals => None,
            CoeffDomain::PrimeField(p) => Some(*p),
        }
    }

    /// Whether `c` is an element of this domain (right variant, canonical range).
    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (CoeffDomain::Rationals, Coeff::Rational(_)) => true,
            (CoeffDomain::PrimeField(p), Coeff::Modular(v)) => v < p,
            _ => false,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffDomain::Rationals => Coeff::Rational(BigRational::zero()),
            CoeffDomain::PrimeField(_) => Coeff::Modular(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self {
            CoeffDomain::Rationals => Coeff::Rational(BigRational::from_integer(n.into())),
            CoeffDomain::PrimeField(p) => {
                Coeff::Modular((n as i128).rem_euclid(*p as i128) as u64)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            CoeffDomain::Rationals => Coeff::Rational(BigRational::from_integer(n.clone())),
            CoeffDomain::PrimeField(p) => Coeff::Modular(reduce_bigint(n, *p)),
        }
    }

    /// Maps an exact rational into the domain; fails in `F_p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff, PolyError> {
        match self {
            CoeffDomain::Rationals => Ok(Coeff::Rational(q.clone())),
            CoeffDomain::PrimeField(p) => {
                let num = reduce_bigint(q.numer(), *p);
                let den = reduce_bigint(q.denom(), *p);
                let inv = inv_mod(den, *p).ok_or_else(|| PolyError::NotInvertible(q.to_string()))?;
                Ok(Coeff::Modular(mul_mod(num, inv, *p)))
            }
        }
    }

    /// Reinterprets a coefficient of another domain in this one.
    pub fn convert(&self, c: &Coeff) -> Result<Coeff, PolyError> {
        match (self, c) {
            (_, Coeff::Rational(q)) => self.from_rational(q),
            (CoeffDomain::PrimeField(p), Coeff::Modular(v)) if v < p => Ok(Coeff::Modular(*v)),
            _ => Err(PolyError::DomainMismatch),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Coeff::Modular(x), Coeff::Modular(y)) => Coeff::Modular(add_mod(*x, *y, self.p())),
            _ => mismatch(),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x - y),
            (Coeff::Modular(x), Coeff::Modular(y)) => Coeff::Modular(sub_mod(*x, *y, self.p())),
            _ => mismatch(),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Coeff::Modular(x), Coeff::Modular(y)) => Coeff::Modular(mul_mod(*x, *y, self.p())),
            _ => mismatch(),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rational(x) => Coeff::Rational(-x),
            Coeff::Modular(x) => Coeff::Modular(sub_mod(0, *x, self.p())),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match a {
            Coeff::Rational(x) if x.is_zero() => None,
            Coeff::Rational(x) => Some(Coeff::Rational(x.recip())),
            Coeff::Modular(x) => inv_mod(*x, self.p()).map(Coeff::Modular),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn pow(&self, a: &Coeff, e: u32) -> Coeff {
        match a {
            Coeff::Rational(x) => Coeff::Rational(num_traits::pow(x.clone(), e as usize)),
            Coeff::Modular(x) => Coeff::Modular(pow_mod(*x, e as u64, self.p())),
        }
    }

    /// Uniform residue in `F_p`, or an integer in `[-range, range]` over the rationals.
    pub fn random<R: Rng>(&self, rng: &mut R, range: i64) -> Coeff {
        match self {
            CoeffDomain::Rationals => self.from_i64(rng.gen_range(-range..=range)),
            CoeffDomain::PrimeField(p) => Coeff::Modular(rng.gen_range(0..*p)),
        }
    }

    /// Like [`CoeffDomain::random`] but never zero.
    pub fn random_nonzero<R: Rng>(&self, rng: &mut R, range: i64) -> Coeff {
        match self {
            CoeffDomain::Rationals => loop {
                let v = rng.gen_range(-range..=range);
                if v != 0 {
                    return self.from_i64(v);
                }
            },
            CoeffDomain::PrimeField(p) => Coeff::Modular(rng.gen_range(1..*p)),
        }
    }

    fn p(&self) -> u64 {
        match self {
            CoeffDomain::PrimeField(p) => *p,
            CoeffDomain::Rationals => mismatch(),
        }
    }
}

fn mismatch() -> ! {
    panic!("coefficient from a different domain")
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(x) => x.is_zero(),
            Coeff::Modular(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(x) => x.is_one(),
            Coeff::Modular(x) => *x == 1,
        }
    }

    /// True for rationals with a leading minus sign. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Coeff::Rational(x) if x.is_negative())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(x) => Some(x),
            Coeff::Modular(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Coeff::Modular(x) => Some(*x),
            Coeff::Rational(_) => None,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Coeff::Rational(x) => write!(f, "{}/{}", x.numer(), x.denom()),
            Coeff::Modular(x) => write!(f, "{x}"),
        }
    }
}

/// Exact `num/den` string used by reports.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let d = CoeffDomain::Rationals;
        let a = Coeff::Rational(BigRational::new(2.into(), (-4).into()));
        assert_eq!(a.to_string(), "-1/2");
        let s = d.add(&a, &d.from_i64(1));
        assert_eq!(s.to_string(), "1/2");
    }

    #[test]
    fn residues_stay_in_range() {
        let d = CoeffDomain::prime_field(7).unwrap();
        assert_eq!(d.from_i64(-1), Coeff::Modular(6));
        let half = d.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(d.mul(&half, &d.from_i64(2)), d.one());
        assert!(d.from_rational(&BigRational::new(1.into(), 7.into())).is_err());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(CoeffDomain::prime_field(9), Err(PolyError::InvalidModulus(9))));
        assert!(CoeffDomain::prime_field(1).is_err());
    }
}
