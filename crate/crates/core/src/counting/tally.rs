use std::fmt;
use std::iter::Sum;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact non-negative count that stays in a `u128` until it overflows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tally {
    Small(u128),
    Big(BigUint),
}

impl Default for Tally {
    fn default() -> Self {
        Tally::Small(0)
    }
}

impl Tally {
    pub fn zero() -> Self {
        Tally::Small(0)
    }

    pub fn one() -> Self {
        Tally::Small(1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Tally::Small(x) => *x == 0,
            Tally::Big(b) => b.is_zero(),
        }
    }

    pub fn add_assign(&mut self, other: &Tally) {
        *self = match (&*self, other) {
            (Tally::Small(a), Tally::Small(b)) => match a.checked_add(*b) {
                Some(s) => Tally::Small(s),
                None => Tally::Big(BigUint::from(*a) + *b),
            },
            _ => Tally::Big(self.to_biguint() + other.to_biguint()),
        };
    }

    pub fn mul(&self, other: &Tally) -> Tally {
        match (self, other) {
            (Tally::Small(a), Tally::Small(b)) => match a.checked_mul(*b) {
                Some(p) => Tally::Small(p),
                None => Tally::Big(BigUint::from(*a) * *b),
            },
            _ => Tally::Big(self.to_biguint() * other.to_biguint()),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match self {
            Tally::Small(x) => BigUint::from(*x),
            Tally::Big(b) => b.clone(),
        }
    }

    pub fn into_biguint(self) -> BigUint {
        match self {
            Tally::Small(x) => BigUint::from(x),
            Tally::Big(b) => b,
        }
    }
}

impl From<u64> for Tally {
    fn from(x: u64) -> Self {
        Tally::Small(x as u128)
    }
}

impl From<BigUint> for Tally {
    fn from(b: BigUint) -> Self {
        match u128::try_from(&b) {
            Ok(x) => Tally::Small(x),
            Err(_) => Tally::Big(b),
        }
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tally::Small(x) => write!(f, "{x}"),
            Tally::Big(b) => write!(f, "{b}"),
        }
    }
}

impl<'a> Sum<&'a Tally> for Tally {
    fn sum<I: Iterator<Item = &'a Tally>>(iter: I) -> Tally {
        let mut acc = Tally::zero();
        for t in iter {
            acc.add_assign(t);
        }
        acc
    }
}

impl Sum<Tally> for Tally {
    fn sum<I: Iterator<Item = Tally>>(iter: I) -> Tally {
        let mut acc = Tally::zero();
        for t in iter {
            acc.add_assign(&t);
        }
        acc
    }
}

/// `1` as a `BigUint`; handy for empty products.
pub(crate) fn big_one() -> BigUint {
    BigUint::one()
}
