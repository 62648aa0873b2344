//! Exact arithmetic in Q(√2).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

/// The number `a + b·√2` with rational `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtTwoNumber {
    a: BigRational,
    b: BigRational,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl SqrtTwoNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        SqrtTwoNumber { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        Self::new(ratio(a, 1), ratio(b, 1))
    }

    /// `a_num/a_den + (b_num/b_den)·√2`.
    pub fn from_fractions(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        Self::new(ratio(a_num, a_den), ratio(b_num, b_den))
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.a * k, &self.b * k)
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b)
    }

    pub fn cmp_integer(&self, x: &BigInt) -> Ordering {
        let x = BigRational::from_integer(x.clone());
        sign_of(&(&self.a - x), &self.b)
    }

    /// The unique integer `f` with `f <= self < f + 1`.
    pub fn floor(&self) -> BigInt {
        // b·√2 = ±√(2·p²)/q; isqrt gives a lower estimate within one of the truth.
        let p = self.b.numer();
        let q = self.b.denom();
        let root = (p * p * 2u32).sqrt();
        let irr = if p.is_negative() { -(root / q) - 1 } else { root.div_floor(q) };
        let mut f = self.a.floor().to_integer() + irr;
        while self.cmp_integer(&f) == Ordering::Less {
            f -= 1;
        }
        while self.cmp_integer(&(&f + 1)) != Ordering::Less {
            f += 1;
        }
        f
    }
}

/// Sign of `p + q·√2`, decided without leaving the rationals.
fn sign_of(p: &BigRational, q: &BigRational) -> Ordering {
    let sp = p.cmp(&BigRational::zero());
    let sq = q.cmp(&BigRational::zero());
    match (sp, sq) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        // opposite signs: compare p² with 2q²
        (sp, _) => {
            let lhs = p * p;
            let rhs = q * q * BigRational::from_integer(2.into());
            match lhs.cmp(&rhs) {
                Ordering::Greater => sp,
                Ordering::Less => sp.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

impl Ord for SqrtTwoNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        sign_of(&(&self.a - &other.a), &(&self.b - &other.b))
    }
}

impl PartialOrd for SqrtTwoNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &SqrtTwoNumber {
    type Output = SqrtTwoNumber;
    fn add(self, rhs: &SqrtTwoNumber) -> SqrtTwoNumber {
        SqrtTwoNumber::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &SqrtTwoNumber {
    type Output = SqrtTwoNumber;
    fn sub(self, rhs: &SqrtTwoNumber) -> SqrtTwoNumber {
        SqrtTwoNumber::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &SqrtTwoNumber {
    type Output = SqrtTwoNumber;
    fn mul(self, rhs: &SqrtTwoNumber) -> SqrtTwoNumber {
        let two = BigRational::from_integer(2.into());
        SqrtTwoNumber::new(
            &self.a * &rhs.a + &self.b * &rhs.b * two,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &SqrtTwoNumber {
    type Output = SqrtTwoNumber;
    fn neg(self) -> SqrtTwoNumber {
        SqrtTwoNumber::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SqrtTwoNumber {
            type Output = SqrtTwoNumber;
            fn $m(self, rhs: SqrtTwoNumber) -> SqrtTwoNumber {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for SqrtTwoNumber {
    type Output = SqrtTwoNumber;
    fn neg(self) -> SqrtTwoNumber {
        -&self
    }
}

impl Zero for SqrtTwoNumber {
    fn zero() -> Self {
        Self::from_integers(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for SqrtTwoNumber {
    fn one() -> Self {
        Self::from_integers(1, 0)
    }
}

/// Renders as `a + b*sqrt(2)` with reduced fractions, e.g. `25/2 + 21/2*sqrt(2)`.
impl fmt::Display for SqrtTwoNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt(2)", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*sqrt(2)", self.a, self.b)
        }
    }
}

impl Serialize for SqrtTwoNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SqrtTwoNumber", 3)?;
        s.serialize_field("a", &self.a.to_string())?;
        s.serialize_field("b", &self.b.to_string())?;
        s.serialize_field("text", &self.to_string())?;
        s.end()
    }
}
