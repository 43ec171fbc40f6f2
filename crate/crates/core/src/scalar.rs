//! Scalar abstractions.
//!
//! Counting formulas are generic over an exact integer type. `BigInt` never
//! overflows; fixed-width types such as `i64` or `i128` go through checked
//! arithmetic and surface [`HkError::Overflow`] instead of wrapping.
//! Regressions are generic over a float type.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Sub};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Float, FromPrimitive, Signed, ToPrimitive};

use crate::error::{HkError, Result};

/// Exact signed integer usable by the closed-form evaluators.
pub trait ExactInt:
    Clone
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + Debug
    + Display
    + Send
    + Sync
{
}

impl<T> ExactInt for T where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + Debug
        + Display
        + Send
        + Sync
{
}

/// Floating point type used for log-log regressions.
pub trait Real: Float + FromPrimitive + Debug + Send + Sync {}

impl Real for f32 {}
impl Real for f64 {}

/// Overflow-tracking wrapper: arithmetic on `Ck` never panics, a poisoned
/// value stays poisoned until [`Ck::get`] reports it.
#[derive(Debug, Clone)]
pub struct Ck<T>(Option<T>);

impl<T: ExactInt> Ck<T> {
    pub fn new(v: T) -> Self {
        Ck(Some(v))
    }

    pub fn of(v: u64) -> Self {
        Ck(T::from_u64(v))
    }

    pub fn zero() -> Self {
        Ck(Some(T::zero()))
    }

    pub fn one() -> Self {
        Ck(Some(T::one()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let Some(base) = &self.0 else { return Ck(None) };
        let mut acc = Some(T::one());
        for _ in 0..exp {
            acc = acc.and_then(|a| a.checked_mul(base));
        }
        Ck(acc)
    }

    /// C(self, 2) = self·(self−1)/2, zero below 2.
    pub fn choose2(&self) -> Self {
        let Some(v) = &self.0 else { return Ck(None) };
        if *v < T::from_u8(2).unwrap() {
            return Ck::zero();
        }
        let one = Ck::one();
        (self.clone() * (self.clone() - one)) / Ck::of(2)
    }

    /// C(self, 3), zero below 3.
    pub fn choose3(&self) -> Self {
        let Some(v) = &self.0 else { return Ck(None) };
        if *v < T::from_u8(3).unwrap() {
            return Ck::zero();
        }
        let a = self.clone();
        (a.clone() * (a.clone() - Ck::one()) * (a - Ck::of(2))) / Ck::of(6)
    }

    pub fn get(self) -> Result<T> {
        self.0.ok_or(HkError::Overflow)
    }
}

impl<T: ExactInt> Add for Ck<T> {
    type Output = Ck<T>;
    fn add(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_add(&b)))
    }
}

impl<T: ExactInt> Sub for Ck<T> {
    type Output = Ck<T>;
    fn sub(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_sub(&b)))
    }
}

impl<T: ExactInt> Mul for Ck<T> {
    type Output = Ck<T>;
    fn mul(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_mul(&b)))
    }
}

/// Exact division; a nonzero remainder is a logic error in the caller.
impl<T: ExactInt> Div for Ck<T> {
    type Output = Ck<T>;
    fn div(self, rhs: Self) -> Self {
        Ck(self.0.zip(rhs.0).and_then(|(a, b)| {
            if b.is_zero() {
                return None;
            }
            let (q, r) = a.div_rem(&b);
            debug_assert!(r.is_zero(), "inexact division {a} / {b}");
            Some(q)
        }))
    }
}

impl<T: ExactInt> std::iter::Sum for Ck<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Ck::zero(), |a, b| a + b)
    }
}

/// Σ_{j=1..m} base^j, computed without the (base−1) denominator.
pub fn geometric_tail<T: ExactInt>(base: u64, m: u32) -> Ck<T> {
    let b = Ck::<T>::of(base);
    let mut term = Ck::one();
    let mut acc = Ck::zero();
    for _ in 0..m {
        term = term * b.clone();
        acc = acc + term.clone();
    }
    acc
}

pub(crate) fn float_of<F: Real>(v: f64) -> F {
    F::from_f64(v).expect("finite f64 converts to any Real")
}
