//! Exact scalar and matrix arithmetic: arbitrary-precision rationals, the
//! cyclotomic fields `Q(ζ_m)`, dense exact linear algebra, integer Smith
//! normal form, and nilpotent logarithm/exponential.

mod cyclo;
mod int;
mod matrix;
mod nilpotent;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloScalar};
pub use int::{IntMatrix, SmithNormalForm};
pub use matrix::{Matrix, Subspace};
pub use nilpotent::{nilpotent_exp, nilpotent_log, quasi_unipotent_order};

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt::Debug;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator.
pub type Rat = BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum ExactError {
    #[error("matrix is not unipotent: (U - I)^n != 0")]
    NotUnipotent,
    #[error("matrix is not quasi-unipotent within bound {0}")]
    NotQuasiUnipotent(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("scalar is not invertible")]
    NotInvertible,
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Field scalars the linear-algebra kernel is generic over.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// The automorphism sending every root of unity to its inverse.
    /// Identity on rationals.
    fn conj(&self) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }
    fn one() -> Self {
        BigRational::from_integer(BigInt::from(1))
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}
