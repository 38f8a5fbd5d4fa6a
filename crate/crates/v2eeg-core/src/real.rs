//! Scalar abstraction over `f32` and `f64`.
//!
//! Training and sampling run at 32-bit; gradient checks and test oracles run
//! at 64-bit. Transcendentals route through `libm` when `std` is disabled.

use core::fmt::{Debug, Display};
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Real scalar used by the tensor engine and the models built on it.
pub trait Real:
    Copy
    + PartialOrd
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Send
    + Sync
    + 'static
{
    const ZERO: Self;
    const ONE: Self;

    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn from_usize(v: usize) -> Self {
        Self::from_f64(v as f64)
    }

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn powi(self, n: i32) -> Self;
    fn is_finite(self) -> bool;

    fn max(self, other: Self) -> Self {
        if self > other {
            self
        } else {
            other
        }
    }
    fn min(self, other: Self) -> Self {
        if self < other {
            self
        } else {
            other
        }
    }
    fn clamp(self, lo: Self, hi: Self) -> Self {
        self.max(lo).min(hi)
    }
}

macro_rules! impl_real {
    ($t:ty, $libm_pfx:ident, $exp:ident, $ln:ident, $sqrt:ident, $sin:ident, $cos:ident, $fabs:ident, $pow:ident) => {
        impl Real for $t {
            const ZERO: Self = 0.0;
            const ONE: Self = 1.0;

            #[inline]
            fn from_f64(v: f64) -> Self {
                v as $t
            }
            #[inline]
            fn to_f64(self) -> f64 {
                self as f64
            }

            #[inline]
            fn abs(self) -> Self {
                #[cfg(feature = "std")]
                {
                    self.abs()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$fabs(self)
                }
            }
            #[inline]
            fn sqrt(self) -> Self {
                #[cfg(feature = "std")]
                {
                    self.sqrt()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$sqrt(self)
                }
            }
            #[inline]
            fn exp(self) -> Self {
                #[cfg(feature = "std")]
                {
                    self.exp()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$exp(self)
                }
            }
            #[inline]
            fn ln(self) -> Self {
                #[cfg(feature = "std")]
                {
                    self.ln()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$ln(self)
                }
            }
            #[inline]
            fn sin(self) -> Self {
                #[cfg(feature = "std")]
                {
                    self.sin()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$sin(self)
                }
            }
            #[inline]
            fn cos(self) -> Self {
                #[cfg(feature = "std")]
                {
                    self.cos()
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$cos(self)
                }
            }
            #[inline]
            fn powi(self, n: i32) -> Self {
                #[cfg(feature = "std")]
                {
                    self.powi(n)
                }
                #[cfg(not(feature = "std"))]
                {
                    libm::$pow(self, n as $t)
                }
            }
            #[inline]
            fn is_finite(self) -> bool {
                <$t>::is_finite(self)
            }
        }
    };
}

impl_real!(f64, f64, exp, log, sqrt, sin, cos, fabs, pow);
impl_real!(f32, f32, expf, logf, sqrtf, sinf, cosf, fabsf, powf);
