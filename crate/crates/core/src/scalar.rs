//! Field-generic scalar traits.
//!
//! Everything in this crate is generic over [`Scalar`], which is implemented
//! for `f32`, `f64` and `Complex<f32>`, `Complex<f64>`. The ground field of a
//! computation is a property of the scalar type, exposed as [`Scalar::FIELD`].

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

/// Ground field tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Real => f.write_str("real"),
            Field::Complex => f.write_str("complex"),
        }
    }
}

/// A real or complex scalar.
///
/// Conjugation is the identity on real scalars. Inner products built from
/// this trait are conjugate-linear in the left argument.
pub trait Scalar:
    Copy + Debug + PartialEq + Send + Sync + Num + Neg<Output = Self> + Sum + 'static
{
    type Real: RealScalar;

    const FIELD: Field;

    fn conj(self) -> Self;
    fn re(self) -> Self::Real;
    fn im(self) -> Self::Real;
    fn modulus(self) -> Self::Real;
    fn modulus_sqr(self) -> Self::Real;
    fn from_real(r: Self::Real) -> Self;

    /// Builds a scalar from real and imaginary parts. Real scalars drop `im`.
    fn from_parts(re: Self::Real, im: Self::Real) -> Self;

    /// Unit-variance Gaussian sample (circularly symmetric in the complex case).
    fn sample_gaussian<G: Rng + ?Sized>(rng: &mut G) -> Self;

    #[inline]
    fn scale(self, r: Self::Real) -> Self {
        self * Self::from_real(r)
    }

    /// `e^{i·phase}`; for real scalars this is the sign of `cos(phase)`.
    fn from_phase(phase: Self::Real) -> Self {
        Self::from_parts(phase.cos(), phase.sin())
    }
}

/// Real scalars: `f32` and `f64`.
pub trait RealScalar:
    Scalar<Real = Self> + Float + FloatConst + FromPrimitive + ToPrimitive + Display
{
    /// Converts an `f64` constant (a tolerance, a test value) into this type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn standard_normal<G: Rng + ?Sized>(rng: &mut G) -> Self;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Scalar for $t {
            type Real = $t;
            const FIELD: Field = Field::Real;

            #[inline]
            fn conj(self) -> Self {
                self
            }
            #[inline]
            fn re(self) -> Self {
                self
            }
            #[inline]
            fn im(self) -> Self {
                0.0
            }
            #[inline]
            fn modulus(self) -> Self {
                self.abs()
            }
            #[inline]
            fn modulus_sqr(self) -> Self {
                self * self
            }
            #[inline]
            fn from_real(r: Self) -> Self {
                r
            }
            #[inline]
            fn from_parts(re: Self, _im: Self) -> Self {
                re
            }
            fn sample_gaussian<G: Rng + ?Sized>(rng: &mut G) -> Self {
                StandardNormal.sample(rng)
            }
            fn from_phase(phase: Self) -> Self {
                if phase.cos() < 0.0 {
                    -1.0
                } else {
                    1.0
                }
            }
        }

        impl RealScalar for $t {
            fn standard_normal<G: Rng + ?Sized>(rng: &mut G) -> Self {
                StandardNormal.sample(rng)
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

impl<R: RealScalar> Scalar for Complex<R> {
    type Real = R;
    const FIELD: Field = Field::Complex;

    #[inline]
    fn conj(self) -> Self {
        Complex::conj(&self)
    }
    #[inline]
    fn re(self) -> R {
        self.re
    }
    #[inline]
    fn im(self) -> R {
        self.im
    }
    #[inline]
    fn modulus(self) -> R {
        self.re.hypot(self.im)
    }
    #[inline]
    fn modulus_sqr(self) -> R {
        self.re * self.re + self.im * self.im
    }
    #[inline]
    fn from_real(r: R) -> Self {
        Complex::new(r, R::zero())
    }
    #[inline]
    fn from_parts(re: R, im: R) -> Self {
        Complex::new(re, im)
    }
    fn sample_gaussian<G: Rng + ?Sized>(rng: &mut G) -> Self {
        let half = R::lit(std::f64::consts::FRAC_1_SQRT_2);
        let re = R::standard_normal(rng);
        let im = R::standard_normal(rng);
        Complex::new(re * half, im * half)
    }
}

/// Argument of a scalar in `(−π, π]`; `−π` is reported as `+π`.
pub fn phase<S: Scalar>(z: S) -> S::Real {
    let p = z.im().atan2(z.re());
    if p <= -S::Real::PI() {
        S::Real::PI()
    } else {
        p
    }
}
