//! Scalar abstraction: the numeric kernels are generic over `f32`/`f64`.
//!
//! Sampling hooks live on the trait so that generic code never needs to
//! name `rand_distr` bounds. Concrete type aliases for the main domain
//! types are exported from the crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, Open01, Poisson};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Conversion from `f64` for constants and tolerances (lossy for `f32`).
    fn of(x: f64) -> Self;

    /// Uniform draw from the open interval (0, 1).
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Uniform draw from [0, 1).
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Standard exponential draw (rate 1).
    fn std_exp<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Gamma(shape, scale 1) draw; `shape` must be positive and finite.
    fn std_gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self) -> Self;

    /// Poisson(mean) count; `mean` must be nonnegative and finite.
    fn poisson_count<R: Rng + ?Sized>(rng: &mut R, mean: Self) -> u64;

    /// Largest `w` such that `exp(-w)` is safely a normal positive number.
    /// Log-substituted integrals over (0, 1] stop here.
    fn max_neg_exp() -> Self {
        // ~708.4 for f64, ~87.3 for f32; keep a margin away from underflow.
        -Self::min_positive_value().ln() * Self::of(0.985)
    }
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            #[inline]
            fn of(x: f64) -> Self {
                x as $t
            }

            #[inline]
            fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self {
                Open01.sample(rng)
            }

            #[inline]
            fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random::<$t>()
            }

            #[inline]
            fn std_exp<R: Rng + ?Sized>(rng: &mut R) -> Self {
                Exp1.sample(rng)
            }

            fn std_gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self) -> Self {
                Gamma::new(shape, 1.0)
                    .expect("gamma shape must be positive and finite")
                    .sample(rng)
            }

            fn poisson_count<R: Rng + ?Sized>(rng: &mut R, mean: Self) -> u64 {
                if mean <= 0.0 {
                    return 0;
                }
                let draw: $t = Poisson::new(mean)
                    .expect("poisson mean must be positive and finite")
                    .sample(rng);
                draw as u64
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampling_hooks_produce_values_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let u: f64 = Real::open01(&mut rng);
            assert!(u > 0.0 && u < 1.0);
            let v: f64 = Real::unit_uniform(&mut rng);
            assert!((0.0..1.0).contains(&v));
            let e: f64 = Real::std_exp(&mut rng);
            assert!(e >= 0.0);
            let g: f64 = Real::std_gamma(&mut rng, 0.5);
            assert!(g >= 0.0);
        }
        assert_eq!(f64::poisson_count(&mut rng, 0.0), 0);
    }

    #[test]
    fn max_neg_exp_does_not_underflow() {
        let w64 = f64::max_neg_exp();
        assert!((-w64).exp() > 0.0);
        let w32 = f32::max_neg_exp();
        assert!((-w32).exp() > 0.0);
    }
}
