//! Seeded random inputs for property checks. Same seed, same values.

use compbern_core::rational::ratio;
use compbern_core::{EgfSeries, QPolynomial, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_b3e2;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Numerator in `-100..=100`, denominator in `1..=max_den`.
    pub fn rational(&mut self, max_den: i64) -> Rational {
        let num = self.rng.gen_range(-100..=100);
        let den = self.rng.gen_range(1..=max_den);
        ratio(num, den)
    }

    pub fn nonzero_rational(&mut self, max_den: i64) -> Rational {
        loop {
            let r = self.rational(max_den);
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn series(&mut self, order: usize, max_den: i64) -> EgfSeries {
        EgfSeries::from_fn(order, |_| self.rational(max_den))
    }

    /// `g_0 = 0` and `g_1 != 0`, so `g` has a compositional inverse.
    pub fn invertible_series(&mut self, order: usize, max_den: i64) -> EgfSeries {
        let mut g = self.series(order, max_den).into_coeffs();
        g[0] = Rational::zero();
        if order >= 1 {
            g[1] = self.nonzero_rational(max_den);
        }
        EgfSeries::new(g)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn polynomial(&mut self, max_degree: usize, max_den: i64) -> QPolynomial {
        let deg = self.rng.gen_range(0..=max_degree);
        QPolynomial::new((0..=deg).map(|_| self.rational(max_den)).collect())
    }
}
