#![allow(dead_code)]

use bicomplex::{BiComplex, BicomplexMatrix, BicomplexVector, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Four real integer coefficients of `1, i1, i2, j`.
pub type Coeffs = [i64; 4];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_coeffs(rng: &mut ChaCha8Rng) -> Coeffs {
    [0; 4].map(|_| rng.gen_range(-3..=3))
}

/// Integer entry, a zero divisor multiple of e1 or e2 (scaled by 2 to stay
/// integral), or zero. Zero-divisor-heavy matrices have rank-deficient
/// components, which is where the interesting cases live.
pub fn random_mixed_coeffs(rng: &mut ChaCha8Rng) -> Coeffs {
    match rng.gen_range(0..6) {
        0..=2 => random_coeffs(rng),
        // 2·e1·(a + b i1) = (a + b i1)(1 + j) = a + b i1 - b i2 + a j
        3 => {
            let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            [a, b, -b, a]
        }
        // 2·e2·(a + b i1) = a + b i1 + b i2 - a j
        4 => {
            let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            [a, b, b, -a]
        }
        _ => [0; 4],
    }
}

pub fn bc<S: Scalar>(u: &Coeffs) -> BiComplex<S> {
    BiComplex::from_components(
        S::from_i64(u[0], 0),
        S::from_i64(u[1], 0),
        S::from_i64(u[2], 0),
        S::from_i64(u[3], 0),
    )
}

/// A matrix of integer coefficient quadruples that can be instantiated on
/// either backend.
#[derive(Debug, Clone)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Coeffs>,
}

impl IntMatrix {
    pub fn random(rng: &mut ChaCha8Rng, rows: usize, cols: usize, mixed: bool) -> Self {
        let entries = (0..rows * cols)
            .map(|_| if mixed { random_mixed_coeffs(rng) } else { random_coeffs(rng) })
            .collect();
        IntMatrix { rows, cols, entries }
    }

    pub fn build<S: Scalar>(&self) -> BicomplexMatrix<S> {
        BicomplexMatrix::new(self.rows, self.cols, self.entries.iter().map(bc).collect()).unwrap()
    }
}

pub fn random_int_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Coeffs> {
    (0..n).map(|_| random_coeffs(rng)).collect()
}

pub fn build_vector<S: Scalar>(v: &[Coeffs]) -> BicomplexVector<S> {
    BicomplexVector::new(v.iter().map(bc).collect())
}

/// Random dimensions in 1..=5.
pub fn random_dims(rng: &mut ChaCha8Rng) -> (usize, usize) {
    (rng.gen_range(1..=5), rng.gen_range(1..=5))
}
