//! Seeded problem generators shared by the benchmarks.

use krein_frames::construction::NormSpec;
use krein_frames::linalg::{c64, diag_real, hermitian_eig};
use krein_frames::{ComplexMatrix, PontryaginSpace, VectorFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

/// Signature with the first `n / 2` entries negative.
pub fn mixed_space(n: usize) -> PontryaginSpace {
    PontryaginSpace::new((0..n).map(|i| if i < n / 2 { -1 } else { 1 }).collect())
        .expect("valid signature")
}

pub fn random_frame(seed: u64, n: usize, k: usize) -> VectorFamily {
    let mut rng = rng(seed);
    VectorFamily::new(mixed_space(n), random_matrix(&mut rng, n, k)).expect("well-formed family")
}

pub fn random_hermitian(seed: u64, n: usize) -> ComplexMatrix {
    let a = random_matrix(&mut rng(seed), n, n);
    &a + a.adjoint()
}

/// Positive definite `S0` on a mixed space with equal norms `a_n² = tr S0 / k`,
/// which are always feasible.
pub fn construction_instance(
    seed: u64,
    n: usize,
    k: usize,
) -> (PontryaginSpace, ComplexMatrix, NormSpec) {
    let mut rng = rng(seed);
    let lambda: Vec<f64> = (0..n).map(|_| rng.random_range(1.0..2.0)).collect();
    let u = hermitian_eig(&random_hermitian(seed ^ 0x5eed, n))
        .expect("finite input")
        .vectors;
    let s0 = &u * diag_real(&lambda) * u.adjoint();
    let s0 = (&s0 + s0.adjoint()) * c64(0.5, 0.0);
    let a = (lambda.iter().sum::<f64>() / k as f64).sqrt();
    (
        mixed_space(n),
        s0,
        NormSpec::new(vec![a; k]).expect("positive norms"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use krein_frames::construction::{construct_frame, Flavor};
    use krein_frames::frames::validate;

    #[test]
    fn generators_produce_valid_instances() {
        for (n, k) in [(1, 1), (4, 8), (16, 32)] {
            assert!(validate(&random_frame(1, n, k)).unwrap().is_frame());
            let (space, s0, norms) = construction_instance(2, n, k);
            assert!(construct_frame(&space, &s0, &norms, Flavor::HilbertFrame).is_ok());
        }
    }
}
