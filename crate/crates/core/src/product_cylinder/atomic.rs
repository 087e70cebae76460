//! Products of atomic states.

use num_complex::Complex64;

use crate::error::Result;
use crate::sqrt_calculus::{inner, inner_measure, AtomicState};

/// `u1 · u2`: atoms on the Cartesian product of supports with amplitude
/// `f1 f2` and weight `w1 w2`.
pub fn product(u1: &AtomicState, u2: &AtomicState) -> Result<AtomicState> {
    let d = u1.dimension() + u2.dimension();
    let mut atoms = Vec::with_capacity(u1.len() * u2.len());
    for (i, p) in u1.base().points().enumerate() {
        for (j, q) in u2.base().points().enumerate() {
            let mut x = p.to_vec();
            x.extend_from_slice(q);
            atoms.push((x, u1.base().weight(i) * u2.base().weight(j), u1.amps()[i] * u2.amps()[j]));
        }
    }
    AtomicState::from_atoms(d, atoms)
}

/// `(⟨u1·u2, v1·v2⟩, ⟨u1, v1⟩⟨u2, v2⟩)`.
pub fn product_inner_factorization_check(
    u1: &AtomicState,
    v1: &AtomicState,
    u2: &AtomicState,
    v2: &AtomicState,
) -> Result<(Complex64, Complex64)> {
    let lhs = inner(&product(u1, u2)?, &product(v1, v2)?)?;
    let rhs = inner(u1, v1)? * inner(u2, v2)?;
    Ok((lhs, rhs))
}

/// Largest atomwise gap between `⟨⟨u1·u2, v1·v2⟩⟩` and the product of the
/// component inner-product measures.
pub fn inner_measure_factorization_residual(
    u1: &AtomicState,
    v1: &AtomicState,
    u2: &AtomicState,
    v2: &AtomicState,
) -> Result<f64> {
    let joint = inner_measure(&product(u1, u2)?, &product(v1, v2)?)?;
    let m1 = inner_measure(u1, v1)?;
    let m2 = inner_measure(u2, v2)?;
    let d1 = u1.dimension();
    let zero = Complex64::new(0.0, 0.0);
    let mut worst: f64 = 0.0;
    for (k, x) in joint.base.points().enumerate() {
        let a = m1.base.index_of(&x[..d1]).map_or(zero, |i| m1.values[i]);
        let b = m2.base.index_of(&x[d1..]).map_or(zero, |i| m2.values[i]);
        worst = worst.max((joint.values[k] - a * b).norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_state(rng: &mut ChaCha8Rng, dim: usize) -> AtomicState {
        let n = rng.gen_range(1..6);
        AtomicState::from_atoms(
            dim,
            (0..n).map(|_| {
                let p: Vec<f64> = (0..dim).map(|_| rng.gen_range(0..4) as f64).collect();
                (p, rng.gen_range(0.1..2.0), Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            }),
        )
        .unwrap_or_else(|_| AtomicState::zero(dim))
    }

    #[test]
    fn unit_point_mass_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_state(&mut rng, 2);
        let one = AtomicState::point_mass(vec![], 1.0, Complex64::new(1.0, 0.0));
        if let Ok(one) = one {
            assert_eq!(product(&u, &one).unwrap(), u);
        }
        let one = AtomicState::point_mass(vec![0.0], 1.0, Complex64::new(1.0, 0.0)).unwrap();
        let p = product(&u, &one).unwrap();
        assert_eq!(p.len(), u.len());
        assert!((p.norm() - u.norm()).abs() < 1e-15);
    }

    #[test]
    fn norms_multiply_and_product_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let (a, b, c) = (random_state(&mut rng, 1), random_state(&mut rng, 2), random_state(&mut rng, 1));
            let ab = product(&a, &b).unwrap();
            assert!((ab.norm() - a.norm() * b.norm()).abs() < 1e-12);
            let left = product(&ab, &c).unwrap();
            let right = product(&a, &product(&b, &c).unwrap()).unwrap();
            assert!(left.approx_eq(&right, 1e-14));
        }
        // dyadic data: every product is exact, so the two groupings agree bit for bit
        let dyadic = |k: i32| {
            AtomicState::from_atoms(
                1,
                (0..3).map(|j| (vec![j as f64], 0.5f64.powi(j + k), Complex64::new(0.25 * (j + 1) as f64, -0.5))),
            )
            .unwrap()
        };
        let (a, b, c) = (dyadic(0), dyadic(1), dyadic(2));
        let left = product(&product(&a, &b).unwrap(), &c).unwrap();
        let right = product(&a, &product(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn inner_products_factorize() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (u1, v1) = (random_state(&mut rng, 1), random_state(&mut rng, 1));
            let (u2, v2) = (random_state(&mut rng, 2), random_state(&mut rng, 2));
            let (lhs, rhs) = product_inner_factorization_check(&u1, &v1, &u2, &v2).unwrap();
            assert!((lhs - rhs).norm() < 1e-12);
            assert!(inner_measure_factorization_residual(&u1, &v1, &u2, &v2).unwrap() < 1e-14);
        }
        let u = random_state(&mut rng, 1);
        let (lhs, rhs) = product_inner_factorization_check(&u, &u, &u, &u).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
        assert!((rhs.re - u.norm_sqr().powi(2)).abs() < 1e-12);
    }
}
