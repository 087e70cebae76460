use cmcalc::grid_spectral::oracle::Gaussian1d;
use cmcalc::grid_spectral::{grid_inner, Grid, GridState};
use cmcalc::product_cylinder::profile::BUMP_DERIVATIVE_NORM_SQR;
use cmcalc::product_cylinder::{
    build_family, cylinder_inner, family_derivative_norm_sqr, tensor, BinaryAddress, CylinderState, ScaleLaw,
    TailProduct,
};
use cmcalc::{Complex64, Error};

const HARMONIC: ScaleLaw = ScaleLaw::Power { coefficient: 1.0, exponent: 1.0 };

#[test]
fn family_is_orthonormal() {
    let family: Vec<CylinderState> =
        BinaryAddress::all(4).iter().map(|a| build_family(a, HARMONIC).unwrap()).collect();
    for (i, u) in family.iter().enumerate() {
        for (j, v) in family.iter().enumerate() {
            let z = cylinder_inner(u, v).unwrap();
            if i == j {
                assert!((z.re - 1.0).abs() < 1e-10 && z.im.abs() < 1e-10, "{i}: {z}");
            } else {
                assert_eq!(z, Complex64::new(0.0, 0.0), "{i} {j}");
            }
        }
    }
}

#[test]
fn derivative_norms_follow_the_scale_law() {
    for n in 1..6 {
        let l = HARMONIC.scale(n);
        let expected = BUMP_DERIVATIVE_NORM_SQR / l.powi(4);
        assert!((family_derivative_norm_sqr(HARMONIC, n) - expected).abs() <= 1e-12 * expected);
    }
}

#[test]
fn non_summable_scale_law_is_rejected() {
    let err = build_family(&BinaryAddress::new(vec![true], false), ScaleLaw::Constant { scale: 2.0 });
    assert!(matches!(err, Err(Error::DivergentScaleRule(_))));
}

#[test]
fn tensoring_factors_inner_products() {
    let grid = Grid::cube(1, 30.0, 256).unwrap();
    let f1 = GridState::from_fn(grid.clone(), |x| Gaussian1d::normalized(1.0, 0.3).value(x[0]));
    let f2 = GridState::from_fn(grid, |x| Gaussian1d::normalized(1.4, -0.2).value(x[0]) * Complex64::new(0.0, 1.0));
    let u1 = build_family(&BinaryAddress::new(vec![false, true], false), HARMONIC).unwrap();
    let u2 = u1.scale(Complex64::new(0.5, -0.5));
    let lhs = cylinder_inner(&tensor(&f1, &u1), &tensor(&f2, &u2)).unwrap();
    let rhs = grid_inner(&f1, &f2).unwrap() * cylinder_inner(&u1, &u2).unwrap();
    assert!((lhs - rhs).norm() < 1e-10);
    let t = tensor(&f1, &u1);
    assert_eq!(t.head_dimension(), 1);
    assert!((t.norm().unwrap() - f1.norm() * u1.norm().unwrap()).abs() < 1e-12);
}

#[test]
fn scalar_head_tensor_is_identity() {
    let u = build_family(&BinaryAddress::new(vec![true], true), HARMONIC).unwrap();
    let one = GridState::scalar(Complex64::new(1.0, 0.0));
    let t = tensor(&one, &u);
    assert!(t.approx_eq(&u, 0.0).unwrap());
}

#[test]
fn tails_differing_in_one_offset_are_orthogonal() {
    let grid = Grid::cube(1, 30.0, 256).unwrap();
    let f = GridState::from_fn(grid, |x| Gaussian1d::normalized(1.0, 0.0).value(x[0]));
    let a = tensor(&f, &build_family(&BinaryAddress::new(vec![false, false, true], false), HARMONIC).unwrap());
    let b = tensor(&f, &build_family(&BinaryAddress::new(vec![false, false, false], false), HARMONIC).unwrap());
    assert_eq!(cylinder_inner(&a, &b).unwrap(), Complex64::new(0.0, 0.0));
}

#[test]
fn tail_json_roundtrip() {
    let u = build_family(&BinaryAddress::new(vec![true, false, true], false), HARMONIC).unwrap();
    let text = u.tail().to_json().unwrap();
    let back = TailProduct::from_json(&text).unwrap();
    assert!(back.same_as(u.tail()));
}
