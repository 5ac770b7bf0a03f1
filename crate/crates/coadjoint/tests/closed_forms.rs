//! Factorizations compared entrywise with hand-derived closed forms.

mod common;

use coadjoint::decompose::quaternionic::{quaternionic_chart, quaternionic_iwasawa};
use coadjoint::decompose::iwasawa;
use coadjoint::lie_core::{Family, QMatrix, Quaternion};
use coadjoint::linalg::{dist, CMat};
use coadjoint::sample;
use common::{datum, so3_dressing_oracle, su3_dressing_oracle, su3_iwasawa_oracle};
use num_complex::Complex64 as C;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn su3_iwasawa_closed_forms() {
    let d = datum(Family::SU, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let p = sample::chart_point(&d, &mut rng, 2.0);
        let f = iwasawa(&d, &p).unwrap();
        let (r1, r2, n1, n2, n3) = su3_iwasawa_oracle(&p.coords);
        assert!((f.log_trailing_minor(2).exp() - r1).abs() < 1e-10 * r1);
        assert!((f.log_trailing_minor(1).exp() - r2).abs() < 1e-10 * r2);
        assert!((f.n[(0, 1)] - n1).norm() < 1e-10);
        assert!((f.n[(1, 2)] - n2).norm() < 1e-10);
        assert!((f.n[(0, 2)] - n3).norm() < 1e-10);
        let a = [1.0 / r1.sqrt(), r1.sqrt() / r2.sqrt(), r2.sqrt()];
        for (k, ak) in a.iter().enumerate() {
            assert!((f.a[(k, k)].re - ak).abs() < 1e-10);
        }
        assert!(dist(&f.k, &su3_dressing_oracle(&p.coords)) < 1e-10);
    }
}

#[test]
fn so3_closed_forms() {
    let d = datum(Family::SO, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let p = sample::chart_point(&d, &mut rng, 2.0);
        let z = p.coords[0];
        let f = iwasawa(&d, &p).unwrap();
        let e_a = 1.0 + z.norm_sqr();
        assert!((f.a_diagonal()[2] - e_a).abs() < 1e-10 * e_a);
        let (ch, sh) = ((e_a + 1.0 / e_a) / 2.0, (e_a - 1.0 / e_a) / 2.0);
        let block = CMat::from_row_slice(
            3,
            3,
            &[
                C::new(ch, 0.0), C::new(0.0, -sh), C::new(0.0, 0.0),
                C::new(0.0, sh), C::new(ch, 0.0), C::new(0.0, 0.0),
                C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(1.0, 0.0),
            ],
        );
        assert!(dist(&f.a, &block) < 1e-10 * e_a);
        assert!((f.n[(0, 2)] - z.conj() / e_a).norm() < 1e-10);
        assert!(dist(&f.k, &so3_dressing_oracle(z)) < 1e-10);
    }
}

#[test]
fn so3_dressing_entries_are_pinned_by_orthogonality() {
    let z = C::new(0.7, -0.4);
    let mut variant = so3_dressing_oracle(z);
    let s = 1.0 + z.norm_sqr();
    variant[(1, 2)] = -C::new(0.0, 1.0) * (z - z * z.conj()) / s;
    variant[(2, 0)] = (z + z * z.conj()) / s;
    let id = CMat::identity(3, 3);
    assert!(dist(&(&variant * variant.transpose()), &id) > 1e-2);
    let fixed = so3_dressing_oracle(z);
    assert!(dist(&(&fixed * fixed.transpose()), &id) < 1e-14);
}

fn q(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(sample::complex(rng, 1.5), sample::complex(rng, 1.5))
}

#[test]
fn sp2_quaternionic_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let qq = q(&mut rng);
        let f = quaternionic_iwasawa(&quaternionic_chart(2, &[qq]).unwrap()).unwrap();
        let r2 = 1.0 + qq.norm_sqr();
        assert!((f.radii_squared()[0] - r2).abs() < 1e-12 * r2);
        assert!((f.n.get(0, 1) - qq.conj().scale(1.0 / r2)).norm() < 1e-12);
    }
}

#[test]
fn sp3_quaternionic_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..200 {
        let (q1, q2, q3) = (q(&mut rng), q(&mut rng), q(&mut rng));
        let z = quaternionic_chart(3, &[q1, q2, q3]).unwrap();
        let f = quaternionic_iwasawa(&z).unwrap();
        let r1 = 1.0 + q1.norm_sqr() + (q3 - q2 * q1).norm_sqr();
        let r2 = 1.0 + q2.norm_sqr() + q3.norm_sqr();
        let radii = f.radii_squared();
        assert!((radii[1] - r1).abs() < 1e-10 * r1, "r1");
        assert!((radii[0] - r2).abs() < 1e-10 * r2, "r2");
        let v1 = (q1.conj().scale(1.0 + q2.norm_sqr()) - q3.conj() * q2).scale(1.0 / r1);
        let v2 = (q2.conj() + q1 * q3.conj()).scale(1.0 / r2);
        let v3 = q3.conj().scale(1.0 / r2);
        assert!((f.n.get(0, 1) - v1).norm() < 1e-10, "v1");
        assert!((f.n.get(1, 2) - v2).norm() < 1e-10, "v2");
        assert!((f.n.get(0, 2) - v3).norm() < 1e-10, "v3");
        let kk = f.k.mul(&f.k.adjoint()).sub(&QMatrix::identity(3));
        assert!(kk.max_abs() < 1e-10);
    }
}
