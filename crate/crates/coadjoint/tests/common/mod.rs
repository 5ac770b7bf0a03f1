//! Shared oracles and group lists for the integration targets.
#![allow(dead_code)]

use coadjoint::lie_core::{build_group, root_datum, Family, RootDatum};
use coadjoint::linalg::CMat;
use num_complex::Complex64 as C;

pub const GROUPS: [(Family, usize); 7] = [
    (Family::SU, 2),
    (Family::SU, 3),
    (Family::SU, 4),
    (Family::Sp, 2),
    (Family::Sp, 3),
    (Family::SO, 3),
    (Family::SO, 4),
];

pub fn datum(f: Family, n: usize) -> RootDatum {
    root_datum(&build_group(f, n).unwrap())
}

/// SU(3) Iwasawa data `(r₁², r₂², n₁, n₂, n₃)` in closed form.
pub fn su3_iwasawa_oracle(z: &[C]) -> (f64, f64, C, C, C) {
    let (z1, z2, z3) = (z[0], z[1], z[2]);
    let r1 = 1.0 + z1.norm_sqr() + (z3 - z1 * z2).norm_sqr();
    let r2 = 1.0 + z2.norm_sqr() + z3.norm_sqr();
    let n1 = (z1.conj() * (1.0 + z2.norm_sqr()) - z2 * z3.conj()) / r1;
    let n2 = (z2.conj() + z1 * z3.conj()) / r2;
    let n3 = z3.conj() / r2;
    (r1, r2, n1, n2, n3)
}

pub fn su3_dressing_oracle(z: &[C]) -> CMat {
    let (z1, z2, z3) = (z[0], z[1], z[2]);
    let (r1sq, r2sq, ..) = su3_iwasawa_oracle(z);
    let (r1, r2) = (r1sq.sqrt(), r2sq.sqrt());
    let one = C::new(1.0, 0.0);
    CMat::from_row_slice(
        3,
        3,
        &[
            one / r1,
            -z1.conj() / r1,
            -(z3.conj() - z1.conj() * z2.conj()) / r1,
            (z1 * (1.0 + z2.norm_sqr()) - z3 * z2.conj()) / (r1 * r2),
            (1.0 + z3.norm_sqr() - z1 * z2 * z3.conj()) / (r1 * r2),
            -(z2.conj() + z1 * z3.conj()) / (r1 * r2),
            z3 / r2,
            z2 / r2,
            one / r2,
        ],
    )
}

/// The SO(3) dressing matrix in closed form.
pub fn so3_dressing_oracle(z: C) -> CMat {
    let i = C::new(0.0, 1.0);
    let s = 1.0 + z.norm_sqr();
    let zb = z.conj();
    CMat::from_row_slice(
        3,
        3,
        &[
            (2.0 - z * z - zb * zb) / (2.0 * s),
            i * (zb * zb - z * z) / (2.0 * s),
            -(z + zb) / s,
            i * (zb * zb - z * z) / (2.0 * s),
            (2.0 + z * z + zb * zb) / (2.0 * s),
            -i * (z - zb) / s,
            (z + zb) / s,
            i * (z - zb) / s,
            C::new((1.0 - z.norm_sqr()) / s, 0.0),
        ],
    )
}
