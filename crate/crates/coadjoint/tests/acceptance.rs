//! Acceptance report: one line per criterion, nonzero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use coadjoint::cohomology::{betti, leray_hirsch_for, pairing_matrix, PAIRING_NORMALIZATION};
use coadjoint::decompose::{chart_matrix, compactness_defect, iwasawa, torus_character_diagonal, ChartPoint};
use coadjoint::kahler::{cocycle_shift, metric, potential};
use coadjoint::lie_core::{weyl_group, Family, InitialPoint};
use coadjoint::linalg::{dist, identity, max_abs, spectrum_distance, CMat};
use coadjoint::orbit::{chart_transition, dress, su3_closed_form, su3_transition_closed_form};
use coadjoint::sample;
use common::{datum, so3_dressing_oracle, su3_dressing_oracle, su3_iwasawa_oracle, GROUPS};
use num_complex::Complex64 as C;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240611;

const STEREO_TOL: f64 = 1e-10;
const STEREO_POINTS: usize = 1000;
const STEREO_SECONDS: f64 = 5.0;
const IWASAWA_TOL: f64 = 1e-10;
const IWASAWA_POINTS: usize = 500;
const SPECTRUM_TOL: f64 = 1e-10;
const COVARIANCE_TOL: f64 = 1e-8;
const COVARIANCE_PAIRS: usize = 200;
const PAIRING_TOL: f64 = 1e-6;
const PAIRING_NODES: usize = 128;
const PAIRING_SECONDS: f64 = 30.0;
const FIBER_METRIC_TOL: f64 = 1e-6;
const CP2_ORIGIN_TOL: f64 = 1e-7;
const TRANSITION_TOL: f64 = 1e-8;
const TRANSITION_POINTS: usize = 100;
const POLE_MARGIN: f64 = 0.1;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: usize, pass: bool, text: String) {
        if !pass {
            self.failures += 1;
        }
        println!("{} [{id}] {text}", if pass { "PASS" } else { "FAIL" });
    }
}

/// Spectra of dressed points seen by criteria 1 and 2, checked as criterion 3.
struct Spectra {
    worst: f64,
    count: usize,
}

impl Spectra {
    fn record(&mut self, a: &[f64], b: &[f64]) {
        self.worst = self.worst.max(spectrum_distance(a, b));
        self.count += 1;
    }
}

fn stereographic(report: &mut Report, spectra: &mut Spectra) {
    let d = datum(Family::SU, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for _ in 0..STEREO_POINTS {
        let mu0 = InitialPoint::new(&d, &sample::weights(&d, &mut rng, 0.0, 10.0)).unwrap();
        let p = sample::chart_point(&d, &mut rng, 2.0);
        let mu = dress(&d, &mu0, &p).unwrap();
        let want = su3_closed_form(&mu0, &p).unwrap();
        for (a, b) in mu.coords.as_ref().unwrap().iter().zip(&want) {
            worst = worst.max((a - b).abs());
        }
        spectra.record(&mu.spectrum(), &mu0.spectrum());
    }
    let secs = start.elapsed().as_secs_f64();
    report.line(
        1,
        worst < STEREO_TOL && secs < STEREO_SECONDS,
        format!(
            "SU(3) dressing vs closed forms: {STEREO_POINTS} points, max residual {worst:.2e} (tol {STEREO_TOL:e}), {secs:.2} s (limit {STEREO_SECONDS} s)"
        ),
    );
}

fn iwasawa_suite(report: &mut Report, spectra: &mut Spectra) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut worst_back: f64 = 0.0;
    let mut worst_unit: f64 = 0.0;
    let mut worst_closed: f64 = 0.0;
    for (f, n) in GROUPS {
        let d = datum(f, n);
        for _ in 0..IWASAWA_POINTS {
            let p = sample::chart_point(&d, &mut rng, 1.5);
            let z = chart_matrix(&d, &p).unwrap();
            let fac = iwasawa(&d, &p).unwrap();
            worst_back = worst_back.max(dist(&(&fac.n * &fac.a * &fac.k), &z) / max_abs(&z).max(1.0));
            worst_unit = worst_unit.max(dist(&(&fac.k * fac.k.adjoint()), &identity(d.dim())));
            worst_unit = worst_unit.max(compactness_defect(&d, &fac.k));
            let mu0 = InitialPoint::new(&d, &sample::weights(&d, &mut rng, 0.0, 5.0)).unwrap();
            let mu = dress(&d, &mu0, &p).unwrap();
            spectra.record(&mu.spectrum(), &mu0.spectrum());
            match (f, n) {
                (Family::SU, 3) => {
                    let (r1, r2, n1, n2, n3) = su3_iwasawa_oracle(&p.coords);
                    let rel = |got: f64, want: f64| (got - want).abs() / want;
                    worst_closed = worst_closed
                        .max(rel(fac.log_trailing_minor(2).exp(), r1))
                        .max(rel(fac.log_trailing_minor(1).exp(), r2))
                        .max((fac.n[(0, 1)] - n1).norm())
                        .max((fac.n[(1, 2)] - n2).norm())
                        .max((fac.n[(0, 2)] - n3).norm())
                        .max(dist(&fac.k, &su3_dressing_oracle(&p.coords)));
                }
                (Family::SO, 3) => {
                    let z = p.coords[0];
                    let e_a = 1.0 + z.norm_sqr();
                    worst_closed = worst_closed
                        .max((fac.a_diagonal()[2] - e_a).abs() / e_a)
                        .max((fac.n[(0, 2)] - z.conj() / e_a).norm())
                        .max(dist(&fac.k, &so3_dressing_oracle(z)));
                }
                _ => {}
            }
        }
    }
    let worst = worst_back.max(worst_unit).max(worst_closed);
    report.line(
        2,
        worst < IWASAWA_TOL,
        format!(
            "Iwasawa over SU(2..4), Sp(2..3), SO(3..4), {IWASAWA_POINTS} points each: multiply-back {worst_back:.2e}, kk*-I {worst_unit:.2e}, SU(3)/SO(3) closed forms {worst_closed:.2e} (tol {IWASAWA_TOL:e})"
        ),
    );
}

fn covariance(report: &mut Report) {
    let d = datum(Family::SU, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut worst: f64 = 0.0;
    let mut opposite: f64 = 0.0;
    let mut done = 0;
    while done < COVARIANCE_PAIRS {
        let mu0 = InitialPoint::new(&d, &sample::weights(&d, &mut rng, 0.0, 5.0)).unwrap();
        let p = sample::chart_point(&d, &mut rng, 1.5);
        let g = sample::compact_element(&d, &mut rng);
        let Ok(s) = cocycle_shift(&d, &mu0, &p, &g) else { continue };
        let lhs = potential(&d, &mu0, &s.z_g).unwrap() - potential(&d, &mu0, &p).unwrap();
        let chi = torus_character_diagonal(&d, &s.d_diagonal, &mu0.weights).unwrap();
        worst = worst.max((lhs - s.shift).abs());
        opposite = opposite.max((lhs - 2.0 * chi.norm().ln()).abs());
        done += 1;
    }
    report.line(
        4,
        worst < COVARIANCE_TOL,
        format!(
            "potential covariance Phi(z_g) - Phi(z) = -ln|chi(d)|^2 on {COVARIANCE_PAIRS} SU(3) pairs: max residual {worst:.2e} (tol {COVARIANCE_TOL:e}); with +ln|chi(d)|^2 the residual is {opposite:.2e}"
        ),
    );
}

fn pairing(report: &mut Report) {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut errors = Vec::new();
    for (f, n) in [(Family::SU, 2), (Family::SU, 3), (Family::Sp, 2)] {
        let d = datum(f, n);
        match pairing_matrix(&d, PAIRING_NODES) {
            Ok(m) => {
                let id = nalgebra::DMatrix::<f64>::identity(m.nrows(), m.ncols());
                worst = worst.max((m - id).abs().max());
            }
            Err(e) => errors.push(format!("{}: {e}", d.group)),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report.line(
        5,
        errors.is_empty() && worst < PAIRING_TOL && secs < PAIRING_SECONDS,
        format!(
            "pairing matrix = I for SU(2), SU(3), Sp(2): max deviation {worst:.2e} (tol {PAIRING_TOL:e}), {secs:.2} s (limit {PAIRING_SECONDS} s), normalization {PAIRING_NORMALIZATION}{}",
            if errors.is_empty() { String::new() } else { format!(", errors: {}", errors.join("; ")) }
        ),
    );
}

fn betti_suite(report: &mut Report) {
    let cases: [(Family, usize, &[f64], &[u64]); 3] = [
        (Family::SU, 2, &[1.0], &[1, 1]),
        (Family::SU, 3, &[1.0, 1.0], &[1, 2, 2, 1]),
        (Family::SU, 3, &[0.0, 1.0], &[1, 1, 1]),
    ];
    let mut ok = true;
    let mut seen = Vec::new();
    for (f, n, w, want) in cases {
        let d = datum(f, n);
        let mu0 = InitialPoint::new(&d, w).unwrap();
        let b = betti(&d, &weyl_group(&d), &mu0).unwrap();
        ok &= b.b == want;
        seen.push(format!("{}{w:?} -> {:?} (sum {})", d.group, b.b, b.total()));
    }
    for (n, w) in [(3, vec![1.0, 1.0]), (4, vec![1.0, 1.0, 1.0]), (4, vec![0.0, 1.0, 1.0])] {
        let d = datum(Family::SU, n);
        let mu0 = InitialPoint::new(&d, &w).unwrap();
        let lh = leray_hirsch_for(&d, &weyl_group(&d), &mu0).unwrap();
        ok &= lh.holds && lh.note.is_none();
        seen.push(format!("LH {}{w:?}: {:?} x {:?} = {:?}", d.group, lh.base, lh.fiber, lh.total));
    }
    report.line(6, ok, format!("Betti numbers and Leray-Hirsch: {}", seen.join("; ")));
}

fn metric_sanity(report: &mut Report) {
    let d = datum(Family::SU, 2);
    let xi = 1.7;
    let mu0 = InitialPoint::new(&d, &[xi]).unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..21 {
        for j in 0..21 {
            let z = C::new(-1.0 + 0.1 * i as f64, -1.0 + 0.1 * j as f64);
            let g = metric(&d, &mu0, &ChartPoint::new(vec![z])).unwrap().g[(0, 0)].re;
            worst = worst.max((g - xi / (1.0 + z.norm_sqr()).powi(2)).abs());
        }
    }
    let cp2 = datum(Family::SU, 3);
    let eta = 2.3;
    let mu0 = InitialPoint::new(&cp2, &[0.0, eta]).unwrap();
    let t = metric(&cp2, &mu0, &ChartPoint::origin(&cp2)).unwrap();
    let origin = (t.g.clone() - nalgebra::DMatrix::<C>::identity(2, 2) * C::new(eta, 0.0))
        .iter()
        .map(|x| x.norm())
        .fold(0.0, f64::max);
    report.line(
        7,
        worst < FIBER_METRIC_TOL && origin < CP2_ORIGIN_TOL && t.active.len() == 2,
        format!(
            "SU(2) metric on 21x21 grid max error {worst:.2e} (tol {FIBER_METRIC_TOL:e}); CP^2 metric at origin vs eta*I2 {origin:.2e} (tol {CP2_ORIGIN_TOL:e})"
        ),
    );
}

fn away_from_poles(z: &[C]) -> bool {
    [z[0], z[1], z[2], z[2] - z[0] * z[1]].iter().all(|w| w.norm() > POLE_MARGIN)
}

fn transitions(report: &mut Report) {
    let d = datum(Family::SU, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut worst: f64 = 0.0;
    let mut square: f64 = 0.0;
    let mut done = 0;
    while done < TRANSITION_POINTS {
        let p = sample::chart_point(&d, &mut rng, 2.0);
        if !away_from_poles(&p.coords) {
            continue;
        }
        for k in 0..2 {
            let numeric = chart_transition(&d, &[k], &p).unwrap();
            let closed = su3_transition_closed_form(k, &p).unwrap();
            for (a, b) in numeric.coords.iter().zip(&closed.coords) {
                worst = worst.max((a - b).norm() / b.norm().max(1.0));
            }
        }
        let once = chart_transition(&d, &[0], &p).unwrap();
        let twice = chart_transition(&d, &[0], &ChartPoint::new(once.coords.clone())).unwrap();
        for (a, b) in twice.coords.iter().zip(&p.coords) {
            square = square.max((a - b).norm());
        }
        done += 1;
    }
    let w1 = coadjoint::lie_core::simple_reflection_matrix(&d, 0);
    let w1_sq: CMat = &w1 * &w1;
    let torus = (0..3).all(|i| (0..3).all(|j| i == j || w1_sq[(i, j)].norm() < 1e-15));
    report.line(
        8,
        worst < TRANSITION_TOL && square < TRANSITION_TOL && torus,
        format!(
            "SU(3) transitions closed form vs Gauss-Bruhat on {TRANSITION_POINTS} points: max residual {worst:.2e}; w1 applied twice returns the point to {square:.2e} (tol {TRANSITION_TOL:e})"
        ),
    );
}

fn main() -> ExitCode {
    let mut report = Report { failures: 0 };
    let mut spectra = Spectra { worst: 0.0, count: 0 };
    stereographic(&mut report, &mut spectra);
    iwasawa_suite(&mut report, &mut spectra);
    report.line(
        3,
        spectra.worst < SPECTRUM_TOL,
        format!("isospectrality on {} dressed points: max multiset distance {:.2e} (tol {SPECTRUM_TOL:e})", spectra.count, spectra.worst),
    );
    covariance(&mut report);
    pairing(&mut report);
    betti_suite(&mut report);
    metric_sanity(&mut report);
    transitions(&mut report);
    if report.failures == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria fail", report.failures);
        ExitCode::FAILURE
    }
}
