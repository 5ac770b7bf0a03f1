//! One function per subcommand, each filling a [`Report`].

use coadjoint::cohomology::{betti, leray_hirsch_for, pairing_matrix, PAIRING_NORMALIZATION};
use coadjoint::decompose::{chart_matrix, compactness_defect, iwasawa};
use coadjoint::kahler::{cocycle_shift, integrality_check, log_radii_squared, metric, potential};
use coadjoint::lie_core::{classify_initial_point, root_datum, weyl_group, Family, OrbitClass};
use coadjoint::linalg::{dist, identity, max_abs, spectrum_distance, CMat};
use coadjoint::orbit::{chart_transition, dress, fibration, su3_closed_form, OrbitPoint};
use coadjoint::{build_group, sample, ChartPoint, Complex64 as C, Error, InitialPoint, RootDatum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{Command, RunConfig};
use crate::report::{Report, Table};

/// Failures before a report exists: bad configuration (exit 2) or a domain
/// error of the library (exit 2 for invalid input, 3 otherwise).
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Domain(Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Domain(Error::UnsupportedGroup(_) | Error::InvalidInput(_) | Error::AllWeightsZero | Error::OutsideChamber { .. }) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(s) => write!(f, "invalid configuration: {s}"),
            Failure::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<Report, Failure>;

const ISO_TOL: f64 = 1e-10;
const IWASAWA_TOL: f64 = 1e-10;
const CLOSED_FORM_TOL: f64 = 1e-10;
const COVARIANCE_TOL: f64 = 1e-8;
const TRANSITION_TOL: f64 = 1e-8;
const PAIRING_TOL: f64 = 1e-6;
const PAIRING_NODES: usize = 128;
const VERIFY_SAMPLES: usize = 64;

struct Setup {
    datum: RootDatum,
    mu0: Option<InitialPoint>,
    rng: ChaCha8Rng,
}

impl Setup {
    fn new(cfg: &RunConfig) -> Result<Self, Failure> {
        let datum = root_datum(&build_group(cfg.family, cfg.n)?);
        let mu0 = cfg.weights.as_ref().map(|w| InitialPoint::new(&datum, w)).transpose()?;
        Ok(Self { datum, mu0, rng: ChaCha8Rng::seed_from_u64(cfg.seed) })
    }

    fn mu0(&self) -> Result<&InitialPoint, Failure> {
        self.mu0.as_ref().ok_or_else(|| Failure::Config("--weights is required for this command".into()))
    }

    /// Points from `--z`/`--grid`, or one seeded random point on the orbit.
    fn points(&mut self, cfg: &RunConfig) -> Result<Vec<ChartPoint>, Failure> {
        let m = self.datum.positive_roots.len();
        if cfg.points.is_empty() {
            let p = match &self.mu0 {
                Some(mu0) => sample::orbit_chart_point(&self.datum, mu0, &mut self.rng, 1.0),
                None => sample::chart_point(&self.datum, &mut self.rng, 1.0),
            };
            return Ok(vec![p]);
        }
        cfg.chart_points()
            .into_iter()
            .map(|coords| {
                if coords.len() == m {
                    Ok(ChartPoint::new(coords))
                } else {
                    Err(Failure::Config(format!("{} needs {m} chart coordinates, got {}", self.datum.group, coords.len())))
                }
            })
            .collect()
    }
}

fn pairs(z: &[C]) -> Vec<[f64; 2]> {
    z.iter().map(|w| [w.re, w.im]).collect()
}

fn matrix(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect()
}

fn orbit_name(datum: &RootDatum, class: &OrbitClass) -> String {
    let g = datum.group;
    if class.vanishing_walls.is_empty() {
        format!("O^{{{g}}}")
    } else if g.family == Family::SU && class.real_dimension == 2 * (g.n - 1) {
        format!("CP^{}", g.n - 1)
    } else {
        format!("O_d^{{{g}}}")
    }
}

/// Real coordinates of μ: the Gell-Mann components for SU(3), the trace-form
/// pairings with the compact basis otherwise.
fn mu_components(datum: &RootDatum, mu: &OrbitPoint) -> Vec<f64> {
    match &mu.coords {
        Some(c) => c.clone(),
        None => datum.compact_basis().iter().map(|b| datum.trace_form(&mu.mu_matrix, b)).collect(),
    }
}

pub fn run(cfg: RunConfig) -> Outcome {
    match cfg.command {
        Command::Classify => classify(cfg),
        Command::Decompose => decompose(cfg),
        Command::Dress | Command::Potential | Command::Metric => pointwise(cfg),
        Command::Betti => betti_cmd(cfg),
        Command::Pairing => pairing(cfg),
        Command::Verify => verify(cfg),
    }
}

fn classify(cfg: RunConfig) -> Outcome {
    let setup = Setup::new(&cfg)?;
    let (d, mu0) = (&setup.datum, setup.mu0()?);
    let class = classify_initial_point(d, mu0)?;
    let weyl = weyl_group(d);
    let mut r = Report::new(cfg);
    r.info("kind", format!("{:?}", class.kind).to_lowercase());
    r.info("maximal_degenerate", class.maximal_degenerate);
    r.info("orbit", orbit_name(d, &class));
    r.info("real_dimension", class.real_dimension);
    r.info("stabilizer", class.stabilizer.to_string());
    r.info("vanishing_walls", &class.vanishing_walls);
    match fibration(d, mu0) {
        Ok(f) => r.info("fibration", f.to_string()),
        Err(Error::MaximalDegenerate) => r.info("fibration", Option::<String>::None),
        Err(e) => return Err(e.into()),
    }
    r.info("betti", betti(d, &weyl, mu0)?.b);
    let integ = integrality_check(d, mu0);
    r.info("integrality_ratios", &integ.ratios);
    r.info("quantizable", integ.all());
    Ok(r)
}

fn decompose(cfg: RunConfig) -> Outcome {
    let mut setup = Setup::new(&cfg)?;
    let points = setup.points(&cfg)?;
    let d = &setup.datum;
    let tol = cfg.tolerance(IWASAWA_TOL);
    let mut r = Report::new(cfg);
    for (i, p) in points.iter().enumerate() {
        let z = chart_matrix(d, p)?;
        let f = iwasawa(d, p)?;
        let pre = format!("point[{i}]");
        r.info(format!("{pre}.z"), pairs(&p.coords));
        r.info(format!("{pre}.radii_squared"), log_radii_squared(d, p)?.iter().map(|l| l.exp()).collect::<Vec<_>>());
        r.info(format!("{pre}.a_diagonal"), f.a_diagonal());
        r.info(format!("{pre}.n"), matrix(&f.n));
        r.info(format!("{pre}.k"), matrix(&f.k));
        r.check(format!("{pre}.multiply_back"), dist(&(&f.n * &f.a * &f.k), &z) / max_abs(&z).max(1.0), tol);
        r.check(format!("{pre}.unitarity"), dist(&(&f.k * f.k.adjoint()), &identity(d.dim())), tol);
        r.check(format!("{pre}.compactness"), compactness_defect(d, &f.k), tol);
    }
    Ok(r)
}

fn pointwise(cfg: RunConfig) -> Outcome {
    let mut setup = Setup::new(&cfg)?;
    let points = setup.points(&cfg)?;
    let d = &setup.datum;
    let mu0 = setup.mu0()?;
    let command = cfg.command;
    let iso_tol = cfg.tolerance(ISO_TOL);
    let cf_tol = cfg.tolerance(CLOSED_FORM_TOL);
    let mut r = Report::new(cfg);
    let mut table = Table::default();
    for (i, p) in points.iter().enumerate() {
        let mu = dress(d, mu0, p)?;
        let phi = potential(d, mu0, p)?;
        let g = metric(d, mu0, p)?;
        let comps = mu_components(d, &mu);
        if table.header.is_empty() {
            for k in 0..p.coords.len() {
                table.header.extend([format!("z{}_re", k + 1), format!("z{}_im", k + 1)]);
            }
            table.header.extend((1..=comps.len()).map(|a| format!("mu{a}")));
            table.header.push("phi".into());
            for &a in &g.active {
                for &b in &g.active {
                    table.header.extend([format!("g{}{}_re", a + 1, b + 1), format!("g{}{}_im", a + 1, b + 1)]);
                }
            }
        }
        let mut row: Vec<f64> = p.coords.iter().flat_map(|w| [w.re, w.im]).collect();
        row.extend(&comps);
        row.push(phi);
        row.extend(g.g.iter().flat_map(|x| [x.re, x.im]));
        table.rows.push(row);

        let pre = format!("point[{i}]");
        r.info(format!("{pre}.z"), pairs(&p.coords));
        match command {
            Command::Dress => {
                r.info(format!("{pre}.mu"), &comps);
                r.check(format!("{pre}.spectrum"), spectrum_distance(&mu.spectrum(), &mu0.spectrum()), iso_tol);
                if let Some(c) = &mu.coords {
                    let want = su3_closed_form(mu0, p)?;
                    let res = c.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                    r.check(format!("{pre}.closed_form"), res, cf_tol);
                }
            }
            Command::Potential => r.info(format!("{pre}.phi"), phi),
            _ => {
                let rows: Vec<Vec<[f64; 2]>> = (0..g.g.nrows())
                    .map(|a| (0..g.g.ncols()).map(|b| [g.g[(a, b)].re, g.g[(a, b)].im]).collect())
                    .collect();
                r.info(format!("{pre}.active_roots"), &g.active);
                r.info(format!("{pre}.g"), rows);
                let min = g.min_eigenvalue();
                r.check_value(format!("{pre}.min_eigenvalue"), min, 0.0, min > 0.0);
            }
        }
    }
    r.table = Some(table);
    Ok(r)
}

fn betti_cmd(cfg: RunConfig) -> Outcome {
    let setup = Setup::new(&cfg)?;
    let (d, mu0) = (&setup.datum, setup.mu0()?);
    let weyl = weyl_group(d);
    let class = classify_initial_point(d, mu0)?;
    let b = betti(d, &weyl, mu0)?;
    let expected = weyl.order / weyl.parabolic(&class.vanishing_walls).len();
    let lh = leray_hirsch_for(d, &weyl, mu0)?;
    let mut r = Report::new(cfg);
    r.info("betti", &b.b);
    r.check_value("total", b.total(), 0.0, b.total() as usize == expected);
    r.check_value("palindromic", b.is_palindromic(), 0.0, b.is_palindromic());
    r.info("leray_hirsch.base", &lh.base);
    r.info("leray_hirsch.fiber", &lh.fiber);
    r.check_value("leray_hirsch.total", &lh.total, 0.0, lh.holds);
    if let Some(note) = lh.note {
        r.info("leray_hirsch.note", note);
    }
    Ok(r)
}

fn pairing_report(r: &mut Report, d: &RootDatum, tol: f64) -> Result<(), Failure> {
    let m = pairing_matrix(d, PAIRING_NODES)?;
    let rows: Vec<Vec<f64>> = (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect();
    let dev = rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, x)| (x - if i == j { 1.0 } else { 0.0 }).abs()))
        .fold(0.0, f64::max);
    r.info("pairing.normalization", PAIRING_NORMALIZATION);
    r.info("pairing.matrix", rows);
    r.check("pairing.identity", dev, tol);
    Ok(())
}

fn pairing(cfg: RunConfig) -> Outcome {
    let setup = Setup::new(&cfg)?;
    let tol = cfg.tolerance(PAIRING_TOL);
    let mut r = Report::new(cfg);
    pairing_report(&mut r, &setup.datum, tol)?;
    Ok(r)
}

fn verify(cfg: RunConfig) -> Outcome {
    let mut setup = Setup::new(&cfg)?;
    let mu0 = setup.mu0()?.clone();
    let d = &setup.datum;
    let rng = &mut setup.rng;
    let tol = |default: f64| cfg.tol.unwrap_or(default);
    let (mut back, mut unit, mut iso, mut cas, mut cov, mut trans, mut closed) = (0f64, 0f64, 0f64, 0f64, 0f64, 0f64, 0f64);
    let mut min_eig = f64::INFINITY;
    let c0 = d.trace_form(&mu0.matrix, &mu0.matrix);
    for _ in 0..VERIFY_SAMPLES {
        let p = sample::chart_point(d, rng, 1.0);
        let z = chart_matrix(d, &p)?;
        let f = iwasawa(d, &p)?;
        back = back.max(dist(&(&f.n * &f.a * &f.k), &z) / max_abs(&z).max(1.0));
        unit = unit.max(compactness_defect(d, &f.k));

        let q = sample::orbit_chart_point(d, &mu0, rng, 1.0);
        let mu = dress(d, &mu0, &q)?;
        iso = iso.max(spectrum_distance(&mu.spectrum(), &mu0.spectrum()));
        cas = cas.max((d.trace_form(&mu.mu_matrix, &mu.mu_matrix) - c0).abs());
        if let Some(c) = &mu.coords {
            let want = su3_closed_form(&mu0, &q)?;
            closed = closed.max(c.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
        }
        min_eig = min_eig.min(metric(d, &mu0, &q)?.min_eigenvalue());

        let g = sample::compact_element(d, rng);
        if let Ok(s) = cocycle_shift(d, &mu0, &p, &g) {
            let lhs = potential(d, &mu0, &s.z_g)? - potential(d, &mu0, &p)?;
            cov = cov.max((lhs - s.shift).abs());
        }
        for k in 0..d.rank() {
            if let Ok(moved) = chart_transition(d, &[k], &p) {
                let a = dress(d, &mu0, &p.clone().with_chart(Vec::new()))?;
                let b = dress(d, &mu0, &moved)?;
                trans = trans.max(dist(&a.mu_matrix, &b.mu_matrix));
            }
        }
    }
    let weyl = weyl_group(d);
    let class = classify_initial_point(d, &mu0)?;
    let b = betti(d, &weyl, &mu0)?;
    let expected = weyl.order / weyl.parabolic(&class.vanishing_walls).len();
    let lh = leray_hirsch_for(d, &weyl, &mu0)?;

    let mut r = Report::new(cfg.clone());
    r.info("samples", VERIFY_SAMPLES);
    r.check("iwasawa.multiply_back", back, tol(IWASAWA_TOL));
    r.check("iwasawa.compactness", unit, tol(IWASAWA_TOL));
    r.check("dress.spectrum", iso, tol(ISO_TOL));
    r.check("dress.casimir", cas / c0.abs().max(1.0), tol(ISO_TOL));
    if d.group.family == Family::SU && d.group.n == 3 {
        r.check("dress.closed_form", closed, tol(CLOSED_FORM_TOL));
    }
    r.check_value("metric.min_eigenvalue", min_eig, 0.0, min_eig > 0.0);
    r.check("potential.covariance", cov, tol(COVARIANCE_TOL));
    r.check("transition.orbit_point", trans, tol(TRANSITION_TOL));
    r.check_value("betti.total", b.total(), 0.0, b.total() as usize == expected);
    r.check_value("betti.palindromic", b.is_palindromic(), 0.0, b.is_palindromic());
    r.check_value("leray_hirsch", lh.holds, 0.0, lh.holds);
    pairing_report(&mut r, d, tol(PAIRING_TOL))?;
    Ok(r)
}
