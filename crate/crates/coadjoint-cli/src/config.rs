//! Command-line flags and their validation into a run configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use coadjoint::{Complex64 as C, Family};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "coadjoint", version, about = "Coadjoint orbits of compact classical groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Orbit type, dimension, stabilizer, fibration and Betti numbers.
    Classify,
    /// Iwasawa and Gauss-Bruhat factors of chart elements.
    Decompose,
    /// Dressed orbit points.
    Dress,
    /// Kähler potential values.
    Potential,
    /// Kähler metric at chart points.
    Metric,
    /// Betti numbers and the Leray-Hirsch check.
    Betti,
    /// Pairing matrix of basis two-forms with basis two-cycles.
    Pairing,
    /// Randomized invariant suite; exit 1 if any check fails.
    Verify,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Output {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Group family: su, sp or so.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Matrix size n of SU(n), Sp(n) or SO(n).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Simple-root pairings of the initial point, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub weights: Option<Vec<f64>>,
    /// One chart coordinate "re,im"; repeat once per positive root.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub z: Vec<String>,
    /// Grid "re0:re1:steps,im0:im1:steps" for one coordinate; repeat per coordinate.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Vec<String>,
    /// Seed for randomized points and verification runs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Override every check tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub out: Output,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output_file: Option<std::path::PathBuf>,
}

/// Validated configuration, echoed in every report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(skip)]
    pub family: Family,
    pub group: String,
    pub n: usize,
    pub weights: Option<Vec<f64>>,
    /// Explicit chart points as `[re, im]` pairs.
    pub points: Vec<Vec<[f64; 2]>>,
    pub seed: u64,
    pub tol: Option<f64>,
    pub out: Output,
}

impl RunConfig {
    pub fn tolerance(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    pub fn chart_points(&self) -> Vec<Vec<C>> {
        self.points.iter().map(|p| p.iter().map(|&[re, im]| C::new(re, im)).collect()).collect()
    }
}

fn parse_complex(s: &str) -> Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number {t:?} in {s:?}"));
    match parts.as_slice() {
        [re] => Ok([num(re)?, 0.0]),
        [re, im] => Ok([num(re)?, num(im)?]),
        _ => Err(format!("complex value {s:?} must be re,im")),
    }
}

fn parse_range(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, steps] = parts.as_slice() else {
        return Err(format!("range {s:?} must be start:end:steps"));
    };
    let a: f64 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: f64 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    let steps: usize = steps.trim().parse().map_err(|_| format!("bad step count in {s:?}"))?;
    if steps == 0 {
        return Err(format!("range {s:?} needs at least one step"));
    }
    if steps == 1 {
        return Ok(vec![a]);
    }
    Ok((0..steps).map(|i| a + (b - a) * i as f64 / (steps - 1) as f64).collect())
}

/// Values of one coordinate on its grid: the product of a real and an imaginary range.
fn parse_grid(s: &str) -> Result<Vec<[f64; 2]>, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("grid {s:?} must be re-range,im-range"))?;
    let (re, im) = (parse_range(re)?, parse_range(im)?);
    Ok(re.iter().flat_map(|&x| im.iter().map(move |&y| [x, y])).collect())
}

fn cartesian(axes: &[Vec<[f64; 2]>]) -> Vec<Vec<[f64; 2]>> {
    axes.iter().fold(vec![Vec::new()], |acc, axis| {
        acc.iter()
            .flat_map(|p| {
                axis.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(*v);
                    q
                })
            })
            .collect()
    })
}

impl Flags {
    pub fn resolve(&self, command: Command) -> Result<RunConfig, String> {
        let group = self.group.clone().ok_or("--group is required")?;
        let family: Family = group.parse().map_err(|e: coadjoint::Error| e.to_string())?;
        let n = self.n.ok_or("--n is required")?;
        if !self.z.is_empty() && !self.grid.is_empty() {
            return Err("--z and --grid are exclusive".into());
        }
        let mut points = Vec::new();
        if !self.z.is_empty() {
            points.push(self.z.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>()?);
        }
        if !self.grid.is_empty() {
            let axes = self.grid.iter().map(|s| parse_grid(s)).collect::<Result<Vec<_>, _>>()?;
            points = cartesian(&axes);
        }
        if let Some(t) = self.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(format!("--tol must be positive, got {t}"));
            }
        }
        Ok(RunConfig {
            command,
            family,
            group: group.to_ascii_lowercase(),
            n,
            weights: self.weights.clone(),
            points,
            seed: self.seed,
            tol: self.tol,
            out: self.out,
        })
    }
}
