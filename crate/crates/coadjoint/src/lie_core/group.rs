use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SU,
    Sp,
    SO,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su" => Ok(Family::SU),
            "sp" => Ok(Family::Sp),
            "so" => Ok(Family::SO),
            other => Err(Error::UnsupportedGroup(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub rank: usize,
}

pub fn build_group(family: Family, n: usize) -> Result<GroupSpec> {
    let rank = match family {
        Family::SU if n >= 2 => n - 1,
        Family::Sp if n >= 2 => n,
        Family::SO if n == 3 || n == 4 => n / 2,
        _ => return Err(Error::UnsupportedGroup(format!("{family:?}({n})"))),
    };
    Ok(GroupSpec { family, n, rank })
}

impl GroupSpec {
    /// Dimension of the defining complex representation.
    pub fn rep_dim(&self) -> usize {
        match self.family {
            Family::Sp => 2 * self.n,
            _ => self.n,
        }
    }

    /// Dimension of the ε-coordinate space carrying roots and weights.
    pub fn euclid_dim(&self) -> usize {
        match self.family {
            Family::SU => self.n,
            Family::Sp => self.n,
            Family::SO => self.rank,
        }
    }

    /// `Tr` scale making the trace form equal the Euclidean product on 𝔥*.
    pub fn trace_scale(&self) -> f64 {
        match self.family {
            Family::SU => 1.0,
            Family::Sp | Family::SO => 0.5,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::SO => "SO",
        };
        write!(f, "{name}({})", self.n)
    }
}
