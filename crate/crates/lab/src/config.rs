//! Caps and parameter resolution.

use steinberg_core::building::DEFAULT_SIMPLEX_CAP;
use steinberg_core::cwsolver::DEFAULT_SCAN_CAP;
use steinberg_core::matgroup::DEFAULT_GROUP_CAP;
use steinberg_core::Field;

use crate::{LabError, LabResult};

pub const CAP_ENV: &str = "STEINBERG_LAB_CAP";

/// Size limits handed to the core enumerations.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Group orders and generator-tuple counts.
    pub group: u128,
    /// Chevalley–Warning scans.
    pub scan: u128,
    /// Simplices of a building.
    pub simplex: u128,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { group: DEFAULT_GROUP_CAP, scan: DEFAULT_SCAN_CAP, simplex: DEFAULT_SIMPLEX_CAP }
    }
}

impl Caps {
    /// Defaults, replaced wholesale by `STEINBERG_LAB_CAP` when set, then by
    /// explicit flags.
    pub fn resolve(env: Option<&str>, group: Option<u128>, scan: Option<u128>) -> LabResult<Caps> {
        let mut caps = Caps::default();
        if let Some(v) = env {
            let c: u128 = v
                .trim()
                .parse()
                .map_err(|_| LabError::usage(format!("{CAP_ENV} must be a positive integer, got {v:?}")))?;
            caps = Caps { group: c, scan: c, simplex: c };
        }
        if let Some(g) = group {
            caps.group = g;
        }
        if let Some(s) = scan {
            caps.scan = s;
        }
        Ok(caps)
    }
}

/// `F_q` from `--q`, or from `--p` and `--e`.
pub fn field_from(q: Option<u64>, p: Option<u64>, e: Option<u32>) -> LabResult<Field> {
    match (q, p) {
        (Some(q), None) => Ok(Field::with_order(q)?),
        (None, Some(p)) => Ok(Field::new(p, e.unwrap_or(1))?),
        (Some(q), Some(p)) => {
            let f = Field::new(p, e.unwrap_or(1))?;
            if f.order() as u64 != q {
                return Err(LabError::usage(format!("--q {q} disagrees with --p {p} --e {}", e.unwrap_or(1))));
            }
            Ok(f)
        }
        (None, None) => Err(LabError::usage("a field is required: pass --q or --p [--e]")),
    }
}

pub fn require<T>(v: Option<T>, flag: &str) -> LabResult<T> {
    v.ok_or_else(|| LabError::usage(format!("{flag} is required")))
}
