use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable holding cap overrides, in the same `key=value,...`
/// syntax accepted by [`Caps::apply_overrides`].
pub const CAP_OVERRIDE_ENV: &str = "FFGRID_CAP_OVERRIDE";

/// Hard limits for the exact searches and enumerations.
///
/// Every exact routine checks its cap up front and fails with
/// [`Error::InstanceTooLarge`] instead of degrading silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_vertices: usize,
    pub independence: usize,
    pub chromatic: usize,
    pub grundy_exhaustive: usize,
    pub grundy: usize,
    pub enumeration: usize,
    pub hitting_family: usize,
    pub min_gds_vertices: usize,
    pub min_gds_candidates: u64,
    pub cover_exact: usize,
    pub coloring_enumeration: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_vertices: 4096,
            independence: 20,
            chromatic: 16,
            grundy_exhaustive: 9,
            grundy: 12,
            enumeration: 16,
            hitting_family: 100_000,
            min_gds_vertices: 16,
            min_gds_candidates: 50_000_000,
            cover_exact: 20,
            coloring_enumeration: 1_000_000,
        }
    }
}

impl Caps {
    /// Applies overrides of the form `independence=24,grundy=14`.
    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("cap override `{item}` lacks `=`")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("cap override `{item}` has a non-integer value")))?;
            let v = value as usize;
            match key.trim() {
                "max_vertices" => self.max_vertices = v,
                "independence" => self.independence = v,
                "chromatic" => self.chromatic = v,
                "grundy_exhaustive" => self.grundy_exhaustive = v,
                "grundy" => self.grundy = v,
                "enumeration" => self.enumeration = v,
                "hitting_family" => self.hitting_family = v,
                "min_gds_vertices" => self.min_gds_vertices = v,
                "min_gds_candidates" => self.min_gds_candidates = value,
                "cover_exact" => self.cover_exact = v,
                "coloring_enumeration" => self.coloring_enumeration = v,
                other => {
                    return Err(Error::InvalidArgument(format!("unknown cap `{other}`")));
                }
            }
        }
        Ok(())
    }

    /// Defaults, then the environment override if set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Self::default();
        if let Ok(spec) = std::env::var(CAP_OVERRIDE_ENV) {
            caps.apply_overrides(&spec)?;
        }
        Ok(caps)
    }
}

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::InstanceTooLarge { what, size, cap })
    } else {
        Ok(())
    }
}
