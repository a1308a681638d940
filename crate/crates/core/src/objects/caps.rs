use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Environment variable holding a nonnegative integer added to every
/// default enumeration cap.
pub const CAP_RAISE_ENV: &str = "WEYLCOUNT_CAP_RAISE";

/// Size limits for brute-force enumeration. The defaults keep every
/// enumeration around 10^7 objects or fewer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    /// Matchings on `[2n]`: `n` at most this.
    pub matchings: usize,
    /// Oscillating tableaux: length at most this.
    pub tableau_length: usize,
    /// Standard Young tableaux: shape size at most this.
    pub syt_size: usize,
    /// Permutations of `[n]`: `n` at most this.
    pub permutations: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            matchings: 8,
            tableau_length: 12,
            syt_size: 10,
            permutations: 9,
        }
    }
}

impl EnumerationCaps {
    pub fn raised_by(self, k: usize) -> Self {
        EnumerationCaps {
            matchings: self.matchings + k,
            tableau_length: self.tableau_length + k,
            syt_size: self.syt_size + k,
            permutations: self.permutations + k,
        }
    }

    /// Defaults raised by `WEYLCOUNT_CAP_RAISE`, read once per process.
    /// Unparseable values are ignored.
    pub fn current() -> Self {
        static CAPS: OnceLock<EnumerationCaps> = OnceLock::new();
        *CAPS.get_or_init(|| {
            let raise = std::env::var(CAP_RAISE_ENV)
                .ok()
                .and_then(|v| v.trim().parse::<usize>().ok())
                .unwrap_or(0);
            EnumerationCaps::default().raised_by(raise)
        })
    }
}

pub(crate) fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        return Err(Error::CapExceeded {
            what,
            requested,
            cap,
        });
    }
    Ok(())
}
