//! Library half of the `entvol` command-line tool: matrix file interchange,
//! canonical output formatting, and the verification suite.  The binary in
//! `main.rs` is a thin dispatcher over these pieces.

pub mod matfile;
pub mod output;
pub mod verify;

/// Seed used when neither `--seed` nor `ENTVOL_SEED` is given.
pub const DEFAULT_SEED: u64 = 42;

/// Environment variable that overrides the default seed.
pub const SEED_ENV_VAR: &str = "ENTVOL_SEED";

/// Resolves the effective seed; the boolean reports whether it came from the
/// environment (so callers can echo that into output metadata).
pub fn resolve_seed(flag: Option<u64>) -> (u64, bool) {
    if let Some(seed) = flag {
        return (seed, false);
    }
    if let Ok(text) = std::env::var(SEED_ENV_VAR) {
        if let Ok(seed) = text.parse::<u64>() {
            return (seed, true);
        }
    }
    (DEFAULT_SEED, false)
}
