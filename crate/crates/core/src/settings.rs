use crate::error::{Error, Result};
use crate::par::Exec;

/// Size limits guarding the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub group_order: usize,
    pub h2_subgroup: usize,
    pub algebra_dim: usize,
    pub designated: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { group_order: 512, h2_subgroup: 16, algebra_dim: 4096, designated: 6 }
    }
}

impl Caps {
    /// Parses overrides of the form `group_order=1024,algebra_dim=8192`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Caps> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap override `{part}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap override `{part}` has a non-numeric value")))?;
            match key.trim() {
                "group_order" => self.group_order = value,
                "h2_subgroup" => self.h2_subgroup = value,
                "algebra_dim" => self.algebra_dim = value,
                "designated" => self.designated = value,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }

    pub fn from_env() -> Result<Caps> {
        match std::env::var("GFORGE_CAPS") {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

/// Shared knobs for the word-bounded and brute-force computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub word_bound: usize,
    pub budget: u64,
    pub exec: Exec,
    pub caps: Caps,
}

pub const DEFAULT_WORD_BOUND: usize = 4;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

impl Default for Settings {
    fn default() -> Self {
        Settings {
            word_bound: DEFAULT_WORD_BOUND,
            budget: DEFAULT_BUDGET,
            exec: Exec::default(),
            caps: Caps::default(),
        }
    }
}

impl Settings {
    pub fn sequential(mut self) -> Self {
        self.exec = Exec::Sequential;
        self
    }

    pub fn with_word_bound(mut self, word_bound: usize) -> Self {
        self.word_bound = word_bound;
        self
    }
}
