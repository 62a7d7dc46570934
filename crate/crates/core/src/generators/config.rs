//! Growth configuration and its flat `key = value` file format.
//!
//! Recognized keys: `model`, `target_n`, `m`, `p`, `q`, `alpha`, `delta`,
//! `seed_nodes`, `seed_extra_edges`, `rng_seed`. Lines starting with `#` and
//! blank lines are ignored. Keys not relevant to the selected model are
//! accepted and kept, but have no effect on growth.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::kernel::PreferenceScheme;
use crate::error::{Error, Result};

/// Network size of the reference AS graph.
pub const DEFAULT_TARGET_N: usize = 11122;
pub const DEFAULT_SEED_NODES: usize = 10;
pub const DEFAULT_SEED_EXTRA_EDGES: usize = 5;
pub const DEFAULT_RNG_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Linear preference, `m` links per new node.
    Ba,
    /// Interactive growth with linear preference.
    Ig,
    /// Interactive growth with a fixed-exponent kernel.
    #[serde(rename = "test")]
    TestStar,
    /// Positive-feedback preference with the three-branch growth rule.
    Pfp,
}

impl Model {
    pub const ALL: [Model; 4] = [Model::Ba, Model::Ig, Model::TestStar, Model::Pfp];

    pub fn name(self) -> &'static str {
        match self {
            Model::Ba => "ba",
            Model::Ig => "ig",
            Model::TestStar => "test",
            Model::Pfp => "pfp",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ba" => Ok(Model::Ba),
            "ig" => Ok(Model::Ig),
            "test" | "teststar" | "test*" => Ok(Model::TestStar),
            "pfp" => Ok(Model::Pfp),
            other => Err(Error::Config(format!("unknown model `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthConfig {
    pub model: Model,
    pub target_n: usize,
    /// Links per new node (BA only).
    pub m: usize,
    /// Single-host branch probability (IG, Test*), or one-peer branch (PFP).
    pub p: f64,
    /// Two-peer branch probability (PFP only).
    pub q: f64,
    /// Kernel exponent (Test* only).
    pub alpha: f64,
    /// Feedback strength (PFP only).
    pub delta: f64,
    pub seed_nodes: usize,
    pub seed_extra_edges: usize,
    pub rng_seed: u64,
}

impl GrowthConfig {
    /// Published defaults for `model` at the reference network size.
    pub fn defaults(model: Model) -> Self {
        let p = match model {
            Model::Pfp => 0.3,
            _ => 0.4,
        };
        GrowthConfig {
            model,
            target_n: DEFAULT_TARGET_N,
            m: 3,
            p,
            q: 0.1,
            alpha: 1.15,
            delta: 0.048,
            seed_nodes: DEFAULT_SEED_NODES,
            seed_extra_edges: DEFAULT_SEED_EXTRA_EDGES,
            rng_seed: DEFAULT_RNG_SEED,
        }
    }

    pub fn with_target_n(mut self, n: usize) -> Self {
        self.target_n = n;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    /// Kernel implied by the model.
    pub fn scheme(&self) -> PreferenceScheme {
        match self.model {
            Model::Ba | Model::Ig => PreferenceScheme::Linear,
            Model::TestStar => PreferenceScheme::FixedExponent { alpha: self.alpha },
            Model::Pfp => PreferenceScheme::PositiveFeedback { delta: self.delta },
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.seed_nodes < 3 {
            return bad(format!("seed_nodes must be >= 3, got {}", self.seed_nodes));
        }
        if self.target_n <= self.seed_nodes {
            return bad(format!(
                "target_n ({}) must exceed seed_nodes ({})",
                self.target_n, self.seed_nodes
            ));
        }
        let n0 = self.seed_nodes;
        let max_extra = n0 * (n0 - 1) / 2 - (n0 - 1);
        if self.seed_extra_edges > max_extra {
            return bad(format!(
                "seed_extra_edges ({}) exceeds the {max_extra} non-tree pairs of a {n0}-node seed",
                self.seed_extra_edges
            ));
        }
        let prob = |name: &str, v: f64| -> Result<()> {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} must lie in [0, 1], got {v}"
                )))
            }
        };
        match self.model {
            Model::Ba => {
                if self.m == 0 {
                    return bad("m must be >= 1".into());
                }
                if self.m >= self.seed_nodes {
                    return bad(format!(
                        "m ({}) must be smaller than the seed network ({} nodes)",
                        self.m, self.seed_nodes
                    ));
                }
            }
            Model::Ig | Model::TestStar => {
                if !(self.p > 0.0 && self.p < 1.0) {
                    return bad(format!("p must lie in (0, 1), got {}", self.p));
                }
            }
            Model::Pfp => {
                prob("p", self.p)?;
                prob("q", self.q)?;
                if self.p + self.q > 1.0 + 1e-12 {
                    return bad(format!("p + q must not exceed 1, got {}", self.p + self.q));
                }
            }
        }
        self.scheme().validate()
    }

    /// Canonical `key = value` text, one key per line in fixed order.
    pub fn to_kv_string(&self) -> String {
        format!(
            "model = {}\ntarget_n = {}\nm = {}\np = {}\nq = {}\nalpha = {}\ndelta = {}\nseed_nodes = {}\nseed_extra_edges = {}\nrng_seed = {}\n",
            self.model,
            self.target_n,
            self.m,
            self.p,
            self.q,
            self.alpha,
            self.delta,
            self.seed_nodes,
            self.seed_extra_edges,
            self.rng_seed
        )
    }

    /// Parses a config file. Missing keys take the defaults of the file's
    /// model (PFP when no model is given).
    pub fn from_kv_str(text: &str) -> Result<Self> {
        let pairs = parse_kv(text)?;
        let model = pairs
            .iter()
            .find(|(k, _)| k == "model")
            .map(|(_, v)| v.parse())
            .transpose()?
            .unwrap_or(Model::Pfp);
        let mut cfg = GrowthConfig::defaults(model);
        cfg.apply_kv(&pairs)?;
        Ok(cfg)
    }

    /// Overrides fields from already-parsed pairs.
    pub fn apply_kv(&mut self, pairs: &[(String, String)]) -> Result<()> {
        for (key, value) in pairs {
            self.set(key, value)?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::Config(format!("bad value `{value}` for `{key}`")))
        }
        match key {
            "model" => self.model = value.parse()?,
            "target_n" | "n" => self.target_n = num(key, value)?,
            "m" => self.m = num(key, value)?,
            "p" => self.p = num(key, value)?,
            "q" => self.q = num(key, value)?,
            "alpha" => self.alpha = num(key, value)?,
            "delta" => self.delta = num(key, value)?,
            "seed_nodes" => self.seed_nodes = num(key, value)?,
            "seed_extra_edges" => self.seed_extra_edges = num(key, value)?,
            "rng_seed" | "seed" => self.rng_seed = num(key, value)?,
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Hex SHA-256 of the canonical text.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_kv_string().as_bytes()))
    }
}

/// Splits `key = value` lines.
pub fn parse_kv(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: i + 1,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_defaults() {
        let pfp = GrowthConfig::defaults(Model::Pfp);
        assert_eq!((pfp.p, pfp.q, pfp.delta), (0.3, 0.1, 0.048));
        assert_eq!(pfp.target_n, 11122);
        assert_eq!(GrowthConfig::defaults(Model::Ig).p, 0.4);
        assert_eq!(GrowthConfig::defaults(Model::TestStar).alpha, 1.15);
        assert_eq!(GrowthConfig::defaults(Model::Ba).m, 3);
        for m in Model::ALL {
            GrowthConfig::defaults(m).validate().unwrap();
        }
    }

    #[test]
    fn kv_round_trip() {
        let mut cfg = GrowthConfig::defaults(Model::TestStar);
        cfg.alpha = 1.2;
        cfg.rng_seed = u64::MAX;
        let back = GrowthConfig::from_kv_str(&cfg.to_kv_string()).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(back.hash(), cfg.hash());
    }

    #[test]
    fn partial_file_uses_model_defaults() {
        let cfg = GrowthConfig::from_kv_str("# comment\nmodel = ig\n\ntarget_n = 500\n").unwrap();
        assert_eq!(cfg.model, Model::Ig);
        assert_eq!(cfg.p, 0.4);
        assert_eq!(cfg.target_n, 500);
    }

    #[test]
    fn bad_files() {
        assert!(GrowthConfig::from_kv_str("model = gnp").is_err());
        assert!(GrowthConfig::from_kv_str("colour = blue").is_err());
        assert!(GrowthConfig::from_kv_str("p = lots").is_err());
        assert!(matches!(
            GrowthConfig::from_kv_str("model = ba\njunk"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn validation() {
        let mut c = GrowthConfig::defaults(Model::Pfp);
        c.q = 0.8;
        assert!(c.validate().is_err());
        let mut c = GrowthConfig::defaults(Model::Ig);
        c.p = 1.0;
        assert!(c.validate().is_err());
        let mut c = GrowthConfig::defaults(Model::Ba);
        c.m = 10;
        assert!(c.validate().is_err());
        let mut c = GrowthConfig::defaults(Model::Ba);
        c.seed_nodes = 2;
        assert!(c.validate().is_err());
        let mut c = GrowthConfig::defaults(Model::Ba);
        c.target_n = 10;
        assert!(c.validate().is_err());
        let mut c = GrowthConfig::defaults(Model::Ba);
        c.seed_extra_edges = 37;
        assert!(c.validate().is_err());
        c.seed_extra_edges = 36;
        assert!(c.validate().is_ok());
        let mut c = GrowthConfig::defaults(Model::TestStar);
        c.alpha = 0.9;
        assert!(c.validate().is_err());
    }
}
