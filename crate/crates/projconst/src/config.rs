//! Search configuration and its flat key=value file format.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Knobs for the multi-start smoothed ascent searches.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptConfig {
    /// Independent starts; each start derives its own seed from `seed`.
    pub starts: usize,
    /// Base seed for every stochastic choice.
    pub seed: u64,
    /// First smoothing width of the annealing schedule.
    pub eps_init: f64,
    /// Schedule stops once the width drops below this.
    pub eps_final: f64,
    /// Multiplicative decrease per stage, in (0, 1).
    pub eps_factor: f64,
    /// Ascent iteration cap per smoothing stage.
    pub max_outer: usize,
    /// Step halvings allowed per line search.
    pub max_linesearch: usize,
    /// Relative improvement below which a stage is converged.
    pub tol: f64,
}

impl Default for OptConfig {
    fn default() -> Self {
        OptConfig {
            starts: 32,
            seed: 0,
            eps_init: 1e-1,
            eps_final: 1e-8,
            eps_factor: 0.5,
            max_outer: 200,
            max_linesearch: 30,
            tol: 1e-10,
        }
    }
}

impl OptConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.starts == 0 {
            return Err(Error::Domain("starts must be positive".into()));
        }
        if !(self.eps_init > 0.0 && self.eps_final > 0.0 && self.eps_final <= self.eps_init) {
            return Err(Error::Domain("need eps_init >= eps_final > 0".into()));
        }
        if !(self.eps_factor > 0.0 && self.eps_factor < 1.0) {
            return Err(Error::Domain("eps_factor must lie in (0, 1)".into()));
        }
        if self.tol <= 0.0 {
            return Err(Error::Domain("tol must be positive".into()));
        }
        Ok(())
    }

    /// Parses the flat `key = value` format. Unknown keys are rejected so
    /// typos fail loudly; `#` starts a comment.
    pub fn parse_str(text: &str) -> Result<Self, Error> {
        let mut cfg = OptConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| Error::Format(format!("line {}: bad {what} `{value}`", lineno + 1));
            match key {
                "starts" => cfg.starts = value.parse().map_err(|_| bad("integer"))?,
                "seed" => cfg.seed = value.parse().map_err(|_| bad("integer"))?,
                "eps_init" => cfg.eps_init = value.parse().map_err(|_| bad("number"))?,
                "eps_final" => cfg.eps_final = value.parse().map_err(|_| bad("number"))?,
                "eps_factor" => cfg.eps_factor = value.parse().map_err(|_| bad("number"))?,
                "max_outer" => cfg.max_outer = value.parse().map_err(|_| bad("integer"))?,
                "max_linesearch" => cfg.max_linesearch = value.parse().map_err(|_| bad("integer"))?,
                "tol" => cfg.tol = value.parse().map_err(|_| bad("number"))?,
                other => {
                    return Err(Error::Format(format!("line {}: unknown key `{other}`", lineno + 1)))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_config_string(&self) -> String {
        format!(
            "starts = {}\nseed = {}\neps_init = {}\neps_final = {}\neps_factor = {}\nmax_outer = {}\nmax_linesearch = {}\ntol = {}\n",
            self.starts,
            self.seed,
            self.eps_init,
            self.eps_final,
            self.eps_factor,
            self.max_outer,
            self.max_linesearch,
            self.tol
        )
    }
}
