//! Experiment configuration: a single strict JSON document.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use neareq::netform::{make_topology, DeviationMode, Topology, TopologyKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameKind {
    Security,
    Tcp,
    Netform,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnalysisKind {
    PureNash,
    EpsilonCheck,
    MixedMc,
    BrDynamics,
    BandScan,
    Escalation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeviationModeConfig {
    SingleLink,
    FullSubset,
}

impl From<DeviationModeConfig> for DeviationMode {
    fn from(mode: DeviationModeConfig) -> Self {
        match mode {
            DeviationModeConfig::SingleLink => DeviationMode::SingleLink,
            DeviationModeConfig::FullSubset => DeviationMode::FullSubset,
        }
    }
}

/// The raw document. Unknown keys anywhere are rejected; which optional
/// fields must be present depends on the game/analysis combination and
/// is checked by [`ExperimentConfig::validate`] plus the per-game param
/// parsers.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub game: GameKind,
    pub analysis: AnalysisKind,
    pub params: serde_json::Value,
    #[serde(default)]
    pub epsilon: Option<f64>,
    #[serde(default)]
    pub grid_step: Option<f64>,
    #[serde(default)]
    pub samples: Option<u64>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub rounds: Option<usize>,
    #[serde(default)]
    pub deviation_mode: Option<DeviationModeConfig>,
    #[serde(default)]
    pub m_grid: Option<Vec<f64>>,
    #[serde(default)]
    pub profile: Option<Vec<f64>>,
    #[serde(default)]
    pub s_values: Option<Vec<f64>>,
    pub output_path: PathBuf,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecurityConfig {
    pub n: usize,
    pub p: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TcpConfig {
    pub n: usize,
    pub c: f64,
    pub k: f64,
    #[serde(default)]
    pub alpha_max: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetformConfig {
    pub n: usize,
    pub s: f64,
    pub l: f64,
    pub r: f64,
    #[serde(default)]
    pub m: Option<f64>,
    pub topology: TopologySpec,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologySpec {
    Full,
    Star,
    DirectedRing,
    Random { p: f64 },
    File { path: PathBuf },
}

impl NetformConfig {
    /// Materialize the topology; `Random` draws from `seed`.
    pub fn topology(&self, seed: u64) -> Result<Topology> {
        Ok(match &self.topology {
            TopologySpec::Full => make_topology(TopologyKind::Full, self.n)?,
            TopologySpec::Star => make_topology(TopologyKind::Star, self.n)?,
            TopologySpec::DirectedRing => make_topology(TopologyKind::DirectedRing, self.n)?,
            TopologySpec::Random { p } => {
                make_topology(TopologyKind::Random { p: *p, seed }, self.n)?
            }
            TopologySpec::File { path } => {
                let t = Topology::read_file(path)
                    .with_context(|| format!("reading topology from {}", path.display()))?;
                if t.n() != self.n {
                    bail!(
                        "topology file has {} nodes but params.n is {}",
                        t.n(),
                        self.n
                    );
                }
                t
            }
        })
    }
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: ExperimentConfig = serde_json::from_str(&text).context("parsing config")?;
        config.validate()?;
        Ok(config)
    }

    pub fn security_params(&self) -> Result<SecurityConfig> {
        serde_json::from_value(self.params.clone()).context("security params")
    }

    pub fn tcp_params(&self) -> Result<TcpConfig> {
        serde_json::from_value(self.params.clone()).context("tcp params")
    }

    pub fn netform_params(&self) -> Result<NetformConfig> {
        serde_json::from_value(self.params.clone()).context("netform params")
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    fn require(&self, present: bool, field: &str) -> Result<()> {
        if present {
            Ok(())
        } else {
            bail!(
                "analysis {:?} on {:?} requires the `{field}` field",
                self.analysis,
                self.game
            )
        }
    }

    /// Field presence per game/analysis combination; also parses the
    /// game params strictly so typos inside `params` surface here.
    pub fn validate(&self) -> Result<()> {
        use AnalysisKind::*;
        use GameKind::*;
        match self.game {
            Security => {
                self.security_params()?;
            }
            Tcp => {
                self.tcp_params()?;
            }
            Netform => {
                self.netform_params()?;
            }
        }
        match (self.game, self.analysis) {
            (Security, PureNash) => self.require(self.grid_step.is_some(), "grid_step"),
            (Security, EpsilonCheck) => self.require(self.epsilon.is_some(), "epsilon"),
            (Security, MixedMc) => self.require(self.samples.is_some(), "samples"),
            (Security, BrDynamics) => {
                self.require(self.rounds.is_some(), "rounds")?;
                self.require(self.profile.is_some(), "profile")
            }
            (Tcp, EpsilonCheck) => self.require(self.epsilon.is_some(), "epsilon"),
            (Tcp, Escalation) => self.require(self.rounds.is_some(), "rounds"),
            (Netform, EpsilonCheck) => {
                self.require(self.epsilon.is_some(), "epsilon")?;
                self.require(self.deviation_mode.is_some(), "deviation_mode")?;
                let params = self.netform_params()?;
                if params.m.is_none() {
                    bail!("netform epsilon_check requires params.m");
                }
                Ok(())
            }
            (Netform, BandScan) => {
                self.require(self.epsilon.is_some(), "epsilon")?;
                self.require(self.deviation_mode.is_some(), "deviation_mode")?;
                self.require(
                    self.m_grid.as_ref().is_some_and(|g| !g.is_empty()),
                    "m_grid",
                )?;
                let params = self.netform_params()?;
                if params.m.is_some() {
                    bail!("band_scan sweeps m via m_grid; remove params.m");
                }
                Ok(())
            }
            (game, analysis) => bail!("analysis {analysis:?} is not defined for {game:?}"),
        }
    }
}
