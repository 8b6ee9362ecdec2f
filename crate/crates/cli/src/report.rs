//! JSON documents written by `region` and `sweep`.

use runoff_core::region::RegionOutcome;
use runoff_core::{RegionReport, SweepResult};
use serde::{Deserialize, Serialize};

use crate::config::{RegionConfig, SweepConfig};
use crate::{parallel, CliError};

pub const TOOL: &str = "runoff";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: RegionConfig,
    pub report: RegionReport,
    /// Relevant fraction below `config.area_threshold`.
    pub vanished: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: SweepConfig,
    pub result: SweepResult,
}

pub fn run_region(config: &RegionConfig) -> Result<(RegionDocument, RegionOutcome), CliError> {
    let outcome = parallel::region(&config.spec()?)?;
    let doc = RegionDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: "region".into(),
        config: *config,
        report: outcome.report,
        vanished: outcome.report.relevant_fraction() < config.area_threshold,
    };
    Ok((doc, outcome))
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepDocument, CliError> {
    let result = parallel::sweep(&config.params()?)?;
    Ok(SweepDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: "sweep".into(),
        config: *config,
        result,
    })
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialise");
    s.push('\n');
    s
}
