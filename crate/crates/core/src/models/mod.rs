//! Geometric models producing classes: toric actions of finite abelian groups and
//! diagonal chart models for the standardization loop.

mod chart;
mod fan;
mod toric;

pub use chart::{blow_up_chart, standardize, BlowupStep, Chart, ChartModel, StandardizeLog, MAX_CHARTS};
pub use fan::Fan;
pub use toric::{product_trivial_pm, projective_space_action, FixedStratum, ToricGAction};
