//! Verification of the second main theorems, the ramification bound and the unicity threshold.

mod constants;
mod genus0;
mod numeric;
mod report;

pub use constants::{unicity_threshold, SmtConstants, UnicityThreshold};
pub use genus0::{
    ramification_check, verify_genus0, verify_pointwise, DivisorRow, Genus0Report, PointRow,
    PointwiseReport, RamificationReport, RamificationRow,
};
pub use numeric::{
    sample_second_main_theorem, slack, NumericDivisor, RadiusRow, SampleOptions, SampleReport,
    DEFAULT_GAP_TOLERANCE, DEFAULT_RADII, DEFAULT_SLACK_C1, DEFAULT_SLACK_C2,
};
pub use report::{
    all_hold, one_based, one_based_nested, one_based_vec, text_table, HypothesisCheck, Verdict,
};
