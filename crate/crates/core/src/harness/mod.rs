//! Verification harness: fixtures, certificates, campaigns over graph
//! collections, and the JSON report format.

pub mod campaign;
pub mod certificate;
pub mod fixtures;
pub mod report;
pub mod stream;

pub use campaign::{
    find_extremal_examples, run_campaign, run_hunt, Campaign, ExtremalProfile, GraphSource, Hunt, ScanConfig, WORKERS_ENV,
};
pub use certificate::Certificate;
pub use fixtures::{planar_delta3_breaking, Fixture, FixtureCheck, FixtureRegistry};
pub use report::{CampaignResult, CheckOutcome, CheckRecord, Counterexample, GraphRecord, Timings, Verdict, SCHEMA};
pub use stream::read_graph6_stream;
