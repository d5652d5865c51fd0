//! Pipeline orchestration behind the `logharmonic` binary.

pub mod config;
pub mod instance;
pub mod parse;
pub mod pipeline;
pub mod svg;
pub mod verify;

pub use config::{refined_schedule, RunConfig, SeedStrategy, Tolerances};
pub use instance::{load_instance, InstanceDocument, LoadedInstance, INSTANCE_VERSION};
pub use pipeline::{certify, run_pipeline, Failure, PipelineRun};
pub use verify::{verify_file, VerifyOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
