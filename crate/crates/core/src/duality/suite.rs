use rayon::prelude::*;

use super::report::{AdjunctionReport, SuiteReport};

/// Runs `check` on every instance in parallel. Each check is a pure function
/// of its instance, and the result is sorted by instance id, so the output
/// does not depend on scheduling.
pub fn run_suite<T, F>(instances: &[T], check: F) -> SuiteReport
where
    T: Sync,
    F: Fn(&T) -> AdjunctionReport + Sync + Send,
{
    SuiteReport::from_reports(instances.par_iter().map(check).collect())
}
