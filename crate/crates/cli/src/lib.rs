//! Command-line front end: model files, JSON reports and the SVG export.

pub mod commands;
pub mod model_file;
pub mod report;
pub mod svg;

/// Exit status for domain errors (a JSON error report is printed).
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for usage errors.
pub const EXIT_USAGE: i32 = 2;

/// Reads `STRESSFORGE_THREADS`: `None` when unset, an error message when
/// it is not a positive integer.
pub fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var("STRESSFORGE_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("STRESSFORGE_THREADS must be a positive integer, got {v:?}")),
        },
    }
}
