//! File helpers: reads that name the offending path and atomic writes
//! (write to a temporary sibling, then rename).

use std::fs;
use std::path::Path;

use crate::error::{CliError, CliResult};

pub fn read_to_string(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read `{}`: {e}", path.display())))
}

pub fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|e| {
                CliError::Config(format!("cannot create `{}`: {e}", parent.display()))
            })?;
        }
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    fs::write(tmp, contents)
        .map_err(|e| CliError::Config(format!("cannot write `{}`: {e}", tmp.display())))?;
    fs::rename(tmp, path)
        .map_err(|e| CliError::Config(format!("cannot rename into `{}`: {e}", path.display())))
}
