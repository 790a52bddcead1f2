//! Minimal stderr logging controlled by the `SGI_LOG_LEVEL` environment
//! variable: `error`, `info` (default), or `debug`.

use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Error,
    Info,
    Debug,
}

fn level() -> Level {
    static LEVEL: OnceLock<Level> = OnceLock::new();
    *LEVEL.get_or_init(|| {
        match std::env::var("SGI_LOG_LEVEL")
            .unwrap_or_default()
            .to_ascii_lowercase()
            .as_str()
        {
            "error" => Level::Error,
            "debug" => Level::Debug,
            _ => Level::Info,
        }
    })
}

pub fn log(at: Level, message: std::fmt::Arguments<'_>) {
    if at <= level() {
        let tag = match at {
            Level::Error => "error",
            Level::Info => "info",
            Level::Debug => "debug",
        };
        eprintln!("[{tag}] {message}");
    }
}

macro_rules! info {
    ($($arg:tt)*) => {
        $crate::logging::log($crate::logging::Level::Info, format_args!($($arg)*))
    };
}

macro_rules! debug {
    ($($arg:tt)*) => {
        $crate::logging::log($crate::logging::Level::Debug, format_args!($($arg)*))
    };
}

pub(crate) use {debug, info};
