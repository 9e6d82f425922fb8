//! Library half of the `dualcolor` binary: file formats and subcommands.

pub mod commands;
pub mod format;

pub use commands::{CliError, Output};
pub use format::{parse, FormatError, Instance};

/// Reads an instance from `path`, or from standard input for `-`.
pub fn read_instance(path: &std::path::Path) -> Result<Instance, CliError> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
    };
    Ok(parse(&text)?)
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
