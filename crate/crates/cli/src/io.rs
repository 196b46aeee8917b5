use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use booktri::{from_edge_list_text, from_graph6, Error, Graph};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
    /// A hypothesis or self-check that the input or output must satisfy.
    Hypothesis(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(Error::NotTriangleFree([a, b, c])) => {
                write!(
                    f,
                    "input is not triangle-free; witness triangle: {a} {b} {c}"
                )
            }
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Usage(m) | CliError::Hypothesis(m) => f.write_str(m),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Parse { .. }) => 2,
            CliError::Core(Error::NotTriangleFree(_)) | CliError::Hypothesis(_) => 3,
            CliError::Core(Error::ExplosionGuard { .. }) => 4,
            CliError::Core(_) | CliError::Io(..) | CliError::Usage(_) => 1,
        }
    }
}

/// Reads graph6 (`.g6`) or an edge list (`.el`); any other extension is sniffed:
/// a first line without whitespace is taken as graph6.
pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    let graph6 = match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => true,
        Some("el") => false,
        _ => {
            let first = bytes.split(|&c| c == b'\n').next().unwrap_or(&[]);
            !first.trim_ascii().is_empty()
                && !first.trim_ascii().iter().any(|c| c.is_ascii_whitespace())
        }
    };
    if graph6 {
        let end = bytes
            .iter()
            .rposition(|c| !c.is_ascii_whitespace())
            .map_or(0, |i| i + 1);
        Ok(from_graph6(&bytes[..end])?)
    } else {
        let text = std::str::from_utf8(&bytes).map_err(|e| Error::Parse {
            offset: e.valid_up_to(),
            message: "edge list is not valid UTF-8".into(),
        })?;
        Ok(from_edge_list_text(text)?)
    }
}

pub fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

pub fn write_output(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e))
        }
    }
}
