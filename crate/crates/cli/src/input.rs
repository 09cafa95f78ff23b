use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use hallkit::group::{cyclic_group, symmetric_group, FiniteGroup};
use hallkit::relation::parse_relmat;
use hallkit::semigroup::parse_cayley;
use hallkit::{FiniteSemigroup, Relation};

/// An input problem: unreadable file, malformed content, or a bad value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<hallkit::Error> for InputError {
    fn from(e: hallkit::Error) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: hallkit::Error) -> InputError {
    InputError(format!("{}: {e}", path.display()))
}

pub fn parse_relation_file(path: &Path) -> Result<Relation, InputError> {
    parse_relmat(&read(path)?).map_err(|e| located(path, e))
}

pub fn parse_cayley_file(path: &Path) -> Result<FiniteSemigroup, InputError> {
    parse_cayley(&read(path)?).map_err(|e| located(path, e))
}

/// `cyclic:<m>`, `symmetric:<n>` or `file:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    File(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected cyclic:<m>, symmetric:<n> or file:<path>, got {s:?}"))?;
        let number = || {
            arg.parse::<usize>()
                .map_err(|_| format!("{kind}: expected a positive integer, got {arg:?}"))
        };
        match kind {
            "cyclic" => Ok(GroupSpec::Cyclic(number()?)),
            "symmetric" => Ok(GroupSpec::Symmetric(number()?)),
            "file" if !arg.is_empty() => Ok(GroupSpec::File(PathBuf::from(arg))),
            "file" => Err("file: missing path".to_string()),
            _ => Err(format!("unknown group kind {kind:?}")),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, InputError> {
        match self {
            GroupSpec::Cyclic(m) => Ok(cyclic_group(*m)?),
            GroupSpec::Symmetric(n) => Ok(symmetric_group(*n)?.group),
            GroupSpec::File(path) => {
                let text = read(path)?;
                // Group files must name their identity explicitly.
                if !text.lines().any(|l| l.trim().starts_with("identity=")) {
                    return Err(InputError(format!(
                        "{}: group tables need an identity= trailer",
                        path.display()
                    )));
                }
                let table = parse_cayley(&text).map_err(|e| located(path, e))?;
                FiniteGroup::from_semigroup(table).map_err(|e| located(path, e))
            }
        }
    }
}
