//! Solver file formats and output serialisation.
//!
//! Three input formats are supported:
//!
//! * **APX**: `arg(<name>).` and `att(<a>,<b>).` statements, any number per
//!   line, whitespace-insensitive, `%` starts a comment.
//! * **TGF**: one argument name per line, a `#` separator line, then one
//!   `<a> <b>` attack per line.
//! * **AF**: a `p af <n>` header followed by `<i> <j>` attack lines with
//!   1-based indices; arguments are named `1`..`n`; `#` starts a comment
//!   line.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::argset::ArgSet;
use crate::framework::{is_valid_name, Framework, FrameworkError};
use crate::labellings::Labelling;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Apx,
    Tgf,
    AfDimacs,
}

impl InputFormat {
    pub const ALL: [InputFormat; 3] = [InputFormat::Apx, InputFormat::Tgf, InputFormat::AfDimacs];

    /// Guess from the file extension (`.apx`, `.tgf`, `.af`).
    pub fn from_path(path: &Path) -> Option<Self> {
        path.extension()?.to_str()?.parse().ok()
    }
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "apx" => Ok(InputFormat::Apx),
            "tgf" => Ok(InputFormat::Tgf),
            "af" => Ok(InputFormat::AfDimacs),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: duplicate argument `{name}`")]
    DuplicateArgument { line: usize, name: String },
    #[error("line {line}: attack endpoint `{name}` is not a declared argument")]
    UndeclaredArgument { line: usize, name: String },
    #[error("line {line}: argument index {index} outside 1..={count}")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        count: usize,
    },
    #[error("missing `p af <n>` header")]
    MissingHeader,
}

pub fn parse(input: &str, format: InputFormat) -> Result<Framework, ParseError> {
    match format {
        InputFormat::Apx => parse_apx(input),
        InputFormat::Tgf => parse_tgf(input),
        InputFormat::AfDimacs => parse_afdimacs(input),
    }
}

/// Collected declarations, validated once the whole input is read so that
/// attacks may precede the declarations they mention.
#[derive(Default)]
struct Builder {
    names: Vec<(usize, String)>,
    attacks: Vec<(usize, String, String)>,
}

impl Builder {
    fn build(self) -> Result<Framework, ParseError> {
        let mut seen = std::collections::HashMap::new();
        for (line, name) in &self.names {
            if seen.insert(name.as_str(), *line).is_some() {
                return Err(ParseError::DuplicateArgument {
                    line: *line,
                    name: name.clone(),
                });
            }
        }
        for (line, a, b) in &self.attacks {
            for name in [a, b] {
                if !seen.contains_key(name.as_str()) {
                    return Err(ParseError::UndeclaredArgument {
                        line: *line,
                        name: name.clone(),
                    });
                }
            }
        }
        Framework::new(
            self.names.iter().map(|(_, n)| n.as_str()),
            self.attacks
                .iter()
                .map(|(_, a, b)| (a.as_str(), b.as_str())),
        )
        .map_err(|e| match e {
            FrameworkError::DuplicateArgument(name)
            | FrameworkError::UnknownArgument(name)
            | FrameworkError::InvalidName(name) => ParseError::Malformed {
                line: 0,
                text: name,
            },
        })
    }
}

/// Cursor over one line of APX text.
struct Scanner<'a> {
    rest: &'a str,
}

impl<'a> Scanner<'a> {
    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest.is_empty()
    }

    fn expect(&mut self, c: char) -> Option<()> {
        self.skip_ws();
        self.rest = self.rest.strip_prefix(c)?;
        Some(())
    }

    fn word(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let end = self
            .rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest.len());
        if end == 0 {
            return None;
        }
        let (word, rest) = self.rest.split_at(end);
        self.rest = rest;
        Some(word)
    }
}

enum Statement {
    Arg(String),
    Att(String, String),
}

fn apx_statement(sc: &mut Scanner<'_>) -> Option<Statement> {
    let keyword = sc.word()?;
    sc.expect('(')?;
    let first = sc.word()?.to_string();
    let stmt = match keyword {
        "arg" => Statement::Arg(first),
        "att" => {
            sc.expect(',')?;
            Statement::Att(first, sc.word()?.to_string())
        }
        _ => return None,
    };
    sc.expect(')')?;
    sc.expect('.')?;
    Some(stmt)
}

pub fn parse_apx(input: &str) -> Result<Framework, ParseError> {
    let mut builder = Builder::default();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('%').next().unwrap_or("");
        let mut sc = Scanner { rest: text };
        while !sc.at_end() {
            match apx_statement(&mut sc) {
                Some(Statement::Arg(name)) => builder.names.push((line, name)),
                Some(Statement::Att(a, b)) => builder.attacks.push((line, a, b)),
                None => {
                    return Err(ParseError::Malformed {
                        line,
                        text: raw.trim().to_string(),
                    })
                }
            }
        }
    }
    builder.build()
}

pub fn parse_tgf(input: &str) -> Result<Framework, ParseError> {
    let mut builder = Builder::default();
    let mut in_edges = false;
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        if text == "#" {
            if in_edges {
                return Err(ParseError::Malformed {
                    line,
                    text: text.to_string(),
                });
            }
            in_edges = true;
            continue;
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let malformed = || ParseError::Malformed {
            line,
            text: text.to_string(),
        };
        if in_edges {
            let [a, b] = tokens[..] else {
                return Err(malformed());
            };
            if !is_valid_name(a) || !is_valid_name(b) {
                return Err(malformed());
            }
            builder.attacks.push((line, a.to_string(), b.to_string()));
        } else {
            let [name] = tokens[..] else {
                return Err(malformed());
            };
            if !is_valid_name(name) {
                return Err(malformed());
            }
            builder.names.push((line, name.to_string()));
        }
    }
    builder.build()
}

pub fn parse_afdimacs(input: &str) -> Result<Framework, ParseError> {
    let mut count = None;
    let mut attacks = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line,
            text: text.to_string(),
        };
        let tokens: Vec<&str> = text.split_whitespace().collect();
        match count {
            None => match tokens[..] {
                ["p", "af", n] => count = Some(n.parse::<usize>().map_err(|_| malformed())?),
                _ => return Err(ParseError::MissingHeader),
            },
            Some(n) => {
                let [a, b] = tokens[..] else {
                    return Err(malformed());
                };
                let endpoint = |tok: &str| -> Result<usize, ParseError> {
                    let index: usize = tok.parse().map_err(|_| malformed())?;
                    if index == 0 || index > n {
                        return Err(ParseError::IndexOutOfRange {
                            line,
                            index,
                            count: n,
                        });
                    }
                    Ok(index - 1)
                };
                let from = endpoint(a)?;
                let to = endpoint(b)?;
                attacks.push((from, to));
            }
        }
    }
    let n = count.ok_or(ParseError::MissingHeader)?;
    Ok(
        Framework::from_indices((1..=n).map(|i| i.to_string()), attacks)
            .expect("numeric names are valid and distinct"),
    )
}

pub fn to_apx(af: &Framework) -> String {
    let mut out = String::new();
    for name in af.names() {
        let _ = writeln!(out, "arg({name}).");
    }
    for (a, b) in af.attack_pairs() {
        let _ = writeln!(out, "att({},{}).", af.name(a), af.name(b));
    }
    out
}

pub fn to_tgf(af: &Framework) -> String {
    let mut out = String::new();
    for name in af.names() {
        let _ = writeln!(out, "{name}");
    }
    out.push_str("#\n");
    for (a, b) in af.attack_pairs() {
        let _ = writeln!(out, "{} {}", af.name(a), af.name(b));
    }
    out
}

/// AF format; arguments are written by position, so names other than
/// `1`..`n` do not survive a round trip.
pub fn to_afdimacs(af: &Framework) -> String {
    let mut out = format!("p af {}\n", af.len());
    for (a, b) in af.attack_pairs() {
        let _ = writeln!(out, "{} {}", a.index() + 1, b.index() + 1);
    }
    out
}

pub fn serialize(af: &Framework, format: InputFormat) -> String {
    match format {
        InputFormat::Apx => to_apx(af),
        InputFormat::Tgf => to_tgf(af),
        InputFormat::AfDimacs => to_afdimacs(af),
    }
}

/// Answer printed when a semantics has no extension.
pub const NO_EXTENSION: &str = "NO";

fn names_of<'a>(af: &'a Framework, set: &ArgSet) -> impl Iterator<Item = &'a str> + 'a {
    let indices: Vec<usize> = set.iter().collect();
    indices.into_iter().map(|i| af.names()[i].as_str())
}

/// `[n1,n2,...]` in argument order.
pub fn serialize_extension(af: &Framework, set: &ArgSet) -> String {
    format!("[{}]", names_of(af, set).collect::<Vec<_>>().join(","))
}

fn json_names(af: &Framework, set: &ArgSet) -> String {
    let quoted: Vec<String> = names_of(af, set).map(|n| format!("\"{n}\"")).collect();
    format!("[{}]", quoted.join(","))
}

/// `{"in":[...],"out":[...],"undec":[...]}` on one line.
pub fn serialize_labelling(af: &Framework, lab: &Labelling) -> String {
    format!(
        "{{\"in\":{},\"out\":{},\"undec\":{}}}",
        json_names(af, lab.in_set()),
        json_names(af, lab.out_set()),
        json_names(af, &lab.undec_set())
    )
}
