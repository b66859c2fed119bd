use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;
use webtab::strings::{got_from_string, SignatureStateString};
use webtab::tableaux::Got;
use webtab::web::{from_dot, Web};

/// One input record: a tableau, or a boundary string.
#[derive(Debug, Clone)]
pub enum Record {
    Got(Got),
    String(SignatureStateString),
}

impl Record {
    pub fn into_got(self) -> Result<Got> {
        match self {
            Record::Got(g) => Ok(g),
            Record::String(s) => got_from_string(&s).with_context(|| format!("string {s}")),
        }
    }

    pub fn into_string(self) -> Result<SignatureStateString> {
        match self {
            Record::String(s) => Ok(s),
            Record::Got(g) => webtab::strings::string_from_got(&g).context("tableau is not a three-row tableau"),
        }
    }
}

pub fn open(path: &Path) -> Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(f)))
}

/// Accepts a tableau object, a JSON entry list, a quoted compact string, or a
/// bare compact string such as `1B0BmB`.
pub fn parse_record(line: &str) -> Result<Record> {
    let trimmed = line.trim();
    match serde_json::from_str::<Value>(trimmed) {
        Ok(v @ Value::Object(_)) => Ok(Record::Got(serde_json::from_value(v).context("tableau")?)),
        Ok(v @ Value::Array(_)) => Ok(Record::String(serde_json::from_value(v).context("string")?)),
        Ok(Value::String(s)) => Ok(Record::String(s.parse().context("compact string")?)),
        Ok(other) => bail!("unexpected record {other}"),
        Err(_) => Ok(Record::String(trimmed.parse().context("compact string")?)),
    }
}

/// Non-blank lines of the input, parsed. A literal `""` line is the empty string.
pub fn read_records(path: &Path) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (i, line) in open(path)?.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_record(&line).with_context(|| format!("line {}", i + 1))?);
    }
    Ok(out)
}

/// A web from JSON or DOT, judged by the first non-blank character.
pub fn read_web(path: &Path) -> Result<Web> {
    let mut text = String::new();
    open(path)?.read_to_string(&mut text)?;
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(&text).context("web JSON")?)
    } else {
        Ok(from_dot(&text).context("web DOT")?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_forms() {
        assert!(matches!(parse_record("1B1W").unwrap(), Record::String(s) if s.len() == 2));
        assert!(matches!(parse_record("\"mWmB\"").unwrap(), Record::String(_)));
        assert!(matches!(
            parse_record(r#"[{"state":1,"color":"B"},{"state":1,"color":"W"}]"#).unwrap(),
            Record::String(_)
        ));
        let g = parse_record(r#"{"n":3,"k":1,"shapes":[[0,0,0],[1,0,0]]}"#).unwrap();
        assert_eq!(g.into_got().unwrap().k(), 1);
        assert!(parse_record("7").is_err());
        assert!(parse_record("1X").is_err());
    }
}
