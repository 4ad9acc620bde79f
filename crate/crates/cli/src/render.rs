//! Text, JSON and DOT renderings.

use nsgp::{CovarietyTree, Error, NumericalSemigroup, Result, SemigroupRecord};
use serde::Serialize;

use crate::Format;

pub fn braces(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn no_dot(what: &str) -> Error {
    Error::Usage(format!(
        "{what} has no DOT rendering; use --format text or json"
    ))
}

fn line(s: &NumericalSemigroup) -> String {
    format!("g={} {}", s.genus(), s)
}

pub fn records(members: &[NumericalSemigroup]) -> Vec<SemigroupRecord> {
    members.iter().map(SemigroupRecord::from).collect()
}

/// One semigroup per line, or a JSON array of records.
pub fn list(members: &[NumericalSemigroup], format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(members.iter().map(|s| line(s) + "\n").collect()),
        Format::Json => Ok(json(&records(members))),
        Format::Dot => Err(no_dot("a list of semigroups")),
    }
}

/// Like [`list`], with each text line naming the parent vertex and the
/// element that was adjoined to it; DOT gives the whole tree.
pub fn tree(t: &CovarietyTree, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok((0..t.len())
            .map(|i| {
                let link = match (t.parent(i), t.label(i)) {
                    (Some(p), Some(x)) => format!("  [parent #{p}, +{x}]"),
                    _ => "  [root]".to_string(),
                };
                format!("#{i} {}{link}\n", line(&t.vertices()[i]))
            })
            .collect()),
        Format::Json => Ok(json(&records(t.vertices()))),
        Format::Dot => Ok(t.to_dot()),
    }
}
