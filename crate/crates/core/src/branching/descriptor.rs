//! Text descriptor of an unmixed pair:
//!
//! ```text
//! group = A5
//! gv1 = (2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)
//! sig1 = [2,5,5]
//! gv2 = (1,2,3) (3,4,5) (4,3,2) (2,1,5)
//! sig2 = [3,3,3,3]
//! ```
//!
//! `#` starts a comment. An optional `type = unmixed` line is accepted;
//! `type = mixed` is rejected.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::genvec::{verify_generating_vector, GenVectorError, UnmixedPair};
use super::signature::Signature;
use crate::permgroup::{construct_group, parse_perm_list, Group, GroupError, GroupLabel, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptorError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("missing key '{0}'")]
    Missing(&'static str),
    #[error("mixed-type surfaces (an element exchanging the two factors) are not supported; only unmixed pairs can be checked")]
    MixedType,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{side}: {source}")]
    GenVector { side: &'static str, source: GenVectorError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDescriptor {
    pub group: GroupLabel,
    pub gv1: Vec<Perm>,
    pub sig1: Vec<u32>,
    pub gv2: Vec<Perm>,
    pub sig2: Vec<u32>,
}

impl PairDescriptor {
    pub fn parse(text: &str) -> Result<Self, DescriptorError> {
        let mut group: Option<(GroupLabel, Group)> = None;
        let mut fields: [Option<(usize, usize, String)>; 4] = Default::default();
        let keys = ["gv1", "sig1", "gv2", "sig2"];
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let syntax = |column: usize, message: String| DescriptorError::Syntax { line: line_no, column, message };
            let (key, value) = line.split_once('=').ok_or_else(|| syntax(1, "expected 'key = value'".into()))?;
            let value_col = key.chars().count() + 2 + (value.len() - value.trim_start().len());
            let key = key.trim();
            let value = value.trim();
            match key {
                "group" => {
                    let label: GroupLabel = value.parse().map_err(|e: GroupError| syntax(value_col, e.to_string()))?;
                    let g = construct_group(&label)?;
                    group = Some((label, g));
                }
                "type" => match value {
                    "unmixed" => {}
                    "mixed" => return Err(DescriptorError::MixedType),
                    other => return Err(syntax(value_col, format!("unknown type '{other}'"))),
                },
                k => {
                    let slot = keys.iter().position(|&x| x == k).ok_or_else(|| syntax(1, format!("unknown key '{k}'")))?;
                    fields[slot] = Some((line_no, value_col, value.to_string()));
                }
            }
        }
        let (label, g) = group.ok_or(DescriptorError::Missing("group"))?;
        let take = |i: usize| fields[i].clone().ok_or(DescriptorError::Missing(keys[i]));
        let perms = |(line, col, text): (usize, usize, String)| {
            parse_perm_list(&text, g.degree()).map_err(|e| DescriptorError::Syntax { line, column: col + e.column - 1, message: e.message })
        };
        let sig = |(line, col, text): (usize, usize, String)| {
            text.parse::<Signature>()
                .map(|s| s.given().to_vec())
                .map_err(|e| DescriptorError::Syntax { line, column: col, message: e.to_string() })
        };
        Ok(PairDescriptor { group: label, gv1: perms(take(0)?)?, sig1: sig(take(1)?)?, gv2: perms(take(2)?)?, sig2: sig(take(3)?)? })
    }

    /// Builds the group and certifies both generating vectors.
    pub fn certify(&self) -> Result<UnmixedPair, DescriptorError> {
        let group = Arc::new(construct_group(&self.group)?);
        self.certify_in(&group)
    }

    pub fn certify_in(&self, group: &Arc<Group>) -> Result<UnmixedPair, DescriptorError> {
        let gv1 = verify_generating_vector(group, &self.gv1, &self.sig1).map_err(|source| DescriptorError::GenVector { side: "gv1", source })?;
        let gv2 = verify_generating_vector(group, &self.gv2, &self.sig2).map_err(|source| DescriptorError::GenVector { side: "gv2", source })?;
        UnmixedPair::new(gv1, gv2).map_err(|source| DescriptorError::GenVector { side: "pair", source })
    }

    pub fn from_pair(label: &GroupLabel, pair: &UnmixedPair) -> Self {
        PairDescriptor {
            group: label.clone(),
            gv1: pair.gv1.perms(),
            sig1: pair.gv1.signature().given().to_vec(),
            gv2: pair.gv2.perms(),
            sig2: pair.gv2.signature().given().to_vec(),
        }
    }
}

fn join_perms(perms: &[Perm]) -> String {
    perms.iter().map(Perm::to_string).collect::<Vec<_>>().join(" ")
}

fn join_sig(sig: &[u32]) -> String {
    format!("[{}]", sig.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

impl fmt::Display for PairDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group = {}", self.group)?;
        writeln!(f, "gv1 = {}", join_perms(&self.gv1))?;
        writeln!(f, "sig1 = {}", join_sig(&self.sig1))?;
        writeln!(f, "gv2 = {}", join_perms(&self.gv2))?;
        writeln!(f, "sig2 = {}", join_sig(&self.sig2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MAIN: &str = "# main family\ngroup = A5\ngv1 = (2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)\nsig1 = [2,5,5]\ngv2 = (1,2,3) (3,4,5) (4,3,2) (2,1,5)\nsig2 = [3,3,3,3]\n";

    #[test]
    fn parses_and_certifies() {
        let d = PairDescriptor::parse(MAIN).unwrap();
        assert_eq!(d.sig2, vec![3, 3, 3, 3]);
        let pair = d.certify().unwrap();
        assert_eq!(pair.group().order(), 60);
        assert_eq!(PairDescriptor::parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn positional_errors() {
        let bad = MAIN.replace("(3,4,5) (4,3,2)", "(3,4,5) (4,3,9)");
        match PairDescriptor::parse(&bad).unwrap_err() {
            DescriptorError::Syntax { line, column, .. } => {
                assert_eq!(line, 5);
                assert_eq!(&bad.lines().nth(4).unwrap()[column - 1..column], "9");
            }
            e => panic!("{e:?}"),
        }
        let bad = MAIN.replace("sig1 = [2,5,5]", "sig1 = 2,5,5");
        assert!(matches!(PairDescriptor::parse(&bad), Err(DescriptorError::Syntax { line: 4, column: 8, .. })));
        let missing = MAIN.replace("sig2 = [3,3,3,3]\n", "");
        assert_eq!(PairDescriptor::parse(&missing).unwrap_err(), DescriptorError::Missing("sig2"));
        let mixed = format!("type = mixed\n{MAIN}");
        assert_eq!(PairDescriptor::parse(&mixed).unwrap_err(), DescriptorError::MixedType);
    }
}
