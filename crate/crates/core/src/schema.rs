//! JSON input and output shapes.
//!
//! Groups are `{"order", "table"}` or `{"generators", "degree"}`, each with
//! optional `"names"`. Presentations are
//! `{"group", "subgroup", "cocycle": {"modulus", "exps"}, "tuple"}`; a missing
//! cocycle is trivial.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::{Elem, Group, Subgroup};
use crate::pi::{GradedPolynomial, PolynomialSpec};
use crate::presentation::Presentation;
use crate::settings::Caps;
use crate::twisted::{Cocycle, CocycleSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Permutations {
        generators: Vec<Vec<usize>>,
        degree: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationSpec {
    pub group: GroupSpec,
    pub subgroup: Vec<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleSpec>,
    pub tuple: Vec<Elem>,
}

/// Input of `identity`: a polynomial against a presentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityInput {
    pub presentation: PresentationSpec,
    pub polynomial: PolynomialSpec,
}

/// Input of `h2`: a subgroup of a group and a root modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H2Input {
    pub group: GroupSpec,
    pub subgroup: Vec<Elem>,
    pub modulus: u32,
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

impl GroupSpec {
    pub fn build(&self, caps: &Caps) -> Result<Group> {
        match self {
            GroupSpec::Table { order, table, names } => {
                if table.len() != *order {
                    return invalid(format!("table has {} rows but order is {order}", table.len()));
                }
                Group::from_table(table.clone(), names.clone(), caps.group_order)
            }
            GroupSpec::Permutations { generators, degree, names } => {
                let g = Group::from_permutations(generators, *degree, caps.group_order)?;
                match names {
                    Some(n) => g.with_names(n.clone()),
                    None => Ok(g),
                }
            }
        }
    }

    pub fn from_group(g: &Group) -> GroupSpec {
        GroupSpec::Table { order: g.order(), table: g.table(), names: g.names().map(<[String]>::to_vec) }
    }
}

impl PresentationSpec {
    pub fn build(&self, caps: &Caps) -> Result<Presentation> {
        let group = Arc::new(self.group.build(caps)?);
        let h = Arc::new(Subgroup::new(group, &self.subgroup)?);
        let alpha = match &self.cocycle {
            Some(spec) => Cocycle::from_spec(h, spec)?,
            None => Cocycle::trivial(h, 1),
        };
        Presentation::new(alpha, self.tuple.clone())
    }

    pub fn from_presentation(p: &Presentation) -> PresentationSpec {
        PresentationSpec {
            group: GroupSpec::from_group(p.group()),
            subgroup: p.subgroup().elements().to_vec(),
            cocycle: Some(p.cocycle().to_spec()),
            tuple: p.tuple().to_vec(),
        }
    }
}

pub fn parse_presentation(text: &str, caps: &Caps) -> Result<Presentation> {
    parse_json::<PresentationSpec>(text)?.build(caps)
}

impl IdentityInput {
    pub fn build(&self, caps: &Caps) -> Result<(Presentation, GradedPolynomial)> {
        Ok((self.presentation.build(caps)?, GradedPolynomial::from_spec(&self.polynomial)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn presentation_round_trip() {
        for (_, p) in corpus::presentations() {
            let spec = PresentationSpec::from_presentation(&p);
            let text = serde_json::to_string(&spec).unwrap();
            let back = parse_presentation(&text, &Caps::default()).unwrap();
            assert_eq!(back.tuple(), p.tuple());
            assert_eq!(back.cocycle().to_spec(), p.cocycle().to_spec());
            assert_eq!(**back.group(), **p.group());
        }
    }

    #[test]
    fn permutation_groups_and_errors() {
        let text = r#"{"group":{"generators":[[1,2,0],[1,0,2]],"degree":3},"subgroup":[0],"tuple":[0,2]}"#;
        let p = parse_presentation(text, &Caps::default()).unwrap();
        assert_eq!(p.group().order(), 6);
        assert_eq!(parse_presentation("{", &Caps::default()).unwrap_err().kind(), crate::ErrorKind::Parse);
        let bad = r#"{"group":{"order":2,"table":[[0,1],[1,1]]},"subgroup":[0],"tuple":[0]}"#;
        assert_eq!(parse_presentation(bad, &Caps::default()).unwrap_err().kind(), crate::ErrorKind::Precondition);
        let capped = Caps { group_order: 4, ..Caps::default() };
        assert_eq!(parse_presentation(text, &capped).unwrap_err().kind(), crate::ErrorKind::Limit);
    }
}
