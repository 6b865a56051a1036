//! The JSON matroid document used for both input and output.

use std::collections::BTreeSet;
use std::path::Path;

use matroidlab::{GroundSet, Matroid, SetFamily, Subset};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// An element label. Integer literals are accepted on input and stored as
/// their decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawLabel", into = "String")]
pub struct Label(pub String);

#[derive(Deserialize)]
#[serde(untagged)]
enum RawLabel {
    Text(String),
    Int(i64),
}

impl From<RawLabel> for Label {
    fn from(raw: RawLabel) -> Self {
        match raw {
            RawLabel::Text(s) => Label(s),
            RawLabel::Int(i) => Label(i.to_string()),
        }
    }
}

impl From<Label> for String {
    fn from(label: Label) -> Self {
        label.0
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_string())
    }
}

/// Exactly one of `bases` and `independents` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDocument {
    pub ground_set: Vec<Label>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<Label>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub independents: Option<Vec<Vec<Label>>>,
}

impl MatroidDocument {
    /// The canonical bases form of `m`.
    pub fn from_matroid(m: &Matroid) -> Self {
        let labels = |sets: Vec<Vec<String>>| {
            sets.into_iter()
                .map(|s| s.into_iter().map(Label).collect())
                .collect()
        };
        MatroidDocument {
            ground_set: m.ground().labels().iter().cloned().map(Label).collect(),
            bases: Some(labels(m.bases().label_lists())),
            independents: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Validates the document and builds the matroid it describes.
    pub fn to_matroid(&self) -> Result<Matroid, CliError> {
        let ground = GroundSet::new(self.ground_set.iter().map(|l| l.0.as_str()))
            .map_err(|e| CliError::Input(e.to_string()))?;
        match (&self.bases, &self.independents) {
            (Some(sets), None) => {
                let family = family(&ground, sets)?;
                Matroid::from_bases(family).map_err(|e| CliError::from_core(e, &ground))
            }
            (None, Some(sets)) => {
                let family = family(&ground, sets)?;
                Matroid::from_independents(family).map_err(|e| CliError::from_core(e, &ground))
            }
            _ => Err(CliError::Input(
                "exactly one of \"bases\" and \"independents\" must be present".into(),
            )),
        }
    }

    pub fn to_json(&self, compact: bool) -> String {
        let rendered = if compact {
            serde_json::to_string(self)
        } else {
            serde_json::to_string_pretty(self)
        };
        rendered.expect("documents always serialize")
    }
}

/// Label lists to subsets, rejecting unknown labels and sets that repeat
/// after canonicalization.
fn family(ground: &GroundSet, sets: &[Vec<Label>]) -> Result<SetFamily, CliError> {
    let mut seen = BTreeSet::new();
    let mut subsets: Vec<Subset> = Vec::with_capacity(sets.len());
    for set in sets {
        let x = ground
            .subset(set.iter().map(|l| l.0.as_str()))
            .map_err(|e| CliError::Input(e.to_string()))?;
        if !seen.insert(x) {
            return Err(CliError::Input(format!(
                "set {} is listed more than once",
                ground.render(x)
            )));
        }
        subsets.push(x);
    }
    SetFamily::new(ground, subsets).map_err(|e| CliError::Input(e.render(ground)))
}
