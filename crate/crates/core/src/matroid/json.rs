use serde::{Deserialize, Serialize};

use super::graph::{graphic, GraphSpec};
use super::Matroid;
use crate::error::{Error, Result};

/// Wire format `{"n": .., "bases": [[..], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}

impl From<&Matroid> for MatroidJson {
    fn from(m: &Matroid) -> Self {
        MatroidJson {
            n: m.n(),
            bases: m.bases().iter().map(|b| b.to_vec()).collect(),
        }
    }
}

impl TryFrom<MatroidJson> for Matroid {
    type Error = Error;
    fn try_from(j: MatroidJson) -> Result<Matroid> {
        Matroid::from_base_lists(j.n, &j.bases)
    }
}

impl Matroid {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatroidJson::from(self)).expect("matroid serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&MatroidJson::from(self)).expect("matroid serializes")
    }

    /// Accept either matroid JSON or graph JSON (`{"vertices": .., "edges": ..}`).
    pub fn from_json_str(text: &str) -> Result<Matroid> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Matroid::from_json_value(&value)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Matroid> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        if obj.contains_key("bases") {
            let j: MatroidJson =
                serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            Matroid::try_from(j)
        } else if obj.contains_key("vertices") {
            let g: GraphSpec =
                serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
            graphic(&g)
        } else {
            Err(Error::Parse(
                "expected keys \"n\"/\"bases\" or \"vertices\"/\"edges\"".into(),
            ))
        }
    }
}
