//! Partition interchange format:
//! `{"upper": ["x","y"], "lower": [], "blocks": [[["u",1],["u",2]]]}`,
//! with 1-based point indices.

use serde::{Deserialize, Serialize};

use super::{Alphabet, ColouredPartition, ColouredWord, DiagramError, PointRef, Row};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson(pub String, pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub upper: Vec<String>,
    pub lower: Vec<String>,
    pub blocks: Vec<Vec<PointJson>>,
}

impl From<&ColouredPartition> for PartitionJson {
    fn from(p: &ColouredPartition) -> Self {
        let word = |w: &ColouredWord| w.iter().map(|c| c.symbol().to_string()).collect();
        PartitionJson {
            upper: word(p.upper()),
            lower: word(p.lower()),
            blocks: p
                .blocks()
                .into_iter()
                .map(|b| {
                    b.into_iter()
                        .map(|pt| {
                            let row = match pt.row {
                                Row::Upper => "u",
                                Row::Lower => "l",
                            };
                            PointJson(row.to_string(), pt.index + 1)
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

impl PartitionJson {
    pub fn to_partition(&self, alphabet: &Alphabet) -> Result<ColouredPartition, DiagramError> {
        let word = |syms: &[String]| -> Result<ColouredWord, DiagramError> {
            syms.iter()
                .map(|s| {
                    alphabet
                        .get(s)
                        .cloned()
                        .ok_or_else(|| DiagramError::UnknownColour(s.clone()))
                })
                .collect()
        };
        let upper = word(&self.upper)?;
        let lower = word(&self.lower)?;
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let mut pts = Vec::with_capacity(b.len());
            for PointJson(row, idx) in b {
                let row = match row.as_str() {
                    "u" | "U" | "upper" => Row::Upper,
                    "l" | "L" | "lower" => Row::Lower,
                    other => {
                        return Err(DiagramError::Invalid(format!(
                            "point [\"{other}\", {idx}] has an unknown row"
                        )))
                    }
                };
                if *idx == 0 {
                    return Err(DiagramError::Invalid(format!(
                        "point [\"{}\", 0] uses index 0; indices are 1-based",
                        if row == Row::Upper { "u" } else { "l" }
                    )));
                }
                pts.push(PointRef {
                    row,
                    index: idx - 1,
                });
            }
            blocks.push(pts);
        }
        ColouredPartition::from_blocks(upper, lower, &blocks)
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<ColouredPartition, DiagramError> {
        let j: PartitionJson =
            serde_json::from_str(text).map_err(|e| DiagramError::Invalid(e.to_string()))?;
        j.to_partition(alphabet)
    }
}
