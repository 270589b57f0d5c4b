//! Groups `Γ ⊃ Λ`, colour-to-group evaluation and the dihedral group
//! `Z2 ∗ Z2`.

mod dihedral;
mod group;

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Alphabet, Colour, ColouredWord};

pub use dihedral::{dihedral_eval, DihedralElement};
pub use group::{in_subgroup, Group, GroupElement, Subgroup, TableGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unknown letter '{0}'")]
    UnknownLetter(String),
    #[error("elements or subgroups belong to different groups")]
    MixedGroups,
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("unknown group element '{0}'")]
    UnknownElement(String),
    #[error("colour images do not generate {0}")]
    NotGenerating(String),
    #[error("colour '{colour}' and its inverse do not map to inverse elements")]
    InverseMismatch { colour: String },
    #[error("representative word '{word}' evaluates to {got}, expected {expected}")]
    BadRepresentative {
        word: String,
        got: String,
        expected: String,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// A symmetric generating set `S` of `Γ`: colours with their images, closed
/// under colour inversion.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    group: Group,
    alphabet: Alphabet,
    assign: HashMap<Colour, GroupElement>,
    overrides: HashMap<GroupElement, ColouredWord>,
    /// Shortest nonempty shortlex word for each element (finite groups).
    geodesics: HashMap<GroupElement, ColouredWord>,
}

impl GeneratingSet {
    /// Builds `S` from `(colour, image)` pairs. Inverse colours that are not
    /// listed are added with the inverse image.
    pub fn new(group: &Group, assign: &[(Colour, GroupElement)]) -> Result<Self, GroupError> {
        let mut map: HashMap<Colour, GroupElement> = HashMap::new();
        for (c, g) in assign {
            if !group.contains(*g) {
                return Err(GroupError::MixedGroups);
            }
            for (col, img) in [(c.clone(), *g), (c.inverse(), group.inv(*g))] {
                match map.get(&col) {
                    Some(prev) if *prev != img => {
                        return Err(GroupError::InverseMismatch {
                            colour: c.symbol().to_string(),
                        })
                    }
                    _ => {
                        map.insert(col, img);
                    }
                }
            }
        }
        let alphabet = Alphabet::new(assign.iter().map(|(c, _)| c.clone()));
        let images: Vec<GroupElement> = map.values().copied().collect();
        let generated = Subgroup::closure(group, &images)?;
        let generates = match group.order() {
            Some(n) => generated.order() == Some(n),
            None => generated.contains(GroupElement(1)),
        };
        if !generates {
            return Err(GroupError::NotGenerating(group.describe()));
        }
        let mut s = GeneratingSet {
            group: group.clone(),
            alphabet,
            assign: map,
            overrides: HashMap::new(),
            geodesics: HashMap::new(),
        };
        if let Some(elems) = group.elements() {
            s.geodesics = s.search(elems.len(), |_| false);
        }
        Ok(s)
    }

    /// The generating set used when none is configured: `Z1` gets a single
    /// colour `a`, `Z2` a self-inverse `g`, other cyclic groups `g ↦ 1` and
    /// `G ↦ -1`, table groups one colour per non-identity element named
    /// after it.
    pub fn standard(group: &Group) -> Self {
        let assign: Vec<(Colour, GroupElement)> = match group {
            Group::Cyclic { order: 1 } => vec![(Colour::self_inverse("a"), GroupElement(0))],
            Group::Cyclic { order: 2 } => vec![(Colour::self_inverse("g"), GroupElement(1))],
            Group::Cyclic { .. } => vec![(Colour::new("g", "G"), GroupElement(1))],
            Group::Table(_) => {
                let e = group.identity();
                group
                    .elements()
                    .expect("table groups are finite")
                    .into_iter()
                    .filter(|&g| g != e)
                    .map(|g| {
                        let c = Colour::new(&group.name(g), &group.name(group.inv(g)));
                        (c, g)
                    })
                    .collect()
            }
        };
        GeneratingSet::new(group, &assign).expect("standard generating set is valid")
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn colours(&self) -> &[Colour] {
        self.alphabet.colours()
    }

    pub fn image(&self, c: &Colour) -> Result<GroupElement, GroupError> {
        self.assign
            .get(c)
            .copied()
            .ok_or_else(|| GroupError::UnknownLetter(c.symbol().to_string()))
    }

    /// `φ(w)`: the product of the colour images, left to right.
    pub fn phi(&self, w: &ColouredWord) -> Result<GroupElement, GroupError> {
        w.iter().try_fold(self.group.identity(), |acc, c| {
            Ok(self.group.mul(acc, self.image(c)?))
        })
    }

    /// `φ` of a slice of colours.
    pub fn phi_letters(&self, letters: &[Colour]) -> Result<GroupElement, GroupError> {
        letters.iter().try_fold(self.group.identity(), |acc, c| {
            Ok(self.group.mul(acc, self.image(c)?))
        })
    }

    /// Replaces the representative word of `g`.
    pub fn set_rep_word(&mut self, g: GroupElement, w: ColouredWord) -> Result<(), GroupError> {
        let got = self.phi(&w)?;
        if got != g || w.is_empty() {
            return Err(GroupError::BadRepresentative {
                word: w.to_string(),
                got: self.group.name(got),
                expected: self.group.name(g),
            });
        }
        self.overrides.insert(g, w);
        Ok(())
    }

    /// The representative word `w_g`: a configured word if any, otherwise
    /// the shortest nonempty word with `φ(w) = g`, first in shortlex order
    /// over the alphabet order.
    pub fn rep_word(&self, g: GroupElement) -> Result<ColouredWord, GroupError> {
        if !self.group.contains(g) {
            return Err(GroupError::MixedGroups);
        }
        if let Some(w) = self.overrides.get(&g).or_else(|| self.geodesics.get(&g)) {
            return Ok(w.clone());
        }
        let found = self.search(usize::MAX, |h| h == g);
        Ok(found.get(&g).expect("S generates Γ").clone())
    }

    /// Breadth-first search over nonempty words in shortlex order, keeping
    /// the first word reaching each element; stops after `limit` elements
    /// or when `stop` accepts a newly reached element.
    fn search<F: Fn(GroupElement) -> bool>(
        &self,
        limit: usize,
        stop: F,
    ) -> HashMap<GroupElement, ColouredWord> {
        let mut found: HashMap<GroupElement, ColouredWord> = HashMap::new();
        let mut queue: VecDeque<(GroupElement, Vec<Colour>)> = VecDeque::new();
        queue.push_back((self.group.identity(), Vec::new()));
        while let Some((g, w)) = queue.pop_front() {
            for c in self.colours() {
                let h = self.group.mul(g, self.assign[c]);
                if found.contains_key(&h) {
                    continue;
                }
                let mut hw = w.clone();
                hw.push(c.clone());
                found.insert(h, ColouredWord::new(hw.clone()));
                if stop(h) || found.len() >= limit {
                    return found;
                }
                queue.push_back((h, hw));
            }
        }
        found
    }
}

/// `{"kind":"cyclic","order":4}` or
/// `{"kind":"table","elements":[...],"product":[[...]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupJson {
    Cyclic {
        order: u64,
    },
    Table {
        elements: Vec<String>,
        product: Vec<Vec<usize>>,
    },
}

impl GroupJson {
    pub fn build(&self) -> Result<Group, GroupError> {
        match self {
            GroupJson::Cyclic { order } => Ok(Group::cyclic(*order)),
            GroupJson::Table { elements, product } => {
                Group::table(elements.clone(), product.clone())
            }
        }
    }
}

/// `{"generators":["g2"]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub generators: Vec<String>,
}

impl SubgroupJson {
    pub fn build(&self, group: &Group) -> Result<Subgroup, GroupError> {
        let gens = self
            .generators
            .iter()
            .map(|s| group.parse_element(s))
            .collect::<Result<Vec<_>, _>>()?;
        Subgroup::closure(group, &gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourJson {
    pub name: String,
    /// Defaults to `name` (a self-inverse colour).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<String>,
    pub maps_to: String,
}

/// `{"colours":[{"name":"a","inverse":"a3","maps_to":"g"}]}`, optionally
/// with `"rep_words": {"g2": ["a","a"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingSetJson {
    pub colours: Vec<ColourJson>,
    #[serde(default, skip_serializing_if = "HashMap::is_empty")]
    pub rep_words: HashMap<String, Vec<String>>,
}

impl GeneratingSetJson {
    pub fn build(&self, group: &Group) -> Result<GeneratingSet, GroupError> {
        let assign = self
            .colours
            .iter()
            .map(|c| {
                let inv = c.inverse.as_deref().unwrap_or(&c.name);
                Ok((Colour::new(&c.name, inv), group.parse_element(&c.maps_to)?))
            })
            .collect::<Result<Vec<_>, GroupError>>()?;
        let mut s = GeneratingSet::new(group, &assign)?;
        for (g, syms) in &self.rep_words {
            let g = group.parse_element(g)?;
            let w = syms
                .iter()
                .map(|sym| {
                    s.alphabet()
                        .get(sym)
                        .cloned()
                        .ok_or_else(|| GroupError::UnknownLetter(sym.clone()))
                })
                .collect::<Result<ColouredWord, _>>()?;
            s.set_rep_word(g, w)?;
        }
        Ok(s)
    }
}
