//! Membership predicates for the noncrossing categories of partitions
//! `D_ℓ` and `D_{Γ,Λ,S}`, and full subpartitions.

mod sample;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Alphabet, Colour, ColouredPartition, ColouredWord, PointRef, Row};
use crate::groups::{
    dihedral_eval, DihedralElement, GeneratingSet, GeneratingSetJson, GroupError, GroupJson,
    Subgroup, SubgroupJson,
};

pub use sample::{closure_failures, random_noncrossing, sample_member};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("colour '{0}' is not in the category's alphabet")]
    AlphabetMismatch(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A category of partitions, given by a decidable membership predicate.
#[derive(Clone, Debug)]
pub enum CategoryPredicate {
    /// Noncrossing pair partitions with every point coloured by one
    /// self-inverse colour.
    OPlusPair(Colour),
    /// `ℓ`-admissible noncrossing pair partitions over `{x, y}`.
    DEll(u32),
    /// Noncrossing partitions with `φ(w) = φ(w')` on every block.
    CGammaS(GeneratingSet),
    /// Noncrossing partitions with `φ(w) = φ(w')` and
    /// `φ(v)^{-1} φ(v') ∈ Λ` on every full subpartition.
    DGammaLambdaS(GeneratingSet, Subgroup),
}

/// Why a partition is not in a category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Crossing,
    NotPair {
        block: Vec<PointRef>,
    },
    WrongColour {
        point: PointRef,
        colour: String,
    },
    /// `φ(w) φ(w')^{-1}` lies outside `Γ_ℓ`.
    Dihedral {
        element: DihedralElement,
        ell: u32,
    },
    Block {
        block: Vec<PointRef>,
        upper: ColouredWord,
        lower: ColouredWord,
    },
    /// A full subpartition whose colourings `(v, v')` violate the
    /// condition; `element` is `φ(v)^{-1} φ(v')`.
    Arc {
        points: Vec<PointRef>,
        upper: ColouredWord,
        lower: ColouredWord,
        element: String,
    },
}

fn points(ps: &[PointRef]) -> String {
    let v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Crossing => write!(f, "partition is crossing"),
            Violation::NotPair { block } => write!(f, "block {} is not a pair", points(block)),
            Violation::WrongColour { point, colour } => {
                write!(f, "point {point} has colour '{colour}' outside the alphabet")
            }
            Violation::Dihedral { element, ell } => write!(
                f,
                "φ(w)φ(w')^-1 = {element} is not in Γ_{ell}"
            ),
            Violation::Block { block, upper, lower } => write!(
                f,
                "block {} has φ({upper}) ≠ φ({lower})",
                points(block)
            ),
            Violation::Arc {
                points: ps,
                upper,
                lower,
                element,
            } => write!(
                f,
                "full subpartition {} with v = {upper}, v' = {lower} has φ(v)^-1 φ(v') = {element} outside Λ",
                points(ps)
            ),
        }
    }
}

/// A union of blocks occupying a contiguous arc of the boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullArc {
    /// Boundary position of the first point.
    pub start: usize,
    pub len: usize,
    /// Block labels, ascending.
    pub blocks: Vec<u32>,
}

impl FullArc {
    pub fn points(&self, p: &ColouredPartition) -> Vec<PointRef> {
        let n = p.point_count();
        (0..self.len)
            .map(|i| p.point_at((self.start + i) % n))
            .collect()
    }

    /// Upper and lower colourings of the arc, both read left to right.
    pub fn colourings(&self, p: &ColouredPartition) -> (ColouredWord, ColouredWord) {
        let mut pts = self.points(p);
        pts.sort_by_key(|pt| (pt.row == Row::Lower, pt.index));
        let (mut up, mut lo) = (Vec::new(), Vec::new());
        for pt in pts {
            let c = p.colour_of(pt).clone();
            match pt.row {
                Row::Upper => up.push(c),
                Row::Lower => lo.push(c),
            }
        }
        (ColouredWord::new(up), ColouredWord::new(lo))
    }
}

/// All full subpartitions of `p`, the whole partition included once.
///
/// Every start position is extended one point at a time while counting how
/// many points of each touched block are inside; the arc is full whenever
/// all touched blocks are complete.
pub fn full_subpartitions(p: &ColouredPartition) -> Vec<FullArc> {
    let n = p.point_count();
    let labels = p.boundary_labels();
    let sizes = p.block_sizes();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut seen = vec![0usize; sizes.len()];
    for start in 0..n {
        seen.iter_mut().for_each(|s| *s = 0);
        let mut open = 0usize;
        let mut touched = Vec::new();
        for len in 1..n {
            let l = labels[(start + len - 1) % n] as usize;
            if seen[l] == 0 {
                open += 1;
                touched.push(l as u32);
            }
            seen[l] += 1;
            if seen[l] == sizes[l] {
                open -= 1;
            }
            if open == 0 {
                let mut blocks = touched.clone();
                blocks.sort_unstable();
                out.push(FullArc { start, len, blocks });
            }
        }
    }
    out.push(FullArc {
        start: 0,
        len: n,
        blocks: (0..sizes.len() as u32).collect(),
    });
    out
}

impl CategoryPredicate {
    /// Colours the category's partitions may carry.
    pub fn alphabet(&self) -> Alphabet {
        match self {
            CategoryPredicate::OPlusPair(c) => Alphabet::new([c.clone()]),
            CategoryPredicate::DEll(_) => {
                Alphabet::new([Colour::self_inverse("x"), Colour::self_inverse("y")])
            }
            CategoryPredicate::CGammaS(s) | CategoryPredicate::DGammaLambdaS(s, _) => {
                s.alphabet().clone()
            }
        }
    }

    pub fn member(&self, p: &ColouredPartition) -> Result<bool, CategoryError> {
        Ok(self.check(p)?.is_none())
    }

    /// `None` for members, otherwise the first violated condition.
    pub fn check(&self, p: &ColouredPartition) -> Result<Option<Violation>, CategoryError> {
        let alphabet = self.alphabet();
        for c in p.upper().iter().chain(p.lower().iter()) {
            if !alphabet.contains(c) {
                return Err(CategoryError::AlphabetMismatch(c.symbol().to_string()));
            }
        }
        if !p.is_noncrossing() {
            return Ok(Some(Violation::Crossing));
        }
        match self {
            CategoryPredicate::OPlusPair(_) | CategoryPredicate::DEll(_) => {
                if let Some(v) = pair_violation(p) {
                    return Ok(Some(v));
                }
                if let CategoryPredicate::DEll(ell) = self {
                    let g = dihedral_eval(p.upper())?.mul(dihedral_eval(p.lower())?.inv());
                    if !g.in_gamma_ell(*ell) {
                        return Ok(Some(Violation::Dihedral {
                            element: g,
                            ell: *ell,
                        }));
                    }
                }
                Ok(None)
            }
            CategoryPredicate::CGammaS(s) => {
                let blocks = p.blocks();
                for (label, block) in blocks.into_iter().enumerate() {
                    let (up, lo) = p.block_words(label as u32);
                    if s.phi(&up)? != s.phi(&lo)? {
                        return Ok(Some(Violation::Block {
                            block,
                            upper: up,
                            lower: lo,
                        }));
                    }
                }
                Ok(None)
            }
            CategoryPredicate::DGammaLambdaS(s, lambda) => {
                let g = s.group();
                let (wu, wl) = (s.phi(p.upper())?, s.phi(p.lower())?);
                if wu != wl {
                    return Ok(Some(Violation::Arc {
                        points: p.blocks().concat(),
                        upper: p.upper().clone(),
                        lower: p.lower().clone(),
                        element: g.name(g.mul(g.inv(wu), wl)),
                    }));
                }
                for arc in full_subpartitions(p) {
                    let (v, v2) = arc.colourings(p);
                    let e = g.mul(g.inv(s.phi(&v)?), s.phi(&v2)?);
                    if !lambda.contains(e) {
                        return Ok(Some(Violation::Arc {
                            points: arc.points(p),
                            upper: v,
                            lower: v2,
                            element: g.name(e),
                        }));
                    }
                }
                Ok(None)
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CategoryPredicate::OPlusPair(c) => format!("noncrossing pairs coloured {c}"),
            CategoryPredicate::DEll(ell) => format!("D_{ell}"),
            CategoryPredicate::CGammaS(s) => format!("C(Γ={})", s.group()),
            CategoryPredicate::DGammaLambdaS(s, l) => format!(
                "D(Γ={}, |Λ|={})",
                s.group(),
                l.order().map_or("∞".to_string(), |o| o.to_string())
            ),
        }
    }
}

fn pair_violation(p: &ColouredPartition) -> Option<Violation> {
    p.blocks()
        .into_iter()
        .find(|b| b.len() != 2)
        .map(|block| Violation::NotPair { block })
}

/// `{"kind":"dell","ell":2}` or
/// `{"kind":"wreath","group":…,"lambda":…,"gens":…}`; `lambda` defaults to
/// the trivial subgroup and `gens` to the standard generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CategoryJson {
    Dell {
        ell: u32,
    },
    Wreath {
        group: GroupJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lambda: Option<SubgroupJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gens: Option<GeneratingSetJson>,
    },
}

impl CategoryJson {
    pub fn build(&self) -> Result<CategoryPredicate, CategoryError> {
        match self {
            CategoryJson::Dell { ell } => Ok(CategoryPredicate::DEll(*ell)),
            CategoryJson::Wreath {
                group,
                lambda,
                gens,
            } => {
                let g = group.build()?;
                let lam = match lambda {
                    Some(l) => l.build(&g)?,
                    None => Subgroup::trivial(&g),
                };
                let s = match gens {
                    Some(s) => s.build(&g)?,
                    None => GeneratingSet::standard(&g),
                };
                Ok(CategoryPredicate::DGammaLambdaS(s, lam))
            }
        }
    }
}
