//! Diagrammatic representation theory: projective partitions, tensor
//! product decomposition, equivalence and dimensions.

mod dims;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::categories::{CategoryError, CategoryPredicate};
use crate::diagram::{
    boxvert_contract, compose, involute, noncrossing_on_words, square_contract,
    symmetric_candidates, tensor, ColouredPartition, ColouredWord, DiagramError, PartitionJson,
};

pub use dims::{dimension_solve, DimensionTable};

/// Default limit on boundary points.
pub const DEFAULT_BUDGET_POINTS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("{points} boundary points exceed the budget of {budget}")]
    BudgetExceeded { points: usize, budget: usize },
    #[error("dimensions are underdetermined for: {0}")]
    Underdetermined(String),
    #[error("dimension equations are inconsistent at word {0}")]
    Inconsistent(String),
    #[error("label extraction failed: {0}")]
    Label(String),
    #[error("N = {0} is below 4")]
    SmallN(u64),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

pub fn check_budget(points: usize, budget: usize) -> Result<(), FusionError> {
    if points > budget {
        Err(FusionError::BudgetExceeded { points, budget })
    } else {
        Ok(())
    }
}

/// The projective members of `cat` on `(w, w)`, sorted.
pub fn enumerate_projectives(
    w: &ColouredWord,
    cat: &CategoryPredicate,
    budget: usize,
) -> Result<Vec<ColouredPartition>, FusionError> {
    check_budget(2 * w.len(), budget)?;
    let mut out = Vec::new();
    for p in symmetric_candidates(w) {
        if cat.member(&p)? {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FusionKind {
    Tensor,
    Square(usize),
    Boxvert(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTerm {
    pub kind: FusionKind,
    pub partition: ColouredPartition,
}

/// `p ⊗ q` and the contractions `p □^k q`, `p ⊠^k q` for
/// `1 ≤ k ≤ min(t(p), t(q))` that lie in `cat`.
pub fn tensor_decompose(
    p: &ColouredPartition,
    q: &ColouredPartition,
    cat: &CategoryPredicate,
) -> Result<Vec<FusionTerm>, FusionError> {
    let candidates = fusion_candidates(p, q)?;
    let mut out = Vec::with_capacity(candidates.len());
    for term in candidates {
        if cat.member(&term.partition)? {
            out.push(term);
        }
    }
    Ok(out)
}

/// All `2·min(t(p), t(q)) + 1` surgeries before filtering by a category.
pub fn fusion_candidates(
    p: &ColouredPartition,
    q: &ColouredPartition,
) -> Result<Vec<FusionTerm>, FusionError> {
    let max = p.through_block_count().min(q.through_block_count());
    let mut out = Vec::with_capacity(2 * max + 1);
    out.push(FusionTerm {
        kind: FusionKind::Tensor,
        partition: tensor(p, q),
    });
    for k in 1..=max {
        out.push(FusionTerm {
            kind: FusionKind::Square(k),
            partition: square_contract(p, q, k)?,
        });
        out.push(FusionTerm {
            kind: FusionKind::Boxvert(k),
            partition: boxvert_contract(p, q, k)?,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivalenceMode {
    Candidate,
    Exhaustive,
}

/// The partition on `(word(p), word(q))` carrying the upper blocks of `p`
/// and, mirrored into the lower row, the upper blocks of `q`, with the
/// `i`-th through-blocks of both joined. `None` when `t(p) ≠ t(q)`.
pub fn candidate_implementer(
    p: &ColouredPartition,
    q: &ColouredPartition,
) -> Option<ColouredPartition> {
    let (tp, tq) = (p.through_blocks(), q.through_blocks());
    if tp.len() != tq.len() {
        return None;
    }
    let offset = p.block_count() as u32;
    let lower = q
        .upper_labels()
        .iter()
        .map(|&l| match tq.iter().position(|&t| t == l) {
            Some(i) => tp[i],
            None => l + offset,
        })
        .collect();
    Some(ColouredPartition::from_labels(
        p.upper().clone(),
        q.upper().clone(),
        p.upper_labels().to_vec(),
        lower,
    ))
}

/// `r ∈ C` with `r*r = p` and `rr* = q`, loops discarded.
pub fn implements(
    r: &ColouredPartition,
    p: &ColouredPartition,
    q: &ColouredPartition,
    cat: &CategoryPredicate,
) -> Result<bool, FusionError> {
    if r.upper() != p.upper() || r.lower() != q.upper() {
        return Ok(false);
    }
    let rs = involute(r);
    Ok(compose(&rs, r)?.partition == *p && compose(r, &rs)?.partition == *q && cat.member(r)?)
}

/// Whether the projectives `p` and `q` are equivalent in `cat`.
pub fn equivalent(
    p: &ColouredPartition,
    q: &ColouredPartition,
    cat: &CategoryPredicate,
    mode: EquivalenceMode,
    budget: usize,
) -> Result<bool, FusionError> {
    Ok(find_implementer(p, q, cat, mode, budget)?.is_some())
}

/// An implementer of `p ~ q`, if there is one.
pub fn find_implementer(
    p: &ColouredPartition,
    q: &ColouredPartition,
    cat: &CategoryPredicate,
    mode: EquivalenceMode,
    budget: usize,
) -> Result<Option<ColouredPartition>, FusionError> {
    match mode {
        EquivalenceMode::Candidate => match candidate_implementer(p, q) {
            Some(r) if implements(&r, p, q, cat)? => Ok(Some(r)),
            _ => Ok(None),
        },
        EquivalenceMode::Exhaustive => {
            check_budget(p.upper().len() + q.upper().len(), budget)?;
            if p.through_block_count() != q.through_block_count() {
                return Ok(None);
            }
            for r in noncrossing_on_words(p.upper(), q.upper()) {
                if implements(&r, p, q, cat)? {
                    return Ok(Some(r));
                }
            }
            Ok(None)
        }
    }
}

/// `{"kind":"square","k":1,"partition":{...},"label":"..."}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTermJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub partition: PartitionJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl FusionTermJson {
    pub fn new(term: &FusionTerm, label: Option<String>) -> Self {
        let (kind, k) = match term.kind {
            FusionKind::Tensor => ("tensor", None),
            FusionKind::Square(k) => ("square", Some(k)),
            FusionKind::Boxvert(k) => ("boxvert", Some(k)),
        };
        FusionTermJson {
            kind: kind.to_string(),
            k,
            partition: PartitionJson::from(&term.partition),
            label,
        }
    }
}

#[cfg(test)]
mod tests;
