//! Operations shared by the two quantum group families: label discovery,
//! diagram-side fusion, cross-validation of closed forms and dimensions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

use crate::categories::{CategoryError, CategoryPredicate};
use crate::diagram::{ColouredPartition, ColouredWord, DiagramError};
use crate::fusion::{
    check_budget, dimension_solve, enumerate_projectives, equivalent, tensor_decompose,
    DimensionTable, EquivalenceMode, FusionError,
};
use crate::groups::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("partition is not in the category: {0}")]
    NotMember(String),
    #[error("through-block count {n} and the x-parity of φ(w) disagree")]
    ParityViolation { n: usize },
    #[error("labels use different moduli {0} and {1}")]
    ModulusMismatch(u32, u32),
    #[error("operation needs nonempty words")]
    EmptyOperand,
    #[error("cannot parse label '{0}'")]
    Parse(String),
    #[error("label {0} is not realized within the budget")]
    Unrealized(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

impl From<FamilyError> for FusionError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Fusion(f) => f,
            other => FusionError::Label(other.to_string()),
        }
    }
}

/// A family of compact quantum groups whose irreducible representations
/// are labelled combinatorially and also indexed by projective partitions.
pub trait Family {
    type Label: Clone + Ord + Hash + Display + Debug;

    fn describe(&self) -> String;
    fn category(&self) -> &CategoryPredicate;
    fn label_of_projective(&self, p: &ColouredPartition) -> Result<Self::Label, FamilyError>;
    /// Closed-form fusion rule, as a sorted multiset.
    fn closed_fusion(
        &self,
        a: &Self::Label,
        b: &Self::Label,
    ) -> Result<Vec<Self::Label>, FamilyError>;
    fn conjugate(&self, a: &Self::Label) -> Self::Label;
    fn trivial(&self) -> Self::Label;
    /// Some projective partition carrying label `a`.
    fn representative(&self, a: &Self::Label) -> Result<ColouredPartition, FamilyError>;
    fn parse_label(&self, s: &str) -> Result<Self::Label, FamilyError>;
}

/// All words over the category's alphabet of length at most `maxlen`, in
/// shortlex order.
pub fn words_up_to(cat: &CategoryPredicate, maxlen: usize) -> Vec<ColouredWord> {
    let mut colours = cat.alphabet().colours().to_vec();
    colours.sort();
    let mut out = vec![ColouredWord::empty()];
    let mut frontier = vec![ColouredWord::empty()];
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(frontier.len() * colours.len());
        for w in &frontier {
            for c in &colours {
                next.push(w.concat(&ColouredWord::new(vec![c.clone()])));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// For each label realized on words of length at most `maxlen`, its first
/// projective in shortlex word order (ties broken by partition order).
pub fn minimal_representatives<F: Family>(
    family: &F,
    maxlen: usize,
    budget: usize,
) -> Result<BTreeMap<F::Label, ColouredPartition>, FamilyError> {
    let mut reps = BTreeMap::new();
    for w in words_up_to(family.category(), maxlen) {
        for p in enumerate_projectives(&w, family.category(), budget)? {
            let l = family.label_of_projective(&p)?;
            reps.entry(l).or_insert(p);
        }
    }
    Ok(reps)
}

/// Labels of the diagram decomposition of `p ⊗ q`, sorted.
pub fn diagram_fusion<F: Family>(
    family: &F,
    p: &ColouredPartition,
    q: &ColouredPartition,
) -> Result<Vec<F::Label>, FamilyError> {
    let mut out = tensor_decompose(p, q, family.category())?
        .iter()
        .map(|t| family.label_of_projective(&t.partition))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

/// One closed-form versus diagram comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionCell {
    pub left: String,
    pub right: String,
    pub closed: Vec<String>,
    pub diagram: Vec<String>,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub family: String,
    pub labels: Vec<String>,
    pub cells: Vec<FusionCell>,
    /// Labels `a` for which the trivial label does not occur exactly once
    /// in `a ⊗ conj(a)`, or occurs in some `a ⊗ b` with `b ≠ conj(a)`.
    pub frobenius_failures: Vec<String>,
    pub associativity_failures: Vec<String>,
    /// Pairs of projectives with the same label that are not equivalent,
    /// or with different labels that are.
    pub label_failures: Vec<String>,
}

impl CrosscheckReport {
    pub fn disagreements(&self) -> usize {
        self.cells.iter().filter(|c| !c.agree).count()
            + self.frobenius_failures.len()
            + self.associativity_failures.len()
            + self.label_failures.len()
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements() == 0
    }
}

fn names<L: Display>(ls: &[L]) -> Vec<String> {
    ls.iter().map(|l| l.to_string()).collect()
}

/// Compares closed and diagram fusion on every pair of minimal
/// representatives that fits in `budget` points.
pub fn crosscheck_fusion<F: Family>(
    family: &F,
    reps: &BTreeMap<F::Label, ColouredPartition>,
    budget: usize,
) -> Result<Vec<FusionCell>, FamilyError> {
    let mut cells = Vec::new();
    for (a, p) in reps {
        for (b, q) in reps {
            if 2 * (p.upper().len() + q.upper().len()) > budget {
                continue;
            }
            let closed = family.closed_fusion(a, b)?;
            let diagram = diagram_fusion(family, p, q)?;
            cells.push(FusionCell {
                left: a.to_string(),
                right: b.to_string(),
                agree: closed == diagram,
                closed: names(&closed),
                diagram: names(&diagram),
            });
        }
    }
    Ok(cells)
}

/// Frobenius reciprocity for the trivial label on the closed form.
pub fn frobenius_failures<F: Family>(
    family: &F,
    labels: &[F::Label],
) -> Result<Vec<String>, FamilyError> {
    let one = family.trivial();
    let mut out = Vec::new();
    for a in labels {
        let conj = family.conjugate(a);
        for b in labels.iter().chain(std::iter::once(&conj)) {
            let count = family
                .closed_fusion(a, b)?
                .iter()
                .filter(|l| **l == one)
                .count();
            let expected = usize::from(*b == conj);
            if count != expected {
                out.push(format!(
                    "{a} ⊗ {b}: trivial occurs {count} times, expected {expected}"
                ));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn fuse_multiset<F: Family>(
    family: &F,
    left: &[F::Label],
    right: &[F::Label],
) -> Result<Vec<F::Label>, FamilyError> {
    let mut out = Vec::new();
    for a in left {
        for b in right {
            out.extend(family.closed_fusion(a, b)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `(a⊗b)⊗c = a⊗(b⊗c)` on the closed form, for all triples from `labels`.
pub fn associativity_failures<F: Family>(
    family: &F,
    labels: &[F::Label],
) -> Result<Vec<String>, FamilyError> {
    let mut out = Vec::new();
    for a in labels {
        for b in labels {
            let ab = family.closed_fusion(a, b)?;
            for c in labels {
                let left = fuse_multiset(family, &ab, std::slice::from_ref(c))?;
                let bc = family.closed_fusion(b, c)?;
                let right = fuse_multiset(family, std::slice::from_ref(a), &bc)?;
                if left != right {
                    out.push(format!("({a} ⊗ {b}) ⊗ {c} ≠ {a} ⊗ ({b} ⊗ {c})"));
                }
            }
        }
    }
    Ok(out)
}

/// Checks that labels separate equivalence classes: every projective on
/// words up to `maxlen` letters is compared with each minimal
/// representative having the same number of through-blocks.
pub fn label_failures<F: Family>(
    family: &F,
    reps: &BTreeMap<F::Label, ColouredPartition>,
    maxlen: usize,
    budget: usize,
) -> Result<Vec<String>, FamilyError> {
    let mut out = Vec::new();
    for w in words_up_to(family.category(), maxlen) {
        for p in enumerate_projectives(&w, family.category(), budget)? {
            let lp = family.label_of_projective(&p)?;
            for (lq, q) in reps {
                if q.through_block_count() != p.through_block_count()
                    || 2 * (p.upper().len() + q.upper().len()) > budget
                {
                    continue;
                }
                let eq = equivalent(&p, q, family.category(), EquivalenceMode::Candidate, budget)?;
                if eq != (lp == *lq) {
                    out.push(format!(
                        "{p} labelled {lp} vs {q} labelled {lq}: equivalent = {eq}"
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// The full closed-versus-diagram report over labels realized on words of
/// at most `budget / 2` letters. A zero budget sweeps nothing.
pub fn crosscheck<F: Family>(family: &F, budget: usize) -> Result<CrosscheckReport, FamilyError> {
    if budget == 0 {
        return Ok(CrosscheckReport {
            family: family.describe(),
            ..CrosscheckReport::default()
        });
    }
    let maxlen = budget / 2;
    let reps = minimal_representatives(family, maxlen, budget)?;
    let labels: Vec<F::Label> = reps.keys().cloned().collect();
    let cells = crosscheck_fusion(family, &reps, budget)?;
    // Frobenius and associativity on labels small enough to be fused
    let small: Vec<F::Label> = reps
        .iter()
        .filter(|(_, p)| 4 * p.upper().len() <= budget)
        .map(|(l, _)| l.clone())
        .collect();
    Ok(CrosscheckReport {
        family: family.describe(),
        labels: names(&labels),
        cells,
        frobenius_failures: frobenius_failures(family, &small)?,
        associativity_failures: associativity_failures(family, &small)?,
        label_failures: label_failures(family, &reps, maxlen.min(3), budget)?,
    })
}

/// Labels realized on words of length at most `maxlen`.
pub fn irreps<F: Family>(
    family: &F,
    maxlen: usize,
    budget: usize,
) -> Result<Vec<F::Label>, FamilyError> {
    check_budget(2 * maxlen, budget)?;
    Ok(minimal_representatives(family, maxlen, budget)?
        .into_keys()
        .collect())
}

/// Dimensions at `N` from words of length at most `maxlen`.
pub fn dimensions<F: Family>(
    family: &F,
    n: u64,
    maxlen: usize,
    budget: usize,
) -> Result<DimensionTable<F::Label>, FamilyError> {
    let words = words_up_to(family.category(), maxlen);
    Ok(dimension_solve(
        family.category(),
        &words,
        n,
        budget,
        |p| family.label_of_projective(p).map_err(FusionError::from),
    )?)
}

/// `Σ_{p ∈ Proj(w)} d(class(p)) = N^{|w|}` for every word up to `maxlen`;
/// returns the words where it fails or a dimension is missing.
pub fn dimension_total_failures<F: Family>(
    family: &F,
    table: &DimensionTable<F::Label>,
    maxlen: usize,
    budget: usize,
) -> Result<Vec<String>, FamilyError> {
    let mut out = Vec::new();
    for w in words_up_to(family.category(), maxlen) {
        let mut total = num_bigint::BigInt::from(0);
        let mut missing = BTreeSet::new();
        for p in enumerate_projectives(&w, family.category(), budget)? {
            let l = family.label_of_projective(&p)?;
            match table.determined.get(&l) {
                Some(d) => total += d,
                None => {
                    missing.insert(l.to_string());
                }
            }
        }
        let expected = num_bigint::BigInt::from(table.n).pow(w.len() as u32);
        if !missing.is_empty() || total != expected {
            out.push(format!(
                "{w}: total {total}, expected {expected}, missing {missing:?}"
            ));
        }
    }
    Ok(out)
}
