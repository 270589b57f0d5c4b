//! Two-row coloured set partitions and the diagram calculus on them.
//!
//! A [`ColouredPartition`] is drawn with its upper row on top and its lower
//! row below. Points are addressed by [`PointRef`] (row + 0-based index).
//! Wherever a linear order on all points is needed we use the *boundary
//! order* of the disk: upper points left to right, then lower points right to
//! left. Blocks are numbered by their first point in that order, which makes
//! structural equality of two values coincide with equality of partitions.

mod builders;
mod contract;
mod enumerate;
mod json;
mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use builders::{beta, cap, d_xy, d_yx, empty, h_boxvert, h_square, identity, pi};
pub use contract::{
    boxvert_contract, dominates, is_projective, square_contract, upper_half, UpperHalf,
};
pub use enumerate::{for_each_noncrossing, noncrossing_on_words, symmetric_candidates};
pub use json::{PartitionJson, PointJson};
pub use ops::{compose, involute, rotate, tensor, tensor_power, CompositionResult, Corner};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("cannot glue rows: lower row {lower} does not match upper row {upper}")]
    RowMismatch { lower: String, upper: String },
    #[error("cannot rotate out of an empty {0} row")]
    EmptyRow(Row),
    #[error("partition is not projective")]
    NotProjective,
    #[error("contraction depth {k} out of range 1..={max}")]
    OutOfRange { k: usize, max: usize },
    #[error("builder needs a nonempty word")]
    EmptyWord,
    #[error("projective partitions live on different words ({0} vs {1})")]
    WordMismatch(String, String),
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("unknown colour '{0}'")]
    UnknownColour(String),
}

/// A colour together with its involutive inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colour {
    symbol: Arc<str>,
    inverse: Arc<str>,
}

impl Colour {
    pub fn new(symbol: &str, inverse: &str) -> Self {
        Colour {
            symbol: Arc::from(symbol),
            inverse: Arc::from(inverse),
        }
    }

    pub fn self_inverse(symbol: &str) -> Self {
        let s: Arc<str> = Arc::from(symbol);
        Colour {
            symbol: s.clone(),
            inverse: s,
        }
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn inverse_symbol(&self) -> &str {
        &self.inverse
    }

    pub fn inverse(&self) -> Colour {
        Colour {
            symbol: self.inverse.clone(),
            inverse: self.symbol.clone(),
        }
    }

    pub fn is_self_inverse(&self) -> bool {
        self.symbol == self.inverse
    }
}

impl fmt::Debug for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol)
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredWord(Vec<Colour>);

impl ColouredWord {
    pub fn new(letters: Vec<Colour>) -> Self {
        ColouredWord(letters)
    }

    pub fn empty() -> Self {
        ColouredWord(Vec::new())
    }

    /// One self-inverse colour per character, e.g. `"xyx"`.
    pub fn self_inverse(letters: &str) -> Self {
        ColouredWord(
            letters
                .chars()
                .map(|c| Colour::self_inverse(&c.to_string()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Colour] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Colour> {
        self.0.iter()
    }

    pub fn concat(&self, other: &ColouredWord) -> ColouredWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        ColouredWord(v)
    }

    pub fn repeat(&self, times: usize) -> ColouredWord {
        ColouredWord((0..times).flat_map(|_| self.0.iter().cloned()).collect())
    }
}

impl From<Vec<Colour>> for ColouredWord {
    fn from(v: Vec<Colour>) -> Self {
        ColouredWord(v)
    }
}

impl FromIterator<Colour> for ColouredWord {
    fn from_iter<I: IntoIterator<Item = Colour>>(iter: I) -> Self {
        ColouredWord(iter.into_iter().collect())
    }
}

impl fmt::Debug for ColouredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColouredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<&str> = self.0.iter().map(|c| c.symbol()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A set of colours, used to resolve symbols read from files.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    colours: Vec<Colour>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new(colours: impl IntoIterator<Item = Colour>) -> Self {
        let mut a = Alphabet::default();
        for c in colours {
            a.insert(c);
        }
        a
    }

    fn insert(&mut self, c: Colour) {
        if self.index.contains_key(c.symbol()) {
            return;
        }
        self.index
            .insert(c.symbol().to_string(), self.colours.len());
        self.colours.push(c.clone());
        // make sure the inverse symbol resolves as well
        let inv = c.inverse();
        if !self.index.contains_key(inv.symbol()) {
            self.index
                .insert(inv.symbol().to_string(), self.colours.len());
            self.colours.push(inv);
        }
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn get(&self, symbol: &str) -> Option<&Colour> {
        self.index.get(symbol).map(|&i| &self.colours[i])
    }

    pub fn contains(&self, c: &Colour) -> bool {
        self.get(c.symbol()) == Some(c)
    }

    pub fn word(&self, symbols: &[&str]) -> Result<ColouredWord, DiagramError> {
        symbols
            .iter()
            .map(|s| {
                self.get(s)
                    .cloned()
                    .ok_or_else(|| DiagramError::UnknownColour(s.to_string()))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    Upper,
    Lower,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Row::Upper => f.write_str("upper"),
            Row::Lower => f.write_str("lower"),
        }
    }
}

/// A point of a partition. `index` is 0-based within its row; the JSON
/// interchange format uses 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointRef {
    pub row: Row,
    pub index: usize,
}

impl PointRef {
    pub fn upper(index: usize) -> Self {
        PointRef {
            row: Row::Upper,
            index,
        }
    }

    pub fn lower(index: usize) -> Self {
        PointRef {
            row: Row::Lower,
            index,
        }
    }
}

impl fmt::Display for PointRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Upper => write!(f, "u{}", self.index + 1),
            Row::Lower => write!(f, "l{}", self.index + 1),
        }
    }
}

/// A coloured partition of two rows of points.
///
/// Stored as one block label per point. Labels are canonical: block `b` is
/// the `b`-th block met when walking the boundary order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColouredPartition {
    upper: ColouredWord,
    lower: ColouredWord,
    upper_labels: Vec<u32>,
    lower_labels: Vec<u32>,
    block_count: u32,
}

impl ColouredPartition {
    /// Builds a partition from explicit blocks, checking that they are
    /// nonempty, disjoint and cover every point.
    pub fn from_blocks(
        upper: ColouredWord,
        lower: ColouredWord,
        blocks: &[Vec<PointRef>],
    ) -> Result<Self, DiagramError> {
        let mut ul = vec![u32::MAX; upper.len()];
        let mut ll = vec![u32::MAX; lower.len()];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(DiagramError::Invalid(format!("block {} is empty", b + 1)));
            }
            for pt in block {
                let (slot, len) = match pt.row {
                    Row::Upper => (&mut ul, upper.len()),
                    Row::Lower => (&mut ll, lower.len()),
                };
                if pt.index >= len {
                    return Err(DiagramError::Invalid(format!(
                        "point {pt} is out of range ({} row has {len} points)",
                        pt.row
                    )));
                }
                if slot[pt.index] != u32::MAX {
                    return Err(DiagramError::Invalid(format!(
                        "point {pt} appears in more than one block"
                    )));
                }
                slot[pt.index] = b as u32;
            }
        }
        if let Some(i) = ul.iter().position(|&l| l == u32::MAX) {
            return Err(DiagramError::Invalid(format!(
                "point {} is not covered by any block",
                PointRef::upper(i)
            )));
        }
        if let Some(i) = ll.iter().position(|&l| l == u32::MAX) {
            return Err(DiagramError::Invalid(format!(
                "point {} is not covered by any block",
                PointRef::lower(i)
            )));
        }
        Ok(Self::from_labels(upper, lower, ul, ll))
    }

    /// Builds a partition from arbitrary per-point labels; points sharing a
    /// label share a block.
    pub(crate) fn from_labels(
        upper: ColouredWord,
        lower: ColouredWord,
        mut upper_labels: Vec<u32>,
        mut lower_labels: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(upper.len(), upper_labels.len());
        debug_assert_eq!(lower.len(), lower_labels.len());
        let mut remap: HashMap<u32, u32> = HashMap::new();
        let mut next = 0u32;
        let mut relabel = |l: &mut u32| {
            let id = *remap.entry(*l).or_insert_with(|| {
                next += 1;
                next - 1
            });
            *l = id;
        };
        for l in upper_labels.iter_mut() {
            relabel(l);
        }
        for l in lower_labels.iter_mut().rev() {
            relabel(l);
        }
        ColouredPartition {
            upper,
            lower,
            upper_labels,
            lower_labels,
            block_count: next,
        }
    }

    /// Builds a partition from labels listed in boundary order.
    pub(crate) fn from_boundary_labels(
        upper: ColouredWord,
        lower: ColouredWord,
        labels: &[u32],
    ) -> Self {
        let m = upper.len();
        let n = lower.len();
        debug_assert_eq!(labels.len(), m + n);
        let ul = labels[..m].to_vec();
        let ll = (0..n).map(|j| labels[m + n - 1 - j]).collect();
        Self::from_labels(upper, lower, ul, ll)
    }

    pub fn upper(&self) -> &ColouredWord {
        &self.upper
    }

    pub fn lower(&self) -> &ColouredWord {
        &self.lower
    }

    pub fn point_count(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn block_count(&self) -> usize {
        self.block_count as usize
    }

    pub fn upper_labels(&self) -> &[u32] {
        &self.upper_labels
    }

    pub fn lower_labels(&self) -> &[u32] {
        &self.lower_labels
    }

    pub fn label_of(&self, pt: PointRef) -> u32 {
        match pt.row {
            Row::Upper => self.upper_labels[pt.index],
            Row::Lower => self.lower_labels[pt.index],
        }
    }

    pub fn colour_of(&self, pt: PointRef) -> &Colour {
        match pt.row {
            Row::Upper => &self.upper.letters()[pt.index],
            Row::Lower => &self.lower.letters()[pt.index],
        }
    }

    /// Position of a point in the boundary order.
    pub fn boundary_position(&self, pt: PointRef) -> usize {
        match pt.row {
            Row::Upper => pt.index,
            Row::Lower => self.upper.len() + self.lower.len() - 1 - pt.index,
        }
    }

    pub fn point_at(&self, pos: usize) -> PointRef {
        let m = self.upper.len();
        if pos < m {
            PointRef::upper(pos)
        } else {
            PointRef::lower(m + self.lower.len() - 1 - pos)
        }
    }

    /// Block labels listed in boundary order.
    pub fn boundary_labels(&self) -> Vec<u32> {
        let mut v = self.upper_labels.clone();
        v.extend(self.lower_labels.iter().rev());
        v
    }

    /// Blocks in canonical order, points within a block in boundary order.
    pub fn blocks(&self) -> Vec<Vec<PointRef>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for pos in 0..self.point_count() {
            let pt = self.point_at(pos);
            blocks[self.label_of(pt) as usize].push(pt);
        }
        blocks
    }

    fn row_presence(&self) -> (Vec<bool>, Vec<bool>) {
        let mut in_upper = vec![false; self.block_count()];
        let mut in_lower = vec![false; self.block_count()];
        for &l in &self.upper_labels {
            in_upper[l as usize] = true;
        }
        for &l in &self.lower_labels {
            in_lower[l as usize] = true;
        }
        (in_upper, in_lower)
    }

    /// Whether each block meets both rows.
    pub fn through_mask(&self) -> Vec<bool> {
        let (u, l) = self.row_presence();
        u.iter().zip(&l).map(|(a, b)| *a && *b).collect()
    }

    /// Number of through-blocks, `t(p)`.
    pub fn through_block_count(&self) -> usize {
        self.through_mask().iter().filter(|&&b| b).count()
    }

    /// Labels of the through-blocks ordered left to right by their first
    /// upper point.
    pub fn through_blocks(&self) -> Vec<u32> {
        let mask = self.through_mask();
        let mut seen = vec![false; self.block_count()];
        let mut out = Vec::new();
        for &l in &self.upper_labels {
            if mask[l as usize] && !seen[l as usize] {
                seen[l as usize] = true;
                out.push(l);
            }
        }
        out
    }

    /// True iff no two blocks interleave in the boundary order.
    pub fn is_noncrossing(&self) -> bool {
        let labels = self.boundary_labels();
        let mut last = vec![0usize; self.block_count()];
        for (pos, &l) in labels.iter().enumerate() {
            last[l as usize] = pos;
        }
        let mut seen = vec![false; self.block_count()];
        let mut stack: Vec<u32> = Vec::new();
        for (pos, &l) in labels.iter().enumerate() {
            if !seen[l as usize] {
                seen[l as usize] = true;
                stack.push(l);
            } else if stack.last() != Some(&l) {
                return false;
            }
            if last[l as usize] == pos {
                stack.pop();
            }
        }
        true
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &l in self.upper_labels.iter().chain(&self.lower_labels) {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// Upper and lower colour words of one block, each read left to right.
    pub fn block_words(&self, label: u32) -> (ColouredWord, ColouredWord) {
        let up = self
            .upper_labels
            .iter()
            .zip(self.upper.iter())
            .filter(|(l, _)| **l == label)
            .map(|(_, c)| c.clone())
            .collect();
        let lo = self
            .lower_labels
            .iter()
            .zip(self.lower.iter())
            .filter(|(l, _)| **l == label)
            .map(|(_, c)| c.clone())
            .collect();
        (up, lo)
    }
}

impl fmt::Debug for ColouredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// ASCII debug view: both rows with their colours, then the blocks.
impl fmt::Display for ColouredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {} |", self.upper, self.lower)?;
        for block in self.blocks() {
            let pts: Vec<String> = block.iter().map(|p| p.to_string()).collect();
            write!(f, " {{{}}}", pts.join(","))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> ColouredWord {
        ColouredWord::self_inverse("xy")
    }

    #[test]
    fn canonical_form_ignores_block_order() {
        let a = ColouredPartition::from_blocks(
            xy(),
            xy(),
            &[
                vec![PointRef::lower(0), PointRef::lower(1)],
                vec![PointRef::upper(1), PointRef::upper(0)],
            ],
        )
        .unwrap();
        let b = beta(&xy(), &xy()).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.blocks(),
            vec![
                vec![PointRef::upper(0), PointRef::upper(1)],
                vec![PointRef::lower(1), PointRef::lower(0)],
            ]
        );
    }

    #[test]
    fn from_blocks_names_offending_point() {
        let err = ColouredPartition::from_blocks(xy(), xy(), &[vec![PointRef::upper(0)]])
            .unwrap_err()
            .to_string();
        assert!(err.contains("u2"), "{err}");
        let err = ColouredPartition::from_blocks(
            xy(),
            ColouredWord::empty(),
            &[
                vec![PointRef::upper(0), PointRef::upper(0)],
                vec![PointRef::upper(1)],
            ],
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("u1"), "{err}");
        let err = ColouredPartition::from_blocks(
            xy(),
            ColouredWord::empty(),
            &[vec![
                PointRef::upper(0),
                PointRef::upper(1),
                PointRef::lower(0),
            ]],
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("l1"), "{err}");
    }

    #[test]
    fn through_block_counts() {
        let w = ColouredWord::self_inverse("xyx");
        assert_eq!(pi(&w, &w).unwrap().through_block_count(), 1);
        assert_eq!(beta(&w, &w).unwrap().through_block_count(), 0);
        assert_eq!(identity(&w).through_block_count(), 3);
    }

    #[test]
    fn minimal_crossing_is_detected() {
        let w = ColouredWord::self_inverse("xx");
        let crossing = ColouredPartition::from_blocks(
            w.clone(),
            w.clone(),
            &[
                vec![PointRef::upper(0), PointRef::lower(1)],
                vec![PointRef::upper(1), PointRef::lower(0)],
            ],
        )
        .unwrap();
        assert!(!crossing.is_noncrossing());
        assert!(pi(&w, &w).unwrap().is_noncrossing());
        assert!(identity(&w).is_noncrossing());
    }

    #[test]
    fn nested_pairs_are_noncrossing() {
        for k in 1..=4 {
            let w = ColouredWord::self_inverse(&"x".repeat(2 * k));
            assert!(h_square(k, &w).unwrap().is_noncrossing());
            assert!(h_boxvert(k, &w).unwrap().is_noncrossing());
        }
    }

    #[test]
    fn alphabet_resolves_inverses() {
        let a = Alphabet::new([Colour::new("a", "A")]);
        assert_eq!(a.get("A").unwrap().inverse_symbol(), "a");
        assert!(a.word(&["a", "b"]).is_err());
    }
}
