//! Enumeration of noncrossing partitions.

use super::{ColouredPartition, ColouredWord};

/// Calls `f` once for every noncrossing partition of `n` points in a line,
/// given as block labels numbered by first appearance.
///
/// Points are scanned left to right while keeping a stack of open blocks.
/// A point either opens a new block or joins an open block, which closes
/// every block opened after it for good.
pub fn for_each_noncrossing<F: FnMut(&[u32])>(n: usize, mut f: F) {
    let mut labels = vec![0u32; n];
    let mut stack = Vec::with_capacity(n);
    walk(0, 0, &mut labels, &mut stack, &mut f);
}

fn walk<F: FnMut(&[u32])>(
    pos: usize,
    next: u32,
    labels: &mut Vec<u32>,
    stack: &mut Vec<u32>,
    f: &mut F,
) {
    if pos == labels.len() {
        f(labels);
        return;
    }
    labels[pos] = next;
    stack.push(next);
    walk(pos + 1, next + 1, labels, stack, f);
    stack.pop();

    let depth = stack.len();
    for d in 0..depth {
        let target = stack[depth - 1 - d];
        let closed: Vec<u32> = stack.drain(depth - d..).collect();
        labels[pos] = target;
        walk(pos + 1, next, labels, stack, f);
        stack.extend(closed);
    }
}

/// All noncrossing partitions with the given rows, in enumeration order.
pub fn noncrossing_on_words(upper: &ColouredWord, lower: &ColouredWord) -> Vec<ColouredPartition> {
    let mut out = Vec::new();
    for_each_noncrossing(upper.len() + lower.len(), |labels| {
        out.push(ColouredPartition::from_boundary_labels(
            upper.clone(),
            lower.clone(),
            labels,
        ));
    });
    out
}

/// The noncrossing projective partitions on `(w, w)`.
///
/// A noncrossing projective is its own mirror image with every through-block
/// using the same positions in both rows, so it is determined by a
/// noncrossing partition of the upper row together with a choice of which
/// blocks pass through. Candidates whose through-blocks end up crossing are
/// dropped.
pub fn symmetric_candidates(w: &ColouredWord) -> Vec<ColouredPartition> {
    let n = w.len();
    let mut out = Vec::new();
    for_each_noncrossing(n, |labels| {
        let blocks = labels.iter().copied().max().map_or(0, |m| m + 1);
        for mask in 0u64..(1u64 << blocks) {
            let lower: Vec<u32> = labels
                .iter()
                .map(|&l| if mask >> l & 1 == 1 { l } else { l + blocks })
                .collect();
            let p = ColouredPartition::from_labels(w.clone(), w.clone(), labels.to_vec(), lower);
            if p.is_noncrossing() {
                out.push(p);
            }
        }
    });
    out
}
