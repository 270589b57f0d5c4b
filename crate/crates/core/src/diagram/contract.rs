//! Projective partitions and the through-line contractions `□^k`, `⊠^k`.

use super::ops::{compose, involute, tensor};
use super::{Colour, ColouredPartition, ColouredWord, DiagramError};

/// `p` is projective when `pp = p = p*`.
pub fn is_projective(p: &ColouredPartition) -> bool {
    if p.upper() != p.lower() || involute(p) != *p {
        return false;
    }
    match compose(p, p) {
        Ok(r) => r.partition == *p,
        Err(_) => false,
    }
}

/// `p ⪯ q`, i.e. `qp = p`.
pub fn dominates(q: &ColouredPartition, p: &ColouredPartition) -> Result<bool, DiagramError> {
    if !is_projective(p) || !is_projective(q) {
        return Err(DiagramError::NotProjective);
    }
    if p.upper() != q.upper() {
        return Err(DiagramError::WordMismatch(
            p.upper().to_string(),
            q.upper().to_string(),
        ));
    }
    Ok(compose(q, p)?.partition == *p)
}

/// The upper half `p_u` of a projective partition, with `p = p_u* p_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperHalf {
    /// Upper row of `p`, one lower point per through-block.
    pub half: ColouredPartition,
    /// For each through-line, the colours of that block's upper legs.
    pub mid_colours: Vec<ColouredWord>,
}

/// Splits a projective partition into its upper half.
///
/// Each lower point of the half carries the colour of the first upper leg of
/// its through-block; when every through-block has a single upper leg (pair
/// categories) this makes `half* half = p` hold literally.
pub fn upper_half(p: &ColouredPartition) -> Result<UpperHalf, DiagramError> {
    if !is_projective(p) {
        return Err(DiagramError::NotProjective);
    }
    let through = p.through_blocks();
    let mut mid_colours = Vec::with_capacity(through.len());
    let mut lower: Vec<Colour> = Vec::with_capacity(through.len());
    for &t in &through {
        let (up, _) = p.block_words(t);
        lower.push(up.letters()[0].clone());
        mid_colours.push(up);
    }
    let half = ColouredPartition::from_labels(
        p.upper().clone(),
        ColouredWord::new(lower),
        p.upper_labels().to_vec(),
        through,
    );
    Ok(UpperHalf { half, mid_colours })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Contraction {
    Square,
    Boxvert,
}

fn contract(
    p: &ColouredPartition,
    q: &ColouredPartition,
    k: usize,
    kind: Contraction,
) -> Result<ColouredPartition, DiagramError> {
    for r in [p, q] {
        if !is_projective(r) || !r.is_noncrossing() {
            return Err(DiagramError::NotProjective);
        }
    }
    let tp = p.through_blocks();
    let tq = q.through_blocks();
    let max = tp.len().min(tq.len());
    if k == 0 || k > max {
        return Err(DiagramError::OutOfRange { k, max });
    }
    let joined = tensor(p, q);
    let mut ul = joined.upper_labels().to_vec();
    let mut ll = joined.lower_labels().to_vec();
    let mut fresh = joined.block_count() as u32;

    // the i-th pair is P_{t(p)-i+1} (right end of p) against Q_i
    for i in 1..=k {
        let a = relabel_of(&joined, p, tp[tp.len() - i], 0);
        let b = relabel_of(&joined, q, tq[i - 1], p.upper().len());
        if kind == Contraction::Boxvert && i == k {
            // outermost contracted pair stays one block across both rows
            for l in ul.iter_mut().chain(ll.iter_mut()) {
                if *l == b {
                    *l = a;
                }
            }
            continue;
        }
        let (top, bottom) = (fresh, fresh + 1);
        fresh += 2;
        for l in ul.iter_mut() {
            if *l == a || *l == b {
                *l = top;
            }
        }
        for l in ll.iter_mut() {
            if *l == a || *l == b {
                *l = bottom;
            }
        }
    }
    Ok(ColouredPartition::from_labels(
        joined.upper().clone(),
        joined.lower().clone(),
        ul,
        ll,
    ))
}

/// Label in `joined = p ⊗ q` of a block of the factor `src`, found through
/// one of its upper legs; `shift` is where the factor's upper row starts.
fn relabel_of(
    joined: &ColouredPartition,
    src: &ColouredPartition,
    label: u32,
    shift: usize,
) -> u32 {
    let idx = src
        .upper_labels()
        .iter()
        .position(|&l| l == label)
        .expect("through-block has an upper leg");
    joined.upper_labels()[idx + shift]
}

/// `p □^k q`: the `k` innermost through-line pairs of `p ⊗ q` are cut into an
/// upper block and a lower block each.
pub fn square_contract(
    p: &ColouredPartition,
    q: &ColouredPartition,
    k: usize,
) -> Result<ColouredPartition, DiagramError> {
    contract(p, q, k, Contraction::Square)
}

/// `p ⊠^k q`: as `□^k`, but the outermost contracted pair is kept as a
/// single through-block.
pub fn boxvert_contract(
    p: &ColouredPartition,
    q: &ColouredPartition,
    k: usize,
) -> Result<ColouredPartition, DiagramError> {
    contract(p, q, k, Contraction::Boxvert)
}
