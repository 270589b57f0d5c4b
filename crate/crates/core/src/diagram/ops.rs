use std::collections::HashSet;

use super::{ColouredPartition, ColouredWord, DiagramError, Row};

/// Result of a vertical composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionResult {
    pub partition: ColouredPartition,
    /// Blocks that lived entirely in the glued middle row.
    pub loops: usize,
}

/// Horizontal concatenation, `p ⊗ q`.
pub fn tensor(p: &ColouredPartition, q: &ColouredPartition) -> ColouredPartition {
    let off = p.block_count;
    let upper = p.upper.concat(&q.upper);
    let lower = p.lower.concat(&q.lower);
    let mut ul = p.upper_labels.clone();
    ul.extend(q.upper_labels.iter().map(|l| l + off));
    let mut ll = p.lower_labels.clone();
    ll.extend(q.lower_labels.iter().map(|l| l + off));
    ColouredPartition::from_labels(upper, lower, ul, ll)
}

/// Tensor power; the zeroth power is the empty partition.
pub fn tensor_power(p: &ColouredPartition, n: usize) -> ColouredPartition {
    (0..n).fold(super::empty(), |acc, _| tensor(&acc, p))
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let up = self.0[self.0[x as usize] as usize];
            self.0[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Vertical concatenation `qp`: `p` is drawn above `q` and the lower row of
/// `p` is glued to the upper row of `q`.
pub fn compose(
    q: &ColouredPartition,
    p: &ColouredPartition,
) -> Result<CompositionResult, DiagramError> {
    if p.lower != q.upper {
        return Err(DiagramError::RowMismatch {
            lower: p.lower.to_string(),
            upper: q.upper.to_string(),
        });
    }
    let off = p.block_count;
    let total = (p.block_count + q.block_count) as usize;
    let mut uf = UnionFind::new(total);
    for (a, b) in p.lower_labels.iter().zip(&q.upper_labels) {
        uf.union(*a, *b + off);
    }
    let ul: Vec<u32> = p.upper_labels.iter().map(|&l| uf.find(l)).collect();
    let ll: Vec<u32> = q.lower_labels.iter().map(|&l| uf.find(l + off)).collect();
    let outer: HashSet<u32> = ul.iter().chain(&ll).copied().collect();
    let roots: HashSet<u32> = (0..total as u32).map(|x| uf.find(x)).collect();
    let loops = roots.difference(&outer).count();
    Ok(CompositionResult {
        partition: ColouredPartition::from_labels(p.upper.clone(), q.lower.clone(), ul, ll),
        loops,
    })
}

/// The adjoint `p*`: rows exchanged, colours kept.
pub fn involute(p: &ColouredPartition) -> ColouredPartition {
    ColouredPartition::from_labels(
        p.lower.clone(),
        p.upper.clone(),
        p.lower_labels.clone(),
        p.upper_labels.clone(),
    )
}

/// Which extreme point moves and where it goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Corner {
    UpperLeftToLowerLeft,
    LowerLeftToUpperLeft,
    UpperRightToLowerRight,
    LowerRightToUpperRight,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::UpperLeftToLowerLeft,
        Corner::LowerLeftToUpperLeft,
        Corner::UpperRightToLowerRight,
        Corner::LowerRightToUpperRight,
    ];

    pub fn inverse(self) -> Corner {
        match self {
            Corner::UpperLeftToLowerLeft => Corner::LowerLeftToUpperLeft,
            Corner::LowerLeftToUpperLeft => Corner::UpperLeftToLowerLeft,
            Corner::UpperRightToLowerRight => Corner::LowerRightToUpperRight,
            Corner::LowerRightToUpperRight => Corner::UpperRightToLowerRight,
        }
    }
}

/// Moves an extreme point to the other row, inverting its colour. The
/// cyclic boundary order is unchanged, so blocks keep their shape.
pub fn rotate(p: &ColouredPartition, corner: Corner) -> Result<ColouredPartition, DiagramError> {
    let mut up: Vec<_> = p.upper.letters().to_vec();
    let mut lo: Vec<_> = p.lower.letters().to_vec();
    let mut ul = p.upper_labels.clone();
    let mut ll = p.lower_labels.clone();
    match corner {
        Corner::UpperLeftToLowerLeft => {
            if up.is_empty() {
                return Err(DiagramError::EmptyRow(Row::Upper));
            }
            let c = up.remove(0);
            let l = ul.remove(0);
            lo.insert(0, c.inverse());
            ll.insert(0, l);
        }
        Corner::LowerLeftToUpperLeft => {
            if lo.is_empty() {
                return Err(DiagramError::EmptyRow(Row::Lower));
            }
            let c = lo.remove(0);
            let l = ll.remove(0);
            up.insert(0, c.inverse());
            ul.insert(0, l);
        }
        Corner::UpperRightToLowerRight => {
            let (Some(c), Some(l)) = (up.pop(), ul.pop()) else {
                return Err(DiagramError::EmptyRow(Row::Upper));
            };
            lo.push(c.inverse());
            ll.push(l);
        }
        Corner::LowerRightToUpperRight => {
            let (Some(c), Some(l)) = (lo.pop(), ll.pop()) else {
                return Err(DiagramError::EmptyRow(Row::Lower));
            };
            up.push(c.inverse());
            ul.push(l);
        }
    }
    Ok(ColouredPartition::from_labels(
        ColouredWord::new(up),
        ColouredWord::new(lo),
        ul,
        ll,
    ))
}
