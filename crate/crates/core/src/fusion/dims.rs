//! Exact dimension solving from `N^{|w|} = Σ_{p ∈ Proj(w)} d(class(p))`
//! and its refinement `N^{t(p)} = Σ_{q ⪯ p} d(class(q))`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{enumerate_projectives, tensor_decompose, FusionError};
use crate::categories::CategoryPredicate;
use crate::diagram::{dominates, ColouredPartition, ColouredWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable<L> {
    pub n: u64,
    pub determined: BTreeMap<L, BigInt>,
    /// Labels seen in the equations whose dimension is not fixed by them.
    pub undetermined: Vec<L>,
}

impl<L: Ord + Clone + Display> DimensionTable<L> {
    pub fn get(&self, label: &L) -> Result<&BigInt, FusionError> {
        self.determined
            .get(label)
            .ok_or_else(|| FusionError::Underdetermined(label.to_string()))
    }

    /// Fails when any label is undetermined.
    pub fn require_all(&self) -> Result<(), FusionError> {
        if self.undetermined.is_empty() {
            Ok(())
        } else {
            let names: Vec<String> = self.undetermined.iter().map(|l| l.to_string()).collect();
            Err(FusionError::Underdetermined(names.join(", ")))
        }
    }
}

/// Collects one equation per word and one per projective `p`: the range of
/// `T_p` has dimension `N^{t(p)}` and splits into the classes of the
/// projectives `q ⪯ p` of the category on the same word. The system is
/// solved exactly. Whenever two classes get a dimension, the decomposition
/// of the tensor product of their first representatives adds the equation
/// `d(a) d(b) = Σ d(term)`; this repeats until nothing new is determined.
pub fn dimension_solve<L, F>(
    cat: &CategoryPredicate,
    words: &[ColouredWord],
    n: u64,
    budget: usize,
    mut label: F,
) -> Result<DimensionTable<L>, FusionError>
where
    L: Ord + Clone + Display,
    F: FnMut(&ColouredPartition) -> Result<L, FusionError>,
{
    if n < 4 {
        return Err(FusionError::SmallN(n));
    }
    let mut equations: Vec<(BTreeMap<L, i64>, BigInt, String)> = Vec::new();
    let mut reps: BTreeMap<L, ColouredPartition> = BTreeMap::new();
    for w in words {
        let projectives = enumerate_projectives(w, cat, budget)?;
        let labels = projectives
            .iter()
            .map(&mut label)
            .collect::<Result<Vec<L>, _>>()?;
        let mut counts: BTreeMap<L, i64> = BTreeMap::new();
        for (p, l) in projectives.iter().zip(&labels) {
            let mut below: BTreeMap<L, i64> = BTreeMap::new();
            for (q, lq) in projectives.iter().zip(&labels) {
                if dominates(p, q)? {
                    *below.entry(lq.clone()).or_insert(0) += 1;
                }
            }
            let rank = BigInt::from(n).pow(p.through_block_count() as u32);
            equations.push((below, rank, format!("{p}")));
            *counts.entry(l.clone()).or_insert(0) += 1;
            reps.entry(l.clone()).or_insert_with(|| p.clone());
        }
        equations.push((counts, BigInt::from(n).pow(w.len() as u32), w.to_string()));
    }
    let mut used: BTreeSet<(L, L)> = BTreeSet::new();
    loop {
        let table = solve(&equations, n)?;
        let known: Vec<(L, BigInt)> = table
            .determined
            .iter()
            .filter(|(l, _)| reps.contains_key(*l))
            .map(|(l, d)| (l.clone(), d.clone()))
            .collect();
        let mut added = false;
        for (a, da) in &known {
            for (b, db) in &known {
                if used.contains(&(a.clone(), b.clone())) {
                    continue;
                }
                let (p, q) = (&reps[a], &reps[b]);
                if 2 * (p.upper().len() + q.upper().len()) > budget {
                    continue;
                }
                used.insert((a.clone(), b.clone()));
                let mut counts: BTreeMap<L, i64> = BTreeMap::new();
                for term in tensor_decompose(p, q, cat)? {
                    let l = label(&term.partition)?;
                    *counts.entry(l.clone()).or_insert(0) += 1;
                    reps.entry(l).or_insert(term.partition);
                }
                let undetermined = counts.keys().any(|l| !table.determined.contains_key(l));
                equations.push((counts, da * db, format!("{a} ⊗ {b}")));
                added |= undetermined;
            }
        }
        if !added {
            return solve(&equations, n);
        }
    }
}

fn solve<L: Ord + Clone + Display>(
    equations: &[(BTreeMap<L, i64>, BigInt, String)],
    n: u64,
) -> Result<DimensionTable<L>, FusionError> {
    let labels: Vec<L> = equations
        .iter()
        .flat_map(|(terms, _, _)| terms.keys().cloned())
        .collect::<BTreeSet<L>>()
        .into_iter()
        .collect();
    let col: BTreeMap<&L, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let width = labels.len();
    let mut rows: Vec<(Vec<BigRational>, usize)> = equations
        .iter()
        .enumerate()
        .map(|(i, (terms, rhs, _))| {
            let mut row = vec![BigRational::zero(); width + 1];
            for (l, c) in terms {
                row[col[l]] += BigRational::from_integer(BigInt::from(*c));
            }
            row[width] = BigRational::from_integer(rhs.clone());
            (row, i)
        })
        .collect();

    let pivots = reduce(&mut rows, width);
    for (row, origin) in rows.iter().skip(pivots.len()) {
        if !row[width].is_zero() {
            return Err(FusionError::Inconsistent(equations[*origin].2.clone()));
        }
    }
    let mut determined = BTreeMap::new();
    let mut fixed = vec![false; width];
    for (r, &c) in pivots.iter().enumerate() {
        let row = &rows[r].0;
        if (0..width).all(|j| j == c || row[j].is_zero()) {
            let v = &row[width];
            if !v.is_integer() {
                return Err(FusionError::Inconsistent(format!("{} = {v}", labels[c])));
            }
            determined.insert(labels[c].clone(), v.to_integer());
            fixed[c] = true;
        }
    }
    let undetermined = (0..width)
        .filter(|&c| !fixed[c])
        .map(|c| labels[c].clone())
        .collect();
    Ok(DimensionTable {
        n,
        determined,
        undetermined,
    })
}

/// Reduced row echelon form in place; returns the pivot column of each
/// leading row.
fn reduce(rows: &mut [(Vec<BigRational>, usize)], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r].0[c].recip();
        for v in rows[r].0.iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].0.clone();
        for (i, (row, _)) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}
