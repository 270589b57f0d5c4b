//! Random members of a category, for closure tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CategoryError, CategoryPredicate};
use crate::diagram::{compose, involute, rotate, tensor, ColouredPartition, ColouredWord, Corner};

/// Boundary labels of a random noncrossing partition of `n` points (a
/// pairing when `pairs` is set; `n` must then be even).
pub fn random_noncrossing<R: Rng>(rng: &mut R, n: usize, pairs: bool) -> Vec<u32> {
    let mut labels = Vec::with_capacity(n);
    let mut stack: Vec<u32> = Vec::new();
    let mut next = 0u32;
    for pos in 0..n {
        let remaining = n - pos;
        if pairs {
            let can_open = stack.len() + 2 <= remaining;
            if can_open && (stack.is_empty() || rng.gen_bool(0.5)) {
                stack.push(next);
                labels.push(next);
                next += 1;
            } else {
                labels.push(stack.pop().expect("pairing is balanced"));
            }
            continue;
        }
        // open a block, or join one of the open blocks
        let choice = rng.gen_range(0..=stack.len());
        if choice == 0 {
            stack.push(next);
            labels.push(next);
            next += 1;
        } else {
            let depth = stack.len() - choice;
            let target = stack[depth];
            stack.truncate(depth + 1);
            labels.push(target);
        }
    }
    labels
}

/// A random member with at most `max_points` points, by rejection.
pub fn sample_member<R: Rng>(
    cat: &CategoryPredicate,
    rng: &mut R,
    max_points: usize,
    attempts: usize,
) -> Option<ColouredPartition> {
    let pairs = matches!(
        cat,
        CategoryPredicate::OPlusPair(_) | CategoryPredicate::DEll(_)
    );
    let colours = cat.alphabet().colours().to_vec();
    for _ in 0..attempts {
        let mut n = rng.gen_range(0..=max_points);
        if pairs {
            n -= n % 2;
        }
        let labels = random_noncrossing(rng, n, pairs);
        let upper_len = rng.gen_range(0..=n);
        let mut word = |len: usize| -> ColouredWord {
            (0..len)
                .map(|_| colours[rng.gen_range(0..colours.len())].clone())
                .collect()
        };
        let upper = word(upper_len);
        let lower = word(n - upper_len);
        let p = ColouredPartition::from_boundary_labels(upper, lower, &labels);
        if cat.member(&p).unwrap_or(false) {
            return Some(p);
        }
    }
    None
}

/// Samples `pairs` member pairs of at most `max_points` points (seeded, so
/// reproducible) and returns a description of every tensor product,
/// composition, involution or rotation that leaves the category.
pub fn closure_failures(
    cat: &CategoryPredicate,
    seed: u64,
    pairs: usize,
    max_points: usize,
) -> Result<Vec<String>, CategoryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..pairs {
        let (Some(p), Some(q)) = (
            sample_member(cat, &mut rng, max_points, 10_000),
            sample_member(cat, &mut rng, max_points, 10_000),
        ) else {
            out.push(format!("no member with at most {max_points} points found"));
            break;
        };
        if !cat.member(&tensor(&p, &q))? {
            out.push(format!("{p} ⊗ {q}"));
        }
        if !cat.member(&involute(&p))? {
            out.push(format!("({p})*"));
        }
        if let Ok(r) = compose(&q, &p) {
            if !cat.member(&r.partition)? {
                out.push(format!("{q} ∘ {p}"));
            }
        }
        for corner in Corner::ALL {
            if let Ok(r) = rotate(&p, corner) {
                if !cat.member(&r)? {
                    out.push(format!("rotation of {p} at {corner:?}"));
                }
            }
        }
    }
    Ok(out)
}
