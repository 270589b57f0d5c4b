use super::{Colour, ColouredPartition, ColouredWord, DiagramError};

pub fn empty() -> ColouredPartition {
    ColouredPartition::from_labels(ColouredWord::empty(), ColouredWord::empty(), vec![], vec![])
}

/// The one-block partition `π(w, w')`.
pub fn pi(upper: &ColouredWord, lower: &ColouredWord) -> Result<ColouredPartition, DiagramError> {
    if upper.is_empty() && lower.is_empty() {
        return Err(DiagramError::EmptyWord);
    }
    Ok(ColouredPartition::from_labels(
        upper.clone(),
        lower.clone(),
        vec![0; upper.len()],
        vec![0; lower.len()],
    ))
}

/// `β(w, w')`: all upper points in one block, all lower points in another.
/// With one row empty this is a single block.
pub fn beta(upper: &ColouredWord, lower: &ColouredWord) -> Result<ColouredPartition, DiagramError> {
    if upper.is_empty() && lower.is_empty() {
        return Err(DiagramError::EmptyWord);
    }
    Ok(ColouredPartition::from_labels(
        upper.clone(),
        lower.clone(),
        vec![0; upper.len()],
        vec![1; lower.len()],
    ))
}

pub fn identity(w: &ColouredWord) -> ColouredPartition {
    let labels: Vec<u32> = (0..w.len() as u32).collect();
    ColouredPartition::from_labels(w.clone(), w.clone(), labels.clone(), labels)
}

/// A two-point block in the upper row, nothing below.
pub fn cap(a: Colour, b: Colour) -> ColouredPartition {
    ColouredPartition::from_labels(
        ColouredWord::new(vec![a, b]),
        ColouredWord::empty(),
        vec![0, 0],
        vec![],
    )
}

/// `D_xy`, stored with two upper points and no lower points.
pub fn d_xy() -> ColouredPartition {
    cap(Colour::self_inverse("x"), Colour::self_inverse("y"))
}

pub fn d_yx() -> ColouredPartition {
    cap(Colour::self_inverse("y"), Colour::self_inverse("x"))
}

fn nested_pair_labels(k: usize) -> Vec<u32> {
    (0..2 * k).map(|i| i.min(2 * k - 1 - i) as u32).collect()
}

fn check_gadget_word(k: usize, colours: &ColouredWord) -> Result<(), DiagramError> {
    if k == 0 {
        return Err(DiagramError::OutOfRange { k, max: usize::MAX });
    }
    if colours.len() != 2 * k {
        return Err(DiagramError::Invalid(format!(
            "gadget of depth {k} needs {} colours, got {}",
            2 * k,
            colours.len()
        )));
    }
    Ok(())
}

/// `h_□^k` on `2k + 2k` points: in each row the `i`-th point is paired with
/// the `(2k - i + 1)`-th one.
pub fn h_square(k: usize, colours: &ColouredWord) -> Result<ColouredPartition, DiagramError> {
    check_gadget_word(k, colours)?;
    let up = nested_pair_labels(k);
    let lo: Vec<u32> = up.iter().map(|l| l + k as u32).collect();
    Ok(ColouredPartition::from_labels(
        colours.clone(),
        colours.clone(),
        up,
        lo,
    ))
}

/// `h_⊠^k`: `h_□^k` with the outermost upper pair and the outermost lower
/// pair joined into one block.
pub fn h_boxvert(k: usize, colours: &ColouredWord) -> Result<ColouredPartition, DiagramError> {
    check_gadget_word(k, colours)?;
    let up = nested_pair_labels(k);
    let lo: Vec<u32> = up
        .iter()
        .map(|&l| if l == 0 { 0 } else { l + k as u32 })
        .collect();
    Ok(ColouredPartition::from_labels(
        colours.clone(),
        colours.clone(),
        up,
        lo,
    ))
}
