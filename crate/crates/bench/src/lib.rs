//! Fixtures shared by the benchmarks.

use ncpqg_core::diagram::{ColouredPartition, ColouredWord};
use ncpqg_core::family::Family;
use ncpqg_core::groups::{Group, GroupElement};
use ncpqg_core::oplusplus::{MLabel, OPlusPlus};
use ncpqg_core::wreath::Wreath;

/// The representative of `X^n` in `O^{++}(ℓ)`.
pub fn x_power(ell: u32, n: u32) -> ColouredPartition {
    OPlusPlus::new(ell)
        .representative(&MLabel::new(0, n, ell))
        .expect("X^n is realized")
}

/// `H^{++}(Z4, ⟨g²⟩)` with its standard generating set.
pub fn z4_wreath() -> Wreath {
    Wreath::standard(&Group::cyclic(4), &[GroupElement(2)]).expect("valid family")
}

/// `x y x y …` of length `n`.
pub fn alternating_word(n: usize) -> ColouredWord {
    let letters: String = "xy".chars().cycle().take(n).collect();
    ColouredWord::self_inverse(&letters)
}
