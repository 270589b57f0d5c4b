use std::fmt;

use super::GroupError;
use crate::diagram::ColouredWord;

/// An element `z^t x^eps` of the infinite dihedral group `Z2 ∗ Z2`, with
/// `x`, `y` the two free involutions and `z = xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub t: i64,
    pub eps: bool,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement { t: 0, eps: false };

    pub fn new(t: i64, eps: bool) -> Self {
        DihedralElement { t, eps }
    }

    pub fn x() -> Self {
        DihedralElement { t: 0, eps: true }
    }

    /// `y = x · xy`
    pub fn y() -> Self {
        DihedralElement { t: -1, eps: true }
    }

    pub fn z() -> Self {
        DihedralElement { t: 1, eps: false }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: Self) -> Self {
        if self.eps {
            DihedralElement {
                t: self.t - rhs.t,
                eps: !rhs.eps,
            }
        } else {
            DihedralElement {
                t: self.t + rhs.t,
                eps: rhs.eps,
            }
        }
    }

    pub fn inv(self) -> Self {
        if self.eps {
            self
        } else {
            DihedralElement {
                t: -self.t,
                eps: false,
            }
        }
    }

    /// Membership in `Γ_ℓ = ⟨z^ℓ⟩`, with `Γ_0` trivial.
    pub fn in_gamma_ell(self, ell: u32) -> bool {
        !self.eps
            && match ell {
                0 => self.t == 0,
                l => self.t.rem_euclid(l as i64) == 0,
            }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, u8::from(self.eps))
    }
}

/// Image of a word over `{x, y}` in `Z2 ∗ Z2`.
pub fn dihedral_eval(w: &ColouredWord) -> Result<DihedralElement, GroupError> {
    w.iter().try_fold(DihedralElement::IDENTITY, |acc, c| {
        let g = match (c.symbol(), c.is_self_inverse()) {
            ("x", true) => DihedralElement::x(),
            ("y", true) => DihedralElement::y(),
            _ => return Err(GroupError::UnknownLetter(c.symbol().to_string())),
        };
        Ok(acc.mul(g))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eval(s: &str) -> DihedralElement {
        dihedral_eval(&ColouredWord::self_inverse(s)).unwrap()
    }

    #[test]
    fn small_words() {
        assert_eq!(eval("xy"), DihedralElement::new(1, false));
        assert_eq!(eval("xx"), DihedralElement::IDENTITY);
        assert_eq!(eval("y"), DihedralElement::new(-1, true));
        assert_eq!(eval("yy"), DihedralElement::IDENTITY);
        assert_eq!(eval("yx"), DihedralElement::new(-1, false));
        assert_eq!(eval(""), DihedralElement::IDENTITY);
        assert!(matches!(
            dihedral_eval(&ColouredWord::self_inverse("xz")),
            Err(GroupError::UnknownLetter(_))
        ));
    }

    #[test]
    fn gamma_ell_membership() {
        for ell in 0..5 {
            assert!(DihedralElement::IDENTITY.in_gamma_ell(ell));
        }
        assert!(DihedralElement::new(2, false).in_gamma_ell(2));
        assert!(!DihedralElement::new(1, false).in_gamma_ell(2));
        assert!(!DihedralElement::new(2, true).in_gamma_ell(1));
        assert!(!DihedralElement::new(3, false).in_gamma_ell(0));
        assert!(DihedralElement::new(-6, false).in_gamma_ell(3));
    }

    /// Free reduction of a word over {x, y}: cancel equal adjacent letters.
    fn reduce(s: &str) -> String {
        let mut out: Vec<char> = Vec::new();
        for c in s.chars() {
            if out.last() == Some(&c) {
                out.pop();
            } else {
                out.push(c);
            }
        }
        out.into_iter().collect()
    }

    proptest! {
        #[test]
        fn evaluation_is_a_homomorphism(a in "[xy]{0,12}", b in "[xy]{0,12}") {
            let ab = format!("{a}{b}");
            prop_assert_eq!(eval(&ab), eval(&a).mul(eval(&b)));
        }

        #[test]
        fn bracketing_does_not_matter(w in "[xy]{0,12}", cut1 in 0usize..13, cut2 in 0usize..13) {
            let n = w.len();
            let (i, j) = (cut1.min(n).min(cut2.min(n)), cut1.min(n).max(cut2.min(n)));
            let (a, b, c) = (eval(&w[..i]), eval(&w[i..j]), eval(&w[j..]));
            prop_assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
            prop_assert_eq!(a.mul(b.mul(c)), eval(&w));
        }

        #[test]
        fn freely_equal_words_agree(w in "[xy]{0,12}") {
            // reduced words are in bijection with Z2 ∗ Z2
            prop_assert_eq!(eval(&w), eval(&reduce(&w)));
            let r = reduce(&w);
            prop_assert_eq!(eval(&r) == DihedralElement::IDENTITY, r.is_empty());
        }

        #[test]
        fn inverse(t in -20i64..20, e in any::<bool>()) {
            let g = DihedralElement::new(t, e);
            prop_assert_eq!(g.mul(g.inv()), DihedralElement::IDENTITY);
            prop_assert_eq!(g.inv().mul(g), DihedralElement::IDENTITY);
        }
    }
}
