//! The family `O_N^{++}(ℓ)`: irreducible representations labelled by the
//! monoid `M_ℓ = ⟨X, θ | θ^ℓ, Xθ = θ^{-1}X⟩` in normal form `θ^k X^n`.

use std::fmt;

use crate::categories::CategoryPredicate;
use crate::diagram::{
    compose, d_xy, d_yx, empty, involute, pi, tensor, tensor_power, ColouredPartition, ColouredWord,
};
use crate::family::{Family, FamilyError};
use crate::fusion::{equivalent, EquivalenceMode};
use crate::groups::dihedral_eval;

/// `θ^k X^n` in `M_ℓ`; `k` is reduced mod `ℓ` (a plain integer when
/// `ℓ = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MLabel {
    pub ell: u32,
    pub n: u32,
    pub k: i64,
}

fn reduce(k: i64, ell: u32) -> i64 {
    if ell == 0 {
        k
    } else {
        k.rem_euclid(ell as i64)
    }
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl MLabel {
    pub fn new(k: i64, n: u32, ell: u32) -> Self {
        MLabel {
            ell,
            n,
            k: reduce(k, ell),
        }
    }

    pub fn trivial(ell: u32) -> Self {
        MLabel::new(0, 0, ell)
    }

    pub fn theta(ell: u32) -> Self {
        MLabel::new(1, 0, ell)
    }

    pub fn x(ell: u32) -> Self {
        MLabel::new(0, 1, ell)
    }

    /// Parses `1`, `X`, `X^n`, `t`, `t^k`, `t^k X^n` (also `θ` for `t`).
    pub fn parse(s: &str, ell: u32) -> Result<Self, FamilyError> {
        let err = || FamilyError::Parse(s.to_string());
        let s = s.trim();
        if s == "1" {
            return Ok(MLabel::trivial(ell));
        }
        let (mut k, mut n) = (0i64, 0u32);
        let mut seen_t = false;
        let mut seen_x = false;
        for part in s.split_whitespace() {
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b, Some(e)),
                None => (part, None),
            };
            match base {
                "t" | "θ" if !seen_t && !seen_x => {
                    k = exp.map_or(Ok(1), |e| e.parse()).map_err(|_| err())?;
                    seen_t = true;
                }
                "X" if !seen_x => {
                    n = exp.map_or(Ok(1), |e| e.parse()).map_err(|_| err())?;
                    seen_x = true;
                }
                _ => return Err(err()),
            }
        }
        if !seen_t && !seen_x {
            return Err(err());
        }
        Ok(MLabel::new(k, n, ell))
    }
}

impl fmt::Display for MLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.n) {
            (0, 0) => write!(f, "1"),
            (k, 0) => write!(f, "t^{k}"),
            (0, n) => write!(f, "X^{n}"),
            (k, n) => write!(f, "t^{k} X^{n}"),
        }
    }
}

fn same_modulus(a: &MLabel, b: &MLabel) -> Result<u32, FamilyError> {
    if a.ell == b.ell {
        Ok(a.ell)
    } else {
        Err(FamilyError::ModulusMismatch(a.ell, b.ell))
    }
}

/// `(θ^k X^n)(θ^{k'} X^{n'}) = θ^{k + (-1)^n k'} X^{n+n'}`.
pub fn m_product(a: &MLabel, b: &MLabel) -> Result<MLabel, FamilyError> {
    let ell = same_modulus(a, b)?;
    Ok(MLabel::new(a.k + sign(a.n) * b.k, a.n + b.n, ell))
}

/// The antimultiplicative involution with `X̄ = X`, `θ̄ = θ^{-1}`:
/// `θ^k X^n ↦ θ^{(-1)^{n+1} k} X^n`.
pub fn m_conjugate(a: &MLabel) -> MLabel {
    MLabel::new(-sign(a.n) * a.k, a.n, a.ell)
}

/// `θ^{k_a} X^n ⊗ θ^{k_b} X^{n'}`: write the right factor as
/// `X^{n'} θ^{k''}` with `k'' = (-1)^{n'} k_b`, then take
/// `θ^{k_a} X^{n+n'-2i} θ^{k''}` for `0 ≤ i ≤ min(n, n')`, each once.
pub fn closed_fusion(a: &MLabel, b: &MLabel) -> Result<Vec<MLabel>, FamilyError> {
    let ell = same_modulus(a, b)?;
    let k2 = sign(b.n) * b.k;
    let mut out: Vec<MLabel> = (0..=a.n.min(b.n))
        .map(|i| {
            let m = a.n + b.n - 2 * i;
            MLabel::new(a.k + sign(m) * k2, m, ell)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The fusion rule as printed: a standalone `θ^{k+k'}` plus the sum over
/// `0 ≤ i ≤ min(n, n')` of `θ^k X^{n+n'-2i} θ^{k'}`, for
/// `θ^k X^n ⊗ X^{n'} θ^{k'}`.
pub fn printed_fusion(k: i64, n: u32, n2: u32, k2: i64, ell: u32) -> Vec<MLabel> {
    let mut out = vec![MLabel::new(k + k2, 0, ell)];
    for i in 0..=n.min(n2) {
        let m = n + n2 - 2 * i;
        out.push(MLabel::new(k + sign(m) * k2, m, ell));
    }
    out.sort();
    out
}

/// The label of a projective partition of `D_ℓ`: `n = t(p)` and `k` the
/// `z`-exponent of `φ(w) = z^k x^ε`.
pub fn label_of_projective(p: &ColouredPartition, ell: u32) -> Result<MLabel, FamilyError> {
    let cat = CategoryPredicate::DEll(ell);
    if let Some(v) = cat.check(p)? {
        return Err(FamilyError::NotMember(v.to_string()));
    }
    let n = p.through_block_count();
    let g = dihedral_eval(p.upper())?;
    if g.eps != (n % 2 == 1) {
        return Err(FamilyError::ParityViolation { n });
    }
    Ok(MLabel::new(g.t, n as u32, ell))
}

fn dstar_d(oriented_xy: bool) -> ColouredPartition {
    let d = if oriented_xy { d_xy() } else { d_yx() };
    compose(&involute(&d), &d).expect("rows match").partition
}

/// `(D*D)^{⊗|j|}` with `D = D_xy` for `j ≥ 0` and `D_yx` otherwise: a
/// projective labelled `θ^j`.
pub fn theta_power(j: i64) -> ColouredPartition {
    tensor_power(&dstar_d(j >= 0), j.unsigned_abs() as usize)
}

/// The one-dimensional representation group `Z_ℓ` with its diagram
/// certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimGroup {
    /// `None` for `Z`.
    pub order: Option<u32>,
    /// `θ^ℓ ~ 1` (vacuous when `ℓ = 0`).
    pub theta_ell_trivial: bool,
    /// `(j, θ^j ~ 1)` for the checked `0 < j`.
    pub nontrivial_powers: Vec<(u32, bool)>,
}

impl OneDimGroup {
    pub fn certified(&self) -> bool {
        self.theta_ell_trivial && self.nontrivial_powers.iter().all(|(_, eq)| !eq)
    }
}

/// Certifies `G(O_N^{++}(ℓ)) ≅ Z_ℓ` with diagrams: `θ^ℓ ~ 1` and
/// `θ^j ≁ 1` for `0 < j < ℓ` (for `ℓ = 0`, `0 < j ≤ max_j`).
pub fn one_dim_group(ell: u32, max_j: u32, budget: usize) -> Result<OneDimGroup, FamilyError> {
    let cat = CategoryPredicate::DEll(ell);
    let one = empty();
    let eq = |j: u32| -> Result<bool, FamilyError> {
        let p = theta_power(j as i64);
        let mode = if 2 * p.upper().len() <= budget {
            EquivalenceMode::Exhaustive
        } else {
            EquivalenceMode::Candidate
        };
        Ok(equivalent(&p, &one, &cat, mode, budget)?)
    };
    let top = if ell == 0 { max_j } else { ell - 1 };
    let nontrivial_powers = (1..=top)
        .map(|j| Ok((j, eq(j)?)))
        .collect::<Result<_, FamilyError>>()?;
    Ok(OneDimGroup {
        order: (ell > 0).then_some(ell),
        theta_ell_trivial: ell == 0 || eq(ell)?,
        nontrivial_powers,
    })
}

/// `O_N^{++}(ℓ)` with category `D_ℓ`.
#[derive(Clone, Debug)]
pub struct OPlusPlus {
    ell: u32,
    category: CategoryPredicate,
}

impl OPlusPlus {
    pub fn new(ell: u32) -> Self {
        OPlusPlus {
            ell,
            category: CategoryPredicate::DEll(ell),
        }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }
}

impl Family for OPlusPlus {
    type Label = MLabel;

    fn describe(&self) -> String {
        format!("O++(ℓ={})", self.ell)
    }

    fn category(&self) -> &CategoryPredicate {
        &self.category
    }

    fn label_of_projective(&self, p: &ColouredPartition) -> Result<MLabel, FamilyError> {
        label_of_projective(p, self.ell)
    }

    fn closed_fusion(&self, a: &MLabel, b: &MLabel) -> Result<Vec<MLabel>, FamilyError> {
        closed_fusion(a, b)
    }

    fn conjugate(&self, a: &MLabel) -> MLabel {
        m_conjugate(a)
    }

    fn trivial(&self) -> MLabel {
        MLabel::trivial(self.ell)
    }

    /// `θ^k ⊗ π(x,x)^{⊗n}` with `θ^k` built from `D_xy` (or `D_yx` for
    /// negative `k` when `ℓ = 0`).
    fn representative(&self, a: &MLabel) -> Result<ColouredPartition, FamilyError> {
        if a.ell != self.ell {
            return Err(FamilyError::ModulusMismatch(a.ell, self.ell));
        }
        let x = ColouredWord::self_inverse("x");
        let px = pi(&x, &x)?;
        Ok(tensor(&theta_power(a.k), &tensor_power(&px, a.n as usize)))
    }

    fn parse_label(&self, s: &str) -> Result<MLabel, FamilyError> {
        MLabel::parse(s, self.ell)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{beta, identity};
    use crate::family::{associativity_failures, diagram_fusion, frobenius_failures};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> ColouredWord {
        ColouredWord::self_inverse(s)
    }

    #[test]
    fn products() {
        let ell = 3;
        let m = MLabel::new(2, 3, ell);
        assert_eq!(m_product(&MLabel::trivial(ell), &m).unwrap(), m);
        assert_eq!(m_product(&m, &MLabel::trivial(ell)).unwrap(), m);
        let tx = MLabel::new(1, 1, ell);
        assert_eq!(m_product(&tx, &MLabel::theta(ell)).unwrap(), MLabel::x(ell));
        assert_eq!(
            m_product(&MLabel::x(2), &MLabel::x(3)),
            Err(FamilyError::ModulusMismatch(2, 3))
        );
    }

    #[test]
    fn conjugates() {
        assert_eq!(m_conjugate(&MLabel::trivial(0)), MLabel::trivial(0));
        assert_eq!(m_conjugate(&MLabel::theta(0)), MLabel::new(-1, 0, 0));
        assert_eq!(m_conjugate(&MLabel::new(2, 1, 0)), MLabel::new(2, 1, 0));
        assert_eq!(m_conjugate(&MLabel::new(2, 2, 0)), MLabel::new(-2, 2, 0));
        // the conjugate of θ²X has θ²X ⊗ conj(θ²X) ∋ 1 exactly once
        let a = MLabel::new(2, 1, 0);
        let terms = closed_fusion(&a, &m_conjugate(&a)).unwrap();
        assert_eq!(
            terms.iter().filter(|l| **l == MLabel::trivial(0)).count(),
            1
        );
    }

    #[test]
    fn labels_of_generators() {
        for ell in 0..4 {
            let x = w("x");
            let y = w("y");
            assert_eq!(
                label_of_projective(&pi(&x, &x).unwrap(), ell).unwrap(),
                MLabel::x(ell)
            );
            assert_eq!(
                label_of_projective(&dstar_d(true), ell).unwrap(),
                MLabel::theta(ell)
            );
            assert_eq!(
                label_of_projective(&pi(&y, &y).unwrap(), ell).unwrap(),
                MLabel::new(-1, 1, ell)
            );
            assert_eq!(
                label_of_projective(&beta(&w("xx"), &w("xx")).unwrap(), ell).unwrap(),
                MLabel::trivial(ell)
            );
        }
        assert!(matches!(
            label_of_projective(&pi(&w("xx"), &w("xx")).unwrap(), 2),
            Err(FamilyError::NotMember(_))
        ));
    }

    #[test]
    fn representatives_carry_their_label() {
        for ell in 0..4 {
            let fam = OPlusPlus::new(ell);
            for k in -2..=2 {
                for n in 0..=3 {
                    let m = MLabel::new(k, n, ell);
                    let p = fam.representative(&m).unwrap();
                    assert_eq!(fam.label_of_projective(&p).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn label_syntax_round_trips() {
        for ell in [0, 3] {
            for k in -3..=3 {
                for n in 0..=3 {
                    let m = MLabel::new(k, n, ell);
                    assert_eq!(MLabel::parse(&m.to_string(), ell).unwrap(), m);
                }
            }
        }
        assert_eq!(MLabel::parse("t^-1 X^2", 0).unwrap(), MLabel::new(-1, 2, 0));
        assert_eq!(MLabel::parse("t^0 X^1", 0).unwrap(), MLabel::x(0));
        assert_eq!(MLabel::parse("X", 2).unwrap(), MLabel::x(2));
        assert_eq!(MLabel::parse("θ", 2).unwrap(), MLabel::theta(2));
        for bad in ["", "X^a", "X t", "t^1 t^2", "Y^2"] {
            assert!(MLabel::parse(bad, 0).is_err(), "{bad}");
        }
    }

    #[test]
    fn fusion_examples() {
        for ell in 0..4 {
            let x = MLabel::x(ell);
            assert_eq!(
                closed_fusion(&x, &x).unwrap(),
                vec![MLabel::trivial(ell), MLabel::new(0, 2, ell)]
            );
            let m = MLabel::new(1, 2, ell);
            assert_eq!(closed_fusion(&MLabel::trivial(ell), &m).unwrap(), vec![m]);
        }
        // θX² ⊗ θX at ℓ = 0
        let got = closed_fusion(&MLabel::new(1, 2, 0), &MLabel::new(1, 1, 0)).unwrap();
        assert_eq!(got, vec![MLabel::new(2, 1, 0), MLabel::new(2, 3, 0)]);
    }

    #[test]
    fn theta_x_squared_times_theta_x_matches_diagrams() {
        // (D*D) ⊗ π ⊗ π against π(y,y)-free representative of θX
        let fam = OPlusPlus::new(0);
        let x = w("x");
        let px = pi(&x, &x).unwrap();
        let p = tensor(&dstar_d(true), &tensor(&px, &px));
        let q = tensor(&px, &dstar_d(true));
        assert_eq!(fam.label_of_projective(&p).unwrap(), MLabel::new(1, 2, 0));
        let lq = fam.label_of_projective(&q).unwrap();
        assert_eq!(lq, MLabel::new(-1, 1, 0));
        let q = fam.representative(&MLabel::new(1, 1, 0)).unwrap();
        assert_eq!(
            diagram_fusion(&fam, &p, &q).unwrap(),
            closed_fusion(&MLabel::new(1, 2, 0), &MLabel::new(1, 1, 0)).unwrap()
        );
    }

    #[test]
    fn printed_formula_double_counts() {
        // θ^k X^n ⊗ X^n θ^{k'} with n = n': the printed rule lists θ^{k+k'}
        // twice, the diagrams once
        let (k, k2, n) = (1, 2, 1);
        let printed = printed_fusion(k, n, n, k2, 0);
        let one_dim = MLabel::new(k + k2, 0, 0);
        assert_eq!(printed.iter().filter(|l| **l == one_dim).count(), 2);
        let a = MLabel::new(k, n, 0);
        let b = MLabel::new(sign(n) * k2, n, 0);
        let closed = closed_fusion(&a, &b).unwrap();
        assert_eq!(closed.iter().filter(|l| **l == one_dim).count(), 1);
        // with n ≠ n' the printed rule still contains θ^{k+k'}
        assert!(printed_fusion(0, 1, 2, 0, 0).contains(&MLabel::trivial(0)));
        assert!(!closed_fusion(&MLabel::x(0), &MLabel::new(0, 2, 0))
            .unwrap()
            .contains(&MLabel::trivial(0)));
    }

    #[test]
    fn one_dimensional_groups() {
        for ell in 1..=4 {
            let g = one_dim_group(ell, 0, 12).unwrap();
            assert_eq!(g.order, Some(ell));
            assert!(g.certified(), "ℓ = {ell}: {g:?}");
        }
        let g = one_dim_group(0, 4, 12).unwrap();
        assert_eq!(g.order, None);
        assert!(g.certified());
    }

    #[test]
    fn ring_axioms_on_small_labels() {
        for ell in 0..4 {
            let fam = OPlusPlus::new(ell);
            let ks: Vec<i64> = if ell == 0 {
                (-2..=2).collect()
            } else {
                (0..ell as i64).collect()
            };
            let labels: Vec<MLabel> = ks
                .iter()
                .flat_map(|&k| (0..=2).map(move |n| MLabel::new(k, n, ell)))
                .collect();
            assert!(frobenius_failures(&fam, &labels).unwrap().is_empty());
            assert!(associativity_failures(&fam, &labels).unwrap().is_empty());
        }
    }

    #[test]
    fn identity_on_x_power_is_x_power() {
        let p = identity(&w("xxx"));
        assert_eq!(label_of_projective(&p, 0).unwrap(), MLabel::new(0, 3, 0));
    }

    #[derive(Clone, Copy, Debug, PartialEq)]
    enum Letter {
        X,
        T,
        TInv,
    }

    /// Applies randomly chosen rewrite rules of `M_ℓ` until none applies.
    fn rewrite(mut word: Vec<Letter>, ell: u32, rng: &mut ChaCha8Rng) -> Vec<Letter> {
        use Letter::*;
        loop {
            let mut sites: Vec<(usize, usize, Vec<Letter>)> = Vec::new();
            for i in 0..word.len() {
                match (word[i], word.get(i + 1)) {
                    (T, Some(TInv)) | (TInv, Some(T)) => sites.push((i, 2, vec![])),
                    (X, Some(T)) => sites.push((i, 2, vec![TInv, X])),
                    (X, Some(TInv)) => sites.push((i, 2, vec![T, X])),
                    _ => {}
                }
                if ell > 0 {
                    let l = ell as usize;
                    if i + l <= word.len() && word[i..i + l].iter().all(|&c| c == T) {
                        sites.push((i, l, vec![]));
                    }
                    if word[i] == TInv {
                        sites.push((i, 1, vec![T; l - 1]));
                    }
                }
            }
            let Some((i, len, repl)) = sites.choose(rng).cloned() else {
                return word;
            };
            word.splice(i..i + len, repl);
        }
    }

    proptest! {
        #[test]
        fn normal_form_is_confluent(
            letters in proptest::collection::vec(0u8..3, 0..12),
            ell in 0u32..4,
            seed in any::<u64>(),
        ) {
            let word: Vec<Letter> = letters
                .iter()
                .map(|&c| [Letter::X, Letter::T, Letter::TInv][c as usize])
                .collect();
            let folded = word.iter().try_fold(MLabel::trivial(ell), |acc, l| {
                let m = match l {
                    Letter::X => MLabel::x(ell),
                    Letter::T => MLabel::theta(ell),
                    Letter::TInv => MLabel::new(-1, 0, ell),
                };
                m_product(&acc, &m)
            }).unwrap();
            for s in 0..3u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(s));
                let nf = rewrite(word.clone(), ell, &mut rng);
                // normal form: θ^{±} letters then X letters
                let xs = nf.iter().filter(|&&c| c == Letter::X).count() as u32;
                let first_x = nf.iter().position(|&c| c == Letter::X).unwrap_or(nf.len());
                prop_assert!(nf[first_x..].iter().all(|&c| c == Letter::X));
                let k: i64 = nf[..first_x]
                    .iter()
                    .map(|&c| if c == Letter::T { 1 } else { -1 })
                    .sum();
                prop_assert_eq!(MLabel::new(k, xs, ell), folded);
            }
        }
    }
}
