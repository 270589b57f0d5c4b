//! The family `H_N^{++}(Γ, Λ)`: one-dimensional representations labelled
//! by `Λ`, the others by words `W(Γ, Λ)` over `Γ` modulo sliding elements
//! of `Λ` between adjacent letters.

use std::fmt;
use std::sync::Arc;

use crate::categories::CategoryPredicate;
use crate::diagram::{beta, pi, tensor, ColouredPartition, ColouredWord};
use crate::family::{Family, FamilyError};
use crate::fusion::{equivalent, EquivalenceMode};
use crate::groups::{GeneratingSet, Group, GroupElement, Subgroup};

/// A group element carrying its printed name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub element: GroupElement,
    name: Arc<str>,
}

impl Letter {
    pub fn new(group: &Group, element: GroupElement) -> Self {
        Letter {
            element,
            name: Arc::from(group.name(element)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

/// A label of `H_N^{++}(Γ, Λ)`, in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WLabel {
    OneDim(Letter),
    /// Nonempty; every letter but the last is the minimal element of its
    /// coset `γΛ`.
    Word(Vec<Letter>),
}

impl WLabel {
    pub fn elements(&self) -> Vec<GroupElement> {
        match self {
            WLabel::OneDim(l) => vec![l.element],
            WLabel::Word(ls) => ls.iter().map(|l| l.element).collect(),
        }
    }

    pub fn is_one_dim(&self) -> bool {
        matches!(self, WLabel::OneDim(_))
    }

    pub fn len(&self) -> usize {
        match self {
            WLabel::OneDim(_) => 0,
            WLabel::Word(ls) => ls.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for WLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WLabel::OneDim(l) => write!(f, "1d:{}", l.name),
            WLabel::Word(ls) => {
                let names: Vec<&str> = ls.iter().map(|l| l.name()).collect();
                write!(f, "{}", names.join("."))
            }
        }
    }
}

/// Sweeps left to right replacing each letter but the last by its coset
/// representative and folding the remainder into the next letter.
pub fn normalize(group: &Group, lambda: &Subgroup, letters: &[GroupElement]) -> WLabel {
    let mut out = letters.to_vec();
    for i in 0..out.len().saturating_sub(1) {
        let tau = lambda.transversal(out[i]);
        let rest = group.mul(group.inv(tau), out[i]);
        out[i] = tau;
        out[i + 1] = group.mul(rest, out[i + 1]);
    }
    WLabel::Word(out.into_iter().map(|g| Letter::new(group, g)).collect())
}

/// `a •_c b = a_1⋯a_{n-1}(a_n c)b_1⋯b_{n'}`; `OneDim(c)` when both are
/// empty.
pub fn bullet(
    group: &Group,
    lambda: &Subgroup,
    a: &[GroupElement],
    b: &[GroupElement],
    c: GroupElement,
) -> WLabel {
    match (a.split_last(), b.split_first()) {
        (None, None) => WLabel::OneDim(Letter::new(group, c)),
        (Some((last, init)), _) => {
            let mut w = init.to_vec();
            w.push(group.mul(*last, c));
            w.extend_from_slice(b);
            normalize(group, lambda, &w)
        }
        (None, Some((first, rest))) => {
            let mut w = vec![group.mul(c, *first)];
            w.extend_from_slice(rest);
            normalize(group, lambda, &w)
        }
    }
}

/// `a ∗_c b = a_1⋯a_{n-1}(a_n c b_1)b_2⋯b_{n'}`.
pub fn star(
    group: &Group,
    lambda: &Subgroup,
    a: &[GroupElement],
    b: &[GroupElement],
    c: GroupElement,
) -> Result<WLabel, FamilyError> {
    let (Some((last, init)), Some((first, rest))) = (a.split_last(), b.split_first()) else {
        return Err(FamilyError::EmptyOperand);
    };
    let mut w = init.to_vec();
    w.push(group.product([*last, c, *first]));
    w.extend_from_slice(rest);
    Ok(normalize(group, lambda, &w))
}

/// The closed-form fusion rule, with contractions admitted only when every
/// nested product `z_{k-j+1}⋯z_k z'_1⋯z'_j` lies in `Λ`.
pub fn closed_fusion(
    group: &Group,
    lambda: &Subgroup,
    u: &WLabel,
    v: &WLabel,
) -> Result<Vec<WLabel>, FamilyError> {
    closed_fusion_with(group, lambda, u, v, Admissibility::Cumulative)
}

/// Which contractions of `w ⊗ w'` are kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    /// Every nested product lies in `Λ`.
    Cumulative,
    /// Only `φ(zz') ∈ Λ`, as in the printed summation.
    Outer,
}

pub fn closed_fusion_with(
    group: &Group,
    lambda: &Subgroup,
    u: &WLabel,
    v: &WLabel,
    rule: Admissibility,
) -> Result<Vec<WLabel>, FamilyError> {
    let (w, w2) = (u.elements(), v.elements());
    let mut out = match (u, v) {
        (WLabel::OneDim(_), WLabel::OneDim(_)) => {
            vec![WLabel::OneDim(Letter::new(group, group.mul(w[0], w2[0])))]
        }
        (WLabel::OneDim(_), WLabel::Word(_)) => vec![bullet(group, lambda, &[], &w2, w[0])],
        (WLabel::Word(_), WLabel::OneDim(_)) => vec![bullet(group, lambda, &w, &[], w2[0])],
        (WLabel::Word(_), WLabel::Word(_)) => {
            let (n, n2) = (w.len(), w2.len());
            let mut out = Vec::new();
            for k in 0..=n.min(n2) {
                let (a, z) = w.split_at(n - k);
                let (z2, b) = w2.split_at(k);
                let admissible = match rule {
                    Admissibility::Cumulative => (1..=k).all(|j| {
                        let inner = z[k - j..].iter().chain(&z2[..j]).copied();
                        lambda.contains(group.product(inner))
                    }),
                    Admissibility::Outer => true,
                };
                let c = group.product(z.iter().chain(z2).copied());
                if !admissible || !lambda.contains(c) {
                    continue;
                }
                out.push(bullet(group, lambda, a, b, c));
                if !a.is_empty() && !b.is_empty() {
                    out.push(star(group, lambda, a, b, c)?);
                }
            }
            out
        }
    };
    out.sort();
    Ok(out)
}

/// `G(H_N^{++}(Γ, Λ)) ≅ Λ` with its diagram certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimGroup {
    pub elements: Vec<GroupElement>,
    /// `β(w_λ, w_λ) ~ β(w_μ, w_μ)` exactly when `λ = μ`.
    pub distinct_classes: bool,
    /// `OneDim(λ) ⊗ OneDim(μ) = OneDim(λμ)` for all pairs, by both the
    /// closed form and the diagrams.
    pub table_reproduced: bool,
}

impl OneDimGroup {
    pub fn certified(&self) -> bool {
        self.distinct_classes && self.table_reproduced
    }
}

/// `H_N^{++}(Γ, Λ)` with category `D_{Γ,Λ,S}`.
#[derive(Clone, Debug)]
pub struct Wreath {
    gens: GeneratingSet,
    lambda: Subgroup,
    category: CategoryPredicate,
}

impl Wreath {
    pub fn new(gens: GeneratingSet, lambda: Subgroup) -> Result<Self, FamilyError> {
        if !lambda.is_subgroup_of(gens.group()) {
            return Err(crate::groups::GroupError::MixedGroups.into());
        }
        let category = CategoryPredicate::DGammaLambdaS(gens.clone(), lambda.clone());
        Ok(Wreath {
            gens,
            lambda,
            category,
        })
    }

    /// The standard generating set of `group` and `Λ = ⟨generators⟩`.
    pub fn standard(group: &Group, lambda: &[GroupElement]) -> Result<Self, FamilyError> {
        let lam = Subgroup::closure(group, lambda)?;
        Wreath::new(GeneratingSet::standard(group), lam)
    }

    pub fn group(&self) -> &Group {
        self.gens.group()
    }

    pub fn lambda(&self) -> &Subgroup {
        &self.lambda
    }

    pub fn gens(&self) -> &GeneratingSet {
        &self.gens
    }

    pub fn word(&self, letters: &[GroupElement]) -> Result<WLabel, FamilyError> {
        if letters.is_empty() {
            return Err(FamilyError::EmptyOperand);
        }
        for &g in letters {
            if !self.group().contains(g) {
                return Err(crate::groups::GroupError::MixedGroups.into());
            }
        }
        Ok(normalize(self.group(), &self.lambda, letters))
    }

    pub fn one_dim(&self, l: GroupElement) -> Result<WLabel, FamilyError> {
        if !self.lambda.contains(l) {
            return Err(FamilyError::Parse(format!(
                "{} is not in Λ",
                self.group().name(l)
            )));
        }
        Ok(WLabel::OneDim(Letter::new(self.group(), l)))
    }

    /// Certifies the one-dimensional representation group; for infinite
    /// `Λ` the elements `d·i` with `|i| ≤ 2` are used.
    pub fn one_dim_group(&self, budget: usize) -> Result<OneDimGroup, FamilyError> {
        let g = self.group();
        let elements = match self.lambda.elements() {
            Some(e) => e,
            None => {
                let d = (1..)
                    .find(|&d| self.lambda.contains(GroupElement(d)))
                    .expect("dZ");
                (-2..=2).map(|i| GroupElement(d * i)).collect()
            }
        };
        let mut distinct_classes = true;
        let mut table_reproduced = true;
        for &l in &elements {
            let pl = self.representative(&self.one_dim(l)?)?;
            for &m in &elements {
                let pm = self.representative(&self.one_dim(m)?)?;
                let mode = if pl.upper().len() + pm.upper().len() <= budget {
                    EquivalenceMode::Exhaustive
                } else {
                    EquivalenceMode::Candidate
                };
                if equivalent(&pl, &pm, &self.category, mode, budget)? != (l == m) {
                    distinct_classes = false;
                }
                let expected = vec![WLabel::OneDim(Letter::new(g, g.mul(l, m)))];
                let closed = self.closed_fusion(&self.one_dim(l)?, &self.one_dim(m)?)?;
                let diagram = crate::family::diagram_fusion(self, &pl, &pm)?;
                if closed != expected || diagram != expected {
                    table_reproduced = false;
                }
            }
        }
        Ok(OneDimGroup {
            elements,
            distinct_classes,
            table_reproduced,
        })
    }
}

impl Family for Wreath {
    type Label = WLabel;

    fn describe(&self) -> String {
        let lam = match self.lambda.elements() {
            Some(e) => {
                let names: Vec<String> = e.iter().map(|&g| self.group().name(g)).collect();
                format!("{{{}}}", names.join(","))
            }
            None => "infinite".to_string(),
        };
        format!("H++(Γ={}, Λ={lam})", self.group())
    }

    fn category(&self) -> &CategoryPredicate {
        &self.category
    }

    /// `OneDim(φ(w))` without through-blocks; otherwise the upper row is cut
    /// before the first upper leg of each through-block (the first piece
    /// reaching back to the start) and the pieces' images are normalized.
    fn label_of_projective(&self, p: &ColouredPartition) -> Result<WLabel, FamilyError> {
        if let Some(v) = self.category.check(p)? {
            return Err(FamilyError::NotMember(v.to_string()));
        }
        let upper = p.upper().letters();
        let through = p.through_blocks();
        if through.is_empty() {
            return Ok(WLabel::OneDim(Letter::new(
                self.group(),
                self.gens.phi(p.upper())?,
            )));
        }
        let mut starts: Vec<usize> = through
            .iter()
            .map(|&t| {
                p.upper_labels()
                    .iter()
                    .position(|&l| l == t)
                    .expect("through-block has an upper leg")
            })
            .collect();
        starts[0] = 0;
        starts.push(upper.len());
        let letters = starts
            .windows(2)
            .map(|s| self.gens.phi_letters(&upper[s[0]..s[1]]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(normalize(self.group(), &self.lambda, &letters))
    }

    fn closed_fusion(&self, a: &WLabel, b: &WLabel) -> Result<Vec<WLabel>, FamilyError> {
        closed_fusion(self.group(), &self.lambda, a, b)
    }

    /// `OneDim(λ) ↦ OneDim(λ^{-1})`; words are reversed with every letter
    /// inverted.
    fn conjugate(&self, a: &WLabel) -> WLabel {
        let g = self.group();
        match a {
            WLabel::OneDim(l) => WLabel::OneDim(Letter::new(g, g.inv(l.element))),
            WLabel::Word(ls) => {
                let rev: Vec<GroupElement> = ls.iter().rev().map(|l| g.inv(l.element)).collect();
                normalize(g, &self.lambda, &rev)
            }
        }
    }

    fn trivial(&self) -> WLabel {
        WLabel::OneDim(Letter::new(self.group(), self.group().identity()))
    }

    /// `β(w_λ, w_λ)` for `OneDim(λ)` and `π(w_{γ_1}, w_{γ_1}) ⊗ ⋯` for words.
    fn representative(&self, a: &WLabel) -> Result<ColouredPartition, FamilyError> {
        match a {
            WLabel::OneDim(l) => {
                let w = self.gens.rep_word(l.element)?;
                Ok(beta(&w, &w)?)
            }
            WLabel::Word(ls) => {
                let mut out = crate::diagram::empty();
                for l in ls {
                    let w: ColouredWord = self.gens.rep_word(l.element)?;
                    out = tensor(&out, &pi(&w, &w)?);
                }
                Ok(out)
            }
        }
    }

    /// `1`, `1d:λ` or dot-separated letters `γ_1.γ_2.⋯`.
    fn parse_label(&self, s: &str) -> Result<WLabel, FamilyError> {
        let s = s.trim();
        let g = self.group();
        let parse = |t: &str| {
            g.parse_element(t)
                .map_err(|_| FamilyError::Parse(s.to_string()))
        };
        if s == "1" {
            return Ok(self.trivial());
        }
        if let Some(rest) = s.strip_prefix("1d:") {
            return self.one_dim(parse(rest)?);
        }
        if s.is_empty() {
            return Err(FamilyError::Parse(s.to_string()));
        }
        let letters = s.split('.').map(parse).collect::<Result<Vec<_>, _>>()?;
        self.word(&letters)
    }
}
