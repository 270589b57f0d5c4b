use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::GroupError;

/// An element of a [`Group`]: a residue for cyclic groups, an integer for
/// `Z`, a row index for table groups. The derived order is the canonical
/// total order used to pick coset representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    names: Vec<String>,
    product: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl TableGroup {
    /// Checks the Latin square property, a two-sided identity, inverses and
    /// associativity.
    pub fn new(names: Vec<String>, product: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("group has no elements".into()));
        }
        if product.len() != n || product.iter().any(|r| r.len() != n) {
            return Err(GroupError::InvalidTable(format!(
                "product table must be {n}×{n}"
            )));
        }
        if product.iter().flatten().any(|&v| v >= n) {
            return Err(GroupError::InvalidTable(
                "product entry out of range".into(),
            ));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != n {
            return Err(GroupError::InvalidTable("duplicate element names".into()));
        }
        for i in 0..n {
            let row: BTreeSet<usize> = product[i].iter().copied().collect();
            let col: BTreeSet<usize> = (0..n).map(|j| product[j][i]).collect();
            if row.len() != n || col.len() != n {
                return Err(GroupError::InvalidTable(format!(
                    "not a Latin square at element {}",
                    names[i]
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| product[e][a] == a && product[a][e] == a))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            let invs: Vec<usize> = (0..n)
                .filter(|&b| product[a][b] == identity && product[b][a] == identity)
                .collect();
            match invs.as_slice() {
                [b] => inverse[a] = *b,
                _ => {
                    return Err(GroupError::InvalidTable(format!(
                        "element {} has no unique inverse",
                        names[a]
                    )))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if product[product[a][b]][c] != product[a][product[b][c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "product is not associative on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(TableGroup {
            names,
            product,
            inverse,
            identity,
        })
    }
}

/// A finite group given by a table, a finite cyclic group, or `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    /// `Z_m`; `order == 0` stands for the infinite cyclic group.
    Cyclic {
        order: u64,
    },
    Table(TableGroup),
}

impl Group {
    pub fn cyclic(order: u64) -> Self {
        Group::Cyclic { order }
    }

    pub fn integers() -> Self {
        Group::Cyclic { order: 0 }
    }

    pub fn table(names: Vec<String>, product: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        TableGroup::new(names, product).map(Group::Table)
    }

    /// `Z2 × Z2` as a table with elements `e, a, b, c` (`c = ab`).
    pub fn klein_four() -> Self {
        let names = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let product = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Group::table(names, product).expect("Klein four-group table is valid")
    }

    /// `None` for the infinite cyclic group.
    pub fn order(&self) -> Option<u64> {
        match self {
            Group::Cyclic { order: 0 } => None,
            Group::Cyclic { order } => Some(*order),
            Group::Table(t) => Some(t.names.len() as u64),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Group::Cyclic { .. } => GroupElement(0),
            Group::Table(t) => GroupElement(t.identity as i64),
        }
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        match self {
            Group::Cyclic { order: 0 } => true,
            Group::Cyclic { order } => (0..*order as i64).contains(&g.0),
            Group::Table(t) => (0..t.names.len() as i64).contains(&g.0),
        }
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        match self {
            Group::Cyclic { order: 0 } => GroupElement(a.0 + b.0),
            Group::Cyclic { order } => GroupElement((a.0 + b.0).rem_euclid(*order as i64)),
            Group::Table(t) => GroupElement(t.product[a.0 as usize][b.0 as usize] as i64),
        }
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        match self {
            Group::Cyclic { order: 0 } => GroupElement(-a.0),
            Group::Cyclic { order } => GroupElement((-a.0).rem_euclid(*order as i64)),
            Group::Table(t) => GroupElement(t.inverse[a.0 as usize] as i64),
        }
    }

    pub fn product<I: IntoIterator<Item = GroupElement>>(&self, it: I) -> GroupElement {
        it.into_iter()
            .fold(self.identity(), |acc, g| self.mul(acc, g))
    }

    /// All elements in canonical order, or `None` for `Z`.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        self.order()
            .map(|n| (0..n as i64).map(GroupElement).collect())
    }

    pub fn name(&self, g: GroupElement) -> String {
        match self {
            Group::Table(t) => t.names[g.0 as usize].clone(),
            Group::Cyclic { .. } if g.0 == 0 => "e".to_string(),
            Group::Cyclic { .. } => format!("g{}", g.0),
        }
    }

    /// Accepts the names printed by [`Group::name`]; cyclic groups also
    /// accept `g` for the generator and `g0` for the identity.
    pub fn parse_element(&self, s: &str) -> Result<GroupElement, GroupError> {
        let s = s.trim();
        let g = match self {
            Group::Table(t) => t
                .names
                .iter()
                .position(|n| n == s)
                .map(|i| GroupElement(i as i64)),
            Group::Cyclic { order } => {
                let v = match s {
                    "e" | "1" => Some(0),
                    "g" => Some(1),
                    _ => s.strip_prefix('g').and_then(|r| r.parse::<i64>().ok()),
                };
                v.map(|v| match order {
                    0 => GroupElement(v),
                    m => GroupElement(v.rem_euclid(*m as i64)),
                })
            }
        };
        g.ok_or_else(|| GroupError::UnknownElement(s.to_string()))
    }

    pub fn describe(&self) -> String {
        match self {
            Group::Cyclic { order: 0 } => "Z".to_string(),
            Group::Cyclic { order } => format!("Z{order}"),
            Group::Table(t) => format!("table group of order {}", t.names.len()),
        }
    }

    fn check(&self, g: GroupElement) -> Result<GroupElement, GroupError> {
        if self.contains(g) {
            Ok(g)
        } else {
            Err(GroupError::MixedGroups)
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Members {
    Finite(BTreeSet<GroupElement>),
    /// `dZ` inside `Z` (`d = 0` is the trivial subgroup).
    Multiples(u64),
}

/// A subgroup `Λ ⊂ Γ`, closed under the group law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group: Group,
    generators: Vec<GroupElement>,
    members: Members,
    /// Minimal element of each left coset `gΛ`, indexed by `g` (finite `Γ`).
    coset_min: Vec<GroupElement>,
}

impl Subgroup {
    /// The subgroup generated by `generators`.
    pub fn closure(group: &Group, generators: &[GroupElement]) -> Result<Self, GroupError> {
        for &g in generators {
            group.check(g)?;
        }
        let members = match group {
            Group::Cyclic { order: 0 } => {
                Members::Multiples(generators.iter().fold(0, |d, g| gcd(d, g.0.unsigned_abs())))
            }
            _ => {
                let mut set = BTreeSet::from([group.identity()]);
                let mut queue = VecDeque::from([group.identity()]);
                while let Some(h) = queue.pop_front() {
                    for &g in generators {
                        let n = group.mul(h, g);
                        if set.insert(n) {
                            queue.push_back(n);
                        }
                    }
                }
                Members::Finite(set)
            }
        };
        let mut sub = Subgroup {
            group: group.clone(),
            generators: generators.to_vec(),
            members,
            coset_min: Vec::new(),
        };
        if let (Some(elems), Members::Finite(set)) = (group.elements(), &sub.members) {
            sub.coset_min = elems
                .iter()
                .map(|&g| {
                    set.iter()
                        .map(|&l| group.mul(g, l))
                        .min()
                        .expect("nonempty")
                })
                .collect();
        }
        Ok(sub)
    }

    pub fn trivial(group: &Group) -> Self {
        Self::closure(group, &[]).expect("trivial subgroup")
    }

    pub fn whole(group: &Group) -> Result<Self, GroupError> {
        match group.elements() {
            Some(e) => Self::closure(group, &e),
            None => Self::closure(group, &[GroupElement(1)]),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        match &self.members {
            Members::Finite(s) => s.contains(&g),
            Members::Multiples(0) => g.0 == 0,
            Members::Multiples(d) => g.0.rem_euclid(*d as i64) == 0,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match &self.members {
            Members::Finite(s) => Some(s.len() as u64),
            Members::Multiples(0) => Some(1),
            Members::Multiples(_) => None,
        }
    }

    /// Members in canonical order, `None` when infinite.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        match &self.members {
            Members::Finite(s) => Some(s.iter().copied().collect()),
            Members::Multiples(0) => Some(vec![GroupElement(0)]),
            Members::Multiples(_) => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == Some(1)
    }

    /// The chosen representative of the left coset `gΛ`: its minimal element
    /// in the canonical order (for `dZ ⊂ Z`, the residue in `0..d`).
    pub fn transversal(&self, g: GroupElement) -> GroupElement {
        match &self.members {
            Members::Finite(_) => self.coset_min[g.0 as usize],
            Members::Multiples(0) => g,
            Members::Multiples(d) => GroupElement(g.0.rem_euclid(*d as i64)),
        }
    }

    pub fn is_subgroup_of(&self, group: &Group) -> bool {
        self.group == *group
    }
}

/// `g ∈ Λ`, rejecting elements and subgroups of different groups.
pub fn in_subgroup(group: &Group, g: GroupElement, sub: &Subgroup) -> Result<bool, GroupError> {
    if !sub.is_subgroup_of(group) {
        return Err(GroupError::MixedGroups);
    }
    group.check(g)?;
    Ok(sub.contains(g))
}
