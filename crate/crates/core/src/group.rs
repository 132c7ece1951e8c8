//! Finite groups backed by explicit multiplication tables.
//!
//! Every group is stored as an `order × order` table of element indices with
//! the identity fixed at index 0. Built-in families cover the groups that show
//! up in gain-graph work: cyclic groups, the sign group `{±1}`, the fourth
//! roots of unity `T4`, dihedral groups, the quaternion group and direct
//! products. Arbitrary tables can be supplied through [`GroupSpec::Custom`].

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted group order.
pub const MAX_ORDER: usize = 512;

/// Groups up to this order have associativity checked on every triple.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;

const SAMPLED_TRIPLES: usize = 10_000;

/// An element of a [`FiniteGroup`], addressed by its row in the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(usize);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    /// Wraps a raw index. Range is checked by the group operations that
    /// consume the element.
    pub const fn from_index(index: usize) -> Self {
        GroupElement(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }

    pub const fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// How a group was built. Serializes to the group file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Sign,
    T4,
    Dihedral { n: usize },
    Quaternion8,
    DirectProduct { left: Box<GroupSpec>, right: Box<GroupSpec> },
    Custom { labels: Vec<String>, table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Self {
        GroupSpec::Cyclic { n }
    }

    pub fn dihedral(n: usize) -> Self {
        GroupSpec::Dihedral { n }
    }

    pub fn direct_product(left: GroupSpec, right: GroupSpec) -> Self {
        GroupSpec::DirectProduct {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// The trivial group, modelled as `Z1`.
    pub fn trivial() -> Self {
        GroupSpec::Cyclic { n: 1 }
    }
}

/// A validated finite group. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: GroupSpec,
    name: String,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

/// A central element `s` with `s² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CentralWeakInvolution(GroupElement);

impl CentralWeakInvolution {
    pub fn element(self) -> GroupElement {
        self.0
    }

    /// The identity is always a central weak involution.
    pub fn identity() -> Self {
        CentralWeakInvolution(GroupElement::IDENTITY)
    }
}

/// Canonical spelling of a label: trimmed, with U+2212 folded to ASCII '-'.
pub fn normalize_label(label: &str) -> String {
    label.trim().replace('\u{2212}', "-")
}

impl FiniteGroup {
    /// Builds and validates a group from its family description.
    pub fn build(spec: &GroupSpec) -> Result<Self> {
        let (name, labels, mult) = match spec {
            GroupSpec::Cyclic { n } => cyclic_table(*n)?,
            GroupSpec::Sign => {
                let (_, _, mult) = cyclic_table(2)?;
                ("Sign".to_string(), vec!["1".into(), "-1".into()], mult)
            }
            GroupSpec::T4 => {
                let (_, _, mult) = cyclic_table(4)?;
                let labels = ["1", "i", "-1", "-i"].map(String::from).to_vec();
                ("T4".to_string(), labels, mult)
            }
            GroupSpec::Dihedral { n } => dihedral_table(*n)?,
            GroupSpec::Quaternion8 => quaternion_table(),
            GroupSpec::DirectProduct { left, right } => {
                let a = FiniteGroup::build(left)?;
                let b = FiniteGroup::build(right)?;
                product_table(&a, &b)?
            }
            GroupSpec::Custom { labels, table } => {
                let flat = flatten_table(table, labels.len())?;
                ("custom".to_string(), labels.clone(), flat)
            }
        };
        Self::from_parts(spec.clone(), name, labels, mult)
    }

    fn from_parts(spec: GroupSpec, name: String, labels: Vec<String>, mult: Vec<usize>) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let labels: Vec<String> = labels.iter().map(|l| normalize_label(l)).collect();
        let distinct: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        if distinct.len() != order {
            return Err(Error::InvalidGroup("element labels are not distinct".into()));
        }
        if labels.iter().any(|l| l.is_empty()) {
            return Err(Error::InvalidGroup("empty element label".into()));
        }
        validate_table(order, &mult)?;
        let mut inv = vec![0; order];
        for g in 0..order {
            inv[g] = (0..order)
                .find(|&h| mult[g * order + h] == 0)
                .expect("latin square row contains the identity");
        }
        Ok(FiniteGroup {
            spec,
            name,
            order,
            mult,
            inv,
            labels,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Family tag such as `Q8`, `Z4` or `D4`.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(GroupElement)
    }

    /// Checked conversion from a raw index.
    pub fn element(&self, index: usize) -> Result<GroupElement> {
        if index < self.order {
            Ok(GroupElement(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.0 < self.order
    }

    pub fn label(&self, g: GroupElement) -> &str {
        &self.labels[g.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its display label.
    pub fn by_label(&self, label: &str) -> Result<GroupElement> {
        let wanted = normalize_label(label);
        self.labels
            .iter()
            .position(|l| *l == wanted)
            .map(GroupElement)
            .ok_or(Error::UnknownLabel(wanted))
    }

    fn check(&self, g: GroupElement) -> Result<()> {
        self.element(g.0).map(|_| ())
    }

    /// Unchecked product. Panics if either operand is foreign to the group.
    #[inline]
    pub fn mul(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        assert!(g.0 < self.order && h.0 < self.order, "element out of range");
        GroupElement(self.mult[g.0 * self.order + h.0])
    }

    /// Unchecked inverse. Panics if the operand is foreign to the group.
    #[inline]
    pub fn inv(&self, g: GroupElement) -> GroupElement {
        GroupElement(self.inv[g.0])
    }

    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    pub fn inverse(&self, g: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = GroupElement>>(&self, items: I) -> GroupElement {
        items
            .into_iter()
            .fold(GroupElement::IDENTITY, |acc, g| self.mul(acc, g))
    }

    pub fn pow(&self, g: GroupElement, exp: usize) -> GroupElement {
        (0..exp).fold(GroupElement::IDENTITY, |acc, _| self.mul(acc, g))
    }

    /// Conjugate `x⁻¹ g x`.
    pub fn conjugate(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn is_central(&self, g: GroupElement) -> bool {
        self.elements().all(|h| self.mul(g, h) == self.mul(h, g))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|g| self.is_central(g))
    }

    /// `Z(G)` by scanning the table.
    pub fn center(&self) -> Vec<GroupElement> {
        self.elements().filter(|&g| self.is_central(g)).collect()
    }

    /// All central `s` with `s² = 1`; always starts with the identity.
    pub fn central_weak_involutions(&self) -> Vec<CentralWeakInvolution> {
        self.center()
            .into_iter()
            .filter(|&g| self.mul(g, g).is_identity())
            .map(CentralWeakInvolution)
            .collect()
    }

    pub fn central_weak_involution(&self, g: GroupElement) -> Result<CentralWeakInvolution> {
        self.check(g)?;
        if self.mul(g, g).is_identity() && self.is_central(g) {
            Ok(CentralWeakInvolution(g))
        } else {
            Err(Error::NotCentralInvolution(self.label(g).to_string()))
        }
    }

    /// Re-validates an involution obtained elsewhere against this group.
    pub fn check_involution(&self, s: CentralWeakInvolution) -> Result<GroupElement> {
        self.central_weak_involution(s.0).map(|s| s.0)
    }

    /// Order of `g` as a group element.
    pub fn element_order(&self, g: GroupElement) -> usize {
        let mut x = g;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Largest element order.
    pub fn exponent_max_order(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).max().unwrap_or(1)
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Vec<GroupElement> {
        let mut members: BTreeSet<GroupElement> = BTreeSet::new();
        members.insert(GroupElement::IDENTITY);
        let mut frontier = vec![GroupElement::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    frontier.push(y);
                }
            }
        }
        members.into_iter().collect()
    }
}

fn cyclic_table(n: usize) -> Result<(String, Vec<String>, Vec<usize>)> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group needs n >= 1".into()));
    }
    let labels = (0..n).map(|a| a.to_string()).collect();
    let mult = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    Ok((format!("Z{n}"), labels, mult))
}

// Element `s^b r^a` sits at index `b*n + a`.
fn dihedral_table(n: usize) -> Result<(String, Vec<String>, Vec<usize>)> {
    if n == 0 {
        return Err(Error::InvalidGroup("dihedral group needs n >= 1".into()));
    }
    let order = 2 * n;
    let rot = |a: usize| match a {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r^{a}"),
    };
    let labels = (0..order)
        .map(|x| {
            let (b, a) = (x / n, x % n);
            match (b, a) {
                (0, 0) => "1".to_string(),
                (0, _) => rot(a),
                _ => format!("s{}", rot(a)),
            }
        })
        .collect();
    let mut mult = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let (b1, a1) = (x / n, x % n);
            let (b2, a2) = (y / n, y % n);
            let twisted = if b2 == 1 { (n - a1) % n } else { a1 };
            mult[x * order + y] = ((b1 + b2) % 2) * n + (twisted + a2) % n;
        }
    }
    Ok((format!("D{n}"), labels, mult))
}

// Index `2*u + neg` where u ∈ {1,i,j,k} and neg marks the minus sign.
fn quaternion_table() -> (String, Vec<String>, Vec<usize>) {
    const UNITS: [&str; 4] = ["1", "i", "j", "k"];
    // (negated, unit) for unit products u*v.
    const UNIT_MUL: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let labels = (0..8)
        .map(|x| {
            let sign = if x % 2 == 1 { "-" } else { "" };
            format!("{sign}{}", UNITS[x / 2])
        })
        .collect();
    let mut mult = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (neg, unit) = UNIT_MUL[x / 2][y / 2];
            let negated = neg ^ (x % 2 == 1) ^ (y % 2 == 1);
            mult[x * 8 + y] = 2 * unit + usize::from(negated);
        }
    }
    ("Q8".to_string(), labels, mult)
}

fn product_table(a: &FiniteGroup, b: &FiniteGroup) -> Result<(String, Vec<String>, Vec<usize>)> {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    if order > MAX_ORDER {
        return Err(Error::InvalidGroup(format!(
            "order {order} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    let labels = (0..order)
        .map(|x| format!("({},{})", a.labels[x / nb], b.labels[x % nb]))
        .collect();
    let mut mult = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let p = a.mult[(x / nb) * na + y / nb];
            let q = b.mult[(x % nb) * nb + y % nb];
            mult[x * order + y] = p * nb + q;
        }
    }
    Ok((format!("{}x{}", a.name, b.name), labels, mult))
}

fn flatten_table(table: &[Vec<usize>], order: usize) -> Result<Vec<usize>> {
    if table.len() != order || table.iter().any(|row| row.len() != order) {
        return Err(Error::InvalidGroup(format!(
            "table must be {order}x{order} to match the label list"
        )));
    }
    Ok(table.iter().flatten().copied().collect())
}

fn validate_table(order: usize, mult: &[usize]) -> Result<()> {
    if mult.len() != order * order {
        return Err(Error::InvalidGroup("table has the wrong size".into()));
    }
    if let Some(&bad) = mult.iter().find(|&&x| x >= order) {
        return Err(Error::InvalidGroup(format!("table entry {bad} out of range")));
    }
    for g in 0..order {
        if mult[g] != g || mult[g * order] != g {
            return Err(Error::InvalidGroup(
                "element 0 must be the identity".into(),
            ));
        }
    }
    let mut seen = vec![false; order];
    for r in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for c in 0..order {
            let x = mult[r * order + c];
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGroup(format!("row {r} is not a permutation")));
            }
        }
    }
    for c in 0..order {
        seen.iter_mut().for_each(|s| *s = false);
        for r in 0..order {
            let x = mult[r * order + c];
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidGroup(format!("column {c} is not a permutation")));
            }
        }
    }
    let m = |x: usize, y: usize| mult[x * order + y];
    let assoc = |a: usize, b: usize, c: usize| m(m(a, b), c) == m(a, m(b, c));
    if order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if !assoc(a, b, c) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a1f_0e5d);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, c) = (
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            );
            if !assoc(a, b, c) {
                return Err(Error::InvalidGroup(format!(
                    "not associative at ({a},{b},{c})"
                )));
            }
        }
    }
    Ok(())
}
