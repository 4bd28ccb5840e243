//! Elementary factor groups: trivial, finite (by table), infinite cyclic, free.

use std::collections::{BTreeSet, VecDeque};

use super::GroupError;

/// An element of a single factor group.
///
/// Finite factors use table indices (0 is the identity), the infinite cyclic
/// factor uses an exponent of its generator, and free factors use a freely
/// reduced list of `(generator, nonzero exponent)` blocks with adjacent
/// generators distinct.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorElem {
    Finite(usize),
    Power(i64),
    Free(Vec<(usize, i64)>),
}

/// Multiplication table of a finite group, checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteTable {
    /// Builds a table from row-major products `table[a][b] = a·b`.
    ///
    /// Checks closure, that index 0 is a two-sided identity, associativity
    /// and two-sided inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let k = table.len();
        if k == 0 {
            return Err(GroupError::BadTable("empty table".into()));
        }
        if names.len() != k {
            return Err(GroupError::BadTable(format!(
                "{} element names for a group of order {k}",
                names.len()
            )));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != k {
            return Err(GroupError::BadTable(
                "element names must be distinct".into(),
            ));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(GroupError::BadTable(format!(
                    "row {a} has {} entries",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= k) {
                return Err(GroupError::BadTable(format!(
                    "entry {bad} out of range in row {a}"
                )));
            }
        }
        for (a, row) in table.iter().enumerate() {
            if table[0][a] != a || row[0] != a {
                return Err(GroupError::BadTable("element 0 is not the identity".into()));
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::BadTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(k);
        for (a, row) in table.iter().enumerate() {
            match (0..k).find(|&b| row[b] == 0 && table[b][a] == 0) {
                Some(b) => inverse.push(b),
                None => return Err(GroupError::BadTable(format!("element {a} has no inverse"))),
            }
        }
        Ok(Self {
            names,
            table,
            inverse,
        })
    }

    /// Cyclic group of order `n` with elements named `g^0 .. g^(n-1)` style
    /// names supplied by the caller.
    pub fn cyclic(n: usize, names: Vec<String>) -> Result<Self, GroupError> {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(names, table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Least index in the conjugacy class of `a`, by exhaustive conjugation.
    pub fn class_min(&self, a: usize) -> usize {
        (0..self.order())
            .map(|g| self.mul(self.mul(g, a), self.inv(g)))
            .min()
            .unwrap_or(a)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Elements of the commutator subgroup, each with one expression as a
    /// product of commutators `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator_expressions(&self) -> Vec<Option<Vec<(usize, usize)>>> {
        let k = self.order();
        let mut comms = Vec::new();
        let mut seen = BTreeSet::new();
        for x in 0..k {
            for y in 0..k {
                let c = self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)));
                if c != 0 && seen.insert(c) {
                    comms.push((c, x, y));
                }
            }
        }
        let mut expr: Vec<Option<Vec<(usize, usize)>>> = vec![None; k];
        expr[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for &(c, x, y) in &comms {
                let next = self.mul(e, c);
                if expr[next].is_none() {
                    let mut path = expr[e].clone().unwrap_or_default();
                    path.push((x, y));
                    expr[next] = Some(path);
                    queue.push_back(next);
                }
            }
        }
        expr
    }
}

/// The shape of a factor group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Trivial,
    Finite(FiniteTable),
    /// Infinite cyclic group on one generator.
    Cyclic,
    Free {
        rank: usize,
    },
}

/// One free factor of a [`MarkedGroup`](super::MarkedGroup).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorGroup {
    name: String,
    kind: FactorKind,
}

impl FactorGroup {
    pub fn new(name: impl Into<String>, kind: FactorKind) -> Self {
        Self {
            name: name.into(),
            kind,
        }
    }

    pub fn trivial() -> Self {
        Self::new("1", FactorKind::Trivial)
    }

    pub fn cyclic(name: impl Into<String>) -> Self {
        Self::new(name, FactorKind::Cyclic)
    }

    pub fn free(name: impl Into<String>, rank: usize) -> Self {
        Self::new(name, FactorKind::Free { rank })
    }

    /// Finite cyclic group `ℤ/n` with elements `e, <name>, <name>^2, ...`
    /// named `e`, `<elem>`, `<elem>2`, ... where `<elem>` is `elem_name`.
    pub fn finite_cyclic(name: impl Into<String>, n: usize, elem_name: &str) -> Self {
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => elem_name.to_string(),
                _ => format!("{elem_name}{i}"),
            })
            .collect();
        let table = FiniteTable::cyclic(n, names).expect("cyclic table is a group");
        Self::new(name, FactorKind::Finite(table))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &FactorKind {
        &self.kind
    }

    pub fn identity(&self) -> FactorElem {
        match &self.kind {
            FactorKind::Trivial | FactorKind::Finite(_) => FactorElem::Finite(0),
            FactorKind::Cyclic => FactorElem::Power(0),
            FactorKind::Free { .. } => FactorElem::Free(Vec::new()),
        }
    }

    pub fn is_identity(&self, e: &FactorElem) -> bool {
        match e {
            FactorElem::Finite(a) => *a == 0,
            FactorElem::Power(n) => *n == 0,
            FactorElem::Free(w) => w.is_empty(),
        }
    }

    /// True when `e` is a well-formed element of this factor.
    pub fn contains(&self, e: &FactorElem) -> bool {
        match (&self.kind, e) {
            (FactorKind::Trivial, FactorElem::Finite(a)) => *a == 0,
            (FactorKind::Finite(t), FactorElem::Finite(a)) => *a < t.order(),
            (FactorKind::Cyclic, FactorElem::Power(_)) => true,
            (FactorKind::Free { rank }, FactorElem::Free(w)) => {
                w.iter().all(|&(g, x)| g < *rank && x != 0)
                    && w.windows(2).all(|p| p[0].0 != p[1].0)
            }
            _ => false,
        }
    }

    pub fn mul(&self, a: &FactorElem, b: &FactorElem) -> FactorElem {
        match (&self.kind, a, b) {
            (FactorKind::Finite(t), FactorElem::Finite(x), FactorElem::Finite(y)) => {
                FactorElem::Finite(t.mul(*x, *y))
            }
            (_, FactorElem::Power(x), FactorElem::Power(y)) => FactorElem::Power(x + y),
            (_, FactorElem::Free(x), FactorElem::Free(y)) => FactorElem::Free(free_mul(x, y)),
            (FactorKind::Trivial, _, _) => FactorElem::Finite(0),
            _ => panic!("factor element kinds do not match factor {}", self.name),
        }
    }

    pub fn inv(&self, a: &FactorElem) -> FactorElem {
        match (&self.kind, a) {
            (FactorKind::Finite(t), FactorElem::Finite(x)) => FactorElem::Finite(t.inv(*x)),
            (_, FactorElem::Power(x)) => FactorElem::Power(-x),
            (_, FactorElem::Free(w)) => {
                FactorElem::Free(w.iter().rev().map(|&(g, x)| (g, -x)).collect())
            }
            _ => a.clone(),
        }
    }

    pub fn pow(&self, a: &FactorElem, k: i64) -> FactorElem {
        let base = if k < 0 { self.inv(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// Order of `a`, or `None` when infinite.
    pub fn element_order(&self, a: &FactorElem) -> Option<u64> {
        match (&self.kind, a) {
            (FactorKind::Finite(t), FactorElem::Finite(x)) => Some(t.element_order(*x)),
            _ if self.is_identity(a) => Some(1),
            _ => None,
        }
    }

    /// Canonical representative of the factor-level conjugacy class of `a`.
    ///
    /// Finite factors take the least index in the orbit; free factors take
    /// the least rotation of the cyclically reduced block word; the cyclic
    /// factor is abelian.
    pub fn class_canonical(&self, a: &FactorElem) -> FactorElem {
        match (&self.kind, a) {
            (FactorKind::Finite(t), FactorElem::Finite(x)) => FactorElem::Finite(t.class_min(*x)),
            (_, FactorElem::Free(w)) => FactorElem::Free(free_cyclic_canonical(w)),
            _ => a.clone(),
        }
    }
}

/// Product of two freely reduced block words.
pub(crate) fn free_mul(x: &[(usize, i64)], y: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut out = x.to_vec();
    for &(g, e) in y {
        match out.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

fn free_cyclic_canonical(w: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut w = w.to_vec();
    while w.len() >= 2 && w[0].0 == w[w.len() - 1].0 {
        let last = w.pop().expect("len >= 2");
        w[0].1 += last.1;
        if w[0].1 == 0 {
            w.remove(0);
        }
    }
    if w.len() < 2 {
        return w;
    }
    (0..w.len())
        .map(|r| {
            let mut rot = w[r..].to_vec();
            rot.extend_from_slice(&w[..r]);
            rot
        })
        .min()
        .expect("nonempty")
}
