//! Marked groups: free products of elementary factors with an orientation
//! character.

mod commutator;
mod conjugacy;
mod factor;
mod word;

pub use commutator::Commutator;
pub use conjugacy::{ClassFamily, ConjClassRep};
pub use factor::{FactorElem, FactorGroup, FactorKind, FiniteTable};
pub use word::{GroupWord, Syllable};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("bad multiplication table: {0}")]
    BadTable(String),
    #[error("factor index {index} out of range for a group with {count} factors")]
    FactorIndex { index: usize, count: usize },
    #[error("element is not a valid member of factor {factor}")]
    BadElement { factor: usize },
    #[error("word is not in alternating normal form")]
    NotNormal,
    #[error("orientation character does not extend to a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("orientation value for {0} must be +1 or -1")]
    BadSign(String),
    #[error("the identity class has no alternating length")]
    IdentityClass,
    #[error("{0} must be a single nonidentity syllable")]
    NotSyllable(&'static str),
    #[error("both elements lie in factor {0}")]
    SameFactor(usize),
}

/// A free product of factor groups together with an orientation character
/// `w1: π → {±1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGroup {
    factors: Vec<FactorGroup>,
    /// Per factor: one sign per element (finite), per generator (free), or
    /// a single sign for the generator (cyclic); trivial factors store `[1]`.
    w1: Vec<Vec<i8>>,
}

impl MarkedGroup {
    /// Builds the group with trivial orientation character.
    pub fn new(factors: Vec<FactorGroup>) -> Self {
        let w1 = factors
            .iter()
            .map(|f| match f.kind() {
                FactorKind::Trivial | FactorKind::Cyclic => vec![1],
                FactorKind::Finite(t) => vec![1; t.order()],
                FactorKind::Free { rank } => vec![1; *rank],
            })
            .collect();
        Self { factors, w1 }
    }

    /// The infinite cyclic group `⟨t⟩`.
    pub fn infinite_cyclic(name: &str) -> Self {
        Self::new(vec![FactorGroup::cyclic(name)])
    }

    /// Sets `w1` on generators and extends it to a homomorphism.
    ///
    /// Each assignment is `(factor, generator, sign)`. For finite factors
    /// the generator is an element index and values on the rest of the
    /// factor follow from multiplicativity (unconstrained elements default
    /// to `+1`); the result is then checked on every product.
    pub fn with_w1(mut self, assignments: &[(usize, usize, i8)]) -> Result<Self, GroupError> {
        let n = self.factors.len();
        let mut finite_seeds: Vec<Vec<(usize, i8)>> = vec![Vec::new(); n];
        for &(f, g, s) in assignments {
            if s != 1 && s != -1 {
                return Err(GroupError::BadSign(format!("factor {f} generator {g}")));
            }
            let factor = self.factor(f)?;
            match factor.kind() {
                FactorKind::Trivial => {
                    if s != 1 {
                        return Err(GroupError::NotHomomorphism(
                            "the trivial group has w1 = +1".into(),
                        ));
                    }
                }
                FactorKind::Cyclic => {
                    if g != 0 {
                        return Err(GroupError::BadElement { factor: f });
                    }
                    self.w1[f][0] = s;
                }
                FactorKind::Free { rank } => {
                    if g >= *rank {
                        return Err(GroupError::BadElement { factor: f });
                    }
                    self.w1[f][g] = s;
                }
                FactorKind::Finite(t) => {
                    if g >= t.order() {
                        return Err(GroupError::BadElement { factor: f });
                    }
                    finite_seeds[f].push((g, s));
                }
            }
        }
        for (f, seeds) in finite_seeds.into_iter().enumerate() {
            if let FactorKind::Finite(t) = self.factors[f].kind() {
                self.w1[f] = extend_finite_w1(t, &seeds)?;
            }
        }
        Ok(self)
    }

    pub fn factors(&self) -> &[FactorGroup] {
        &self.factors
    }

    pub fn factor(&self, index: usize) -> Result<&FactorGroup, GroupError> {
        self.factors.get(index).ok_or(GroupError::FactorIndex {
            index,
            count: self.factors.len(),
        })
    }

    /// True when `w1` is identically `+1`.
    pub fn is_orientable(&self) -> bool {
        self.w1.iter().flatten().all(|&s| s == 1)
    }

    /// Orientation value of a single factor element.
    pub fn w1_elem(&self, factor: usize, e: &FactorElem) -> i8 {
        let table = &self.w1[factor];
        match e {
            FactorElem::Finite(a) => table.get(*a).copied().unwrap_or(1),
            FactorElem::Power(k) => {
                if table[0] == -1 && k.rem_euclid(2) == 1 {
                    -1
                } else {
                    1
                }
            }
            FactorElem::Free(w) => w
                .iter()
                .filter(|&&(g, x)| table[g] == -1 && x.rem_euclid(2) == 1)
                .fold(1, |acc, _| -acc),
        }
    }

    /// The orientation character, a homomorphism `π → {±1}`.
    pub fn w1(&self, u: &GroupWord) -> i8 {
        u.syllables()
            .iter()
            .fold(1, |acc, s| acc * self.w1_elem(s.factor, &s.elem))
    }

    /// Checks that `u` is a well-formed alternating word over this group.
    pub fn check_word(&self, u: &GroupWord) -> Result<(), GroupError> {
        for s in u.syllables() {
            let f = self.factor(s.factor)?;
            if !f.contains(&s.elem) {
                return Err(GroupError::BadElement { factor: s.factor });
            }
            if f.is_identity(&s.elem) {
                return Err(GroupError::NotNormal);
            }
        }
        if u.syllables().windows(2).any(|p| p[0].factor == p[1].factor) {
            return Err(GroupError::NotNormal);
        }
        Ok(())
    }

    /// The word consisting of one factor element (empty when it is the
    /// identity).
    pub fn syllable(&self, factor: usize, elem: FactorElem) -> Result<GroupWord, GroupError> {
        let f = self.factor(factor)?;
        if !f.contains(&elem) {
            return Err(GroupError::BadElement { factor });
        }
        if f.is_identity(&elem) {
            return Ok(GroupWord::identity());
        }
        Ok(GroupWord::from_syllables_unchecked(vec![Syllable {
            factor,
            elem,
        }]))
    }

    /// Builds a normal-form word from arbitrary factor elements, multiplying
    /// them left to right.
    pub fn word_from_parts(
        &self,
        parts: Vec<(usize, FactorElem)>,
    ) -> Result<GroupWord, GroupError> {
        let mut acc = GroupWord::identity();
        for (f, e) in parts {
            let s = self.syllable(f, e)?;
            acc = self.mul(&acc, &s);
        }
        Ok(acc)
    }

    /// Product in normal form, after checking both words belong to this
    /// group.
    pub fn multiply(&self, u: &GroupWord, v: &GroupWord) -> Result<GroupWord, GroupError> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(self.mul(u, v))
    }

    /// Product of two words already known to be over this group.
    ///
    /// # Panics
    /// If a syllable names a factor outside the group.
    pub fn mul(&self, u: &GroupWord, v: &GroupWord) -> GroupWord {
        let mut out: Vec<Syllable> = u.syllables().to_vec();
        for s in v.syllables() {
            match out.last() {
                Some(last) if last.factor == s.factor => {
                    let f = &self.factors[s.factor];
                    let prod = f.mul(&last.elem, &s.elem);
                    out.pop();
                    if !f.is_identity(&prod) {
                        out.push(Syllable {
                            factor: s.factor,
                            elem: prod,
                        });
                    }
                }
                _ => out.push(s.clone()),
            }
        }
        GroupWord::from_syllables_unchecked(out)
    }

    pub fn invert(&self, u: &GroupWord) -> GroupWord {
        let syl = u
            .syllables()
            .iter()
            .rev()
            .map(|s| Syllable {
                factor: s.factor,
                elem: self.factors[s.factor].inv(&s.elem),
            })
            .collect();
        GroupWord::from_syllables_unchecked(syl)
    }

    pub fn pow(&self, u: &GroupWord, k: i64) -> GroupWord {
        let base = if k < 0 { self.invert(u) } else { u.clone() };
        let mut acc = GroupWord::identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// `r u r⁻¹`.
    pub fn conjugate(&self, r: &GroupWord, u: &GroupWord) -> GroupWord {
        self.mul(&self.mul(r, u), &self.invert(r))
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: &GroupWord, y: &GroupWord) -> GroupWord {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(&xy, &self.invert(&yx))
    }
}

fn extend_finite_w1(t: &FiniteTable, seeds: &[(usize, i8)]) -> Result<Vec<i8>, GroupError> {
    let k = t.order();
    let mut val: Vec<Option<i8>> = vec![None; k];
    val[0] = Some(1);
    let mut pending: Vec<(usize, i8)> = seeds.to_vec();
    loop {
        for (g, s) in pending.drain(..) {
            match val[g] {
                Some(v) if v != s => {
                    return Err(GroupError::NotHomomorphism(format!(
                        "element {} forced to both signs",
                        t.names()[g]
                    )))
                }
                _ => val[g] = Some(s),
            }
        }
        // close under products
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..k {
                for b in 0..k {
                    if let (Some(x), Some(y)) = (val[a], val[b]) {
                        let ab = t.mul(a, b);
                        match val[ab] {
                            None => {
                                val[ab] = Some(x * y);
                                changed = true;
                            }
                            Some(z) if z != x * y => {
                                return Err(GroupError::NotHomomorphism(format!(
                                    "w1({}) conflicts with w1({})·w1({})",
                                    t.names()[ab],
                                    t.names()[a],
                                    t.names()[b]
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        match val.iter().position(Option::is_none) {
            Some(g) => pending.push((g, 1)),
            None => break,
        }
    }
    Ok(val.into_iter().map(|v| v.unwrap_or(1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn z2_z3() -> MarkedGroup {
        MarkedGroup::new(vec![
            FactorGroup::finite_cyclic("A", 2, "a"),
            FactorGroup::finite_cyclic("B", 3, "b"),
        ])
    }

    #[test]
    fn multiply_cancels_at_junction() {
        let g = z2_z3();
        let a = g.syllable(0, FactorElem::Finite(1)).unwrap();
        let b = g.syllable(1, FactorElem::Finite(1)).unwrap();
        let ab = g.mul(&a, &b);
        assert_eq!(g.mul(&ab, &ab).len(), 4);
        assert!(g.mul(&a, &a).is_identity());
        let abab_inv = g.invert(&g.mul(&ab, &ab));
        assert!(g.mul(&g.mul(&ab, &ab), &abab_inv).is_identity());
    }

    #[test]
    fn cyclic_exponents_add() {
        let g = MarkedGroup::infinite_cyclic("t");
        let t2 = g.syllable(0, FactorElem::Power(2)).unwrap();
        let t3 = g.syllable(0, FactorElem::Power(3)).unwrap();
        assert_eq!(
            g.mul(&t2, &t3),
            g.syllable(0, FactorElem::Power(5)).unwrap()
        );
    }

    #[test]
    fn w1_on_finite_factor_extends() {
        let g = MarkedGroup::new(vec![FactorGroup::finite_cyclic("A", 4, "a")])
            .with_w1(&[(0, 1, -1)])
            .unwrap();
        assert_eq!(g.w1_elem(0, &FactorElem::Finite(2)), 1);
        assert_eq!(g.w1_elem(0, &FactorElem::Finite(3)), -1);
    }

    #[test]
    fn w1_odd_order_rejected() {
        let g = MarkedGroup::new(vec![FactorGroup::finite_cyclic("B", 3, "b")]);
        assert!(matches!(
            g.with_w1(&[(0, 1, -1)]),
            Err(GroupError::NotHomomorphism(_))
        ));
    }

    #[test]
    fn w1_square_is_positive() {
        let g = MarkedGroup::infinite_cyclic("t")
            .with_w1(&[(0, 0, -1)])
            .unwrap();
        let t = g.syllable(0, FactorElem::Power(1)).unwrap();
        assert_eq!(g.w1(&t), -1);
        assert_eq!(g.w1(&g.mul(&t, &t)), 1);
        assert_eq!(g.w1(&GroupWord::identity()), 1);
    }

    #[test]
    fn multiply_rejects_foreign_word() {
        let g = MarkedGroup::infinite_cyclic("t");
        let h = z2_z3();
        let b = h.syllable(1, FactorElem::Finite(1)).unwrap();
        assert!(matches!(
            g.multiply(&b, &b),
            Err(GroupError::FactorIndex { .. })
        ));
    }
}
