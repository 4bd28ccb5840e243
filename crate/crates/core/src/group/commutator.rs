//! Writing elements of the commutator subgroup as products of commutators.

use super::{FactorElem, FactorKind, GroupWord, MarkedGroup};

/// The commutator `[x, y] = x y x⁻¹ y⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Commutator {
    pub x: GroupWord,
    pub y: GroupWord,
}

type Key = (usize, usize);

impl MarkedGroup {
    /// Expresses `u` as an ordered product of commutators, or returns `None`
    /// when `u` is not in the commutator subgroup.
    ///
    /// Letters are sorted by factor (and generator, in free factors) with
    /// adjacent swaps; each swap `s p q t → s q p t` splits off the conjugate
    /// commutator `[s p s⁻¹, s q s⁻¹]`. The sorted remainder must be trivial
    /// in every abelian factor and lie in the derived subgroup of every
    /// finite factor.
    pub fn commutator_decomposition(&self, u: &GroupWord) -> Option<Vec<Commutator>> {
        let mut atoms: Vec<(Key, usize, FactorElem)> = Vec::new();
        for s in u.syllables() {
            match &s.elem {
                FactorElem::Free(blocks) => {
                    for &(g, e) in blocks {
                        atoms.push(((s.factor, g), s.factor, FactorElem::Free(vec![(g, e)])));
                    }
                }
                other => atoms.push(((s.factor, 0), s.factor, other.clone())),
            }
        }

        let mut out = Vec::new();
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 0..atoms.len().saturating_sub(1) {
                if atoms[i].0 > atoms[i + 1].0 {
                    let prefix = self.atoms_word(&atoms[..i]);
                    let p = self.atoms_word(&atoms[i..i + 1]);
                    let q = self.atoms_word(&atoms[i + 1..i + 2]);
                    out.push(Commutator {
                        x: self.conjugate(&prefix, &p),
                        y: self.conjugate(&prefix, &q),
                    });
                    atoms.swap(i, i + 1);
                    swapped = true;
                }
            }
        }

        let mut i = 0;
        while i < atoms.len() {
            let (key, factor) = (atoms[i].0, atoms[i].1);
            let f = &self.factors()[factor];
            let mut prod = f.identity();
            while i < atoms.len() && atoms[i].0 == key {
                prod = f.mul(&prod, &atoms[i].2);
                i += 1;
            }
            if f.is_identity(&prod) {
                continue;
            }
            let FactorKind::Finite(table) = f.kind() else {
                return None;
            };
            let FactorElem::Finite(idx) = prod else {
                return None;
            };
            let expr = table.commutator_expressions().swap_remove(idx)?;
            for (x, y) in expr {
                out.push(Commutator {
                    x: self.syllable(factor, FactorElem::Finite(x)).ok()?,
                    y: self.syllable(factor, FactorElem::Finite(y)).ok()?,
                });
            }
        }
        Some(out)
    }

    fn atoms_word(&self, atoms: &[(Key, usize, FactorElem)]) -> GroupWord {
        atoms.iter().fold(GroupWord::identity(), |acc, (_, f, e)| {
            let s = self
                .syllable(*f, e.clone())
                .expect("atom from a valid word");
            self.mul(&acc, &s)
        })
    }
}
