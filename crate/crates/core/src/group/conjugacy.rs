//! Conjugacy classes in free products.

use super::{GroupError, GroupWord, MarkedGroup, Syllable};

/// Canonical representative of a conjugacy class.
///
/// The word is cyclically reduced. For two or more syllables it is the
/// lexicographically least rotation (syllables compare by factor index, then
/// element); a single syllable is canonical within its factor. Ordering and
/// equality of representatives are those of the underlying word, so the word
/// doubles as the ordering tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjClassRep {
    word: GroupWord,
}

impl ConjClassRep {
    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_identity()
    }
}

/// Representatives of `(ab)^1 .. (ab)^count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFamily {
    pub classes: Vec<ConjClassRep>,
    /// True when `a` or `b` has order other than two, in which case the
    /// family is also disjoint from its inverse family.
    pub inverse_separated: bool,
}

impl MarkedGroup {
    /// Conjugates the ends of `u` together until its first and last
    /// syllables lie in distinct factors (or it has at most one syllable).
    pub fn cyclic_reduce(&self, u: &GroupWord) -> GroupWord {
        let mut s: Vec<Syllable> = u.syllables().to_vec();
        while s.len() >= 2 && s[0].factor == s[s.len() - 1].factor {
            let last = s.pop().expect("len >= 2");
            let f = &self.factors()[last.factor];
            let merged = f.mul(&last.elem, &s[0].elem);
            if f.is_identity(&merged) {
                s.remove(0);
            } else {
                s[0].elem = merged;
            }
        }
        GroupWord::from_syllables_unchecked(s)
    }

    pub fn conj_class_rep(&self, u: &GroupWord) -> ConjClassRep {
        let red = self.cyclic_reduce(u);
        let s = red.syllables();
        let word = match s.len() {
            0 => red,
            1 => {
                let f = &self.factors()[s[0].factor];
                GroupWord::from_syllables_unchecked(vec![Syllable {
                    factor: s[0].factor,
                    elem: f.class_canonical(&s[0].elem),
                }])
            }
            n => {
                let best = (0..n)
                    .map(|r| {
                        let mut rot = s[r..].to_vec();
                        rot.extend_from_slice(&s[..r]);
                        rot
                    })
                    .min()
                    .expect("nonempty");
                GroupWord::from_syllables_unchecked(best)
            }
        };
        ConjClassRep { word }
    }

    pub fn are_conjugate(&self, u: &GroupWord, v: &GroupWord) -> bool {
        self.conj_class_rep(u) == self.conj_class_rep(v)
    }

    /// Class of the inverse elements.
    pub fn class_inverse(&self, c: &ConjClassRep) -> ConjClassRep {
        self.conj_class_rep(&self.invert(&c.word))
    }

    /// Syllable count of the cyclically reduced representative.
    pub fn alternating_length(&self, c: &ConjClassRep) -> Result<usize, GroupError> {
        if c.is_identity() {
            return Err(GroupError::IdentityClass);
        }
        Ok(c.word.len())
    }

    /// Classes of `(ab)^n` for `n = 1..=count`.
    pub fn distinct_class_family(
        &self,
        a: &GroupWord,
        b: &GroupWord,
        count: usize,
    ) -> Result<ClassFamily, GroupError> {
        self.check_word(a)?;
        self.check_word(b)?;
        if a.len() != 1 {
            return Err(GroupError::NotSyllable("a"));
        }
        if b.len() != 1 {
            return Err(GroupError::NotSyllable("b"));
        }
        let (sa, sb) = (&a.syllables()[0], &b.syllables()[0]);
        if sa.factor == sb.factor {
            return Err(GroupError::SameFactor(sa.factor));
        }
        let ab = self.mul(a, b);
        let classes = (1..=count as i64)
            .map(|n| self.conj_class_rep(&self.pow(&ab, n)))
            .collect();
        let order = |s: &Syllable| self.factors()[s.factor].element_order(&s.elem);
        let inverse_separated = order(sa) != Some(2) || order(sb) != Some(2);
        Ok(ClassFamily {
            classes,
            inverse_separated,
        })
    }
}
