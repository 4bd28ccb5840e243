use super::FactorElem;

/// A nonidentity element of one factor, tagged with the factor index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub factor: usize,
    pub elem: FactorElem,
}

/// An element of a free product in alternating normal form.
///
/// Adjacent syllables lie in distinct factors and no syllable is an
/// identity. The empty word is the group identity. Words are built through
/// [`MarkedGroup`](super::MarkedGroup), which maintains the normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    syllables: Vec<Syllable>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub(crate) fn from_syllables_unchecked(syllables: Vec<Syllable>) -> Self {
        Self { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Syllable count.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }
}
