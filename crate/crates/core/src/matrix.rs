//! Square matrices over `ℤ[π]` with stable padding.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::group::{GroupWord, MarkedGroup};
use crate::ring::IntGroupRingElt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} of the matrix is not a single unit ±g")]
    NotMonomialRow { row: usize },
    #[error("column {col} holds more than one nonzero entry")]
    NotMonomialColumn { col: usize },
    #[error("elementary matrix needs distinct indices, got ({0}, {0})")]
    DiagonalIndex(usize),
    #[error("matrix indices start at 1")]
    ZeroIndex,
}

/// A matrix over `ℤ[π]` understood as an element of `GL(Λ) = lim GLₙ(Λ)`.
///
/// Indices are 1-based. Entries not stored are those of the identity, so
/// `M` and `M ⊕ I` compare equal. Stored off-diagonal entries are nonzero
/// and stored diagonal entries differ from 1.
#[derive(Clone, Debug, Default)]
pub struct GRMatrix {
    size: usize,
    entries: BTreeMap<(usize, usize), IntGroupRingElt>,
}

impl PartialEq for GRMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for GRMatrix {}

impl GRMatrix {
    pub fn identity(size: usize) -> Self {
        Self {
            size,
            entries: BTreeMap::new(),
        }
    }

    /// `e_{i,j}^λ`: the identity plus `λ` at `(i, j)`.
    pub fn elementary(i: usize, j: usize, lambda: IntGroupRingElt) -> Result<Self, MatrixError> {
        if i == 0 || j == 0 {
            return Err(MatrixError::ZeroIndex);
        }
        if i == j {
            return Err(MatrixError::DiagonalIndex(i));
        }
        let mut m = Self::identity(i.max(j));
        m.set(i, j, lambda);
        Ok(m)
    }

    /// Nominal size; any larger size describes the same matrix.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> IntGroupRingElt {
        match self.entries.get(&(i, j)) {
            Some(v) => v.clone(),
            None if i == j => IntGroupRingElt::one(),
            None => IntGroupRingElt::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: IntGroupRingElt) {
        self.size = self.size.max(i).max(j);
        let default = if i == j { v.is_one() } else { v.is_zero() };
        if default {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Entries differing from the identity.
    pub fn stored(&self) -> impl Iterator<Item = (&(usize, usize), &IntGroupRingElt)> {
        self.entries.iter()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mat_eq(&self, other: &Self) -> bool {
        self == other
    }

    pub fn mul(&self, group: &MarkedGroup, other: &Self) -> Self {
        let n = self.size.max(other.size);
        let mut out = Self::identity(n);
        for i in 1..=n {
            for k in 1..=n {
                let mut acc = IntGroupRingElt::zero();
                for j in 1..=n {
                    let a = self.get(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(j, k);
                    if !b.is_zero() {
                        acc = acc.add(&group.ring_mul(&a, &b));
                    }
                }
                out.set(i, k, acc);
            }
        }
        out
    }

    /// `self · e_{i,j}^λ`: adds column `i` times `λ` to column `j`.
    pub fn right_mul_elementary(
        &mut self,
        group: &MarkedGroup,
        i: usize,
        j: usize,
        lambda: &IntGroupRingElt,
    ) {
        let n = self.size.max(i).max(j);
        for r in 1..=n {
            let a = self.get(r, i);
            if !a.is_zero() {
                let v = self.get(r, j).add(&group.ring_mul(&a, lambda));
                self.set(r, j, v);
            }
        }
        self.size = n;
    }

    /// `e_{i,j}^λ · self`: adds `λ` times row `j` to row `i`.
    pub fn left_mul_elementary(
        &mut self,
        group: &MarkedGroup,
        i: usize,
        j: usize,
        lambda: &IntGroupRingElt,
    ) {
        let n = self.size.max(i).max(j);
        for c in 1..=n {
            let b = self.get(j, c);
            if !b.is_zero() {
                let v = self.get(i, c).add(&group.ring_mul(lambda, &b));
                self.set(i, c, v);
            }
        }
        self.size = n;
    }

    /// Transpose with `zring_bar` applied entrywise.
    pub fn transpose_bar(&self, group: &MarkedGroup) -> Self {
        let mut out = Self::identity(self.size);
        for (&(i, j), v) in &self.entries {
            out.set(j, i, group.zring_bar(v));
        }
        out
    }

    /// Splits a monomial matrix into its permutation and unit entries.
    pub fn monomial_decompose(&self) -> Result<MonomialDecomp, MatrixError> {
        let n = self.size;
        let mut rows = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        for i in 1..=n {
            let mut found = None;
            for (j, seen) in used.iter_mut().enumerate().skip(1) {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let unit = v.as_unit().ok_or(MatrixError::NotMonomialRow { row: i })?;
                if found.is_some() {
                    return Err(MatrixError::NotMonomialRow { row: i });
                }
                if *seen {
                    return Err(MatrixError::NotMonomialColumn { col: j });
                }
                *seen = true;
                found = Some(MonomialEntry {
                    col: j,
                    sign: unit.0,
                    word: unit.1,
                });
            }
            rows.push(found.ok_or(MatrixError::NotMonomialRow { row: i })?);
        }
        Ok(MonomialDecomp { rows })
    }
}

/// The single nonzero entry `sign·word` of a row, in column `col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialEntry {
    pub col: usize,
    pub sign: i8,
    pub word: GroupWord,
}

/// A monomial matrix `P·D`: row `i` (1-based) holds `rows[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialDecomp {
    rows: Vec<MonomialEntry>,
}

impl MonomialDecomp {
    pub fn identity(size: usize) -> Self {
        Self {
            rows: (1..=size)
                .map(|col| MonomialEntry {
                    col,
                    sign: 1,
                    word: GroupWord::identity(),
                })
                .collect(),
        }
    }

    /// Builds a decomposition from row entries, checking that the columns
    /// form a permutation.
    pub fn new(rows: Vec<MonomialEntry>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let mut used = vec![false; n + 1];
        for e in &rows {
            if e.col == 0 || e.col > n || used[e.col] {
                return Err(MatrixError::NotMonomialColumn { col: e.col });
            }
            if e.sign != 1 && e.sign != -1 {
                return Err(MatrixError::NotMonomialColumn { col: e.col });
            }
            used[e.col] = true;
        }
        Ok(Self { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[MonomialEntry] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &MonomialEntry {
        &self.rows[i - 1]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut MonomialEntry {
        &mut self.rows[i - 1]
    }

    /// Permutation as a map row → column.
    pub fn permutation(&self) -> Vec<usize> {
        self.rows.iter().map(|e| e.col).collect()
    }

    /// True when the diagonal entries are all exactly `+1`.
    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, e)| e.col == i + 1 && e.sign == 1 && e.word.is_identity())
    }

    pub fn reassemble(&self) -> GRMatrix {
        let mut m = GRMatrix::identity(self.rows.len());
        for (i, e) in self.rows.iter().enumerate() {
            if e.col != i + 1 {
                m.set(i + 1, i + 1, IntGroupRingElt::zero());
            }
        }
        for (i, e) in self.rows.iter().enumerate() {
            m.set(
                i + 1,
                e.col,
                IntGroupRingElt::monomial(i64::from(e.sign), e.word.clone()),
            );
        }
        m
    }
}
