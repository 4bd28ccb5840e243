//! Steinberg words, their projection to `E(Λ)`, and `W(±π)`.

use crate::group::{GroupWord, MarkedGroup};
use crate::matrix::{GRMatrix, MatrixError, MonomialDecomp};
use crate::ring::IntGroupRingElt;

/// The symbol `x_{i,j}^λ` raised to `exp = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SteinbergLetter {
    pub i: usize,
    pub j: usize,
    pub lambda: IntGroupRingElt,
    pub exp: i8,
}

impl SteinbergLetter {
    pub fn new(i: usize, j: usize, lambda: IntGroupRingElt, exp: i8) -> Result<Self, MatrixError> {
        if i == 0 || j == 0 {
            return Err(MatrixError::ZeroIndex);
        }
        if i == j {
            return Err(MatrixError::DiagonalIndex(i));
        }
        Ok(Self {
            i,
            j,
            lambda,
            exp: if exp < 0 { -1 } else { 1 },
        })
    }

    /// `x_{i,j}^λ` with exponent `+1`.
    pub fn x(i: usize, j: usize, lambda: IntGroupRingElt) -> Result<Self, MatrixError> {
        Self::new(i, j, lambda, 1)
    }

    pub fn inverse(&self) -> Self {
        Self {
            exp: -self.exp,
            ..self.clone()
        }
    }

    /// Coefficient of the elementary matrix this letter projects to.
    pub fn signed_lambda(&self) -> IntGroupRingElt {
        if self.exp < 0 {
            self.lambda.neg()
        } else {
            self.lambda.clone()
        }
    }

    fn cancels(&self, other: &Self) -> bool {
        self.i == other.i
            && self.j == other.j
            && self.lambda == other.lambda
            && self.exp == -other.exp
    }
}

/// A freely reduced word in the Steinberg generators.
///
/// Equality is equality of reduced words in the free group on the symbols,
/// which is finer than equality in the Steinberg group.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SteinbergWord {
    letters: Vec<SteinbergLetter>,
}

impl SteinbergWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(letters: impl IntoIterator<Item = SteinbergLetter>) -> Self {
        let mut w = Self::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[SteinbergLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: SteinbergLetter) {
        if self.letters.last().is_some_and(|last| last.cancels(&l)) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for l in &other.letters {
            out.push(l.clone());
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self
                .letters
                .iter()
                .rev()
                .map(SteinbergLetter::inverse)
                .collect(),
        }
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.i.max(l.j)).max().unwrap_or(0)
    }
}

impl MarkedGroup {
    /// The projection `St(Λ) → E(Λ)`, letter by letter.
    pub fn st_pi(&self, w: &SteinbergWord, size: usize) -> GRMatrix {
        let mut m = GRMatrix::identity(size.max(w.max_index()));
        for l in w.letters() {
            m.right_mul_elementary(self, l.i, l.j, &l.signed_lambda());
        }
        m
    }

    /// True when the word lies in `K₂(Λ) = ker st_pi`.
    pub fn is_k2(&self, w: &SteinbergWord) -> bool {
        self.st_pi(w, 0).is_identity()
    }

    /// Reverses the word and maps `x_{i,j}^λ ↦ x_{j,i}^{λ̄}`.
    pub fn steinberg_transpose_bar(&self, w: &SteinbergWord) -> SteinbergWord {
        SteinbergWord::new(w.letters().iter().rev().map(|l| SteinbergLetter {
            i: l.j,
            j: l.i,
            lambda: self.zring_bar(&l.lambda),
            exp: l.exp,
        }))
    }
}

/// The generator `w_{i,j}^{u} = x_{i,j}^{u} x_{j,i}^{-u⁻¹} x_{i,j}^{u}` of
/// `W(±π)`, for a unit `u = sign·g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WFactor {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
    pub g: GroupWord,
}

impl WFactor {
    pub fn new(i: usize, j: usize, sign: i8, g: GroupWord) -> Result<Self, MatrixError> {
        if i == 0 || j == 0 {
            return Err(MatrixError::ZeroIndex);
        }
        if i == j {
            return Err(MatrixError::DiagonalIndex(i));
        }
        Ok(Self {
            i,
            j,
            sign: if sign < 0 { -1 } else { 1 },
            g,
        })
    }

    /// `w_{i,j}^{-u}`, which is inverse to `w_{i,j}^{u}` in the Steinberg group.
    pub fn inverse(&self) -> Self {
        Self {
            sign: -self.sign,
            ..self.clone()
        }
    }

    pub fn to_word(&self, group: &MarkedGroup) -> SteinbergWord {
        let u = group.unit(self.sign, self.g.clone());
        let u_inv = group.unit_inverse(self.sign, &self.g);
        SteinbergWord::new([
            SteinbergLetter {
                i: self.i,
                j: self.j,
                lambda: u.clone(),
                exp: 1,
            },
            SteinbergLetter {
                i: self.j,
                j: self.i,
                lambda: u_inv.neg(),
                exp: 1,
            },
            SteinbergLetter {
                i: self.i,
                j: self.j,
                lambda: u,
                exp: 1,
            },
        ])
    }
}

/// `w_{i,j}^{±g}` as a Steinberg word.
pub fn w_word(
    group: &MarkedGroup,
    i: usize,
    j: usize,
    sign: i8,
    g: GroupWord,
) -> Result<SteinbergWord, MatrixError> {
    Ok(WFactor::new(i, j, sign, g)?.to_word(group))
}

/// Expands a product of `W` generators.
pub fn w_product(group: &MarkedGroup, factors: &[WFactor]) -> SteinbergWord {
    factors.iter().fold(SteinbergWord::empty(), |acc, f| {
        acc.concat(&f.to_word(group))
    })
}

/// Output of [`realize_monomial`]: `st_pi(factors) · residual = input`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialRealization {
    pub factors: Vec<WFactor>,
    pub residual: MonomialDecomp,
}

impl MonomialRealization {
    pub fn word(&self, group: &MarkedGroup) -> SteinbergWord {
        w_product(group, &self.factors)
    }
}

/// Writes a monomial matrix as a product of `W(±π)` generators times a
/// diagonal residual.
///
/// Columns are first moved onto the diagonal from the last index down with
/// single `w` factors. The diagonal units are then swept into index 1 by
/// `w^{a} w^{-1} = diag(a, a⁻¹)` moves. A leftover unit that is a product of
/// commutators `[x, z]` is cleared with four such moves using two padding
/// indices past the matrix. Anything else stays in the residual.
pub fn realize_monomial(group: &MarkedGroup, d: &MonomialDecomp) -> MonomialRealization {
    let n = d.size();
    let mut cur = d.clone();
    let mut moves: Vec<Vec<WFactor>> = Vec::new();

    for r in (1..=n).rev() {
        let p = (1..=n).find(|&p| cur.row(p).col == r).expect("permutation");
        if p == r {
            continue;
        }
        let e = cur.row(p);
        let f = WFactor {
            i: r,
            j: p,
            sign: e.sign,
            g: group.invert(&e.word),
        };
        apply_w(group, &mut cur, &f);
        moves.push(vec![f]);
    }

    for i in (2..=n).rev() {
        let e = cur.row(i).clone();
        if e.sign == 1 && e.word.is_identity() {
            continue;
        }
        let mv = diag_move(e.sign, group.invert(&e.word), i, 1);
        for f in mv.iter().rev() {
            apply_w(group, &mut cur, f);
        }
        moves.push(mv);
    }

    if n >= 1 {
        let y = cur.row(1).clone();
        if y.sign == 1 && !y.word.is_identity() {
            if let Some(comms) = group.commutator_decomposition(&y.word) {
                let (s1, s2) = (n + 1, n + 2);
                let mut padded = extend_identity(&cur, n + 2);
                for c in comms {
                    // left-multiplying by [z, x] = [x, z]⁻¹ peels off the first commutator
                    let mv: Vec<WFactor> = [
                        diag_move(1, c.y.clone(), 1, s1),
                        diag_move(1, c.x.clone(), 1, s2),
                        diag_move(1, group.invert(&c.y), 1, s1),
                        diag_move(1, group.invert(&c.x), 1, s2),
                    ]
                    .concat();
                    for f in mv.iter().rev() {
                        apply_w(group, &mut padded, f);
                    }
                    moves.push(mv);
                }
                debug_assert!(padded.rows()[n..]
                    .iter()
                    .enumerate()
                    .all(|(k, e)| e.col == n + 1 + k && e.sign == 1 && e.word.is_identity()));
                cur =
                    MonomialDecomp::new(padded.rows()[..n].to_vec()).expect("still a permutation");
            }
        }
    }

    let factors = moves
        .iter()
        .flat_map(|mv| mv.iter().rev().map(WFactor::inverse).collect::<Vec<_>>())
        .collect();
    MonomialRealization {
        factors,
        residual: cur,
    }
}

/// `w_{i,j}^{a} w_{i,j}^{-1}`, whose image is `diag(a at i, a⁻¹ at j)`.
fn diag_move(sign: i8, a: GroupWord, i: usize, j: usize) -> Vec<WFactor> {
    vec![
        WFactor { i, j, sign, g: a },
        WFactor {
            i,
            j,
            sign: -1,
            g: GroupWord::identity(),
        },
    ]
}

fn extend_identity(d: &MonomialDecomp, size: usize) -> MonomialDecomp {
    let mut rows = d.rows().to_vec();
    for col in d.size() + 1..=size {
        rows.push(crate::matrix::MonomialEntry {
            col,
            sign: 1,
            word: GroupWord::identity(),
        });
    }
    MonomialDecomp::new(rows).expect("padding keeps a permutation")
}

/// Left-multiplies a monomial matrix by `st_pi(w_{i,j}^{u})`, which sends
/// row `j` to `u·(row j)` at row `i` and row `i` to `-u⁻¹·(row i)` at row `j`.
fn apply_w(group: &MarkedGroup, m: &mut MonomialDecomp, f: &WFactor) {
    let ri = m.row(f.i).clone();
    let rj = m.row(f.j).clone();
    let u_inv = group.invert(&f.g);
    *m.row_mut(f.i) = crate::matrix::MonomialEntry {
        col: rj.col,
        sign: f.sign * rj.sign,
        word: group.mul(&f.g, &rj.word),
    };
    *m.row_mut(f.j) = crate::matrix::MonomialEntry {
        col: ri.col,
        sign: -f.sign * ri.sign,
        word: group.mul(&u_inv, &ri.word),
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FactorElem, FactorGroup};

    fn setup() -> (MarkedGroup, GroupWord, GroupWord) {
        let g = MarkedGroup::new(vec![
            FactorGroup::finite_cyclic("A", 2, "a"),
            FactorGroup::finite_cyclic("B", 3, "b"),
        ]);
        let a = g.syllable(0, FactorElem::Finite(1)).unwrap();
        let b = g.syllable(1, FactorElem::Finite(1)).unwrap();
        (g, a, b)
    }

    fn mono(grp: &MarkedGroup, m: &GRMatrix) -> MonomialDecomp {
        let _ = grp;
        m.monomial_decompose().unwrap()
    }

    #[test]
    fn w_image_is_antidiagonal() {
        let (grp, g, _) = setup();
        let m = grp.st_pi(&w_word(&grp, 1, 2, 1, g.clone()).unwrap(), 2);
        assert_eq!(m.get(1, 2), IntGroupRingElt::monomial(1, g.clone()));
        assert_eq!(m.get(2, 1), IntGroupRingElt::monomial(-1, grp.invert(&g)));
        assert!(m.get(1, 1).is_zero() && m.get(2, 2).is_zero());
    }

    #[test]
    fn w_product_gives_diagonal() {
        let (grp, g, _) = setup();
        let w = w_word(&grp, 1, 2, 1, g.clone())
            .unwrap()
            .concat(&w_word(&grp, 1, 2, -1, GroupWord::identity()).unwrap());
        let m = grp.st_pi(&w, 2);
        assert_eq!(m.get(1, 1), IntGroupRingElt::monomial(1, g.clone()));
        assert_eq!(m.get(2, 2), IntGroupRingElt::monomial(1, grp.invert(&g)));
        let one = w_word(&grp, 1, 2, 1, GroupWord::identity())
            .unwrap()
            .concat(&w_word(&grp, 1, 2, -1, GroupWord::identity()).unwrap());
        assert!(grp.is_k2(&one));
    }

    #[test]
    fn commutator_witness_in_k2() {
        let (grp, g, h) = setup();
        let l = IntGroupRingElt::monomial(1, g);
        let m = IntGroupRingElt::monomial(1, h);
        let w = SteinbergWord::new([
            SteinbergLetter::x(1, 2, l.clone()).unwrap(),
            SteinbergLetter::x(2, 3, m.clone()).unwrap(),
            SteinbergLetter::x(1, 2, l.neg()).unwrap(),
            SteinbergLetter::x(2, 3, m.neg()).unwrap(),
            SteinbergLetter::x(1, 3, grp.ring_mul(&l, &m).neg()).unwrap(),
        ]);
        assert!(grp.is_k2(&w));
        assert!(!grp.is_k2(&SteinbergWord::new([SteinbergLetter::x(1, 2, l).unwrap()])));
        assert!(grp.is_k2(&SteinbergWord::empty()));
    }

    #[test]
    fn free_reduction_cancels_inverse_letters() {
        let (_, g, _) = setup();
        let x = SteinbergLetter::x(1, 2, IntGroupRingElt::monomial(1, g)).unwrap();
        let w = SteinbergWord::new([x.clone(), x.inverse()]);
        assert!(w.is_empty());
    }

    #[test]
    fn realize_diagonal_and_transposition() {
        let (grp, g, _) = setup();
        let mut m = GRMatrix::identity(2);
        m.set(1, 1, IntGroupRingElt::monomial(1, g.clone()));
        m.set(2, 2, IntGroupRingElt::monomial(1, grp.invert(&g)));
        let r = realize_monomial(&grp, &mono(&grp, &m));
        assert!(r.residual.is_identity());
        assert_eq!(grp.st_pi(&r.word(&grp), 2), m);

        let t = grp.st_pi(&w_word(&grp, 1, 2, 1, g).unwrap(), 2);
        let r = realize_monomial(&grp, &mono(&grp, &t));
        assert!(r.residual.is_identity());
        assert_eq!(grp.st_pi(&r.word(&grp), 2), t);
    }

    #[test]
    fn commutator_residual_is_cleared() {
        let (grp, a, b) = setup();
        let ab = grp.mul(&a, &b);
        let ba = grp.mul(&b, &a);
        let ab_inv = grp.mul(&a, &grp.invert(&b));
        let mut m = GRMatrix::identity(3);
        m.set(1, 1, IntGroupRingElt::monomial(1, ab));
        m.set(2, 2, IntGroupRingElt::monomial(1, ba));
        m.set(
            3,
            3,
            IntGroupRingElt::monomial(1, grp.mul(&ab_inv, &ab_inv)),
        );
        let r = realize_monomial(&grp, &mono(&grp, &m));
        assert!(r.residual.is_identity(), "{:?}", r.residual);
        assert_eq!(grp.st_pi(&r.word(&grp), 3), m);
    }

    #[test]
    fn noncommutator_unit_left_in_residual() {
        let (grp, g, _) = setup();
        let mut m = GRMatrix::identity(2);
        m.set(2, 2, IntGroupRingElt::monomial(1, g.clone()));
        let r = realize_monomial(&grp, &mono(&grp, &m));
        assert!(!r.residual.is_identity());
        assert_eq!(
            grp.st_pi(&r.word(&grp), 2)
                .mul(&grp, &r.residual.reassemble()),
            m
        );
    }

    #[test]
    fn transpose_bar_matches_matrices() {
        let (grp, g, h) = setup();
        let w = SteinbergWord::new([
            SteinbergLetter::x(1, 2, IntGroupRingElt::monomial(1, g.clone())).unwrap(),
            SteinbergLetter::new(3, 1, IntGroupRingElt::from_terms([(h, 2), (g, -1)]), -1).unwrap(),
        ]);
        let lhs = grp.st_pi(&grp.steinberg_transpose_bar(&w), 3);
        let rhs = grp.st_pi(&w, 3).transpose_bar(&grp);
        assert_eq!(lhs, rhs);
        assert_eq!(
            grp.steinberg_transpose_bar(&grp.steinberg_transpose_bar(&w)),
            w
        );
    }
}
