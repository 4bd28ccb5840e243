//! `Wh₁(π; ℤ₂ × Γ)` through the trace isomorphism, the matrix layer
//! `GL(Γ[π])`, `Wh₂` representatives, and the `q` map with its span
//! quotients.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::group::{ConjClassRep, MarkedGroup};
use crate::lattice;
use crate::ring::{CharacteristicData, CoeffVariant, GammaElt, IntGroupRingElt, RElement};
use crate::steinberg::SteinbergWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhiteheadError {
    #[error("word times inverse correction is not in K2")]
    NotK2,
    #[error("a chi span is declared but the context says k1 = 0")]
    ChiWithK1Zero,
    #[error("matrix index must be positive and the two indices distinct")]
    BadIndex,
}

/// A coefficient `(m, n)` in `ℤ₂ × ℤ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassCoeff {
    pub m: bool,
    pub n: i64,
}

impl ClassCoeff {
    pub fn new(m: bool, n: i64) -> Self {
        Self { m, n }
    }

    pub fn is_zero(&self) -> bool {
        !self.m && self.n == 0
    }
}

impl std::ops::Add for ClassCoeff {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self {
            m: self.m ^ o.m,
            n: self.n + o.n,
        }
    }
}

impl std::ops::Neg for ClassCoeff {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            m: self.m,
            n: -self.n,
        }
    }
}

type ClassMap = BTreeMap<ConjClassRep, ClassCoeff>;

fn add_into(map: &mut ClassMap, c: ConjClassRep, v: ClassCoeff) {
    if v.is_zero() {
        return;
    }
    let sum = map.remove(&c).unwrap_or_default() + v;
    if !sum.is_zero() {
        map.insert(c, sum);
    }
}

/// Canonical form of a class in `Wh₁(π; ℤ₂ × Γ)`.
///
/// One `(ℤ₂, ℤ)` coefficient per nontrivial conjugacy class, with the `ℤ`
/// part the augmentation of the `Γ` coefficient. For trivial coefficients
/// this is the exact normal form; for the free-module system it is the image
/// under `q`, and `exact` is false.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Wh1Element {
    terms: ClassMap,
    exact: bool,
}

impl Wh1Element {
    pub fn zero(exact: bool) -> Self {
        Self {
            terms: ClassMap::new(),
            exact,
        }
    }

    pub fn terms(&self) -> &BTreeMap<ConjClassRep, ClassCoeff> {
        &self.terms
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, c: &ConjClassRep) -> ClassCoeff {
        self.terms.get(c).copied().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (c, v) in &o.terms {
            add_into(&mut terms, c.clone(), *v);
        }
        Self {
            terms,
            exact: self.exact && o.exact,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(c, v)| (c.clone(), -*v)).collect(),
            exact: self.exact,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Multiplies by `±1`.
    pub fn signed(&self, sign: i8) -> Self {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Element of `⊕ (ℤ₂ × ℤ)` over nontrivial conjugacy classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QImageElement {
    terms: ClassMap,
}

impl QImageElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ConjClassRep, ClassCoeff)>) -> Self {
        let mut map = ClassMap::new();
        for (c, v) in terms {
            if !c.is_identity() {
                add_into(&mut map, c, v);
            }
        }
        Self { terms: map }
    }

    pub fn terms(&self) -> &BTreeMap<ConjClassRep, ClassCoeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, c: &ConjClassRep) -> ClassCoeff {
        self.terms.get(c).copied().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_terms(self.terms.clone().into_iter().chain(o.terms.clone()))
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(c, v)| (c.clone(), -*v)))
    }
}

/// A matrix `I + A` in `GL(Γ[π])`, stored through `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Wh1Matrix {
    size: usize,
    off_identity: BTreeMap<(usize, usize), GammaElt>,
}

impl Wh1Matrix {
    pub fn identity(size: usize) -> Self {
        Self {
            size,
            off_identity: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry `A_{i,j}` of the off-identity part.
    pub fn get(&self, i: usize, j: usize) -> GammaElt {
        self.off_identity.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: GammaElt) {
        self.size = self.size.max(i).max(j);
        if v.is_zero() {
            self.off_identity.remove(&(i, j));
        } else {
            self.off_identity.insert((i, j), v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &GammaElt) {
        let sum = self.get(i, j).add(v);
        self.set(i, j, sum);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GammaElt)> {
        self.off_identity.iter()
    }

    /// `(I + A)⁻¹ = I − A`, because products in `Γ[π]` vanish.
    pub fn inverse(&self) -> Self {
        Self {
            size: self.size,
            off_identity: self
                .off_identity
                .iter()
                .map(|(k, v)| (*k, v.neg()))
                .collect(),
        }
    }

    /// `(I + A)(I + B) = I + A + B`.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), v) in &o.off_identity {
            out.add_at(i, j, v);
        }
        out
    }
}

/// A `K₂` representative: `st_pi(word · w_correction⁻¹) = I` holds for every
/// value of this type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wh2Element {
    word: SteinbergWord,
    w_correction: SteinbergWord,
}

impl Wh2Element {
    pub fn new(
        group: &MarkedGroup,
        word: SteinbergWord,
        w_correction: SteinbergWord,
    ) -> Result<Self, WhiteheadError> {
        if !group.is_k2(&word.concat(&w_correction.inverse())) {
            return Err(WhiteheadError::NotK2);
        }
        Ok(Self { word, w_correction })
    }

    pub fn trivial() -> Self {
        Self {
            word: SteinbergWord::empty(),
            w_correction: SteinbergWord::empty(),
        }
    }

    pub fn word(&self) -> &SteinbergWord {
        &self.word
    }

    pub fn w_correction(&self) -> &SteinbergWord {
        &self.w_correction
    }

    /// The combined `K₂` word `word · w_correction⁻¹`.
    pub fn k2_word(&self) -> SteinbergWord {
        self.word.concat(&self.w_correction.inverse())
    }

    /// Applies the transpose-bar involution to both words.
    pub fn transpose_bar(&self, group: &MarkedGroup) -> Self {
        Self {
            word: group.steinberg_transpose_bar(&self.word),
            w_correction: group.steinberg_transpose_bar(&self.w_correction),
        }
    }
}

impl CharacteristicData {
    fn exact(&self) -> bool {
        self.coeffs.variant == CoeffVariant::TrivialZ
    }

    /// Sums coefficients over conjugacy classes, dropping the identity
    /// class.
    pub fn wh1_canonicalize(&self, x: &GammaElt) -> Wh1Element {
        let mut terms = ClassMap::new();
        for (g, c) in x.terms() {
            let class = self.group.conj_class_rep(g);
            if class.is_identity() {
                continue;
            }
            add_into(
                &mut terms,
                class,
                ClassCoeff::new(c.s, c.sigma.augmentation()),
            );
        }
        Wh1Element {
            terms,
            exact: self.exact(),
        }
    }

    /// The involution on canonical forms:
    /// `(m, n)S ↦ (m + n·w2, −w1(S)·n) S̄`.
    pub fn wh1_bar(&self, x: &Wh1Element) -> Wh1Element {
        let mut terms = ClassMap::new();
        for (c, v) in &x.terms {
            add_into(
                &mut terms,
                self.group.class_inverse(c),
                self.bar_coeff(c, *v),
            );
        }
        Wh1Element {
            terms,
            exact: x.exact,
        }
    }

    fn bar_coeff(&self, c: &ConjClassRep, v: ClassCoeff) -> ClassCoeff {
        let w1 = i64::from(self.group.w1(c.word()));
        let w2 = self.coeffs.w2_bit && v.n.rem_euclid(2) == 1;
        ClassCoeff::new(v.m ^ w2, -w1 * v.n)
    }

    /// `d_i(x) = x − (−1)^i x̄`.
    pub fn d_map(&self, i: u32, x: &Wh1Element) -> Wh1Element {
        let bar = self.wh1_bar(x);
        if i.is_multiple_of(2) {
            x.sub(&bar)
        } else {
            x.add(&bar)
        }
    }

    /// Membership in `Z_i = ker d_i`.
    pub fn in_z(&self, i: u32, x: &Wh1Element) -> bool {
        self.d_map(i, x).is_zero()
    }

    /// Canonical class of `Σ Aᵢᵢ`.
    pub fn trace_to_wh1(&self, m: &Wh1Matrix) -> Wh1Element {
        let mut diag = GammaElt::zero();
        for (&(i, j), v) in m.entries() {
            if i == j {
                diag = diag.add(v);
            }
        }
        self.wh1_canonicalize(&diag)
    }

    /// `E(I + A)E⁻¹` for the elementary matrix `E = e_{i,j}^r` of `GL(R)`.
    pub fn elementary_conjugate(
        &self,
        m: &Wh1Matrix,
        i: usize,
        j: usize,
        r: &RElement,
    ) -> Result<Wh1Matrix, WhiteheadError> {
        if i == 0 || j == 0 || i == j {
            return Err(WhiteheadError::BadIndex);
        }
        let n = m.size().max(i).max(j);
        // E A E⁻¹ = (I + rE_ij) A (I − rE_ij) expanded row and column wise
        let mut ea: BTreeMap<(usize, usize), GammaElt> = BTreeMap::new();
        for (&(a, b), v) in m.entries() {
            let e = ea.entry((a, b)).or_default();
            *e = e.add(v);
            if a == j {
                let prod = self.r_mul(r, &RElement::from_gamma(v.clone())).gamma;
                let e = ea.entry((i, b)).or_default();
                *e = e.add(&prod);
            }
        }
        let mut out = Wh1Matrix::identity(n);
        for ((a, b), v) in ea {
            out.add_at(a, b, &v);
            if b == i {
                let prod = self.r_mul(&RElement::from_gamma(v.clone()), r).gamma;
                out.add_at(a, j, &prod.neg());
            }
        }
        Ok(out)
    }

    /// `q(m, σ)a = (m, aug σ) Cl(a)` on canonical forms.
    pub fn q(&self, x: &Wh1Element) -> QImageElement {
        QImageElement {
            terms: x.terms.clone(),
        }
    }

    /// Bar involution on the `q`-image.
    pub fn q_bar(&self, x: &QImageElement) -> QImageElement {
        QImageElement::from_terms(
            x.terms
                .iter()
                .map(|(c, v)| (self.group.class_inverse(c), self.bar_coeff(c, *v))),
        )
    }

    /// Coset representative modulo `⟨(m,n)S + (m,−n)S̄, (m,0)P : P = P̄⟩`.
    ///
    /// A pair `{S, S̄}` is folded onto the smaller class: the first generator
    /// family gives `(m, k)S̄ ≡ (m, k)S`. A self-inverse class keeps only its
    /// `ℤ` part.
    pub fn q_span_reduce(&self, x: &QImageElement) -> QImageElement {
        QImageElement::from_terms(x.terms.iter().map(|(c, v)| {
            let inv = self.group.class_inverse(c);
            match inv.cmp(c) {
                std::cmp::Ordering::Equal => (c.clone(), ClassCoeff::new(false, v.n)),
                std::cmp::Ordering::Less => (inv, *v),
                std::cmp::Ordering::Greater => (c.clone(), *v),
            }
        }))
    }

    /// The declared span `q(χ) ∪ q(χ̄)`.
    pub fn chi_hat_generators(&self) -> Vec<QImageElement> {
        self.chi_span
            .iter()
            .flat_map(|chi| {
                let c = self.wh1_canonicalize(chi);
                [self.q(&c), self.q(&self.wh1_bar(&c))]
            })
            .collect()
    }

    /// Representative modulo the integer span of `q(χ̂)`.
    pub fn chi_hat_reduce(&self, x: &QImageElement) -> Result<QImageElement, WhiteheadError> {
        if self.chi_span.is_empty() {
            return Ok(x.clone());
        }
        if self.k1_zero {
            return Err(WhiteheadError::ChiWithK1Zero);
        }
        let gens = self.chi_hat_generators();
        Ok(reduce_modulo(x, &gens))
    }
}

/// Coordinates `(m, n)` per class for the classes in `support`.
fn coordinates(x: &QImageElement, support: &[ConjClassRep]) -> Vec<i128> {
    support
        .iter()
        .flat_map(|c| {
            let v = x.coefficient(c);
            [i128::from(v.m), i128::from(v.n)]
        })
        .collect()
}

fn support_of<'a>(xs: impl IntoIterator<Item = &'a QImageElement>) -> Vec<ConjClassRep> {
    let set: BTreeSet<ConjClassRep> = xs
        .into_iter()
        .flat_map(|x| x.terms.keys().cloned())
        .collect();
    set.into_iter().collect()
}

/// Reduces `x` modulo the integer span of `gens` in `⊕(ℤ₂ × ℤ)`.
pub fn reduce_modulo(x: &QImageElement, gens: &[QImageElement]) -> QImageElement {
    let support = support_of(gens.iter().chain(std::iter::once(x)));
    let width = 2 * support.len();
    let mut rows: Vec<Vec<i128>> = gens.iter().map(|g| coordinates(g, &support)).collect();
    for k in 0..support.len() {
        let mut r = vec![0; width];
        r[2 * k] = 2;
        rows.push(r);
    }
    let basis = lattice::hermite(&rows);
    let v = lattice::reduce(&coordinates(x, &support), &basis);
    QImageElement::from_terms(support.into_iter().enumerate().map(|(k, c)| {
        let m = v[2 * k].rem_euclid(2) == 1;
        let n = i64::try_from(v[2 * k + 1]).expect("reduced coordinate fits in i64");
        (c, ClassCoeff::new(m, n))
    }))
}

/// Rank over `ℚ` of the `ℤ` components of `xs`.
pub fn integer_rank(xs: &[QImageElement]) -> usize {
    let support = support_of(xs);
    let rows: Vec<Vec<i128>> = xs
        .iter()
        .map(|x| {
            support
                .iter()
                .map(|c| i128::from(x.coefficient(c).n))
                .collect()
        })
        .collect();
    lattice::rank(&rows)
}

/// Rank of `family` in the quotient by `span`: `rank(F ∪ L) − rank(L)`.
pub fn quotient_rank(family: &[QImageElement], span: &[QImageElement]) -> usize {
    let all: Vec<QImageElement> = family.iter().chain(span).cloned().collect();
    integer_rank(&all) - integer_rank(span)
}

/// The realisability condition `w2(σ) ≠ 0 or s = 0`.
pub fn xi_gate(ctx: &CharacteristicData, sigma: &IntGroupRingElt, s: bool) -> bool {
    ctx.w2(sigma) || !s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FactorElem, FactorGroup, GroupWord};
    use crate::ring::{CoeffSystem, Wh1Coefficient};

    fn t_pow(ctx: &CharacteristicData, a: i64) -> GroupWord {
        ctx.group.syllable(0, FactorElem::Power(a)).unwrap()
    }

    fn raw(ctx: &CharacteristicData, s: bool, n: i64, a: i64) -> GammaElt {
        GammaElt::monomial(
            Wh1Coefficient::new(s, IntGroupRingElt::integer(n)),
            t_pow(ctx, a),
        )
    }

    #[test]
    fn identity_class_vanishes() {
        let ctx = CharacteristicData::circle();
        assert!(ctx.wh1_canonicalize(&raw(&ctx, true, 5, 0)).is_zero());
    }

    #[test]
    fn bar_over_circle() {
        let ctx = CharacteristicData::circle();
        let x = ctx.wh1_canonicalize(&raw(&ctx, true, 3, 2));
        let b = ctx.wh1_bar(&x);
        assert_eq!(b, ctx.wh1_canonicalize(&raw(&ctx, true, -3, -2)));
        assert!(!ctx.in_z(4, &ctx.wh1_canonicalize(&raw(&ctx, false, 1, 1))));
        let y = x.add(&b);
        assert!(ctx.in_z(4, &y));
        assert!(ctx.in_z(5, &x.sub(&b)));
    }

    #[test]
    fn span_generators_die() {
        let ctx = CharacteristicData::circle();
        let x = ctx.q(&ctx.wh1_canonicalize(&raw(&ctx, true, 4, 3)));
        let xbar = ctx.q_bar(&x);
        assert!(ctx.q_span_reduce(&x.add(&xbar)).is_zero());
        let once = ctx.q_span_reduce(&x);
        assert_eq!(ctx.q_span_reduce(&once), once);
    }

    #[test]
    fn self_inverse_class_drops_z2() {
        let grp = MarkedGroup::new(vec![
            FactorGroup::finite_cyclic("A", 2, "a"),
            FactorGroup::finite_cyclic("B", 3, "b"),
        ]);
        let a = grp.syllable(0, FactorElem::Finite(1)).unwrap();
        let ctx = CharacteristicData::new(
            grp.clone(),
            CoeffSystem {
                variant: CoeffVariant::FreeModule,
                w2_bit: false,
            },
        );
        let p = grp.conj_class_rep(&a);
        let x = QImageElement::from_terms([(p.clone(), ClassCoeff::new(true, 0))]);
        assert!(ctx.q_span_reduce(&x).is_zero());
        let y = QImageElement::from_terms([(p.clone(), ClassCoeff::new(true, 2))]);
        assert_eq!(
            ctx.q_span_reduce(&y).coefficient(&p),
            ClassCoeff::new(false, 2)
        );
    }

    #[test]
    fn chi_hat_kills_declared_span() {
        let mut ctx = CharacteristicData::circle();
        let chi = raw(&ctx, true, 2, 1).add(&raw(&ctx, false, 1, 3));
        ctx.chi_span = vec![chi.clone()];
        let x = ctx.q(&ctx.wh1_canonicalize(&chi));
        assert_eq!(ctx.chi_hat_reduce(&x), Err(WhiteheadError::ChiWithK1Zero));
        ctx.k1_zero = false;
        assert!(ctx.chi_hat_reduce(&x).unwrap().is_zero());
        let bar = ctx.q_bar(&x);
        assert!(ctx.chi_hat_reduce(&bar).unwrap().is_zero());
    }

    #[test]
    fn matrix_inverse_and_trace() {
        let ctx = CharacteristicData::circle();
        let mut m = Wh1Matrix::identity(2);
        m.set(1, 1, raw(&ctx, true, 2, 1));
        m.set(1, 2, raw(&ctx, false, 1, 2));
        assert_eq!(m.mul(&m.inverse()), Wh1Matrix::identity(2));
        assert_eq!(
            ctx.trace_to_wh1(&m),
            ctx.wh1_canonicalize(&raw(&ctx, true, 2, 1))
        );
        assert!(ctx.trace_to_wh1(&Wh1Matrix::identity(3)).is_zero());
    }

    #[test]
    fn gate() {
        let mut ctx = CharacteristicData::circle();
        let one = IntGroupRingElt::integer(1);
        assert!(xi_gate(&ctx, &one, false));
        assert!(!xi_gate(&ctx, &one, true));
        ctx.coeffs.w2_bit = true;
        assert!(xi_gate(&ctx, &one, true));
        assert!(!xi_gate(&ctx, &IntGroupRingElt::integer(2), true));
    }
}
