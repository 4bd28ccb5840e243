//! Group rings `ℤ[π]`, coefficient systems `Γ`, the ring `R = Γ[π] ⊕ ℤ[π]`
//! and their involutions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::group::{GroupError, GroupWord, MarkedGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(
        "coefficient {0} is not an integer: the trivial-Z system has no group-ring coefficients"
    )]
    NotInteger(String),
}

/// An element of `ℤ[π]`: a finite map from words to nonzero integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntGroupRingElt {
    terms: BTreeMap<GroupWord, i64>,
}

impl IntGroupRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::monomial(n, GroupWord::identity())
    }

    pub fn monomial(coef: i64, g: GroupWord) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(g, coef);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupWord, i64)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&GroupWord::identity()) == Some(&1)
    }

    pub fn coefficient(&self, g: &GroupWord) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, g: GroupWord, c: i64) {
        if c == 0 {
            return;
        }
        let sum = self.terms.get(&g).copied().unwrap_or(0) + c;
        if sum == 0 {
            self.terms.remove(&g);
        } else {
            self.terms.insert(g, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, c)| (g.clone(), c * k)))
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    /// The integer `n` when this element is `n·1`.
    pub fn as_integer(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&GroupWord::identity()).copied(),
            _ => None,
        }
    }

    /// `(±1, g)` when this element is a unit `±g`.
    pub fn as_unit(&self) -> Option<(i8, GroupWord)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (g, c) = self.terms.iter().next()?;
        match c {
            1 => Some((1, g.clone())),
            -1 => Some((-1, g.clone())),
            _ => None,
        }
    }
}

impl MarkedGroup {
    /// Convolution product in `ℤ[π]`.
    pub fn ring_mul(&self, x: &IntGroupRingElt, y: &IntGroupRingElt) -> IntGroupRingElt {
        let mut out = IntGroupRingElt::zero();
        for (g, a) in x.terms() {
            for (h, b) in y.terms() {
                out.add_term(self.mul(g, h), a * b);
            }
        }
        out
    }

    pub fn ring_add(&self, x: &IntGroupRingElt, y: &IntGroupRingElt) -> IntGroupRingElt {
        x.add(y)
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, g: &GroupWord, x: &IntGroupRingElt) -> IntGroupRingElt {
        IntGroupRingElt::from_terms(x.terms().iter().map(|(h, c)| (self.mul(g, h), *c)))
    }

    /// The involution `γ ↦ w1(γ) γ⁻¹`, extended additively.
    pub fn zring_bar(&self, x: &IntGroupRingElt) -> IntGroupRingElt {
        IntGroupRingElt::from_terms(
            x.terms()
                .iter()
                .map(|(g, c)| (self.invert(g), c * i64::from(self.w1(g)))),
        )
    }

    /// Unit `s·g` as a ring element.
    pub fn unit(&self, sign: i8, g: GroupWord) -> IntGroupRingElt {
        IntGroupRingElt::monomial(i64::from(sign), g)
    }

    pub fn unit_inverse(&self, sign: i8, g: &GroupWord) -> IntGroupRingElt {
        IntGroupRingElt::monomial(i64::from(sign), self.invert(g))
    }

    pub fn check_elt(&self, x: &IntGroupRingElt) -> Result<(), GroupError> {
        x.terms().keys().try_for_each(|g| self.check_word(g))
    }
}

/// The two coefficient systems: `Γ = ℤ` with trivial action, or
/// `Γ = ℤ[π]` acted on by left multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoeffVariant {
    TrivialZ,
    FreeModule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoeffSystem {
    pub variant: CoeffVariant,
    /// `w2` on the generator of the module basis.
    pub w2_bit: bool,
}

/// An element `(s, σ)` of `ℤ₂ × Γ`.
///
/// `σ` is stored as a group-ring element in both variants; for the trivial
/// system it is supported on the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wh1Coefficient {
    pub s: bool,
    pub sigma: IntGroupRingElt,
}

impl Wh1Coefficient {
    pub fn new(s: bool, sigma: IntGroupRingElt) -> Self {
        Self { s, sigma }
    }

    pub fn is_zero(&self) -> bool {
        !self.s && self.sigma.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            s: self.s ^ other.s,
            sigma: self.sigma.add(&other.sigma),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            s: self.s,
            sigma: self.sigma.neg(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            s: self.s && k % 2 != 0,
            sigma: self.sigma.scale(k),
        }
    }
}

/// An element of `Γ[π]` with coefficients in `ℤ₂ × Γ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaElt {
    terms: BTreeMap<GroupWord, Wh1Coefficient>,
}

impl GammaElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: Wh1Coefficient, g: GroupWord) -> Self {
        let mut out = Self::zero();
        out.add_term(g, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupWord, Wh1Coefficient)>) -> Self {
        let mut out = Self::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<GroupWord, Wh1Coefficient> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: GroupWord, c: Wh1Coefficient) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&g) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(g, c)| (g.clone(), c.neg())))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// An element of `R = Γ[π] ⊕ ℤ[π]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RElement {
    pub gamma: GammaElt,
    pub z: IntGroupRingElt,
}

impl RElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self {
            gamma: GammaElt::zero(),
            z: IntGroupRingElt::one(),
        }
    }

    pub fn from_gamma(gamma: GammaElt) -> Self {
        Self {
            gamma,
            z: IntGroupRingElt::zero(),
        }
    }

    pub fn from_z(z: IntGroupRingElt) -> Self {
        Self {
            gamma: GammaElt::zero(),
            z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            gamma: self.gamma.add(&other.gamma),
            z: self.z.add(&other.z),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            gamma: self.gamma.neg(),
            z: self.z.neg(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// The group, its coefficient system and the declared obstruction data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicData {
    pub group: MarkedGroup,
    pub coeffs: CoeffSystem,
    /// Declared vanishing of the first k-invariant.
    pub k1_zero: bool,
    /// Declared generators of `χ(K₃)`, as raw elements of `Γ[π]`.
    pub chi_span: Vec<GammaElt>,
}

impl CharacteristicData {
    pub fn new(group: MarkedGroup, coeffs: CoeffSystem) -> Self {
        Self {
            group,
            coeffs,
            k1_zero: true,
            chi_span: Vec::new(),
        }
    }

    /// `⟨t⟩` with trivial coefficients and trivial characteristic classes.
    pub fn circle() -> Self {
        Self::new(
            MarkedGroup::infinite_cyclic("t"),
            CoeffSystem {
                variant: CoeffVariant::TrivialZ,
                w2_bit: false,
            },
        )
    }

    /// `w2(σ) = aug(σ)·w2_bit mod 2`.
    pub fn w2(&self, sigma: &IntGroupRingElt) -> bool {
        self.coeffs.w2_bit && sigma.augmentation().rem_euclid(2) == 1
    }

    /// The action `σ ↦ σ^g` of `π` on `Γ`.
    pub fn act(&self, sigma: &IntGroupRingElt, g: &GroupWord) -> IntGroupRingElt {
        match self.coeffs.variant {
            CoeffVariant::TrivialZ => sigma.clone(),
            CoeffVariant::FreeModule => self.group.left_mul(g, sigma),
        }
    }

    /// Checks that `σ` lies in `Γ` for this coefficient system.
    pub fn check_sigma(&self, sigma: &IntGroupRingElt) -> Result<(), RingError> {
        self.group.check_elt(sigma)?;
        if self.coeffs.variant == CoeffVariant::TrivialZ && sigma.as_integer().is_none() {
            return Err(RingError::NotInteger(format!("{sigma:?}")));
        }
        Ok(())
    }

    pub fn check_gamma(&self, x: &GammaElt) -> Result<(), RingError> {
        for (g, c) in x.terms() {
            self.group.check_word(g)?;
            self.check_sigma(&c.sigma)?;
        }
        Ok(())
    }

    fn act_coeff(&self, c: &Wh1Coefficient, g: &GroupWord) -> Wh1Coefficient {
        Wh1Coefficient {
            s: c.s,
            sigma: self.act(&c.sigma, g),
        }
    }

    /// Product in `R`:
    /// `(Σ(αᵢ+nᵢ)σᵢ)(Σ(βⱼ+mⱼ)τⱼ) = Σ(nᵢβⱼ^{σᵢ} + mⱼαᵢ + nᵢmⱼ)σᵢτⱼ`.
    pub fn r_mul(&self, x: &RElement, y: &RElement) -> RElement {
        let g = &self.group;
        let mut gamma = GammaElt::zero();
        for (sigma, alpha) in x.gamma.terms() {
            for (tau, m) in y.z.terms() {
                gamma.add_term(g.mul(sigma, tau), alpha.scale(*m));
            }
        }
        for (sigma, n) in x.z.terms() {
            for (tau, beta) in y.gamma.terms() {
                gamma.add_term(g.mul(sigma, tau), self.act_coeff(beta, sigma).scale(*n));
            }
        }
        RElement {
            gamma,
            z: g.ring_mul(&x.z, &y.z),
        }
    }

    /// `(s, σ)γ ↦ (s + w2(σ), −w1(γ) σ^{γ⁻¹}) γ⁻¹`.
    pub fn coeff_bar_term(
        &self,
        c: &Wh1Coefficient,
        gamma: &GroupWord,
    ) -> (Wh1Coefficient, GroupWord) {
        let inv = self.group.invert(gamma);
        let w1 = i64::from(self.group.w1(gamma));
        let sigma = self.act(&c.sigma, &inv).scale(-w1);
        (
            Wh1Coefficient {
                s: c.s ^ self.w2(&c.sigma),
                sigma,
            },
            inv,
        )
    }

    /// Termwise [`coeff_bar_term`](Self::coeff_bar_term).
    pub fn coeff_bar(&self, x: &GammaElt) -> GammaElt {
        GammaElt::from_terms(x.terms().iter().map(|(g, c)| {
            let (c2, g2) = self.coeff_bar_term(c, g);
            (g2, c2)
        }))
    }
}
