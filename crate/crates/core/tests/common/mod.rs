//! Fixtures, random generators and brute-force oracles shared by the
//! integration tests. The oracles avoid the library's normal-form code and
//! go through the factor tables only.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use pseudoisotopy::group::{FactorElem, FactorGroup, FactorKind, GroupWord, MarkedGroup, Syllable};
use pseudoisotopy::matrix::GRMatrix;
use pseudoisotopy::ring::{
    CharacteristicData, CoeffSystem, CoeffVariant, GammaElt, IntGroupRingElt, RElement,
    Wh1Coefficient,
};
use pseudoisotopy::schedule::{Event, Schedule};
use pseudoisotopy::steinberg::{w_product, SteinbergLetter, SteinbergWord, WFactor};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn z2z3() -> MarkedGroup {
    MarkedGroup::new(vec![
        FactorGroup::finite_cyclic("A", 2, "a"),
        FactorGroup::finite_cyclic("B", 3, "b"),
    ])
}

pub fn z2z2() -> MarkedGroup {
    MarkedGroup::new(vec![
        FactorGroup::finite_cyclic("A", 2, "a"),
        FactorGroup::finite_cyclic("B", 2, "b"),
    ])
}

/// `ℤ ∗ ℤ` as two infinite cyclic factors.
pub fn zz() -> MarkedGroup {
    MarkedGroup::new(vec![FactorGroup::cyclic("a"), FactorGroup::cyclic("b")])
}

/// The free group of rank two as a single factor.
pub fn f2() -> MarkedGroup {
    MarkedGroup::new(vec![FactorGroup::free("x", 2)])
}

pub fn ctx(group: MarkedGroup, variant: CoeffVariant, w2_bit: bool) -> Arc<CharacteristicData> {
    Arc::new(CharacteristicData::new(
        group,
        CoeffSystem { variant, w2_bit },
    ))
}

pub fn circle() -> Arc<CharacteristicData> {
    Arc::new(CharacteristicData::circle())
}

/// The two contexts used for the random family checks.
pub fn family_contexts() -> Vec<Arc<CharacteristicData>> {
    let nonorientable = z2z3().with_w1(&[(0, 1, -1)]).unwrap();
    vec![circle(), ctx(nonorientable, CoeffVariant::TrivialZ, false)]
}

/// Generator `idx` of factor `f`: a table element of a finite factor, `t^idx`
/// of a cyclic one.
pub fn gen(g: &MarkedGroup, f: usize, idx: i64) -> GroupWord {
    let e = match g.factors()[f].kind() {
        FactorKind::Finite(_) => FactorElem::Finite(idx as usize),
        FactorKind::Cyclic => FactorElem::Power(idx),
        FactorKind::Free { .. } => FactorElem::Free(vec![(idx as usize, 1)]),
        FactorKind::Trivial => return GroupWord::identity(),
    };
    g.syllable(f, e).unwrap()
}

/// `(ab)^n` for the first non-identity element of each of two factors.
pub fn ab_power(g: &MarkedGroup, n: i64) -> GroupWord {
    let ab = g.mul(&gen(g, 0, 1), &gen(g, 1, 1));
    g.pow(&ab, n)
}

pub fn random_elem(rng: &mut impl Rng, f: &FactorGroup) -> FactorElem {
    match f.kind() {
        FactorKind::Trivial => FactorElem::Finite(0),
        FactorKind::Finite(t) => FactorElem::Finite(rng.random_range(1..t.order())),
        FactorKind::Cyclic => {
            let k = rng.random_range(1..=3i64);
            FactorElem::Power(if rng.random_bool(0.5) { k } else { -k })
        }
        FactorKind::Free { rank } => {
            let g = rng.random_range(0..*rank);
            FactorElem::Free(vec![(g, if rng.random_bool(0.5) { 1 } else { -1 })])
        }
    }
}

/// A product of up to `len` random factor elements, so cancellation happens.
pub fn random_word(rng: &mut impl Rng, g: &MarkedGroup, len: usize) -> GroupWord {
    let n = rng.random_range(0..=len);
    let parts = (0..n)
        .map(|_| {
            let f = rng.random_range(0..g.factors().len());
            (f, random_elem(rng, &g.factors()[f]))
        })
        .collect();
    g.word_from_parts(parts).unwrap()
}

pub fn random_nontrivial_word(rng: &mut impl Rng, g: &MarkedGroup, len: usize) -> GroupWord {
    loop {
        let w = random_word(rng, g, len);
        if !w.is_identity() {
            return w;
        }
    }
}

pub fn random_ring(
    rng: &mut impl Rng,
    g: &MarkedGroup,
    terms: usize,
    len: usize,
) -> IntGroupRingElt {
    let n = rng.random_range(0..=terms);
    IntGroupRingElt::from_terms(
        (0..n).map(|_| (random_word(rng, g, len), rng.random_range(-3..=3))),
    )
}

/// σ suitable for the context: an integer for trivial-ℤ, a ring element for
/// the free module.
pub fn random_sigma(rng: &mut impl Rng, c: &CharacteristicData) -> IntGroupRingElt {
    match c.coeffs.variant {
        CoeffVariant::TrivialZ => IntGroupRingElt::integer(rng.random_range(-3..=3)),
        CoeffVariant::FreeModule => random_ring(rng, &c.group, 2, 3),
    }
}

pub fn random_gamma(
    rng: &mut impl Rng,
    c: &CharacteristicData,
    terms: usize,
    len: usize,
) -> GammaElt {
    let n = rng.random_range(0..=terms);
    GammaElt::from_terms((0..n).map(|_| {
        let coef = Wh1Coefficient::new(rng.random_bool(0.5), random_sigma(rng, c));
        (random_word(rng, &c.group, len), coef)
    }))
}

pub fn random_r(rng: &mut impl Rng, c: &CharacteristicData, terms: usize) -> RElement {
    RElement {
        gamma: random_gamma(rng, c, terms, 3),
        z: random_ring(rng, &c.group, terms, 3),
    }
}

/// Concatenates the syllables and rewrites adjacent same-factor pairs until
/// none remain.
pub fn oracle_mul(g: &MarkedGroup, u: &GroupWord, v: &GroupWord) -> Vec<Syllable> {
    let mut w: Vec<Syllable> = u.syllables().iter().chain(v.syllables()).cloned().collect();
    loop {
        let Some(p) = w.windows(2).position(|p| p[0].factor == p[1].factor) else {
            return w;
        };
        let f = &g.factors()[w[p].factor];
        let prod = f.mul(&w[p].elem, &w[p + 1].elem);
        w.remove(p + 1);
        if f.is_identity(&prod) {
            w.remove(p);
        } else {
            w[p].elem = prod;
        }
    }
}

/// Every reduced word of alternating length at most `max_len`. Cyclic
/// factors contribute the exponents in `exps`.
pub fn all_words(g: &MarkedGroup, max_len: usize, exps: &[i64]) -> Vec<GroupWord> {
    let letters: Vec<Vec<GroupWord>> = (0..g.factors().len())
        .map(|f| match g.factors()[f].kind() {
            FactorKind::Finite(t) => (1..t.order()).map(|i| gen(g, f, i as i64)).collect(),
            FactorKind::Cyclic => exps.iter().map(|&k| gen(g, f, k)).collect(),
            _ => panic!("enumeration needs finite or cyclic factors"),
        })
        .collect();
    let mut out = vec![GroupWord::identity()];
    let mut frontier: Vec<(GroupWord, Option<usize>)> = vec![(GroupWord::identity(), None)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, last) in &frontier {
            for (f, ls) in letters.iter().enumerate() {
                if Some(f) == *last {
                    continue;
                }
                for l in ls {
                    next.push((g.mul(w, l), Some(f)));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

/// All conjugates `r u r⁻¹` over the given conjugators.
pub fn conjugate_set(
    g: &MarkedGroup,
    u: &GroupWord,
    conjugators: &[GroupWord],
) -> HashSet<GroupWord> {
    conjugators.iter().map(|r| g.conjugate(r, u)).collect()
}

pub fn brute_conjugate(
    g: &MarkedGroup,
    u: &GroupWord,
    v: &GroupWord,
    conjugators: &[GroupWord],
) -> bool {
    conjugators.iter().any(|r| &g.conjugate(r, u) == v)
}

/// Per-class accumulation over `⟨t⟩` straight from the exponents: `a ↦ (m, n)`
/// with the identity class dropped.
pub fn circle_accumulate(raw: &[(i64, bool, i64)]) -> BTreeMap<i64, (bool, i64)> {
    let mut out: BTreeMap<i64, (bool, i64)> = BTreeMap::new();
    for &(a, s, n) in raw {
        if a == 0 {
            continue;
        }
        let e = out.entry(a).or_insert((false, 0));
        e.0 ^= s;
        e.1 += n;
    }
    out.retain(|_, v| v.0 || v.1 != 0);
    out
}

pub fn power_of(w: &GroupWord) -> i64 {
    match w.syllables() {
        [] => 0,
        [s] => match s.elem {
            FactorElem::Power(k) => k,
            _ => panic!("not a power of t"),
        },
        _ => panic!("not a power of t"),
    }
}

pub fn t(c: &CharacteristicData, a: i64) -> GroupWord {
    c.group.syllable(0, FactorElem::Power(a)).unwrap()
}

/// A random eye family on `pairs` handle pairs with up to `circles` circles,
/// fingers first and whitney moves in random order.
pub fn random_eye(
    rng: &mut impl Rng,
    c: &Arc<CharacteristicData>,
    pairs: usize,
    circles: usize,
    dim: u32,
) -> Schedule {
    let mut ev: Vec<Event> = (1..=pairs).map(|label| Event::Birth { label }).collect();
    let n = rng.random_range(0..=circles);
    let mut whitneys = Vec::new();
    for id in 1..=n {
        let i = rng.random_range(1..=pairs);
        let j = rng.random_range(1..=pairs);
        ev.push(Event::Finger {
            id,
            i,
            j,
            gamma: random_word(rng, &c.group, 4),
        });
        whitneys.push(Event::Whitney {
            id,
            sigma: random_sigma(rng, c),
            s: rng.random_bool(0.5),
        });
    }
    for k in (1..whitneys.len()).rev() {
        whitneys.swap(k, rng.random_range(0..=k));
    }
    ev.extend(whitneys);
    ev.extend((1..=pairs).map(|k| Event::Death {
        upper: k,
        lower: k,
        sign: 1,
        path: GroupWord::identity(),
    }));
    Schedule {
        dimension: dim,
        ..Schedule::with_events(c.clone(), ev)
    }
}

/// `{±1, ±g, ±h, g+h}` for `g = a`, `h = b`.
pub fn relation_coefficients(g: &MarkedGroup) -> Vec<IntGroupRingElt> {
    let a = gen(g, 0, 1);
    let b = gen(g, 1, 1);
    vec![
        IntGroupRingElt::integer(1),
        IntGroupRingElt::integer(-1),
        IntGroupRingElt::monomial(1, a.clone()),
        IntGroupRingElt::monomial(-1, a.clone()),
        IntGroupRingElt::monomial(1, b.clone()),
        IntGroupRingElt::monomial(-1, b.clone()),
        IntGroupRingElt::from_terms([(a, 1), (b, 1)]),
    ]
}

fn letter(i: usize, j: usize, l: &IntGroupRingElt, exp: i8) -> Option<SteinbergLetter> {
    (!l.is_zero()).then(|| SteinbergLetter::new(i, j, l.clone(), exp).unwrap())
}

/// Witness words, one per instance of the three Steinberg relations:
/// `x^λ x^μ (x^{λ+μ})⁻¹`, `[x_ij^λ, x_jk^μ] (x_ik^{λμ})⁻¹` and
/// `[x_ij^λ, x_kl^μ]` with `j ≠ k`, `i ≠ l`.
pub fn relation_witnesses(
    g: &MarkedGroup,
    indices: &[usize],
    coeffs: &[IntGroupRingElt],
) -> Vec<SteinbergWord> {
    let pairs: Vec<(usize, usize)> = indices
        .iter()
        .flat_map(|&i| {
            indices
                .iter()
                .filter(move |&&j| j != i)
                .map(move |&j| (i, j))
        })
        .collect();
    let mut out = Vec::new();
    let comm = |x: SteinbergLetter, y: SteinbergLetter| {
        vec![x.clone(), y.clone(), x.inverse(), y.inverse()]
    };
    for &(i, j) in &pairs {
        for l in coeffs {
            for m in coeffs {
                let sum = l.add(m);
                out.push(SteinbergWord::new(
                    [
                        letter(i, j, l, 1),
                        letter(i, j, m, 1),
                        letter(i, j, &sum, -1),
                    ]
                    .into_iter()
                    .flatten(),
                ));
                for &(k, q) in &pairs {
                    let (x, y) = (letter(i, j, l, 1).unwrap(), letter(k, q, m, 1).unwrap());
                    if k == j && q != i {
                        let prod = g.ring_mul(l, m);
                        let mut w = comm(x, y);
                        w.extend(letter(i, q, &prod, -1));
                        out.push(SteinbergWord::new(w));
                    } else if j != k && i != q {
                        out.push(SteinbergWord::new(comm(x, y)));
                    }
                }
            }
        }
    }
    out
}

/// A random product of `W` generators on indices `1..=n`.
pub fn random_w_product(
    rng: &mut impl Rng,
    g: &MarkedGroup,
    n: usize,
    factors: usize,
) -> Vec<WFactor> {
    (0..rng.random_range(0..=factors))
        .map(|_| {
            let i = rng.random_range(1..=n);
            let mut j = rng.random_range(1..n);
            if j >= i {
                j += 1;
            }
            let sign = if rng.random_bool(0.5) { 1 } else { -1 };
            WFactor::new(i, j, sign, random_word(rng, g, 3)).unwrap()
        })
        .collect()
}

/// Upper slides spelling a random `W` product on labels `offset+1 ..= offset+n`,
/// without births or deaths.
pub fn w_slides(
    rng: &mut impl Rng,
    g: &MarkedGroup,
    n: usize,
    factors: usize,
    offset: usize,
) -> Vec<Event> {
    let fs = random_w_product(rng, g, n, factors);
    w_product(g, &fs)
        .letters()
        .iter()
        .map(|l| {
            let (sign, w) = l.lambda.as_unit().expect("W letters carry units");
            Event::SlideUpper {
                j: l.i + offset,
                k: l.j + offset,
                sign: sign * l.exp,
                g: w,
            }
        })
        .collect()
}

/// Deaths read off the monomial matrix `m`, shifted by `offset`.
pub fn deaths_of(m: &GRMatrix, offset: usize) -> Vec<Event> {
    let d = m.monomial_decompose().expect("monomial");
    d.rows()
        .iter()
        .enumerate()
        .map(|(r, e)| Event::Death {
            upper: r + 1 + offset,
            lower: e.col + offset,
            sign: e.sign,
            path: e.word.clone(),
        })
        .collect()
}

/// A complete schedule whose slides form a random `W` product.
pub fn random_w_schedule(
    rng: &mut impl Rng,
    c: &Arc<CharacteristicData>,
    n: usize,
    factors: usize,
) -> Schedule {
    let slides = w_slides(rng, &c.group, n, factors, 0);
    let mut events: Vec<Event> = (1..=n).map(|label| Event::Birth { label }).collect();
    events.extend(slides);
    let m = evolve_final(c, &events, n);
    events.extend(deaths_of(&m, 0));
    Schedule::with_events(c.clone(), events)
}

/// Boundary matrix after the slides, multiplied out with full matrix products.
pub fn evolve_final(c: &CharacteristicData, events: &[Event], n: usize) -> GRMatrix {
    let g = &c.group;
    events.iter().fold(GRMatrix::identity(n), |m, e| match e {
        Event::SlideUpper { j, k, sign, g: w } => m.mul(
            g,
            &GRMatrix::elementary(*j, *k, g.unit(*sign, w.clone())).unwrap(),
        ),
        Event::SlideLower { j, k, sign, g: w } => {
            GRMatrix::elementary(*j, *k, g.unit(-*sign, w.clone()))
                .unwrap()
                .mul(g, &m)
        }
        _ => m,
    })
}

pub fn random_unit(rng: &mut impl Rng, g: &MarkedGroup) -> IntGroupRingElt {
    g.unit(
        if rng.random_bool(0.5) { 1 } else { -1 },
        random_word(rng, g, 3),
    )
}

fn distinct(rng: &mut impl Rng, n: usize, k: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (1..=n).collect();
    for i in (1..all.len()).rev() {
        all.swap(i, rng.random_range(0..=i));
    }
    all.truncate(k);
    all
}

/// `K₂` words with unit coefficients and every exponent `+1`: commutator
/// relations, `w^u w^{-u}` and `w^4`.
pub fn k2_witnesses(rng: &mut impl Rng, g: &MarkedGroup, count: usize) -> Vec<SteinbergWord> {
    let x = |i, j, l: IntGroupRingElt| SteinbergLetter::x(i, j, l).unwrap();
    (0..count)
        .map(|k| {
            let u = random_unit(rng, g);
            let v = random_unit(rng, g);
            match k % 4 {
                0 => {
                    let p = distinct(rng, 4, 3);
                    let (i, j, l) = (p[0], p[1], p[2]);
                    let uv = g.ring_mul(&u, &v);
                    SteinbergWord::new([
                        x(i, j, u.clone()),
                        x(j, l, v.clone()),
                        x(i, j, u.neg()),
                        x(j, l, v.neg()),
                        x(i, l, uv.neg()),
                    ])
                }
                1 => {
                    let p = distinct(rng, 4, 3);
                    let (i, j, l) = (p[0], p[1], p[2]);
                    SteinbergWord::new([
                        x(i, j, u.clone()),
                        x(i, l, v.clone()),
                        x(i, j, u.neg()),
                        x(i, l, v.neg()),
                    ])
                }
                2 => {
                    let p = distinct(rng, 4, 2);
                    let (sign, w) = u.as_unit().unwrap();
                    let a = WFactor::new(p[0], p[1], sign, w.clone()).unwrap();
                    let b = WFactor::new(p[0], p[1], -sign, w).unwrap();
                    w_product(g, &[a, b])
                }
                _ => {
                    let p = distinct(rng, 4, 2);
                    let (sign, w) = u.as_unit().unwrap();
                    let a = WFactor::new(p[0], p[1], sign, w).unwrap();
                    w_product(g, &[a.clone(), a.clone(), a.clone(), a])
                }
            }
        })
        .collect()
}
