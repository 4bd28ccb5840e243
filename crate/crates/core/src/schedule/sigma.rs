use std::collections::{BTreeMap, BTreeSet};

use super::{Event, SigmaError, ValidSchedule};
use crate::format::format_ring;
use crate::group::GroupWord;
use crate::matrix::{GRMatrix, MonomialDecomp};
use crate::steinberg::{realize_monomial, SteinbergLetter, SteinbergWord};
use crate::whitehead::Wh2Element;

/// The boundary matrix after each event.
///
/// Upper slides multiply on the right by `e_{j,k}^{±g}`, lower slides on the
/// left by `e_{j,k}^{∓g}`; every other event leaves the matrix unchanged.
pub fn evolve_differential(s: &ValidSchedule) -> Vec<(usize, GRMatrix)> {
    let sched = s.schedule();
    let group = &sched.ctx.group;
    let mut m = GRMatrix::identity(sched.max_label());
    let mut out = Vec::with_capacity(sched.events.len());
    for (index, ev) in sched.events.iter().enumerate() {
        match ev {
            Event::SlideUpper { j, k, sign, g } => {
                m.right_mul_elementary(group, *j, *k, &group.unit(*sign, g.clone()));
            }
            Event::SlideLower { j, k, sign, g } => {
                m.left_mul_elementary(group, *j, *k, &group.unit(-*sign, g.clone()));
            }
            _ => {}
        }
        out.push((index, m.clone()));
    }
    out
}

/// The Steinberg word spelled by the slides: lower-slide letters
/// `x^{∓g}` prepended in event order, upper-slide letters `x^{±g}` appended.
pub fn slide_word(s: &ValidSchedule) -> SteinbergWord {
    let sched = s.schedule();
    let group = &sched.ctx.group;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for ev in &sched.events {
        match ev {
            Event::SlideUpper { j, k, sign, g } => upper.push(SteinbergLetter {
                i: *j,
                j: *k,
                lambda: group.unit(*sign, g.clone()),
                exp: 1,
            }),
            Event::SlideLower { j, k, sign, g } => lower.push(SteinbergLetter {
                i: *j,
                j: *k,
                lambda: group.unit(-*sign, g.clone()),
                exp: 1,
            }),
            _ => {}
        }
    }
    SteinbergWord::new(lower.into_iter().rev().chain(upper))
}

/// How the deaths pair handles: upper label → `(lower label, sign, path)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub deaths: BTreeMap<usize, (usize, i8, GroupWord)>,
    pub final_matrix: GRMatrix,
}

/// Checks that every label dies and that the declared deaths agree with the
/// final boundary matrix, which must be monomial.
pub fn final_pairing(s: &ValidSchedule) -> Result<Pairing, SigmaError> {
    let sched = s.schedule();
    let group = &sched.ctx.group;
    let final_matrix = evolve_differential(s)
        .pop()
        .map(|(_, m)| m)
        .unwrap_or_else(|| GRMatrix::identity(0));
    final_matrix.monomial_decompose()?;

    let mut deaths = BTreeMap::new();
    let mut lowers = BTreeSet::new();
    for (index, ev) in sched.events.iter().enumerate() {
        if let Event::Death {
            upper,
            lower,
            sign,
            path,
        } = ev
        {
            let entry = final_matrix.get(*upper, *lower);
            if entry != group.unit(*sign, path.clone()) {
                return Err(SigmaError::DeathMismatch {
                    index,
                    upper: *upper,
                    lower: *lower,
                    found: format_ring(group, &entry),
                });
            }
            deaths.insert(*upper, (*lower, *sign, path.clone()));
            lowers.insert(*lower);
        }
    }
    for label in s.labels() {
        if !deaths.contains_key(&label) || !lowers.contains(&label) {
            return Err(SigmaError::Undead { label });
        }
    }
    Ok(Pairing {
        deaths,
        final_matrix,
    })
}

/// `Σ` with its supporting data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaResult {
    pub element: Wh2Element,
    pub final_matrix: GRMatrix,
}

/// Reads `Σ` off the slide word, correcting by a `W(±π)` word for the
/// final monomial matrix.
pub fn compute_sigma(s: &ValidSchedule) -> Result<SigmaResult, SigmaError> {
    let sched = s.schedule();
    let group = &sched.ctx.group;
    let pairing = final_pairing(s)?;
    let word = slide_word(s);
    let decomp: MonomialDecomp = pairing.final_matrix.monomial_decompose()?;
    let real = realize_monomial(group, &decomp);
    if let Some(index) = real
        .residual
        .rows()
        .iter()
        .enumerate()
        .find(|(i, e)| e.col != i + 1 || e.sign != 1 || !e.word.is_identity())
        .map(|(i, _)| i + 1)
    {
        return Err(SigmaError::Residual { index });
    }
    let element = Wh2Element::new(group, word, real.word(group))
        .expect("realize_monomial reproduces the final matrix");
    Ok(SigmaResult {
        element,
        final_matrix: pairing.final_matrix,
    })
}
