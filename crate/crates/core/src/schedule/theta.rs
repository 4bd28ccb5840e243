use std::collections::BTreeMap;

use super::{ContextError, Event, EyeFamily, ScheduleError};
use crate::group::{FactorElem, FactorKind, GroupWord};
use crate::ring::{CharacteristicData, CoeffVariant, GammaElt, IntGroupRingElt, Wh1Coefficient};
use crate::whitehead::{Wh1Element, Wh1Matrix};

/// Invariants of one circle of intersection between the sphere of upper
/// handle `i` and lower handle `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleData {
    pub i: usize,
    pub j: usize,
    pub gamma: GroupWord,
    pub sigma: IntGroupRingElt,
    pub s: bool,
}

/// One circle per finger/Whitney pair, in finger order.
pub fn circles_from_eye(e: &EyeFamily) -> Result<Vec<CircleData>, ScheduleError> {
    let events = &e.schedule().events;
    let mut whitney = BTreeMap::new();
    for ev in events {
        if let Event::Whitney { id, sigma, s } = ev {
            whitney.insert(*id, (sigma.clone(), *s));
        }
    }
    let mut out = Vec::new();
    for (index, ev) in events.iter().enumerate() {
        if let Event::Finger { id, i, j, gamma } = ev {
            let Some((sigma, s)) = whitney.get(id) else {
                return Err(ScheduleError::NotEye(format!(
                    "finger {id} at event {index} has no whitney move"
                )));
            };
            out.push(CircleData {
                i: *i,
                j: *j,
                gamma: gamma.clone(),
                sigma: sigma.clone(),
                s: *s,
            });
        }
    }
    Ok(out)
}

/// `I + M` with `M_{i,j} = Σ_C (σ_C + s_C) γ_C` over circles between `i`
/// and `j`.
pub fn theta_matrix(circles: &[CircleData], size: usize) -> Wh1Matrix {
    let mut m = Wh1Matrix::identity(size);
    for c in circles {
        let term = GammaElt::monomial(Wh1Coefficient::new(c.s, c.sigma.clone()), c.gamma.clone());
        m.add_at(c.i, c.j, &term);
    }
    m
}

pub fn compute_theta(e: &EyeFamily) -> Result<Wh1Element, ScheduleError> {
    let circles = circles_from_eye(e)?;
    let m = theta_matrix(&circles, e.schedule().max_label());
    Ok(e.schedule().ctx.trace_to_wh1(&m))
}

/// Whether `Θ′` is defined: one infinite cyclic factor, trivial-ℤ
/// coefficients and trivial `w₁`, `w₂`.
pub fn check_circle_context(ctx: &CharacteristicData) -> Result<(), ContextError> {
    let single_cyclic = ctx.group.factors().len() == 1
        && matches!(ctx.group.factors()[0].kind(), FactorKind::Cyclic);
    if !single_cyclic
        || ctx.coeffs.variant != CoeffVariant::TrivialZ
        || ctx.coeffs.w2_bit
        || !ctx.group.is_orientable()
    {
        return Err(ContextError::NotCircle);
    }
    Ok(())
}

/// Folds `t^a` onto `t^{|a|}` and keeps the `ℤ` components, indexed by
/// `a > 0`. Zero entries are omitted.
pub fn theta_prime_of(
    ctx: &CharacteristicData,
    theta: &Wh1Element,
) -> Result<BTreeMap<i64, i64>, ContextError> {
    check_circle_context(ctx)?;
    let mut out: BTreeMap<i64, i64> = BTreeMap::new();
    for (class, v) in theta.terms() {
        let a = match class.word().syllables() {
            [s] => match s.elem {
                FactorElem::Power(a) => a.abs(),
                _ => return Err(ContextError::NotCircle),
            },
            _ => return Err(ContextError::NotCircle),
        };
        *out.entry(a).or_insert(0) += v.n;
    }
    out.retain(|_, n| *n != 0);
    Ok(out)
}

/// `Θ′` of an eye family over `⟨t⟩`.
pub fn theta_prime(e: &EyeFamily) -> Result<BTreeMap<i64, i64>, crate::Error> {
    let ctx = &e.schedule().ctx;
    check_circle_context(ctx)?;
    let theta = compute_theta(e)?;
    Ok(theta_prime_of(ctx, &theta)?)
}
