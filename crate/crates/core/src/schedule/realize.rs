use std::sync::Arc;

use super::{Event, RealisationError, Schedule};
use crate::group::GroupWord;
use crate::ring::{CharacteristicData, IntGroupRingElt};
use crate::steinberg::SteinbergWord;
use crate::whitehead::xi_gate;

/// An eye family with a single circle of intersection carrying
/// `(σ, s, γ)`.
///
/// Without stabilization this needs `w2(σ) ≠ 0 or s = 0`; otherwise one
/// `S² × S²` summand is used when `allow_stabilization` is set.
pub fn realize_theta(
    ctx: Arc<CharacteristicData>,
    sigma: IntGroupRingElt,
    s: bool,
    gamma: GroupWord,
    allow_stabilization: bool,
) -> Result<Schedule, RealisationError> {
    ctx.check_sigma(&sigma)
        .map_err(|e| RealisationError::BadCoefficient(e.to_string()))?;
    ctx.group
        .check_word(&gamma)
        .map_err(|e| RealisationError::BadCoefficient(e.to_string()))?;
    let stabilizations = if xi_gate(&ctx, &sigma, s) {
        0
    } else if allow_stabilization {
        1
    } else {
        return Err(RealisationError::XiGate);
    };
    let events = vec![
        Event::Birth { label: 1 },
        Event::Finger {
            id: 1,
            i: 1,
            j: 1,
            gamma,
        },
        Event::Whitney { id: 1, sigma, s },
        Event::Death {
            upper: 1,
            lower: 1,
            sign: 1,
            path: GroupWord::identity(),
        },
    ];
    Ok(Schedule {
        stabilizations,
        ..Schedule::with_events(ctx, events)
    })
}

/// A family with one upper slide per letter of a `K₂` word, on `N` handle
/// pairs and `N` stabilizations, `N` the largest index used.
///
/// Letters with exponent `-1` become slides with the opposite sign, so the
/// slide word reads `x^{-λ}` in their place.
pub fn realize_sigma_word(
    ctx: Arc<CharacteristicData>,
    letters: &SteinbergWord,
) -> Result<Schedule, RealisationError> {
    let group = &ctx.group;
    if !group.is_k2(letters) {
        return Err(RealisationError::NotK2);
    }
    let n = letters.max_index();
    let mut events: Vec<Event> = (1..=n).map(|label| Event::Birth { label }).collect();
    for (index, l) in letters.letters().iter().enumerate() {
        let (sign, g) = l
            .lambda
            .as_unit()
            .ok_or(RealisationError::NonUnitLetter { index })?;
        group
            .check_word(&g)
            .map_err(|e| RealisationError::BadCoefficient(e.to_string()))?;
        events.push(Event::SlideUpper {
            j: l.i,
            k: l.j,
            sign: sign * l.exp,
            g,
        });
    }
    events.extend((1..=n).map(|k| Event::Death {
        upper: k,
        lower: k,
        sign: 1,
        path: GroupWord::identity(),
    }));
    Ok(Schedule {
        stabilizations: n,
        ..Schedule::with_events(ctx, events)
    })
}
