use std::collections::BTreeMap;

use super::{final_pairing, Event, Schedule, SigmaError, ValidSchedule};
use crate::group::GroupWord;
use crate::ring::Wh1Coefficient;

/// The family turned upside down.
///
/// Events run in reverse order and upper and lower handles trade places.
/// The handle pair that died as `(u, l)` is born as label `l`, so the new
/// boundary matrix is `∂̄ᵀ·Q` with `Q = (∂̄ᵀ_final)⁻¹`, which starts at the
/// identity. Slides transform accordingly, each Whitney move becomes a
/// finger along `γ⁻¹`, and each finger becomes a Whitney move carrying
/// `(−1)ⁿ` times the barred circle data.
pub fn dual_schedule(s: &ValidSchedule) -> Result<Schedule, SigmaError> {
    let sched = s.schedule();
    let ctx = &sched.ctx;
    let group = &ctx.group;
    let pairing = final_pairing(s)?;

    // π(u) = l and d_u = (bar c_u)⁻¹ for the death (u, l, c_u)
    let pi = |u: usize| pairing.deaths.get(&u).map(|d| d.0).unwrap_or(u);
    let d: BTreeMap<usize, (i8, GroupWord)> = pairing
        .deaths
        .iter()
        .map(|(&u, (_, sign, path))| (u, (sign * group.w1(path), path.clone())))
        .collect();
    let d_of = |u: usize| d.get(&u).cloned().unwrap_or((1, GroupWord::identity()));

    let mut fingers = BTreeMap::new();
    let mut whitneys = BTreeMap::new();
    for ev in &sched.events {
        match ev {
            Event::Finger { id, i, j, gamma } => {
                fingers.insert(*id, (*i, *j, gamma.clone()));
            }
            Event::Whitney { id, sigma, s } => {
                whitneys.insert(*id, (sigma.clone(), *s));
            }
            _ => {}
        }
    }
    let dual_finger = |id: usize| {
        let (i, j, gamma) = &fingers[&id];
        Event::Finger {
            id,
            i: *j,
            j: pi(*i),
            gamma: group.invert(gamma),
        }
    };
    let parity = i64::from(sched.parity());

    let mut events = Vec::with_capacity(sched.events.len());
    for ev in sched.events.iter().rev() {
        let out = match ev {
            Event::Death { lower, .. } => Event::Birth { label: *lower },
            Event::Birth { label } => {
                let (sign, path) = d_of(*label);
                Event::Death {
                    upper: *label,
                    lower: pi(*label),
                    sign,
                    path,
                }
            }
            Event::SlideUpper { j, k, sign, g } => Event::SlideLower {
                j: *k,
                k: *j,
                sign: sign * group.w1(g),
                g: group.invert(g),
            },
            Event::SlideLower { j, k, sign, g } => {
                let (sk, dk) = d_of(*k);
                let (sj, dj) = d_of(*j);
                let bar = group.invert(g);
                let word = group.mul(&group.mul(&group.invert(&dk), &bar), &dj);
                Event::SlideUpper {
                    j: pi(*k),
                    k: pi(*j),
                    sign: sk * sign * group.w1(g) * sj,
                    g: word,
                }
            }
            Event::Whitney { id, .. } => dual_finger(*id),
            Event::Finger { id, gamma, .. } => match whitneys.get(id) {
                Some((sigma, s)) => {
                    let (c, _) = ctx.coeff_bar_term(&Wh1Coefficient::new(*s, sigma.clone()), gamma);
                    Event::Whitney {
                        id: *id,
                        sigma: c.sigma.scale(parity),
                        s: c.s,
                    }
                }
                None => dual_finger(*id),
            },
        };
        events.push(out);
    }
    Ok(Schedule {
        events,
        ..sched.clone()
    })
}

fn shift(ev: &Event, dl: usize, df: usize) -> Event {
    match ev.clone() {
        Event::Birth { label } => Event::Birth { label: label + dl },
        Event::Death {
            upper,
            lower,
            sign,
            path,
        } => Event::Death {
            upper: upper + dl,
            lower: lower + dl,
            sign,
            path,
        },
        Event::SlideUpper { j, k, sign, g } => Event::SlideUpper {
            j: j + dl,
            k: k + dl,
            sign,
            g,
        },
        Event::SlideLower { j, k, sign, g } => Event::SlideLower {
            j: j + dl,
            k: k + dl,
            sign,
            g,
        },
        Event::Finger { id, i, j, gamma } => Event::Finger {
            id: id + df,
            i: i + dl,
            j: j + dl,
            gamma,
        },
        Event::Whitney { id, sigma, s } => Event::Whitney {
            id: id + df,
            sigma,
            s,
        },
    }
}

/// The family followed by its dual on fresh labels and finger ids.
///
/// Births of both halves come first and deaths last, which keeps the
/// schedule valid; the two halves act on disjoint labels.
pub fn double_schedule(s: &ValidSchedule) -> Result<Schedule, SigmaError> {
    let sched = s.schedule();
    let dual = dual_schedule(s)?;
    let (dl, df) = (sched.max_label(), sched.max_finger_id());
    let dual_events: Vec<Event> = dual.events.iter().map(|e| shift(e, dl, df)).collect();
    let is_birth = |e: &&Event| matches!(e, Event::Birth { .. });
    let is_death = |e: &&Event| matches!(e, Event::Death { .. });
    let mut events = Vec::with_capacity(2 * sched.events.len());
    events.extend(sched.events.iter().filter(is_birth).cloned());
    events.extend(dual_events.iter().filter(is_birth).cloned());
    events.extend(
        sched
            .events
            .iter()
            .filter(|e| !is_birth(e) && !is_death(e))
            .cloned(),
    );
    events.extend(
        dual_events
            .iter()
            .filter(|e| !is_birth(e) && !is_death(e))
            .cloned(),
    );
    events.extend(sched.events.iter().filter(is_death).cloned());
    events.extend(dual_events.iter().filter(is_death).cloned());
    Ok(Schedule {
        events,
        ..sched.clone()
    })
}
