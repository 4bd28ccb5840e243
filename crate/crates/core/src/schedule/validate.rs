use std::collections::{BTreeMap, BTreeSet};

use super::{Event, Schedule, ScheduleError};

/// A schedule whose ordering and reference invariants have been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidSchedule(Schedule);

impl ValidSchedule {
    pub fn schedule(&self) -> &Schedule {
        &self.0
    }

    pub fn into_inner(self) -> Schedule {
        self.0
    }

    /// Labels in order of birth.
    pub fn labels(&self) -> Vec<usize> {
        self.0
            .events
            .iter()
            .filter_map(|e| match e {
                Event::Birth { label } => Some(*label),
                _ => None,
            })
            .collect()
    }
}

#[derive(PartialEq, PartialOrd)]
enum Phase {
    Births,
    Middle,
    Deaths,
}

impl Schedule {
    /// Checks phase ordering (births, then slides and finger/Whitney moves,
    /// then deaths), label lifetimes, finger references and the validity of
    /// every word and coefficient. The first violation is reported.
    pub fn validate(self) -> Result<ValidSchedule, ScheduleError> {
        let ctx = self.ctx.clone();
        let mut phase = Phase::Births;
        let mut born = BTreeSet::new();
        let mut dead_upper = BTreeSet::new();
        let mut dead_lower = BTreeSet::new();
        let mut fingers: BTreeMap<usize, bool> = BTreeMap::new();

        let check_label = |index: usize, label: usize, born: &BTreeSet<usize>| {
            if label == 0 {
                Err(ScheduleError::ZeroLabel { index })
            } else if !born.contains(&label) {
                Err(ScheduleError::UnknownLabel { index, label })
            } else {
                Ok(())
            }
        };
        let check_sign = |index: usize, sign: i8| {
            if sign == 1 || sign == -1 {
                Ok(())
            } else {
                Err(ScheduleError::BadSign { index })
            }
        };
        let check_word = |index: usize, w: &crate::group::GroupWord| {
            ctx.group.check_word(w).map_err(|e| ScheduleError::BadData {
                index,
                reason: e.to_string(),
            })
        };

        for (index, ev) in self.events.iter().enumerate() {
            match ev {
                Event::Birth { .. } if phase > Phase::Births => {
                    return Err(if phase == Phase::Deaths {
                        ScheduleError::AfterDeath {
                            index,
                            kind: ev.kind(),
                        }
                    } else {
                        ScheduleError::BirthOutOfOrder { index }
                    });
                }
                Event::Death { .. } => phase = Phase::Deaths,
                _ if phase == Phase::Deaths => {
                    return Err(ScheduleError::AfterDeath {
                        index,
                        kind: ev.kind(),
                    });
                }
                Event::Birth { .. } => {}
                _ => phase = Phase::Middle,
            }
            match ev {
                Event::Birth { label } => {
                    if *label == 0 {
                        return Err(ScheduleError::ZeroLabel { index });
                    }
                    if !born.insert(*label) {
                        return Err(ScheduleError::DoubleBirth {
                            index,
                            label: *label,
                        });
                    }
                }
                Event::Death {
                    upper,
                    lower,
                    sign,
                    path,
                } => {
                    check_label(index, *upper, &born)?;
                    check_label(index, *lower, &born)?;
                    check_sign(index, *sign)?;
                    check_word(index, path)?;
                    if !dead_upper.insert(*upper) {
                        return Err(ScheduleError::DoubleDeath {
                            index,
                            label: *upper,
                            role: "upper",
                        });
                    }
                    if !dead_lower.insert(*lower) {
                        return Err(ScheduleError::DoubleDeath {
                            index,
                            label: *lower,
                            role: "lower",
                        });
                    }
                }
                Event::SlideUpper { j, k, sign, g } | Event::SlideLower { j, k, sign, g } => {
                    check_label(index, *j, &born)?;
                    check_label(index, *k, &born)?;
                    if j == k {
                        return Err(ScheduleError::SelfSlide { index, label: *j });
                    }
                    check_sign(index, *sign)?;
                    check_word(index, g)?;
                }
                Event::Finger { id, i, j, gamma } => {
                    check_label(index, *i, &born)?;
                    check_label(index, *j, &born)?;
                    check_word(index, gamma)?;
                    if fingers.insert(*id, false).is_some() {
                        return Err(ScheduleError::DuplicateFinger { index, id: *id });
                    }
                }
                Event::Whitney { id, sigma, .. } => {
                    match fingers.get_mut(id) {
                        None => return Err(ScheduleError::DanglingWhitney { index, id: *id }),
                        Some(true) => return Err(ScheduleError::DoubleWhitney { index, id: *id }),
                        Some(used) => *used = true,
                    }
                    ctx.check_sigma(sigma).map_err(|e| ScheduleError::BadData {
                        index,
                        reason: e.to_string(),
                    })?;
                }
            }
        }
        Ok(ValidSchedule(self))
    }
}

/// A validated schedule with no slides in which every born label dies
/// against itself with trivial path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EyeFamily(ValidSchedule);

impl EyeFamily {
    pub fn schedule(&self) -> &Schedule {
        self.0.schedule()
    }

    pub fn valid(&self) -> &ValidSchedule {
        &self.0
    }
}

impl TryFrom<ValidSchedule> for EyeFamily {
    type Error = ScheduleError;

    fn try_from(v: ValidSchedule) -> Result<Self, Self::Error> {
        let mut deaths = BTreeSet::new();
        for ev in &v.schedule().events {
            match ev {
                Event::SlideUpper { .. } | Event::SlideLower { .. } => {
                    return Err(ScheduleError::NotEye("contains a handle slide".into()))
                }
                Event::Death {
                    upper,
                    lower,
                    sign,
                    path,
                } => {
                    if upper != lower || *sign != 1 || !path.is_identity() {
                        return Err(ScheduleError::NotEye(format!(
                            "death of {upper}/{lower} is not a trivial self-cancellation"
                        )));
                    }
                    deaths.insert(*upper);
                }
                _ => {}
            }
        }
        if let Some(l) = v.labels().into_iter().find(|l| !deaths.contains(l)) {
            return Err(ScheduleError::NotEye(format!("label {l} never dies")));
        }
        Ok(Self(v))
    }
}

impl TryFrom<Schedule> for EyeFamily {
    type Error = ScheduleError;

    fn try_from(s: Schedule) -> Result<Self, Self::Error> {
        Self::try_from(s.validate()?)
    }
}
