mod common;

use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use pseudoisotopy::format::{format_schedule, parse_schedule};
use pseudoisotopy::group::GroupWord;
use pseudoisotopy::ring::{CharacteristicData, CoeffVariant};
use pseudoisotopy::schedule::{
    compute_sigma, compute_theta, double_schedule, dual_schedule, evolve_differential, Event,
    EyeFamily, Schedule, ScheduleError,
};

fn z2z3_ctx() -> Arc<CharacteristicData> {
    ctx(z2z3(), CoeffVariant::TrivialZ, false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn sigma_is_additive_on_disjoint_labels(seed: u64, n1 in 2..4usize, n2 in 2..4usize) {
        let c = z2z3_ctx();
        let mut r = rng(seed);
        let s1 = random_w_schedule(&mut r, &c, n1, 3);
        let s2 = random_w_schedule(&mut r, &c, n2, 3);
        let sig = |s: &Schedule| compute_sigma(&s.clone().validate().unwrap()).unwrap().element;
        let (w1, w2) = (sig(&s1), sig(&s2));

        let shifted: Vec<Event> = s2.events.iter().map(|e| shift(e, n1)).collect();
        let part = |evs: &[Event], k: &str| -> Vec<Event> {
            evs.iter().filter(|e| match k {
                "birth" | "death" => e.kind() == k,
                _ => e.kind() != "birth" && e.kind() != "death",
            }).cloned().collect()
        };
        let mut events = Vec::new();
        for k in ["birth", "middle", "death"] {
            events.extend(part(&s1.events, k));
            events.extend(part(&shifted, k));
        }
        let both = sig(&Schedule::with_events(c.clone(), events));
        prop_assert_eq!(both.word(), &w1.word().concat(&shift_word(w2.word(), n1)));
    }
}

fn shift(e: &Event, d: usize) -> Event {
    match e.clone() {
        Event::Birth { label } => Event::Birth { label: label + d },
        Event::Death {
            upper,
            lower,
            sign,
            path,
        } => Event::Death {
            upper: upper + d,
            lower: lower + d,
            sign,
            path,
        },
        Event::SlideUpper { j, k, sign, g } => Event::SlideUpper {
            j: j + d,
            k: k + d,
            sign,
            g,
        },
        other => other,
    }
}

fn shift_word(
    w: &pseudoisotopy::steinberg::SteinbergWord,
    d: usize,
) -> pseudoisotopy::steinberg::SteinbergWord {
    pseudoisotopy::steinberg::SteinbergWord::new(w.letters().iter().map(|l| {
        let mut l = l.clone();
        l.i += d;
        l.j += d;
        l
    }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn evolution_matches_matrix_fold(seed: u64, n in 2..5usize) {
        let c = z2z3_ctx();
        let mut r = rng(seed);
        let mut events: Vec<Event> = (1..=n).map(|label| Event::Birth { label }).collect();
        for _ in 0..8 {
            let j = rand::Rng::random_range(&mut r, 1..=n);
            let mut k = rand::Rng::random_range(&mut r, 1..n);
            if k >= j {
                k += 1;
            }
            let sign = if rand::Rng::random_bool(&mut r, 0.5) { 1 } else { -1 };
            let g = random_word(&mut r, &c.group, 3);
            events.push(if rand::Rng::random_bool(&mut r, 0.5) {
                Event::SlideUpper { j, k, sign, g }
            } else {
                Event::SlideLower { j, k, sign, g }
            });
        }
        let v = Schedule::with_events(c.clone(), events.clone()).validate().unwrap();
        let got = evolve_differential(&v).pop().unwrap().1;
        prop_assert_eq!(got, evolve_final(&c, &events, n));
    }

    #[test]
    fn dual_theta_is_signed_bar(k in 0..2usize, seed: u64, dim in 4..6u32) {
        let c = &family_contexts()[k];
        let mut r = rng(seed);
        let s = random_eye(&mut r, c, 3, 4, dim);
        let v = s.validate().unwrap();
        let th = compute_theta(&EyeFamily::try_from(v.clone()).unwrap()).unwrap();
        let dual = EyeFamily::try_from(dual_schedule(&v).unwrap()).unwrap();
        let sign = if dim.is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(compute_theta(&dual).unwrap(), c.wh1_bar(&th).signed(sign));
        let dbl = EyeFamily::try_from(double_schedule(&v).unwrap()).unwrap();
        let dth = compute_theta(&dbl).unwrap();
        prop_assert_eq!(&dth, &th.add(&c.wh1_bar(&th).signed(sign)));
        prop_assert!(c.in_z(dim, &dth));
    }

    #[test]
    fn schedule_text_round_trips(seed: u64) {
        let c = z2z3_ctx();
        let mut r = rng(seed);
        let s = random_w_schedule(&mut r, &c, 3, 3);
        let text = format_schedule(&s);
        let back = parse_schedule(c.clone(), &text).unwrap();
        prop_assert_eq!(&back.schedule, &s);
        let e = random_eye(&mut r, &c, 2, 3, 5);
        prop_assert_eq!(parse_schedule(c, &format_schedule(&e)).unwrap().schedule, e);
    }
}

type ErrorCheck = fn(&ScheduleError) -> bool;

#[test]
fn malformed_schedules_are_rejected() {
    let c = z2z3_ctx();
    let one = GroupWord::identity();
    let death = |u, l| Event::Death {
        upper: u,
        lower: l,
        sign: 1,
        path: one.clone(),
    };
    let cases: Vec<(Vec<Event>, ErrorCheck)> = vec![
        (
            vec![Event::Birth { label: 1 }, Event::Birth { label: 1 }],
            |e| matches!(e, ScheduleError::DoubleBirth { index: 1, .. }),
        ),
        (vec![death(1, 1)], |e| {
            matches!(e, ScheduleError::UnknownLabel { index: 0, .. })
        }),
        (vec![Event::Birth { label: 0 }], |e| {
            matches!(e, ScheduleError::ZeroLabel { index: 0 })
        }),
        (
            vec![
                Event::Birth { label: 1 },
                Event::SlideUpper {
                    j: 1,
                    k: 1,
                    sign: 1,
                    g: one.clone(),
                },
            ],
            |e| matches!(e, ScheduleError::SelfSlide { index: 1, .. }),
        ),
        (
            vec![
                Event::Birth { label: 1 },
                death(1, 1),
                Event::Birth { label: 2 },
            ],
            |e| {
                matches!(
                    e,
                    ScheduleError::BirthOutOfOrder { .. } | ScheduleError::AfterDeath { .. }
                )
            },
        ),
        (
            vec![
                Event::Birth { label: 1 },
                Event::Whitney {
                    id: 3,
                    sigma: pseudoisotopy::ring::IntGroupRingElt::one(),
                    s: false,
                },
            ],
            |e| matches!(e, ScheduleError::DanglingWhitney { index: 1, id: 3 }),
        ),
    ];
    for (events, ok) in cases {
        let err = Schedule::with_events(c.clone(), events.clone())
            .validate()
            .unwrap_err();
        assert!(ok(&err), "{events:?} gave {err:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Deaths of the dual are recomputed from its own slides by
    /// `final_pairing`, so this checks the transformed slide data.
    #[test]
    fn dual_of_slide_schedules_is_consistent(k in 0..2usize, seed: u64, n in 2..4usize) {
        let c = &family_contexts()[k];
        let mut r = rng(seed);
        let upper = w_slides(&mut r, &c.group, n, 2, 0);
        let lower: Vec<Event> = w_slides(&mut r, &c.group, n, 2, 0)
            .into_iter()
            .map(|e| match e {
                Event::SlideUpper { j, k, sign, g } => Event::SlideLower { j, k, sign: -sign, g },
                e => e,
            })
            .collect();
        let mut events: Vec<Event> = (1..=n).map(|label| Event::Birth { label }).collect();
        events.extend(lower);
        events.extend(upper);
        let m = evolve_final(c, &events, n);
        events.extend(deaths_of(&m, 0));
        let v = Schedule::with_events(c.clone(), events).validate().unwrap();
        prop_assert!(compute_sigma(&v).is_ok());
        let dual = dual_schedule(&v).unwrap().validate().unwrap();
        prop_assert!(pseudoisotopy::schedule::final_pairing(&dual).is_ok());
        let back = dual_schedule(&dual).unwrap().validate().unwrap();
        prop_assert!(pseudoisotopy::schedule::final_pairing(&back).is_ok());
    }
}
