//! Combinatorial one-parameter families: event schedules, the evolution of
//! the boundary matrix, and the two obstructions.

mod duality;
mod realize;
mod sigma;
mod theta;
mod validate;

use std::sync::Arc;

use thiserror::Error;

use crate::group::GroupWord;
use crate::matrix::MatrixError;
use crate::ring::{CharacteristicData, IntGroupRingElt};

pub use duality::{double_schedule, dual_schedule};
pub use realize::{realize_sigma_word, realize_theta};
pub use sigma::{
    compute_sigma, evolve_differential, final_pairing, slide_word, Pairing, SigmaResult,
};
pub use theta::{
    check_circle_context, circles_from_eye, compute_theta, theta_matrix, theta_prime,
    theta_prime_of, CircleData,
};
pub use validate::{EyeFamily, ValidSchedule};

/// One event of a generic path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    /// A cancelling pair of handles is born; both carry `label`.
    Birth { label: usize },
    /// The upper handle `upper` cancels the lower handle `lower`; the
    /// boundary matrix entry there is `sign·path`.
    Death {
        upper: usize,
        lower: usize,
        sign: i8,
        path: GroupWord,
    },
    /// Upper handle `j` slides over `k`: `∂ ← ∂·e_{j,k}^{±g}`.
    SlideUpper {
        j: usize,
        k: usize,
        sign: i8,
        g: GroupWord,
    },
    /// Lower handle slide: `∂ ← e_{j,k}^{∓g}·∂`.
    SlideLower {
        j: usize,
        k: usize,
        sign: i8,
        g: GroupWord,
    },
    /// Finger move between the spheres of upper `i` and lower `j` along `gamma`.
    Finger {
        id: usize,
        i: usize,
        j: usize,
        gamma: GroupWord,
    },
    /// Whitney move cancelling finger `id`, with circle data `(σ, s)`.
    Whitney {
        id: usize,
        sigma: IntGroupRingElt,
        s: bool,
    },
}

impl Event {
    pub fn kind(&self) -> &'static str {
        match self {
            Event::Birth { .. } => "birth",
            Event::Death { .. } => "death",
            Event::SlideUpper { .. } => "slide-upper",
            Event::SlideLower { .. } => "slide-lower",
            Event::Finger { .. } => "finger",
            Event::Whitney { .. } => "whitney",
        }
    }
}

/// An ordered record of events over a characteristic context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub ctx: Arc<CharacteristicData>,
    /// Manifold dimension `n`; the duality sign is `(−1)ⁿ`.
    pub dimension: u32,
    /// Number of `S² × S²` summands the family lives on.
    pub stabilizations: usize,
    pub events: Vec<Event>,
}

impl Schedule {
    pub fn new(ctx: Arc<CharacteristicData>) -> Self {
        Self {
            ctx,
            dimension: 4,
            stabilizations: 0,
            events: Vec::new(),
        }
    }

    pub fn with_events(ctx: Arc<CharacteristicData>, events: Vec<Event>) -> Self {
        Self {
            events,
            ..Self::new(ctx)
        }
    }

    pub fn parity(&self) -> i8 {
        if self.dimension.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn max_label(&self) -> usize {
        self.events
            .iter()
            .map(|e| match e {
                Event::Birth { label } => *label,
                Event::Death { upper, lower, .. } => *upper.max(lower),
                Event::SlideUpper { j, k, .. } | Event::SlideLower { j, k, .. } => *j.max(k),
                Event::Finger { i, j, .. } => *i.max(j),
                Event::Whitney { .. } => 0,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn max_finger_id(&self) -> usize {
        self.events
            .iter()
            .filter_map(|e| match e {
                Event::Finger { id, .. } | Event::Whitney { id, .. } => Some(*id),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }
}

/// A violated schedule invariant, located at the event with index `index`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScheduleError {
    #[error("event {index}: birth after the first slide, finger or whitney")]
    BirthOutOfOrder { index: usize },
    #[error("event {index}: {kind} after the first death")]
    AfterDeath { index: usize, kind: &'static str },
    #[error("event {index}: label {label} is already born")]
    DoubleBirth { index: usize, label: usize },
    #[error("event {index}: label {label} was never born")]
    UnknownLabel { index: usize, label: usize },
    #[error("event {index}: {role} handle {label} is already dead")]
    DoubleDeath {
        index: usize,
        label: usize,
        role: &'static str,
    },
    #[error("event {index}: labels must be positive")]
    ZeroLabel { index: usize },
    #[error("event {index}: a handle cannot slide over itself ({label})")]
    SelfSlide { index: usize, label: usize },
    #[error("event {index}: sign must be + or -")]
    BadSign { index: usize },
    #[error("event {index}: finger id {id} is already in use")]
    DuplicateFinger { index: usize, id: usize },
    #[error("event {index}: whitney move refers to unknown finger {id}")]
    DanglingWhitney { index: usize, id: usize },
    #[error("event {index}: finger {id} already has a whitney move")]
    DoubleWhitney { index: usize, id: usize },
    #[error("event {index}: {reason}")]
    BadData { index: usize, reason: String },
    #[error("schedule is not an eye family: {0}")]
    NotEye(String),
}

impl ScheduleError {
    /// Index of the offending event, when there is one.
    pub fn index(&self) -> Option<usize> {
        use ScheduleError::*;
        match self {
            BirthOutOfOrder { index }
            | AfterDeath { index, .. }
            | DoubleBirth { index, .. }
            | UnknownLabel { index, .. }
            | DoubleDeath { index, .. }
            | ZeroLabel { index }
            | SelfSlide { index, .. }
            | BadSign { index }
            | DuplicateFinger { index, .. }
            | DanglingWhitney { index, .. }
            | DoubleWhitney { index, .. }
            | BadData { index, .. } => Some(*index),
            NotEye(_) => None,
        }
    }
}

/// Failures reading off `Σ` from the final boundary matrix.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigmaError {
    #[error("deaths inconsistent with slides: {0}")]
    NonMonomial(#[from] MatrixError),
    #[error("deaths inconsistent with slides: event {index} declares a death at ({upper}, {lower}) but the boundary matrix entry is {found}")]
    DeathMismatch {
        index: usize,
        upper: usize,
        lower: usize,
        found: String,
    },
    #[error("deaths inconsistent with slides: label {label} never dies")]
    Undead { label: usize },
    #[error("monomial not W-realizable in current stabilization: residual unit at index {index}")]
    Residual { index: usize },
}

/// Failures of the realisation builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealisationError {
    #[error(
        "realisation needs w2(sigma) != 0 or s = 0; pass stabilization to use one S2xS2 summand"
    )]
    XiGate,
    #[error("word is not in K2: its image under the projection is not the identity")]
    NotK2,
    #[error("letter {index} has coefficient that is not a unit +-g")]
    NonUnitLetter { index: usize },
    #[error("invalid coefficient: {0}")]
    BadCoefficient(String),
}

/// A computation requested in a context that does not support it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("theta-prime needs a single infinite cyclic factor, trivial-Z coefficients and trivial w1, w2")]
    NotCircle,
}
