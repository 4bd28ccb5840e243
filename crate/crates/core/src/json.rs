//! Deterministic JSON encodings. Object keys are sorted and every map is
//! iterated in canonical order, so identical inputs give identical bytes.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::format::{format_ring, format_word};
use crate::group::{ConjClassRep, MarkedGroup};
use crate::matrix::GRMatrix;
use crate::steinberg::SteinbergWord;
use crate::whitehead::{ClassCoeff, QImageElement, Wh1Element, Wh2Element};

pub const FORMAT: u32 = 1;

pub fn steinberg(group: &MarkedGroup, w: &SteinbergWord) -> Value {
    w.letters()
        .iter()
        .map(|l| json!({ "i": l.i, "j": l.j, "lambda": format_ring(group, &l.lambda), "exp": l.exp }))
        .collect()
}

/// Sparse `[row, col, entry]` triplets.
pub fn matrix(group: &MarkedGroup, m: &GRMatrix) -> Value {
    m.stored()
        .map(|(&(i, j), v)| json!([i, j, format_ring(group, v)]))
        .collect()
}

fn classes<'a>(
    group: &MarkedGroup,
    terms: impl Iterator<Item = (&'a ConjClassRep, &'a ClassCoeff)>,
) -> Value {
    terms
        .map(
            |(c, v)| json!({ "class": format_word(group, c.word()), "s": u8::from(v.m), "n": v.n }),
        )
        .collect()
}

pub fn wh1(group: &MarkedGroup, x: &Wh1Element) -> Value {
    classes(group, x.terms().iter())
}

pub fn qimage(group: &MarkedGroup, x: &QImageElement) -> Value {
    classes(group, x.terms().iter())
}

pub fn wh2(group: &MarkedGroup, x: &Wh2Element, k2_verified: bool) -> Value {
    json!({
        "word": steinberg(group, x.word()),
        "w_correction": steinberg(group, x.w_correction()),
        "k2_verified": k2_verified,
    })
}

pub fn theta_prime(v: &BTreeMap<i64, i64>) -> Value {
    v.iter().map(|(a, n)| json!({ "a": a, "n": n })).collect()
}

/// The schedule report: `{format, sigma, theta, theta_prime, diagnostics}`
/// with `null` for invariants that do not apply.
pub fn report(
    sigma: Option<Value>,
    theta: Option<Value>,
    theta_prime: Option<Value>,
    diagnostics: &[String],
) -> Value {
    json!({
        "format": FORMAT,
        "sigma": sigma,
        "theta": theta,
        "theta_prime": theta_prime,
        "diagnostics": diagnostics,
    })
}

pub fn to_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}
