//! Text formats: words, ring elements, group specifications, schedules and
//! Steinberg words.
//!
//! Words are dot-separated syllables `f<i>:<name>^<k>`, with the factor
//! prefix optional when the name is unambiguous; `1` is the identity.
//! Finite-factor elements are named individually, the cyclic factor's
//! generator carries the factor name, and the generators of a free factor
//! `x` of rank `r` are `x1 .. xr`.

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{FactorElem, FactorGroup, FactorKind, FiniteTable, GroupWord, MarkedGroup};
use crate::ring::{
    CharacteristicData, CoeffSystem, CoeffVariant, GammaElt, IntGroupRingElt, Wh1Coefficient,
};
use crate::schedule::{Event, Schedule};
use crate::steinberg::{SteinbergLetter, SteinbergWord};
use crate::whitehead::{QImageElement, Wh1Element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }

    fn at(self, line: usize) -> Self {
        Self { line, ..self }
    }
}

fn err(message: impl Into<String>) -> ParseError {
    ParseError::new(0, message)
}

fn format_elem(f: &FactorGroup, e: &FactorElem) -> Vec<String> {
    let pow = |name: &str, k: i64| {
        if k == 1 {
            name.to_string()
        } else {
            format!("{name}^{k}")
        }
    };
    match (f.kind(), e) {
        (FactorKind::Finite(t), FactorElem::Finite(a)) => vec![t.names()[*a].clone()],
        (_, FactorElem::Power(k)) => vec![pow(f.name(), *k)],
        (_, FactorElem::Free(w)) => w
            .iter()
            .map(|&(g, k)| pow(&format!("{}{}", f.name(), g + 1), k))
            .collect(),
        _ => vec!["1".into()],
    }
}

pub fn format_word(group: &MarkedGroup, w: &GroupWord) -> String {
    if w.is_identity() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for s in w.syllables() {
        let f = &group.factors()[s.factor];
        for p in format_elem(f, &s.elem) {
            parts.push(format!("f{}:{p}", s.factor));
        }
    }
    parts.join(".")
}

/// Resolves `name` inside factor `index`.
fn resolve_in(f: &FactorGroup, name: &str) -> Option<FactorElem> {
    match f.kind() {
        FactorKind::Trivial => None,
        FactorKind::Finite(t) => t
            .names()
            .iter()
            .position(|n| n == name)
            .map(FactorElem::Finite),
        FactorKind::Cyclic => (name == f.name()).then_some(FactorElem::Power(1)),
        FactorKind::Free { rank } => {
            let idx: usize = name.strip_prefix(f.name())?.parse().ok()?;
            (1..=*rank)
                .contains(&idx)
                .then(|| FactorElem::Free(vec![(idx - 1, 1)]))
        }
    }
}

/// Parses one generator reference `[f<i>:]name`.
pub fn parse_generator(group: &MarkedGroup, text: &str) -> Result<(usize, FactorElem), ParseError> {
    if let Some(rest) = text.strip_prefix('f') {
        if let Some((idx, name)) = rest.split_once(':') {
            if let Ok(i) = idx.parse::<usize>() {
                let f = group.factor(i).map_err(|e| err(e.to_string()))?;
                return resolve_in(f, name)
                    .map(|e| (i, e))
                    .ok_or_else(|| err(format!("factor {i} has no element named `{name}`")));
            }
        }
    }
    let hits: Vec<(usize, FactorElem)> = group
        .factors()
        .iter()
        .enumerate()
        .filter_map(|(i, f)| resolve_in(f, text).map(|e| (i, e)))
        .collect();
    match hits.len() {
        1 => Ok(hits.into_iter().next().expect("one hit")),
        0 => Err(err(format!("unknown generator `{text}`"))),
        _ => Err(err(format!(
            "generator `{text}` is ambiguous; prefix it with f<i>:"
        ))),
    }
}

pub fn parse_word(group: &MarkedGroup, text: &str) -> Result<GroupWord, ParseError> {
    let text = text.trim();
    if text.is_empty() || text == "1" {
        return Ok(GroupWord::identity());
    }
    let mut acc = GroupWord::identity();
    for part in text.split('.') {
        let (base, exp) = match part.rsplit_once('^') {
            Some((b, e)) => {
                let k: i64 = e
                    .parse()
                    .map_err(|_| err(format!("bad exponent in `{part}`")))?;
                (b, k)
            }
            None => (part, 1),
        };
        let (factor, elem) = parse_generator(group, base)?;
        let f = &group.factors()[factor];
        let syl = group
            .syllable(factor, f.pow(&elem, exp))
            .map_err(|e| err(e.to_string()))?;
        acc = group.mul(&acc, &syl);
    }
    Ok(acc)
}

/// `c*word` terms joined by `+`; `word` and `-word` for coefficients `±1`,
/// a bare integer for the identity term, `0` for zero.
pub fn format_ring(group: &MarkedGroup, x: &IntGroupRingElt) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (g, c)) in x.terms().iter().enumerate() {
        if k > 0 {
            out.push('+');
        }
        if g.is_identity() {
            let _ = write!(out, "{c}");
        } else {
            match c {
                1 => {}
                -1 => out.push('-'),
                _ => {
                    let _ = write!(out, "{c}*");
                }
            }
            out.push_str(&format_word(group, g));
        }
    }
    out
}

pub fn parse_ring(group: &MarkedGroup, text: &str) -> Result<IntGroupRingElt, ParseError> {
    let mut out = IntGroupRingElt::zero();
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(err("empty ring element"));
    }
    for term in text.split('+') {
        if term.is_empty() {
            return Err(err(format!("empty term in `{text}`")));
        }
        if let Ok(n) = term.parse::<i64>() {
            out.add_term(GroupWord::identity(), n);
            continue;
        }
        let (coef, word) = match term.split_once('*') {
            Some((c, w)) => (
                c.parse::<i64>()
                    .map_err(|_| err(format!("bad coefficient `{c}`")))?,
                w,
            ),
            None => match term.strip_prefix('-') {
                Some(w) => (-1, w),
                None => (1, term),
            },
        };
        out.add_term(parse_word(group, word)?, coef);
    }
    Ok(out)
}

/// `(s,σ)word` terms separated by spaces; `0` for zero.
pub fn format_gamma(group: &MarkedGroup, x: &GammaElt) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.terms()
        .iter()
        .map(|(g, c)| {
            format!(
                "({},{}){}",
                u8::from(c.s),
                format_ring(group, &c.sigma),
                format_word(group, g)
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_gamma(group: &MarkedGroup, text: &str) -> Result<GammaElt, ParseError> {
    let mut out = GammaElt::zero();
    let text = text.trim();
    if text == "0" {
        return Ok(out);
    }
    for term in text.split_whitespace() {
        let body = term
            .strip_prefix('(')
            .ok_or_else(|| err(format!("term `{term}` must start with `(`")))?;
        let (coef, word) = body
            .split_once(')')
            .ok_or_else(|| err(format!("term `{term}` has no closing `)`")))?;
        let (s, sigma) = coef
            .split_once(',')
            .ok_or_else(|| err(format!("coefficient `{coef}` must be `s,sigma`")))?;
        let s = parse_bit(s)?;
        let sigma = parse_ring(group, sigma)?;
        out.add_term(parse_word(group, word)?, Wh1Coefficient::new(s, sigma));
    }
    Ok(out)
}

fn parse_bit(s: &str) -> Result<bool, ParseError> {
    match s.trim() {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(err(format!("expected 0 or 1, got `{other}`"))),
    }
}

fn parse_sign(s: &str) -> Result<i8, ParseError> {
    match s {
        "+" | "+1" => Ok(1),
        "-" | "-1" => Ok(-1),
        other => Err(err(format!("expected + or -, got `{other}`"))),
    }
}

fn sign_str(s: i8) -> &'static str {
    if s < 0 {
        "-"
    } else {
        "+"
    }
}

/// `(m,n)class` terms separated by spaces; `0` for zero.
pub fn format_wh1(group: &MarkedGroup, x: &Wh1Element) -> String {
    format_classes(group, x.terms().iter())
}

pub fn format_qimage(group: &MarkedGroup, x: &QImageElement) -> String {
    format_classes(group, x.terms().iter())
}

fn format_classes<'a>(
    group: &MarkedGroup,
    terms: impl Iterator<
        Item = (
            &'a crate::group::ConjClassRep,
            &'a crate::whitehead::ClassCoeff,
        ),
    >,
) -> String {
    let parts: Vec<String> = terms
        .map(|(c, v)| {
            format!(
                "({},{}){}",
                u8::from(v.m),
                v.n,
                format_word(group, c.word())
            )
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

/// Letters `x(i,j,λ)` or `x(i,j,λ)^-1`, separated by spaces.
pub fn format_steinberg(group: &MarkedGroup, w: &SteinbergWord) -> String {
    w.letters()
        .iter()
        .map(|l| {
            let base = format!("x({},{},{})", l.i, l.j, format_ring(group, &l.lambda));
            if l.exp < 0 {
                base + "^-1"
            } else {
                base
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_steinberg(group: &MarkedGroup, text: &str) -> Result<SteinbergWord, ParseError> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let body = tok
            .strip_prefix("x(")
            .ok_or_else(|| err(format!("letter `{tok}` must look like x(i,j,lambda)")))?;
        let (inner, tail) = body
            .rsplit_once(')')
            .ok_or_else(|| err(format!("letter `{tok}` has no closing `)`")))?;
        let exp = match tail {
            "" => 1,
            "^-1" => -1,
            "^1" => 1,
            other => return Err(err(format!("bad exponent `{other}` on `{tok}`"))),
        };
        let mut it = inner.splitn(3, ',');
        let i = it.next().and_then(|v| v.parse().ok());
        let j = it.next().and_then(|v| v.parse().ok());
        let (Some(i), Some(j), Some(lambda)) = (i, j, it.next()) else {
            return Err(err(format!("letter `{tok}` must look like x(i,j,lambda)")));
        };
        let lambda = parse_ring(group, lambda)?;
        letters.push(SteinbergLetter::new(i, j, lambda, exp).map_err(|e| err(e.to_string()))?);
    }
    Ok(SteinbergWord::new(letters))
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(n, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        (!toks.is_empty()).then_some((n + 1, toks))
    })
}

/// Parses a group specification.
///
/// ```text
/// finite A 2 0 1 1 0 names e a
/// cyclic t
/// free x 2
/// trivial
/// w1 a=-1
/// coeffs trivial-Z w2=0
/// k1 nonzero
/// chi (0,1)f0:a.f1:b
/// ```
pub fn parse_group_spec(text: &str) -> Result<CharacteristicData, ParseError> {
    let mut factors = Vec::new();
    let mut deferred = Vec::new();
    for (line, toks) in lines(text) {
        let f = match toks[0] {
            "finite" => parse_finite(&toks).map_err(|e| e.at(line))?,
            "cyclic" => match toks.as_slice() {
                [_, name] => FactorGroup::cyclic(*name),
                _ => return Err(ParseError::new(line, "usage: cyclic <name>")),
            },
            "free" => match toks.as_slice() {
                [_, name, rank] => {
                    let rank = rank
                        .parse()
                        .map_err(|_| ParseError::new(line, "bad rank"))?;
                    FactorGroup::free(*name, rank)
                }
                _ => return Err(ParseError::new(line, "usage: free <name> <rank>")),
            },
            "trivial" => FactorGroup::trivial(),
            _ => {
                deferred.push((line, toks));
                continue;
            }
        };
        factors.push(f);
    }
    let mut group = MarkedGroup::new(factors);
    let mut coeffs = CoeffSystem {
        variant: CoeffVariant::TrivialZ,
        w2_bit: false,
    };
    let mut k1_zero = true;
    let mut w1 = Vec::new();
    let mut chi_lines = Vec::new();
    for (line, toks) in deferred {
        match toks[0] {
            "w1" => {
                for tok in &toks[1..] {
                    let (gen, val) = tok
                        .split_once('=')
                        .ok_or_else(|| ParseError::new(line, "usage: w1 <generator>=<+1|-1>"))?;
                    let sign = parse_sign(val).map_err(|e| e.at(line))?;
                    let (factor, elem) = parse_generator(&group, gen).map_err(|e| e.at(line))?;
                    let index = match elem {
                        FactorElem::Finite(a) => a,
                        FactorElem::Power(_) => 0,
                        FactorElem::Free(w) => w[0].0,
                    };
                    w1.push((factor, index, sign));
                }
            }
            "coeffs" => {
                let variant = match toks.get(1) {
                    Some(&"trivial-Z") => CoeffVariant::TrivialZ,
                    Some(&"free-module") => CoeffVariant::FreeModule,
                    _ => {
                        return Err(ParseError::new(
                            line,
                            "usage: coeffs <trivial-Z|free-module> w2=<0|1>",
                        ))
                    }
                };
                let w2 = match toks.get(2) {
                    None => false,
                    Some(t) => match t.strip_prefix("w2=") {
                        Some(b) => parse_bit(b).map_err(|e| e.at(line))?,
                        None => return Err(ParseError::new(line, "expected w2=<0|1>")),
                    },
                };
                coeffs = CoeffSystem {
                    variant,
                    w2_bit: w2,
                };
            }
            "k1" => {
                k1_zero = match toks.get(1) {
                    Some(&"zero") => true,
                    Some(&"nonzero") => false,
                    _ => return Err(ParseError::new(line, "usage: k1 <zero|nonzero>")),
                }
            }
            "chi" => chi_lines.push((line, toks[1..].join(" "))),
            other => {
                return Err(ParseError::new(
                    line,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    group = group
        .with_w1(&w1)
        .map_err(|e| ParseError::new(0, e.to_string()))?;
    let mut ctx = CharacteristicData::new(group, coeffs);
    ctx.k1_zero = k1_zero;
    for (line, body) in chi_lines {
        let chi = parse_gamma(&ctx.group, &body).map_err(|e| e.at(line))?;
        ctx.check_gamma(&chi)
            .map_err(|e| ParseError::new(line, e.to_string()))?;
        ctx.chi_span.push(chi);
    }
    Ok(ctx)
}

fn parse_finite(toks: &[&str]) -> Result<FactorGroup, ParseError> {
    let usage = "usage: finite <name> <k> <k*k table entries> [names <n1> .. <nk>]";
    let (name, k) = match toks {
        [_, name, k, ..] => (*name, k.parse::<usize>().map_err(|_| err(usage))?),
        _ => return Err(err(usage)),
    };
    let rest = &toks[3..];
    if rest.len() < k * k {
        return Err(err(format!("expected {} table entries", k * k)));
    }
    let entries: Vec<usize> = rest[..k * k]
        .iter()
        .map(|t| t.parse().map_err(|_| err(format!("bad table entry `{t}`"))))
        .collect::<Result<_, _>>()?;
    let names: Vec<String> = match &rest[k * k..] {
        [] => (0..k).map(|i| format!("{name}{i}")).collect(),
        [kw, ns @ ..] if *kw == "names" && ns.len() == k => {
            ns.iter().map(|s| s.to_string()).collect()
        }
        _ => return Err(err(format!("expected `names` followed by {k} names"))),
    };
    let table = entries.chunks(k).map(<[usize]>::to_vec).collect();
    let t = FiniteTable::new(names, table).map_err(|e| err(e.to_string()))?;
    Ok(FactorGroup::new(name, FactorKind::Finite(t)))
}

/// A parsed schedule with the source line of every event.
#[derive(Clone, Debug)]
pub struct ParsedSchedule {
    pub schedule: Schedule,
    pub lines: Vec<usize>,
}

pub fn parse_schedule(
    ctx: Arc<CharacteristicData>,
    text: &str,
) -> Result<ParsedSchedule, ParseError> {
    let g = &ctx.group;
    let mut sched = Schedule::new(ctx.clone());
    let mut event_lines = Vec::new();
    let num = |t: &str, line: usize| {
        t.parse::<usize>()
            .map_err(|_| ParseError::new(line, format!("expected a number, got `{t}`")))
    };
    for (line, toks) in lines(text) {
        let at = |e: ParseError| e.at(line);
        let ev = match toks.as_slice() {
            ["birth", l] => Event::Birth {
                label: num(l, line)?,
            },
            ["death", u, l, s, w] => Event::Death {
                upper: num(u, line)?,
                lower: num(l, line)?,
                sign: parse_sign(s).map_err(at)?,
                path: parse_word(g, w).map_err(at)?,
            },
            ["slide-upper", j, k, s, w] => Event::SlideUpper {
                j: num(j, line)?,
                k: num(k, line)?,
                sign: parse_sign(s).map_err(at)?,
                g: parse_word(g, w).map_err(at)?,
            },
            ["slide-lower", j, k, s, w] => Event::SlideLower {
                j: num(j, line)?,
                k: num(k, line)?,
                sign: parse_sign(s).map_err(at)?,
                g: parse_word(g, w).map_err(at)?,
            },
            ["finger", id, i, j, w] => Event::Finger {
                id: num(id, line)?,
                i: num(i, line)?,
                j: num(j, line)?,
                gamma: parse_word(g, w).map_err(at)?,
            },
            ["whitney", id, sigma, s] => Event::Whitney {
                id: num(id, line)?,
                sigma: parse_ring(g, sigma).map_err(at)?,
                s: parse_bit(s).map_err(at)?,
            },
            ["dim", n] => {
                sched.dimension = n
                    .parse()
                    .map_err(|_| ParseError::new(line, format!("bad dimension `{n}`")))?;
                continue;
            }
            ["stab", k] => {
                sched.stabilizations = num(k, line)?;
                continue;
            }
            [kw, ..] => {
                return Err(ParseError::new(
                    line,
                    format!("malformed or unknown `{kw}` line"),
                ));
            }
            [] => continue,
        };
        sched.events.push(ev);
        event_lines.push(line);
    }
    Ok(ParsedSchedule {
        schedule: sched,
        lines: event_lines,
    })
}

pub fn format_schedule(s: &Schedule) -> String {
    let g = &s.ctx.group;
    let mut out = String::new();
    if s.dimension != 4 {
        let _ = writeln!(out, "dim {}", s.dimension);
    }
    if s.stabilizations != 0 {
        let _ = writeln!(out, "stab {}", s.stabilizations);
    }
    for ev in &s.events {
        let _ = match ev {
            Event::Birth { label } => writeln!(out, "birth {label}"),
            Event::Death {
                upper,
                lower,
                sign,
                path,
            } => {
                writeln!(
                    out,
                    "death {upper} {lower} {} {}",
                    sign_str(*sign),
                    format_word(g, path)
                )
            }
            Event::SlideUpper { j, k, sign, g: w } => {
                writeln!(
                    out,
                    "slide-upper {j} {k} {} {}",
                    sign_str(*sign),
                    format_word(g, w)
                )
            }
            Event::SlideLower { j, k, sign, g: w } => {
                writeln!(
                    out,
                    "slide-lower {j} {k} {} {}",
                    sign_str(*sign),
                    format_word(g, w)
                )
            }
            Event::Finger { id, i, j, gamma } => {
                writeln!(out, "finger {id} {i} {j} {}", format_word(g, gamma))
            }
            Event::Whitney { id, sigma, s } => {
                writeln!(
                    out,
                    "whitney {id} {} {}",
                    format_ring(g, sigma),
                    u8::from(*s)
                )
            }
        };
    }
    out
}
