//! Realizing a single Wh1 generator by an eye, stabilizing once when the
//! pi_2 twist cannot absorb a nonzero s.

use std::sync::Arc;

use pseudoisotopy::format::{format_ring, format_wh1, parse_group_spec, parse_ring, parse_word};
use pseudoisotopy::schedule::{compute_theta, realize_theta, EyeFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(parse_group_spec(
        "finite A 2 0 1 1 0 names e a\n\
         finite B 3 0 1 2 1 2 0 2 0 1 names e b b2\n\
         coeffs free-module w2=1\n",
    )?);
    let g = &ctx.group;
    let gamma = parse_word(g, "a.b")?;
    for sigma in ["a", "a + b", "2*a.b"] {
        let sigma = parse_ring(g, sigma)?;
        for s in [false, true] {
            match realize_theta(ctx.clone(), sigma.clone(), s, gamma.clone(), false) {
                Ok(_) => println!(
                    "({}, {}) realized directly",
                    u8::from(s),
                    format_ring(g, &sigma)
                ),
                Err(e) => {
                    let sched = realize_theta(ctx.clone(), sigma.clone(), s, gamma.clone(), true)?;
                    let theta = compute_theta(&EyeFamily::try_from(sched.clone())?)?;
                    println!(
                        "({}, {}): {e}; after {} stabilization theta = {}",
                        u8::from(s),
                        format_ring(g, &sigma),
                        sched.stabilizations,
                        format_wh1(g, &theta)
                    );
                }
            }
        }
    }
    Ok(())
}
