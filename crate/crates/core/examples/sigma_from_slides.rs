//! The Wh2 invariant of a one-parameter family given only by handle slides.

use std::sync::Arc;

use pseudoisotopy::format::{format_steinberg, parse_group_spec, parse_schedule};
use pseudoisotopy::schedule::{compute_sigma, evolve_differential};

const SCHEDULE: &str = "\
birth 1
birth 2
slide-upper 1 2 + b
slide-upper 2 1 - b2
slide-upper 1 2 + b
death 1 2 + b
death 2 1 - b2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(parse_group_spec(
        "finite A 2 0 1 1 0 names e a\n\
         finite B 3 0 1 2 1 2 0 2 0 1 names e b b2\n",
    )?);
    let valid = parse_schedule(ctx.clone(), SCHEDULE)?.schedule.validate()?;
    let steps = evolve_differential(&valid);
    println!("{} boundary matrices along the path", steps.len());

    let sigma = compute_sigma(&valid)?;
    let g = &ctx.group;
    println!("slide word:  {}", format_steinberg(g, sigma.element.word()));
    println!(
        "correction:  {}",
        format_steinberg(g, sigma.element.w_correction())
    );
    println!("in K2:       {}", g.is_k2(&sigma.element.k2_word()));
    Ok(())
}
