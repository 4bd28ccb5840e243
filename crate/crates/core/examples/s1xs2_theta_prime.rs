//! Over the circle group the invariant folds onto positive powers of t, and
//! pairs t^a, t^-a with opposite integer parts cancel.

use std::sync::Arc;

use pseudoisotopy::format::{format_wh1, parse_gamma, parse_schedule};
use pseudoisotopy::ring::CharacteristicData;
use pseudoisotopy::schedule::{compute_theta, theta_prime, theta_prime_of, EyeFamily};

const SCHEDULE: &str = "\
birth 1
birth 2
finger 1 1 1 t
whitney 1 1 1
finger 2 2 2 t^-1
whitney 2 -1 0
finger 3 1 1 t^3
whitney 3 2 0
death 1 1 + 1
death 2 2 + 1
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(CharacteristicData::circle());
    let g = &ctx.group;
    let eye = EyeFamily::try_from(parse_schedule(ctx.clone(), SCHEDULE)?.schedule)?;
    println!("theta  = {}", format_wh1(g, &compute_theta(&eye)?));
    for (a, n) in theta_prime(&eye)? {
        println!("theta' has {n} t^{a}");
    }

    let pair = ctx.wh1_canonicalize(&parse_gamma(g, "(0,2)t^2 (1,-2)t^-2")?);
    println!(
        "{} folds to {:?}",
        format_wh1(g, &pair),
        theta_prime_of(&ctx, &pair)?
    );
    Ok(())
}
