//! The Wh1 invariant of an eye with one circle of intersection, read off the
//! trace of its circle matrix.

use std::sync::Arc;

use pseudoisotopy::format::{format_wh1, parse_schedule};
use pseudoisotopy::ring::CharacteristicData;
use pseudoisotopy::schedule::{circles_from_eye, compute_theta, EyeFamily};

const SCHEDULE: &str = "\
birth 1
finger 1 1 1 t^2
whitney 1 3 1
death 1 1 + 1
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(CharacteristicData::circle());
    let eye = EyeFamily::try_from(parse_schedule(ctx.clone(), SCHEDULE)?.schedule)?;
    for c in circles_from_eye(&eye)? {
        println!("{c:?}");
    }
    let theta = compute_theta(&eye)?;
    println!("theta = {}", format_wh1(&ctx.group, &theta));
    Ok(())
}
