//! The dual of an eye has barred invariant up to the dimension sign, and the
//! double lands in the kernel of the matching d-map.

use std::sync::Arc;

use pseudoisotopy::format::{format_schedule, format_wh1, parse_group_spec, parse_schedule};
use pseudoisotopy::schedule::{compute_theta, double_schedule, dual_schedule, EyeFamily};

const SCHEDULE: &str = "\
birth 1
birth 2
finger 1 1 1 a.b
whitney 1 2 1
finger 2 2 2 b2
whitney 2 1 0
death 1 1 + 1
death 2 2 + 1
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = Arc::new(parse_group_spec(
        "finite A 2 0 1 1 0 names e a\n\
         finite B 3 0 1 2 1 2 0 2 0 1 names e b b2\n\
         w1 a=-1\n",
    )?);
    let g = &ctx.group;
    for dim in [4, 5] {
        let mut sched = parse_schedule(ctx.clone(), SCHEDULE)?.schedule;
        sched.dimension = dim;
        let valid = sched.validate()?;
        let theta = compute_theta(&EyeFamily::try_from(valid.clone())?)?;
        let dual = dual_schedule(&valid)?;
        let dual_theta = compute_theta(&EyeFamily::try_from(dual.clone())?)?;
        let double_theta = compute_theta(&EyeFamily::try_from(double_schedule(&valid)?)?)?;
        println!("n = {dim}");
        println!("  theta        {}", format_wh1(g, &theta));
        println!("  dual theta   {}", format_wh1(g, &dual_theta));
        println!("  double theta {}", format_wh1(g, &double_theta));
        println!("  double in Z_{dim}: {}", ctx.in_z(dim, &double_theta));
        if dim == 4 {
            print!("{}", format_schedule(&dual));
        }
    }
    Ok(())
}
