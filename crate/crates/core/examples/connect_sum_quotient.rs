//! Reduction of Wh1 images modulo the bar span and a declared chi span, for
//! Z * Z with pi_2 a free module.

use pseudoisotopy::format::{format_qimage, parse_gamma, parse_group_spec};
use pseudoisotopy::whitehead::{integer_rank, quotient_rank, QImageElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = parse_group_spec(
        "cyclic a\n\
         cyclic b\n\
         coeffs free-module w2=0\n\
         k1 nonzero\n\
         chi (0,1)a.b\n\
         chi (1,2)a.b.a.b (0,1)b^-1.a^-1.b^-1.a^-1.b^-1.a^-1\n",
    )?;
    let g = &ctx.group;
    let image = |text: &str| -> Result<QImageElement, Box<dyn std::error::Error>> {
        Ok(ctx.q(&ctx.wh1_canonicalize(&parse_gamma(g, text)?)))
    };

    let x = image("(0,3)a.b (1,1)b^-1.a^-1 (0,2)a.b.a.b")?;
    println!("x            = {}", format_qimage(g, &x));
    println!(
        "mod bar span = {}",
        format_qimage(g, &ctx.q_span_reduce(&x))
    );
    println!(
        "mod chi span = {}",
        format_qimage(g, &ctx.chi_hat_reduce(&x)?)
    );

    let powers = ["a.b", "a.b.a.b", "a.b.a.b.a.b", "a.b.a.b.a.b.a.b"];
    let family: Vec<QImageElement> = powers
        .iter()
        .map(|w| image(&format!("(0,1){w}")).map(|q| ctx.q_span_reduce(&q)))
        .collect::<Result<_, _>>()?;
    let gens: Vec<QImageElement> = ctx
        .chi_hat_generators()
        .iter()
        .map(|q| ctx.q_span_reduce(q))
        .collect();
    println!(
        "rank {} before, {} after the chi span",
        integer_rank(&family),
        quotient_rank(&family, &gens)
    );
    Ok(())
}
