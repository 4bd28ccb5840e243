//! Steinberg words over Z[Z/2 * Z/3]: a commutator relation maps to the
//! identity matrix, and a W-generated monomial matrix is realized back as a
//! word.

use pseudoisotopy::format::{format_steinberg, parse_group_spec, parse_ring, parse_word};
use pseudoisotopy::steinberg::{
    realize_monomial, w_product, SteinbergLetter, SteinbergWord, WFactor,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = parse_group_spec(
        "finite A 2 0 1 1 0 names e a\n\
         finite B 3 0 1 2 1 2 0 2 0 1 names e b b2\n",
    )?;
    let g = &ctx.group;
    let l = parse_ring(g, "a + 2*b")?;
    let m = parse_ring(g, "b2")?;
    let lm = g.ring_mul(&l, &m);

    // [x12(λ), x23(μ)] = x13(λμ)
    let x = |i, j, r, e| SteinbergLetter::new(i, j, r, e);
    let rel = SteinbergWord::new([
        x(1, 2, l.clone(), 1)?,
        x(2, 3, m.clone(), 1)?,
        x(1, 2, l, -1)?,
        x(2, 3, m, -1)?,
        x(1, 3, lm, -1)?,
    ]);
    println!("{}", format_steinberg(g, &rel));
    println!("in K2: {}", g.is_k2(&rel));

    let b = parse_word(g, "b")?;
    let ab = parse_word(g, "a.b")?;
    let factors = [WFactor::new(1, 2, 1, b)?, WFactor::new(2, 3, -1, ab)?];
    let matrix = g.st_pi(&w_product(g, &factors), 3);
    let real = realize_monomial(g, &matrix.monomial_decompose()?);
    let word = real.word(g);
    println!(
        "realized with {} letters, residual trivial: {}",
        word.len(),
        real.residual.is_identity()
    );
    println!("matches on 5 x 5: {}", g.st_pi(&word, 5) == matrix);
    Ok(())
}
