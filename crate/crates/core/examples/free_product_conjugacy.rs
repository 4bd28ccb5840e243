//! Conjugacy classes in Z/2 * Z/3: the powers (ab)^n give pairwise distinct
//! classes, none conjugate to its inverse.

use pseudoisotopy::format::{format_word, parse_group_spec, parse_word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = parse_group_spec(
        "finite A 2 0 1 1 0 names e a\n\
         finite B 3 0 1 2 1 2 0 2 0 1 names e b b2\n",
    )?;
    let g = &ctx.group;
    let a = parse_word(g, "a")?;
    let b = parse_word(g, "b")?;

    let u = parse_word(g, "b.a.b.a.b")?;
    let rep = g.conj_class_rep(&u);
    println!(
        "class of {} is {}",
        format_word(g, &u),
        format_word(g, rep.word())
    );

    let fam = g.distinct_class_family(&a, &b, 6)?;
    for (n, class) in fam.classes.iter().enumerate() {
        let inv = g.class_inverse(class);
        println!(
            "(ab)^{}: rep {}, alternating length {}, self-inverse: {}",
            n + 1,
            format_word(g, class.word()),
            g.alternating_length(class)?,
            &inv == class,
        );
    }
    println!("separated from inverses: {}", fam.inverse_separated);

    let ab3 = parse_word(g, "a.b.a.b.a.b")?;
    println!(
        "(ab)^3 ~ (ab)^-3: {}",
        g.are_conjugate(&ab3, &g.invert(&ab3))
    );
    Ok(())
}
