//! Integer row reduction: Hermite normal form, coset representatives and rank.

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// The result is a basis in echelon form with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite(rows: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for col in 0..width {
        let mut pivot: Option<Vec<i128>> = None;
        let mut rest = Vec::with_capacity(m.len());
        for row in m.drain(..) {
            if row[col] == 0 {
                rest.push(row);
                continue;
            }
            pivot = Some(match pivot {
                None => row,
                Some(p) => {
                    let (g, x, y) = ext_gcd(p[col], row[col]);
                    let (a, b) = (p[col] / g, row[col] / g);
                    let combined: Vec<i128> = (0..width).map(|k| x * p[k] + y * row[k]).collect();
                    let cleared: Vec<i128> = (0..width).map(|k| a * row[k] - b * p[k]).collect();
                    rest.push(cleared);
                    combined
                }
            });
        }
        m = rest
            .into_iter()
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        if let Some(mut p) = pivot {
            if p[col] < 0 {
                p.iter_mut().for_each(|v| *v = -*v);
            }
            basis.push((col, p));
        }
    }
    for k in 0..basis.len() {
        let (col, ref p) = basis[k];
        let p = p.clone();
        for (_, above) in basis.iter_mut().take(k) {
            let q = above[col].div_euclid(p[col]);
            if q != 0 {
                above.iter_mut().zip(&p).for_each(|(a, b)| *a -= q * b);
            }
        }
    }
    basis.into_iter().map(|(_, r)| r).collect()
}

/// Canonical representative of `v` modulo the lattice with Hermite basis
/// `basis`: each pivot coordinate is brought into `[0, pivot)`.
pub fn reduce(v: &[i128], basis: &[Vec<i128>]) -> Vec<i128> {
    let mut out = v.to_vec();
    for b in basis {
        let Some(col) = b.iter().position(|&x| x != 0) else {
            continue;
        };
        let q = out[col].div_euclid(b[col]);
        if q != 0 {
            out.iter_mut().zip(b).for_each(|(a, x)| *a -= q * x);
        }
    }
    out
}

/// Rank over `ℚ`.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    hermite(rows).len()
}
