//! Reference computations that share no code with the library.

#![allow(dead_code)]

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut total = 0;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                total += sign * m[0][j] * det(&minor);
            }
            total
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: d_k is the gcd of all k×k
/// minors and the k-th factor is d_k / d_{k-1}.
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut d = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|r| cs.iter().map(|c| m[*r][*c]).collect()).collect();
                d = gcd(d, det(&sub));
                if d == 1 {
                    break;
                }
            }
            if d == 1 {
                break;
            }
        }
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}

/// Abelian group Z^n / rows as (free rank, torsion > 1).
pub fn cokernel(n: usize, rows: &[Vec<i64>]) -> (usize, Vec<i64>) {
    let f = invariant_factors(rows);
    (n - f.len(), f.into_iter().filter(|d| *d > 1).collect())
}

/// Order of Z^n modulo a square relation matrix; 0 when infinite.
pub fn order(rows: &[Vec<i64>]) -> i64 {
    det(rows).abs()
}

/// Euler characteristic of a (g,k,p,b) relative trisection by inclusion and
/// exclusion over the three sectors, the three compression bodies and the
/// central surface.
pub fn relative_euler(g: i64, k: i64, p: i64, b: i64) -> i64 {
    let sector = 1 - k;
    let surface = 2 - 2 * g - b;
    let compression_body = surface + (g - p);
    3 * sector - 3 * compression_body + surface
}

/// [`invariant_factors`] for matrices of at most 3×3, without allocation.
pub fn invariant_factors_small(m: &[[i64; 3]; 3], rows: usize, cols: usize) -> ([i64; 3], usize) {
    let mut out = [0; 3];
    let mut d1 = 0;
    for r in m.iter().take(rows) {
        for v in r.iter().take(cols) {
            d1 = gcd(d1, *v);
        }
    }
    if d1 == 0 {
        return (out, 0);
    }
    out[0] = d1;
    let mut d2 = 0;
    for r0 in 0..rows {
        for r1 in r0 + 1..rows {
            for c0 in 0..cols {
                for c1 in c0 + 1..cols {
                    d2 = gcd(d2, m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]);
                }
            }
        }
    }
    if d2 == 0 {
        return (out, 1);
    }
    out[1] = d2 / d1;
    if rows < 3 || cols < 3 {
        return (out, 2);
    }
    let d3 = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        .abs();
    if d3 == 0 {
        return (out, 2);
    }
    out[2] = d3 / d2;
    (out, 3)
}

/// Smith form by gcd elimination in i128; returns (rank, torsion > 1).
pub fn cokernel_by_elimination(n: usize, rows: &[Vec<i64>]) -> (usize, Vec<i64>) {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|v| *v as i128).collect()).collect();
    let (r, c) = (a.len(), n);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if a[i][j] != 0 && best.map_or(true, |(x, y)| a[i][j].abs() < a[x][y].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..r {
            let q = a[i][t] / a[t][t];
            for j in t..c {
                a[i][j] -= q * a[t][j];
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..c {
            let q = a[t][j] / a[t][t];
            for i in t..r {
                a[i][j] -= q * a[i][t];
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..r).flat_map(|i| (t + 1..c).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % a[t][t] != 0);
        if let Some((i, _)) = bad {
            for j in t..c {
                a[t][j] += a[i][j];
            }
            continue;
        }
        diag.push(a[t][t].abs() as i64);
        t += 1;
    }
    (n - diag.len(), diag.into_iter().filter(|d| *d > 1).collect())
}
