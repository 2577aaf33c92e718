//! Brute-force oracles written independently of the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

pub type Shape = Vec<usize>;

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Shape> {
    fn go(n: usize, max: usize, prefix: &mut Shape, out: &mut Vec<Shape>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard fillings of `shape` with content `content`,
/// by filling cells in row-major order.
pub fn kostka(shape: &[usize], content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut remaining = content.to_vec();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, remaining: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 1..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            if j > 0 && grid[i][j - 1] > v {
                continue;
            }
            if i > 0 && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            remaining[v - 1] -= 1;
            total += go(k + 1, cells, grid, remaining);
            remaining[v - 1] += 1;
            grid[i][j] = 0;
        }
        total
    }
    go(0, &cells, &mut grid, &mut remaining)
}

/// Schur coefficients of the symmetric function whose monomial
/// coefficients (indexed by partitions of `n`) are `monomial`.
pub fn schur_from_monomial(n: usize, monomial: &BTreeMap<Shape, i64>) -> BTreeMap<Shape, i64> {
    let parts = partitions(n);
    let mut schur: BTreeMap<Shape, i64> = BTreeMap::new();
    for mu in &parts {
        let mut c = monomial.get(mu).copied().unwrap_or(0);
        for (lam, &d) in &schur {
            c -= d * kostka(lam, mu) as i64;
        }
        if c != 0 {
            schur.insert(mu.clone(), c);
        }
    }
    schur
}

/// Counts objects by content, keeping partition contents.
pub fn monomial_counts<'a>(contents: impl IntoIterator<Item = &'a Vec<usize>>) -> BTreeMap<Shape, i64> {
    let mut out = BTreeMap::new();
    for c in contents {
        let mut trimmed = c.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        if trimmed.windows(2).all(|p| p[0] >= p[1]) && !trimmed.contains(&0) {
            *out.entry(trimmed).or_insert(0) += 1;
        }
    }
    out
}

pub fn content_of(word: &[usize], m: usize) -> Vec<usize> {
    let mut c = vec![0; m];
    for &l in word {
        c[l - 1] += 1;
    }
    c
}

/// All words of length `n` over `{1, …, m}`.
pub fn words(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=m).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn rotate_once(w: &[usize]) -> Vec<usize> {
    let mut v = vec![w[w.len() - 1]];
    v.extend_from_slice(&w[..w.len() - 1]);
    v
}

/// Necklaces of length `n` over `{1, …, m}` as (least rotation, frequency).
pub fn necklaces(n: usize, m: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    for w in words(n, m) {
        let mut rots = vec![w.clone()];
        let mut cur = rotate_once(&w);
        while cur != w {
            rots.push(cur.clone());
            cur = rotate_once(&cur);
        }
        if rots.iter().all(|r| &w <= r) {
            out.push((w, n / rots.len()));
        }
    }
    out
}

fn poly_mul(a: &HashMap<Vec<u32>, i64>, b: &HashMap<Vec<u32>, i64>) -> HashMap<Vec<u32>, i64> {
    let mut out: HashMap<Vec<u32>, i64> = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `χ^λ(μ)` as the coefficient of `x^{λ+δ}` in `p_μ · Δ` on `ℓ(λ)` variables.
pub fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    let k = lambda.len();
    if k == 0 {
        return 1;
    }
    let mut poly: HashMap<Vec<u32>, i64> = HashMap::new();
    poly.insert(vec![0; k], 1);
    for i in 0..k {
        for j in i + 1..k {
            let mut factor = HashMap::new();
            let mut ei = vec![0; k];
            ei[i] = 1;
            let mut ej = vec![0; k];
            ej[j] = 1;
            factor.insert(ei, 1);
            factor.insert(ej, -1);
            poly = poly_mul(&poly, &factor);
        }
    }
    for &part in mu {
        let mut factor = HashMap::new();
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = part as u32;
            factor.insert(e, 1);
        }
        poly = poly_mul(&poly, &factor);
    }
    let target: Vec<u32> = (0..k).map(|i| (lambda[i] + k - 1 - i) as u32).collect();
    poly.get(&target).copied().unwrap_or(0)
}

/// The permutation of `{0, …, n-1}` with disjoint cycles of lengths `nu`
/// on consecutive blocks.
pub fn block_cycles(nu: &[usize]) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &len in nu {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

pub fn cycle_lengths(perm: &[usize]) -> Shape {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mobius(mut n: usize) -> i64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// `Σ_{k ∈ [q], gcd(k,q)=1} ζ_q^{kr}`.
fn ramanujan(q: usize, r: usize) -> i64 {
    (1..=q)
        .filter(|d| q.is_multiple_of(*d) && r.is_multiple_of(*d))
        .map(|d| d as i64 * mobius(q / d))
        .sum()
}

/// `(1/ℓ) Σ_j χ^λ(σ^j) ζ_ℓ^{−rj}` with `σ^j` formed by composing `σ`.
pub fn induced_multiplicity(lambda: &[usize], nu: &[usize], r: usize) -> i64 {
    let sigma = block_cycles(nu);
    let n = sigma.len();
    let mut power: Vec<usize> = (0..n).collect();
    let mut chars = Vec::new();
    loop {
        power = power.iter().map(|&i| sigma[i]).collect();
        chars.push(character(lambda, &cycle_lengths(&power)));
        if power.iter().enumerate().all(|(i, &x)| i == x) {
            break;
        }
    }
    let ell = chars.len();
    // group j by gcd(j, ℓ): Σ_{gcd(j,ℓ)=g} ζ^{−rj} = c_{ℓ/g}(r)
    let mut total = 0i64;
    for g in (1..=ell).filter(|g| ell % g == 0) {
        total += chars[g - 1] * ramanujan(ell / g, r);
    }
    assert_eq!(total % ell as i64, 0);
    total / ell as i64
}

pub fn order(nu: &[usize]) -> usize {
    nu.iter().fold(1, |acc, &p| acc / gcd(acc, p) * p)
}
