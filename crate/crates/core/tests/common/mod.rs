//! Test-only oracles, independent of the library's expansion code.

#![allow(dead_code)]

use std::collections::HashSet;

/// Exponent vectors of degree `deg` in `vars` variables, lex order with the
/// first variable largest.
pub fn lex_monomials(vars: usize, deg: u32) -> Vec<Vec<u32>> {
    fn go(vars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == vars {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=deg).rev() {
            prefix.push(a);
            go(vars, deg - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, deg, &mut Vec::new(), &mut out);
    out
}

fn count_monomials(vars: usize, deg: u32) -> u64 {
    // C(vars - 1 + deg, deg) by Pascal's rule, no shared code
    let mut row = vec![1u64; deg as usize + 1];
    for _ in 1..vars {
        for k in 1..row.len() {
            row[k] += row[k - 1];
        }
    }
    row[deg as usize]
}

/// Largest possible `h_{i+1}` given `h_i = n`, by brute force: in enough
/// variables, keep the `n` lex-smallest degree-`i` monomials (the complement
/// of a lex-segment ideal) and count degree-`i+1` monomials all of whose
/// degree-`i` divisors are kept.
pub fn lex_segment_bound(n: u64, i: u32) -> u64 {
    let mut vars = 1;
    while count_monomials(vars, i) < n {
        vars += 1;
    }
    let all = lex_monomials(vars, i);
    let kept: HashSet<Vec<u32>> = all[all.len() - n as usize..].iter().cloned().collect();
    lex_monomials(vars, i + 1)
        .into_iter()
        .filter(|m| {
            (0..vars).filter(|&k| m[k] > 0).all(|k| {
                let mut d = m.clone();
                d[k] -= 1;
                kept.contains(&d)
            })
        })
        .count() as u64
}

/// Every symmetric unimodal O-sequence of socle degree `e` with
/// `h_1 <= max_codim`, built from first halves bounded by plain Macaulay
/// growth `C(h_1 + i - 1, i)` and filtered afterwards.
pub fn symmetric_unimodal_candidates(e: usize, max_codim: u64) -> Vec<Vec<u64>> {
    let half = e / 2;
    let mut out = Vec::new();
    let mut prefix = vec![1u64];
    fn extend(
        prefix: &mut Vec<u64>,
        half: usize,
        e: usize,
        max_codim: u64,
        out: &mut Vec<Vec<u64>>,
    ) {
        if prefix.len() == half + 1 {
            let mut full = prefix.clone();
            for i in (half + 1)..=e {
                full.push(prefix[e - i]);
            }
            out.push(full);
            return;
        }
        let i = prefix.len() as u32;
        let cap = if i == 1 {
            max_codim
        } else {
            count_monomials(prefix[1] as usize, i)
        };
        for v in 1..=cap {
            prefix.push(v);
            extend(prefix, half, e, max_codim, out);
            prefix.pop();
        }
    }
    if e == 0 {
        return vec![vec![1]];
    }
    extend(&mut prefix, half, e, max_codim, &mut out);
    out
}
