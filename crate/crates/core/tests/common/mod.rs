//! Independent oracles: classical Schur polynomials and Kostka numbers by
//! brute-force enumeration of semistandard Young tableaux.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gschur::exactalg::{int, Monomial};
use gschur::{MultiPoly, Partition};

/// Calls `visit` with the content (multiplicity of each entry `1..=n`) of
/// every semistandard tableau of shape `lambda` with entries at most `n`.
fn for_each_ssyt(lambda: &Partition, n: usize, visit: &mut dyn FnMut(&[u32])) {
    let shape = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut content = vec![0u32; n];

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        n: usize,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if k == cells.len() {
            visit(content);
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=n as u32 {
            grid[r][c] = v;
            content[v as usize - 1] += 1;
            fill(k + 1, cells, grid, content, n, visit);
            content[v as usize - 1] -= 1;
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &mut grid, &mut content, n, visit);
}

/// `s_λ(x1..xn) = Σ_T x^T` over semistandard tableaux.
pub fn schur_by_tableaux(lambda: &Partition, n: usize) -> MultiPoly {
    let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for_each_ssyt(lambda, n, &mut |content| {
        *counts.entry(content.to_vec()).or_default() += 1;
    });
    MultiPoly::from_terms(
        n,
        counts
            .into_iter()
            .map(|(e, c)| (Monomial::from_exponents(&e), int(c))),
    )
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> i64 {
    let n = mu.len().max(1);
    let target: Vec<u32> = (1..=n).map(|k| mu.part(k)).collect();
    let mut count = 0;
    for_each_ssyt(lambda, n, &mut |content| {
        if content == target.as_slice() {
            count += 1;
        }
    });
    count
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}
