//! Naive generate-and-filter oracles. These share nothing with the library's
//! counting code beyond the label types.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap};

/// p(n) by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Every weakly decreasing positive sequence summing to n, unsorted.
pub fn naive_partitions(n: u32) -> Vec<Vec<u32>> {
    naive_compositions(n)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

/// Every positive sequence summing to n.
pub fn naive_compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in naive_compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Calls `visit` on every grid of the given row lengths with entries in `1..=max`.
pub fn for_each_grid(shape: &[u32], max: u32, visit: &mut dyn FnMut(&[Vec<u32>])) {
    let cells: usize = shape.iter().sum::<u32>() as usize;
    let mut flat = vec![1u32; cells];
    loop {
        let mut grid = Vec::new();
        let mut k = 0;
        for &len in shape {
            grid.push(flat[k..k + len as usize].to_vec());
            k += len as usize;
        }
        visit(&grid);
        // odometer
        let mut i = 0;
        loop {
            if i == cells {
                return;
            }
            if flat[i] < max {
                flat[i] += 1;
                break;
            }
            flat[i] = 1;
            i += 1;
        }
    }
}

pub fn content(grid: &[Vec<u32>]) -> Vec<u32> {
    let max = grid.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; max];
    for &v in grid.iter().flatten() {
        c[v as usize - 1] += 1;
    }
    c
}

pub fn is_ssyt(grid: &[Vec<u32>]) -> bool {
    for row in grid {
        for c in 1..row.len() {
            if row[c - 1] > row[c] {
                return false;
            }
        }
    }
    for r in 1..grid.len() {
        for c in 0..grid[r].len() {
            if grid[r][c] <= grid[r - 1][c] {
                return false;
            }
        }
    }
    true
}

pub fn is_ssct(grid: &[Vec<u32>]) -> bool {
    let get = |i: usize, j: usize| grid.get(i).and_then(|r| r.get(j)).copied();
    for row in grid {
        for c in 1..row.len() {
            if row[c - 1] < row[c] {
                return false;
            }
        }
    }
    for r in 1..grid.len() {
        if grid[r][0] <= grid[r - 1][0] {
            return false;
        }
    }
    for i in 0..grid.len() {
        for j in i + 1..grid.len() {
            for m in 1..grid[j].len() {
                if let Some(prev) = get(i, m - 1) {
                    if grid[j][m] <= prev {
                        match get(i, m) {
                            Some(up) if grid[j][m] < up => {}
                            _ => return false,
                        }
                    }
                }
            }
        }
    }
    true
}

/// (shape, content) -> number of SSYT, for all shapes and contents of size n.
pub fn naive_kostka_table(n: u32) -> HashMap<(Vec<u32>, Vec<u32>), u64> {
    let mut table = HashMap::new();
    for shape in naive_partitions(n) {
        for_each_grid(&shape, n, &mut |g| {
            if is_ssyt(g) {
                *table.entry((shape.clone(), content(g))).or_insert(0) += 1;
            }
        });
    }
    table
}

/// (shape, content) -> number of SSCT.
pub fn naive_ssct_table(n: u32) -> HashMap<(Vec<u32>, Vec<u32>), u64> {
    let mut table = HashMap::new();
    for shape in naive_compositions(n) {
        for_each_grid(&shape, n, &mut |g| {
            if is_ssct(g) {
                *table.entry((shape.clone(), content(g))).or_insert(0) += 1;
            }
        });
    }
    table
}

/// (shape, descent composition) -> number of SCT.
pub fn naive_sct_table(n: u32) -> HashMap<(Vec<u32>, Vec<u32>), u64> {
    let mut table = HashMap::new();
    for shape in naive_compositions(n) {
        for_each_grid(&shape, n, &mut |g| {
            let c = content(g);
            if c.len() == n as usize && c.iter().all(|&x| x == 1) && is_ssct(g) {
                let mut col = vec![0usize; n as usize + 2];
                for row in g {
                    for (j, &v) in row.iter().enumerate() {
                        col[v as usize] = j;
                    }
                }
                let des: Vec<u32> = (1..n)
                    .filter(|&i| col[i as usize + 1] >= col[i as usize])
                    .collect();
                let mut comp = Vec::new();
                let mut prev = 0;
                for s in des {
                    comp.push(s - prev);
                    prev = s;
                }
                comp.push(n - prev);
                *table.entry((shape.clone(), comp)).or_insert(0) += 1;
            }
        });
    }
    table
}

/// Number of 0/1 matrices with the given row and column sums: every matrix
/// with the right row sums, filtered by column sums.
pub fn naive_zero_one(rows: &[u32], cols: &[u32]) -> u64 {
    let width = cols.len();
    let row_choices: Vec<Vec<u64>> = rows
        .iter()
        .map(|&r| (0u64..1 << width).filter(|m| m.count_ones() == r).collect())
        .collect();
    let mut count = 0;
    let mut idx = vec![0usize; rows.len()];
    if row_choices.iter().any(|c| c.is_empty()) {
        return 0;
    }
    loop {
        let ok = (0..width).all(|c| {
            idx.iter()
                .enumerate()
                .filter(|(r, &i)| row_choices[*r][i] >> c & 1 == 1)
                .count() as u32
                == cols[c]
        });
        if ok {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == rows.len() {
                return count;
            }
            idx[k] += 1;
            if idx[k] < row_choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn subset_of(comp: &[u32]) -> BTreeSet<u32> {
    let mut acc = 0;
    comp.iter()
        .take(comp.len().saturating_sub(1))
        .map(|p| {
            acc += p;
            acc
        })
        .collect()
}
