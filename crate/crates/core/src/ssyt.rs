//! Brute-force count of semistandard Young tableaux of rectangular shape.
//!
//! Shape is `k` rows by `r` columns, entries in `1..=n`, rows weakly
//! increasing, columns strictly increasing.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::Integer;

pub const MAX_CELLS: u64 = 16;

pub fn ssyt_count_bruteforce(n: u64, k: u64, r: u64) -> Result<Integer> {
    if k * r > MAX_CELLS {
        return Err(Error::TooLarge(k * r));
    }
    if n == 0 || k == 0 || r == 0 {
        return Err(Error::DomainError(format!(
            "tableau count needs positive n, k, r (got {n}, {k}, {r})"
        )));
    }
    if k > n {
        return Ok(BigInt::from(0));
    }
    let mut grid = vec![vec![0u64; r as usize]; k as usize];
    Ok(BigInt::from(fill(&mut grid, 0, n)))
}

fn fill(grid: &mut [Vec<u64>], cell: usize, n: u64) -> u64 {
    let rows = grid.len();
    let cols = grid[0].len();
    if cell == rows * cols {
        return 1;
    }
    let (i, j) = (cell / cols, cell % cols);
    let left = if j > 0 { grid[i][j - 1] } else { 1 };
    let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    // leave room for the strictly larger entries below in this column
    let hi = n - (rows - 1 - i) as u64;
    let mut count = 0;
    for v in left.max(above)..=hi {
        grid[i][j] = v;
        count += fill(grid, cell + 1, n);
    }
    count
}
