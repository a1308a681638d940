use num_bigint::BigUint;

use super::caps::{check_cap, EnumerationCaps};
use crate::error::Result;
use crate::walks::Partition;

/// Standard Young tableau: rows of entries `1..=N`, increasing along rows
/// and down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len()
                && pair[1]
                    .iter()
                    .zip(&pair[0])
                    .all(|(below, above)| above < below)
        });
        rows_ok && cols_ok
    }
}

/// Every standard Young tableau of `shape`, by placing `1, 2, ...` in
/// turn at each admissible outer corner.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardTableau>> {
    check_cap(
        "standard Young tableau",
        shape.size(),
        EnumerationCaps::current().syt_size,
    )?;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.height()];
    let mut out = Vec::new();
    fill(shape, &mut rows, 1, &mut out);
    Ok(out)
}

fn fill(shape: &Partition, rows: &mut Vec<Vec<u32>>, next: u32, out: &mut Vec<StandardTableau>) {
    if next as usize > shape.size() {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        let fits = len < shape.part(r) as usize && (r == 0 || rows[r - 1].len() > len);
        if fits {
            rows[r].push(next);
            fill(shape, rows, next + 1, out);
            rows[r].pop();
        }
    }
}

pub fn count_syt(shape: &Partition) -> Result<BigUint> {
    Ok(BigUint::from(enumerate_syt(shape)?.len()))
}

/// All partitions of `n` with at most `max_height` parts, in reverse
/// lexicographic order.
pub fn partitions_of(n: usize, max_height: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(
        n as u32,
        n as u32,
        max_height.unwrap_or(usize::MAX),
        &mut cur,
        &mut out,
    );
    out
}

fn gen_partitions(
    rest: u32,
    max_part: u32,
    height: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition::from_parts_unchecked(cur.clone()));
        return;
    }
    if cur.len() == height {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        gen_partitions(rest - p, p, height, cur, out);
        cur.pop();
    }
}
