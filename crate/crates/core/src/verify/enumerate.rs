//! Labeled enumeration of all associative tables of a given small order.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::semigroup::{validate_involution, ElementId, Semigroup};

pub const MAX_ORDER: usize = 4;

const UNSET: u8 = u8::MAX;

/// Every associative `order x order` table, in lexicographic order of the
/// row-major cell sequence. Cells are filled one at a time and any partial
/// table already violating an associativity triple is pruned.
pub fn enumerate_semigroups(order: usize) -> Result<Vec<Semigroup>> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::OrderTooLarge(order));
    }
    let mut out = Vec::new();
    let mut table = vec![UNSET; order * order];
    fill(&mut table, order, 0, &mut out);
    Ok(out)
}

fn fill(table: &mut [u8], n: usize, cell: usize, out: &mut Vec<Semigroup>) {
    if cell == n * n {
        let t = table.iter().map(|&x| ElementId(u32::from(x))).collect();
        out.push(Semigroup::from_table_unchecked(n, t));
        return;
    }
    for v in 0..n as u8 {
        table[cell] = v;
        if consistent(table, n) {
            fill(table, n, cell + 1, out);
        }
    }
    table[cell] = UNSET;
}

/// No fully-defined triple `(xy)z` vs `x(yz)` disagrees.
fn consistent(t: &[u8], n: usize) -> bool {
    let at = |i: u8, j: u8| t[i as usize * n + j as usize];
    for x in 0..n as u8 {
        for y in 0..n as u8 {
            let xy = at(x, y);
            if xy == UNSET {
                continue;
            }
            for z in 0..n as u8 {
                let yz = at(y, z);
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (at(xy, z), at(x, yz));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// All involutions of `s`, found by filtering every permutation. Only
/// practical for the tiny orders produced by [`enumerate_semigroups`].
pub fn involutions(s: &Semigroup) -> Vec<Vec<ElementId>> {
    s.elements()
        .permutations(s.size())
        .filter(|p| validate_involution(s, p).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every `n^(n^2)` table tested directly.
    fn naive_count(n: usize) -> usize {
        let cells = n * n;
        let mut count = 0;
        let mut t = vec![0usize; cells];
        loop {
            let assoc = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]]))
            });
            if assoc {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == cells {
                    return count;
                }
                t[k] += 1;
                if t[k] < n {
                    break;
                }
                t[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn counts_match_naive_enumeration() {
        for n in 1..=3 {
            assert_eq!(
                enumerate_semigroups(n).unwrap().len(),
                naive_count(n),
                "order {n}"
            );
        }
        assert_eq!(naive_count(2), 8);
        assert_eq!(naive_count(3), 113);
    }

    #[test]
    fn order_four() {
        assert_eq!(enumerate_semigroups(4).unwrap().len(), 3492);
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(
            enumerate_semigroups(0).unwrap_err(),
            Error::OrderTooLarge(0)
        );
        assert_eq!(
            enumerate_semigroups(5).unwrap_err(),
            Error::OrderTooLarge(5)
        );
    }

    #[test]
    fn enumerated_tables_are_distinct_and_associative() {
        let all = enumerate_semigroups(3).unwrap();
        let mut tables: Vec<_> = all.iter().map(Semigroup::table_rows).collect();
        for rows in &tables {
            assert!(Semigroup::from_cayley_table(3, rows).is_ok());
        }
        tables.dedup();
        assert_eq!(tables.len(), 113);
    }

    #[test]
    fn involutions_of_small_semigroups() {
        let z2 = Semigroup::from_cayley_table(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        // commutative: identity works, the swap does not fix the identity element
        assert_eq!(involutions(&z2), vec![vec![ElementId(0), ElementId(1)]]);
        let lz = Semigroup::from_cayley_table(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(involutions(&lz).is_empty());
    }
}
