//! Gaussian elimination over `F_3`.

use super::{Gf3, TritVec};

/// Reduces `rows` in place to reduced row-echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Gf3>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = *x * inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c];
                for (x, &v) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = *x - factor * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[TritVec]) -> usize {
    let mut m: Vec<Vec<Gf3>> = rows.iter().map(TritVec::to_elems).collect();
    rref(&mut m).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(d: &[u8]) -> TritVec {
        TritVec::from_digits(d).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[tv(&[1, 1]), tv(&[2, 2])]), 1);
        assert_eq!(rank(&[tv(&[1, 1]), tv(&[1, 2])]), 2);
        assert_eq!(rank(&[tv(&[0, 0, 0])]), 0);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[tv(&[1, 2, 0]), tv(&[0, 1, 1]), tv(&[1, 0, 1])]), 2);
    }

    #[test]
    fn rref_is_canonical() {
        let mut a: Vec<Vec<Gf3>> = [tv(&[2, 1, 0]), tv(&[1, 1, 1])]
            .iter()
            .map(TritVec::to_elems)
            .collect();
        // same row space, different generators
        let mut b: Vec<Vec<Gf3>> = [tv(&[0, 2, 1]), tv(&[1, 2, 0])]
            .iter()
            .map(TritVec::to_elems)
            .collect();
        let pa = rref(&mut a);
        let pb = rref(&mut b);
        assert_eq!(pa, pb);
        assert_eq!(a, b);
    }
}
