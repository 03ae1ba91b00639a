use std::collections::HashMap;

use super::partition::Partition;
use crate::error::{Error, Result};

/// Number of semistandard tableaux of shape `lambda` and weight `weight`
/// (a partition or composition; zero parts allowed).
pub fn kostka(lambda: &Partition, weight: &[usize]) -> Result<u64> {
    let total: usize = weight.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: total });
    }
    // K is symmetric in the order of the weight.
    let mut w: Vec<usize> = weight.iter().copied().filter(|&x| x > 0).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    let mut memo = HashMap::new();
    Ok(strip_count(lambda.parts(), &w, &mut memo))
}

/// Peel the last weight entry off `shape` as a horizontal strip.
fn strip_count(shape: &[usize], w: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
    let Some((&last, rest)) = w.split_last() else {
        return u64::from(shape.is_empty());
    };
    if rest.len() < shape.len().saturating_sub(1) {
        // more rows than remaining letters can fill (column strictness)
        return 0;
    }
    let key = (shape.to_vec(), w.len());
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let mut total = 0;
    let mut inner = vec![0; shape.len()];
    fn rec(
        i: usize,
        left: usize,
        shape: &[usize],
        inner: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
        total: &mut u64,
    ) {
        if i == shape.len() {
            if left == 0 {
                let mut rho = inner.clone();
                while rho.last() == Some(&0) {
                    rho.pop();
                }
                *total += strip_count(&rho, rest, memo);
            }
            return;
        }
        let lo = shape.get(i + 1).copied().unwrap_or(0);
        for r in (lo..=shape[i]).rev() {
            let removed = shape[i] - r;
            if removed > left {
                break;
            }
            inner[i] = r;
            rec(i + 1, left - removed, shape, inner, rest, memo, total);
        }
    }
    rec(0, last, shape, &mut inner, rest, memo, &mut total);
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions_of;
    use crate::combinat::shape::SkewShape;
    use crate::combinat::tableau::ssyt_enumerate;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[2, 1]).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &[2]).unwrap(), 0);
        assert!(kostka(&p(&[2]), &[1]).is_err());
        assert_eq!(kostka(&p(&[]), &[]).unwrap(), 1);
    }

    #[test]
    fn matches_ssyt_filter() {
        for n in 0..=6 {
            for lam in partitions_of(n) {
                let tabs = ssyt_enumerate(&SkewShape::straight(lam.clone()), n);
                for mu in partitions_of(n) {
                    let mut want = mu.parts().to_vec();
                    want.resize(n, 0);
                    let brute = tabs
                        .iter()
                        .filter(|t| {
                            let mut w = t.weight();
                            w.resize(n, 0);
                            w == want
                        })
                        .count() as u64;
                    assert_eq!(kostka(&lam, mu.parts()).unwrap(), brute, "{lam} {mu}");
                    assert_eq!(kostka(&lam, &[mu.parts(), &[0]].concat()).unwrap(), brute);
                }
            }
        }
    }

    #[test]
    fn composition_weight_symmetric() {
        assert_eq!(kostka(&p(&[3, 1]), &[1, 3]).unwrap(), kostka(&p(&[3, 1]), &[3, 1]).unwrap());
    }
}
