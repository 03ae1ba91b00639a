use crate::error::{Error, Result};

/// `D_k`: shuffles of `(n, n-1, …, k+1)` with `(1, 2, …, k-1)`, each followed
/// by the letter `k`. Returned in lexicographic order; there are
/// `C(n-1, k-1)` of them.
pub fn shuffle_words_dk(n: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k > n {
        return Err(Error::RangeViolation(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let high: Vec<usize> = (k + 1..=n).rev().collect();
    let low: Vec<usize> = (1..k).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(high: &[usize], low: &[usize], k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if high.is_empty() && low.is_empty() {
            let mut w = cur.clone();
            w.push(k);
            out.push(w);
            return;
        }
        if let Some((&x, rest)) = low.split_first() {
            cur.push(x);
            rec(high, rest, k, cur, out);
            cur.pop();
        }
        if let Some((&x, rest)) = high.split_first() {
            cur.push(x);
            rec(rest, low, k, cur, out);
            cur.pop();
        }
    }
    rec(&high, &low, k, &mut cur, &mut out);
    Ok(out)
}
