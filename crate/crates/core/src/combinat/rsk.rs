use std::collections::BTreeSet;

use super::tableau::Tableau;

/// Robinson–Schensted–Knuth row insertion: `(P, Q)` with `P` the insertion
/// tableau and `Q` the standard recording tableau.
pub fn rsk(word: &[usize]) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in word.iter().enumerate() {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(pos) => {
                    std::mem::swap(&mut p[row][pos], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::from_rows(p).expect("insertion keeps P semistandard"),
        Tableau::from_rows(q).expect("recording tableau is standard"),
    )
}

/// Replace a word by the permutation obtained by ranking the pairs `(w_i, i)`.
pub fn standardize(word: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&i| (word[i], i));
    let mut out = vec![0; word.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank + 1;
    }
    out
}

/// Positions `i` (1-based) with `w_i > w_{i+1}`.
pub fn word_descent_set(word: &[usize]) -> BTreeSet<usize> {
    (1..word.len()).filter(|&i| word[i - 1] > word[i]).collect()
}

/// Inverse descents of a permutation: values `i` with `i + 1` to the left of `i`.
pub fn inverse_descent_set(perm: &[usize]) -> BTreeSet<usize> {
    let mut pos = vec![0; perm.len() + 1];
    for (p, &v) in perm.iter().enumerate() {
        pos[v] = p;
    }
    (1..perm.len()).filter(|&i| pos[i + 1] < pos[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk(&[1, 2, 3]);
        assert_eq!(p.rows(), vec![vec![1, 2, 3]]);
        assert_eq!(q, p);
        let (p, _) = rsk(&[3, 2, 1]);
        assert_eq!(p.outer().parts(), &[1, 1, 1]);
        let (p, q) = rsk(&[2, 1, 2]);
        assert_eq!(p.outer().parts(), &[2, 1]);
        assert_eq!(p.rows(), vec![vec![1, 2], vec![2]]);
        assert_eq!(q.rows(), vec![vec![1, 3], vec![2]]);
        assert_eq!(q.descent_set(), BTreeSet::from([1]));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[1, 1, 2]), vec![1, 2, 3]);
        assert_eq!(standardize(&[2, 1, 2]), vec![2, 1, 3]);
        assert_eq!(standardize(&[3, 1, 1]), vec![3, 1, 2]);
    }

    #[test]
    fn three_descent_sets_agree() {
        // all words of length ≤ 7 over {1,2,3,4}
        for len in 0..=7u32 {
            for code in 0..4usize.pow(len) {
                let mut c = code;
                let w: Vec<usize> = (0..len)
                    .map(|_| {
                        let d = c % 4 + 1;
                        c /= 4;
                        d
                    })
                    .collect();
                let d = word_descent_set(&w);
                assert_eq!(d, word_descent_set(&standardize(&w)));
                let (p, q) = rsk(&w);
                assert_eq!(d, q.descent_set(), "{w:?}");
                let mut content = vec![0; 4];
                for &x in &w {
                    content[x - 1] += 1;
                }
                let mut pw = p.weight();
                pw.resize(4, 0);
                assert_eq!(pw, content);
            }
        }
    }

    #[test]
    fn inverse_descents() {
        assert_eq!(inverse_descent_set(&[2, 1, 3]), BTreeSet::from([1]));
        assert_eq!(inverse_descent_set(&[3, 1, 2]), BTreeSet::from([2]));
        assert_eq!(word_descent_set(&[3, 1, 2]), BTreeSet::from([1]));
    }
}
