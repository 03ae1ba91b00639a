use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::partition::Partition;
use super::shape::SkewShape;
use super::tableau::{row_tableau, syt_enumerate, Tableau};
use crate::error::{Error, Result};

/// One forward jeu de taquin slide into the inner corner `(i, j)`.
pub fn slide(t: &Tableau, corner: (usize, usize)) -> Result<Tableau> {
    let shape = t.shape();
    if !shape.inner_corners().contains(&corner) {
        return Err(Error::ShapeMismatch(format!("{corner:?} is not an inner corner")));
    }
    let mut g = t.grid().to_vec();
    let (mut i, mut j) = corner;
    loop {
        let right = g[i].get(j + 1).copied().flatten();
        let below = g.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
        let down = match (right, below) {
            (None, None) => break,
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(r), Some(b)) => b <= r,
        };
        if down {
            g[i][j] = below;
            g[i + 1][j] = None;
            i += 1;
        } else {
            g[i][j] = right;
            g[i][j + 1] = None;
            j += 1;
        }
    }
    g[i].pop();
    Ok(Tableau::from_grid(g))
}

/// Rectification, sliding into the lowest inner corner each time.
pub fn jdt_rectify(t: &Tableau) -> Tableau {
    let mut cur = t.clone();
    loop {
        let corners = cur.shape().inner_corners();
        match corners.last() {
            None => return cur,
            Some(&c) => cur = slide(&cur, c).expect("corner taken from the shape"),
        }
    }
}

/// Count of standard tableaux of shape `nu / lambda` rectifying to `R_mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() + mu.size() {
        return Err(Error::ShapeMismatch(format!("|{nu}| != |{lambda}| + |{mu}|")));
    }
    if !nu.contains(lambda) {
        return Err(Error::ShapeMismatch(format!("{lambda} is not contained in {nu}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = cache.lock().expect("lr cache").get(&key) {
        return Ok(c);
    }
    let target = row_tableau(mu);
    let shape = SkewShape::new(nu.clone(), lambda.clone())?;
    let c = if !nu.contains(mu) {
        0
    } else {
        syt_enumerate(&shape).iter().filter(|t| jdt_rectify(t) == target).count() as u64
    };
    cache.lock().expect("lr cache").insert(key, c);
    Ok(c)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Inner,
    Empty,
    T(usize),
    S(usize),
}

/// Tableau switching of `T` (shape μ/λ) and `S` (shape ν/μ).
///
/// The entries of `T` are processed from largest to smallest (ties right to
/// left); each one is vacated and the `S` entries slide into it by jeu de
/// taquin, after which the `T` entry fills the final hole. Returns
/// `(S_out, T_out)` with `S_out` of shape σ/λ and `T_out` of shape ν/σ.
pub fn tableau_switch(t: &Tableau, s: &Tableau) -> Result<(Tableau, Tableau)> {
    if t.outer() != s.inner() {
        return Err(Error::ShapeMismatch(format!(
            "outer shape {} of T differs from inner shape {} of S",
            t.outer(),
            s.inner()
        )));
    }
    if t.size() == 0 {
        return Ok((s.clone(), Tableau::skew(s.outer().parts(), vec![])?));
    }
    if s.size() == 0 {
        return Ok((Tableau::skew(t.inner().parts(), vec![])?, t.clone()));
    }
    let nu = s.outer();
    let mut g: Vec<Vec<Slot>> = (0..nu.len())
        .map(|i| {
            (0..nu.part(i))
                .map(|j| match (t.entry(i, j), s.entry(i, j)) {
                    (Some(v), _) => Slot::T(v),
                    (None, Some(v)) => Slot::S(v),
                    (None, None) => Slot::Inner,
                })
                .collect()
        })
        .collect();

    let mut order: Vec<(usize, usize, usize)> = t.cells().collect();
    order.sort_by(|a, b| b.2.cmp(&a.2).then(b.1.cmp(&a.1)));
    for (ci, cj, v) in order {
        let (mut i, mut j) = (ci, cj);
        g[i][j] = Slot::Empty;
        loop {
            let right = match g[i].get(j + 1) {
                Some(Slot::S(x)) => Some(*x),
                _ => None,
            };
            let below = match g.get(i + 1).and_then(|r| r.get(j)) {
                Some(Slot::S(x)) => Some(*x),
                _ => None,
            };
            let down = match (right, below) {
                (None, None) => break,
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(r), Some(b)) => b <= r,
            };
            let (ni, nj) = if down { (i + 1, j) } else { (i, j + 1) };
            g[i][j] = g[ni][nj];
            g[ni][nj] = Slot::Empty;
            i = ni;
            j = nj;
        }
        g[i][j] = Slot::T(v);
    }

    // S_out keeps λ as its inner shape and stops where the T cells begin;
    // T_out treats every non-T cell as part of its inner shape.
    let extract = |want_s: bool| -> Result<Tableau> {
        let mut inner = Vec::with_capacity(g.len());
        let mut rows = Vec::with_capacity(g.len());
        for r in &g {
            let mut off = 0;
            let mut row = Vec::new();
            for c in r {
                match (c, want_s) {
                    (Slot::S(x), true) | (Slot::T(x), false) => row.push(*x),
                    (Slot::Inner, _) | (Slot::S(_), false) if row.is_empty() => off += 1,
                    (Slot::T(_), true) => break,
                    _ => return Err(Error::InvalidTableau("switching produced a non-skew filling".into())),
                }
            }
            inner.push(off);
            rows.push(row);
        }
        Tableau::skew(&inner, rows)
    };
    Ok((extract(true)?, extract(false)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partition::partitions_of;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Every rectification reachable by any sequence of corner choices.
    fn all_rectifications(t: &Tableau, out: &mut Vec<Tableau>) {
        let corners = t.shape().inner_corners();
        if corners.is_empty() {
            out.push(t.clone());
            return;
        }
        for c in corners {
            all_rectifications(&slide(t, c).unwrap(), out);
        }
    }

    /// All skew shapes `nu / lam` with `|nu| <= max`.
    fn skew_shapes(max: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for n in 0..=max {
            for nu in partitions_of(n) {
                for k in 0..=n {
                    for lam in partitions_of(k) {
                        if nu.contains(&lam) {
                            out.push(SkewShape::new(nu.clone(), lam).unwrap());
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn rectify_examples() {
        let t = row_tableau(&p(&[2, 1]));
        assert_eq!(jdt_rectify(&t), t);
        let single = Tableau::skew(&[2, 1], vec![vec![], vec![1]]).unwrap();
        // one cell at row 1, column 1
        assert_eq!(single.entry(1, 1), Some(1));
        assert_eq!(jdt_rectify(&single).rows(), vec![vec![1]]);
    }

    #[test]
    fn rectification_order_independent_and_preserves_descents() {
        // standard skew tableaux with at most 7 cells, every corner order
        for shape in skew_shapes(7) {
            if shape.size() > 6 && shape.inner.size() > 2 {
                continue;
            }
            for t in syt_enumerate(&shape) {
                let mut all = Vec::new();
                all_rectifications(&t, &mut all);
                let r = jdt_rectify(&t);
                assert!(all.iter().all(|x| *x == r), "{t:?}");
                assert_eq!(r.descent_set(), t.descent_set());
                assert_eq!(r.size(), t.size());
            }
        }
    }

    #[test]
    fn descents_invariant_under_slides_up_to_8_cells() {
        for shape in skew_shapes(8) {
            if shape.size() == 0 || shape.inner.is_empty() || shape.size() > 5 {
                continue;
            }
            for t in syt_enumerate(&shape) {
                for c in shape.inner_corners() {
                    assert_eq!(slide(&t, c).unwrap().descent_set(), t.descent_set());
                }
            }
        }
    }

    #[test]
    fn skew_shape_rectification() {
        // T of shape (2,2,1)/(1): rows [_,1],[2,3],[4]
        let t = Tableau::skew(&[1], vec![vec![1], vec![2, 3], vec![4]]).unwrap();
        let mut all = Vec::new();
        all_rectifications(&t, &mut all);
        assert!(all.iter().all(|x| *x == all[0]));
        assert_eq!(jdt_rectify(&t), all[0]);
        assert_eq!(all[0].rows(), vec![vec![1, 3], vec![2], vec![4]]);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[2]), &p(&[5])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[2]), &p(&[2, 2])).unwrap(), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
        assert!(lr_coefficient(&p(&[3]), &p(&[]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn switching_worked_example() {
        let t = Tableau::skew(&[1], vec![vec![1], vec![2, 3], vec![4]]).unwrap();
        let s = Tableau::skew(&[2, 2, 1], vec![vec![1, 3], vec![2], vec![4, 5]]).unwrap();
        let (s_out, t_out) = tableau_switch(&t, &s).unwrap();
        assert_eq!(s_out, Tableau::skew(&[1], vec![vec![1, 3], vec![2, 5], vec![4]]).unwrap());
        assert_eq!(t_out, Tableau::skew(&[3, 2, 1], vec![vec![1], vec![3], vec![2, 4]]).unwrap());
        assert_eq!(tableau_switch(&s_out, &t_out).unwrap(), (t, s));
    }

    #[test]
    fn switching_with_empty() {
        let t = Tableau::skew(&[1], vec![vec![1], vec![2]]).unwrap();
        let s = Tableau::skew(&[2, 1], vec![]).unwrap();
        let (s_out, t_out) = tableau_switch(&t, &s).unwrap();
        assert_eq!(s_out.size(), 0);
        assert_eq!(t_out, t);
    }

    #[test]
    fn switching_properties_exhaustive() {
        // all nested standard pairs (T of mu/lam, S of nu/mu) with |nu| <= 6
        for n in 0..=6 {
            for nu in partitions_of(n) {
                for m in 0..=n {
                    for mu in partitions_of(m) {
                        if !nu.contains(&mu) {
                            continue;
                        }
                        let ss = syt_enumerate(&SkewShape::new(nu.clone(), mu.clone()).unwrap());
                        for k in 0..=m {
                            for lam in partitions_of(k) {
                                if !mu.contains(&lam) {
                                    continue;
                                }
                                let ts = syt_enumerate(&SkewShape::new(mu.clone(), lam.clone()).unwrap());
                                for t in &ts {
                                    for s in &ss {
                                        let (s2, t2) = tableau_switch(t, s).unwrap();
                                        assert_eq!(jdt_rectify(&t2), jdt_rectify(t));
                                        assert_eq!(jdt_rectify(&s2), jdt_rectify(s));
                                        assert_eq!(s2.inner(), lam);
                                        assert_eq!(t2.outer(), nu);
                                        assert_eq!(tableau_switch(&s2, &t2).unwrap(), (t.clone(), s.clone()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn switching_shape_mismatch() {
        let t = Tableau::from_rows(vec![vec![1]]).unwrap();
        let s = Tableau::skew(&[2], vec![vec![1]]).unwrap();
        assert!(tableau_switch(&t, &s).is_err());
    }
}
