//! Per-degree transition data, computed once per degree and shared.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinat::{compositions_of, k_star, kostka, partitions_of, Composition, Partition};

/// Transition matrices into the monomial basis for one degree `n`.
///
/// `parts` is in decreasing lexicographic order, a linear extension of
/// dominance with `(n)` first. Row `λ` of each matrix lists the
/// m-coefficients of the basis element indexed by `λ`.
pub struct Arena {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `s_λ = Σ_μ K_{λμ} m_μ`.
    pub s_to_m: Vec<Vec<i64>>,
    /// `e_λ = Σ_μ M_{λμ} m_μ`.
    pub e_to_m: Vec<Vec<i64>>,
    /// `p_λ = Σ_μ R_{λμ} m_μ`.
    pub p_to_m: Vec<Vec<i64>>,
    /// Index of `λ'` for every `λ`.
    pub conj: Vec<usize>,
    comps: OnceLock<(Vec<Composition>, Vec<Vec<i64>>)>,
}

impl Arena {
    fn build(n: usize) -> Arena {
        let parts = partitions_of(n);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let s_to_m: Vec<Vec<i64>> = parts
            .iter()
            .map(|l| parts.iter().map(|m| kostka(l, m.parts()).expect("same degree") as i64).collect())
            .collect();
        let conj: Vec<usize> = parts.iter().map(|p| index[&p.conjugate()]).collect();
        // e_λ = Σ_ν K_{νλ} s_{ν'}, hence M_{λμ} = Σ_ν K_{νλ} K_{ν'μ}.
        let k = parts.len();
        let mut e_to_m = vec![vec![0i64; k]; k];
        for (l, row) in e_to_m.iter_mut().enumerate() {
            for nu in 0..k {
                let a = s_to_m[nu][l];
                if a == 0 {
                    continue;
                }
                for (mu, cell) in row.iter_mut().enumerate() {
                    *cell += a * s_to_m[conj[nu]][mu];
                }
            }
        }
        let p_to_m = parts
            .iter()
            .map(|l| parts.iter().map(|m| power_sum_coeff(l.parts(), m.parts())).collect())
            .collect();
        Arena { n, parts, index, s_to_m, e_to_m, p_to_m, conj, comps: OnceLock::new() }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// Compositions of `n` (lexicographic) and the table `K*(α, λ)`
    /// indexed `[α][λ]`.
    pub fn k_star_table(&self) -> &(Vec<Composition>, Vec<Vec<i64>>) {
        self.comps.get_or_init(|| {
            let comps = compositions_of(self.n);
            let table = comps
                .iter()
                .map(|a| self.parts.iter().map(|l| k_star(a, l).expect("same degree")).collect())
                .collect();
            (comps, table)
        })
    }
}

/// Coefficient of `x^μ` in `p_λ`: assignments of the parts of λ to the
/// variables `1..ℓ(μ)` with the right sums.
fn power_sum_coeff(lambda: &[usize], mu: &[usize]) -> i64 {
    fn rec(i: usize, lambda: &[usize], bins: &mut Vec<usize>) -> i64 {
        if i == lambda.len() {
            return i64::from(bins.iter().all(|&b| b == 0));
        }
        let mut total = 0;
        for j in 0..bins.len() {
            if bins[j] >= lambda[i] {
                bins[j] -= lambda[i];
                total += rec(i + 1, lambda, bins);
                bins[j] += lambda[i];
            }
        }
        total
    }
    rec(0, lambda, &mut mu.to_vec())
}

/// Shared arena for degree `n`, built on first use.
pub fn arena(n: usize) -> Arc<Arena> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Arena>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("arena cache");
    guard.entry(n).or_insert_with(|| Arc::new(Arena::build(n))).clone()
}
