//! Special rim-hook tableaux and the signed counts built from them.
//!
//! A special rim-hook tableau of shape λ and content α is a chain
//! `∅ = λ⁰ ⊂ λ¹ ⊂ … ⊂ λᵏ = λ` where each `λⁱ/λⁱ⁻¹` is a rim hook (connected,
//! no 2×2 block) of length `α_i` containing a cell of the first column. Its
//! sign is the product of `(-1)^(height - 1)` over the hooks.

use std::collections::HashMap;

use super::partition::{compositions_of, Composition, Partition};
use crate::error::{Error, Result};

/// Signed count (`K'`, `K*`); may be negative.
pub type SignedCount = i64;

/// A hook that can be added to `cur`: the new shape and its height.
struct Hook {
    shape: Vec<usize>,
    height: usize,
    /// Number of first-column cells the hook occupies.
    first_column: usize,
}

/// Rim hooks of length `len` containing a first-column cell that extend
/// `cur` while staying inside `lambda`.
fn special_hooks(cur: &[usize], lambda: &[usize], len: usize) -> Vec<Hook> {
    let part = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let top_row = cur.len();
    let mut out = Vec::new();
    // the hook's bottom row b starts in column 0, so b ≥ ℓ(cur)
    for b in top_row..lambda.len() {
        let mut new = cur.to_vec();
        new.resize(b + 1, 0);
        // rows strictly between a and b: ρ_i = cur_{i-1} + 1
        let mut used = 0;
        for a in (0..=b).rev() {
            if a < b {
                let rho = part(cur, a) + 1;
                if rho > lambda[a + 1] {
                    break;
                }
                used += rho - part(cur, a + 1);
                new[a + 1] = rho;
            }
            if used >= len {
                break;
            }
            let rho_a = part(cur, a) + (len - used);
            let cap = if a == 0 { lambda[0] } else { part(cur, a - 1).min(lambda[a]) };
            if rho_a <= cap && rho_a <= lambda[a] {
                let mut shape = new.clone();
                shape[a] = rho_a;
                out.push(Hook { shape, height: b - a + 1, first_column: b + 1 - top_row });
            }
        }
    }
    out
}

fn check_sizes(alpha: &[usize], lambda: &Partition) -> Result<()> {
    let s: usize = alpha.iter().sum();
    if s != lambda.size() {
        return Err(Error::SizeMismatch { left: s, right: lambda.size() });
    }
    Ok(())
}

/// `(signed count, number of flat tableaux)` over special rim-hook tableaux.
fn count(alpha: &[usize], lambda: &Partition) -> (i64, u64) {
    fn rec(
        cur: Vec<usize>,
        idx: usize,
        alpha: &[usize],
        lambda: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), (i64, u64)>,
    ) -> (i64, u64) {
        if idx == alpha.len() {
            return if cur.as_slice() == lambda { (1, 1) } else { (0, 0) };
        }
        if let Some(&r) = memo.get(&(cur.clone(), idx)) {
            return r;
        }
        let mut signed = 0;
        let mut flat = 0;
        for h in special_hooks(&cur, lambda, alpha[idx]) {
            let (s, f) = rec(h.shape, idx + 1, alpha, lambda, memo);
            signed += if h.height % 2 == 1 { s } else { -s };
            if h.first_column == 1 {
                flat += f;
            }
        }
        memo.insert((cur, idx), (signed, flat));
        (signed, flat)
    }
    rec(Vec::new(), 0, alpha, lambda.parts(), &mut HashMap::new())
}

/// `K'(α, λ)`: signed number of special rim-hook tableaux.
pub fn special_rim_hook_count(alpha: &Composition, lambda: &Partition) -> Result<SignedCount> {
    check_sizes(alpha.parts(), lambda)?;
    Ok(count(alpha.parts(), lambda).0)
}

/// Whether some special rim-hook tableau of shape λ and content α has every
/// hook meeting the first column in exactly one cell.
pub fn is_flat(alpha: &Composition, lambda: &Partition) -> Result<bool> {
    check_sizes(alpha.parts(), lambda)?;
    Ok(count(alpha.parts(), lambda).1 > 0)
}

/// `K*(α, λ) = Σ_{β finer than α} K'(β, λ)`, with β = α included.
pub fn k_star_refinement(alpha: &Composition, lambda: &Partition) -> Result<SignedCount> {
    check_sizes(alpha.parts(), lambda)?;
    Ok(refinements(alpha).iter().map(|b| count(b.parts(), lambda).0).sum())
}

/// `K*(α, λ)` by the flat rule: `K'(α, λ)` when the pair is flat, 0 otherwise.
pub fn k_star(alpha: &Composition, lambda: &Partition) -> Result<SignedCount> {
    check_sizes(alpha.parts(), lambda)?;
    let (signed, flat) = count(alpha.parts(), lambda);
    Ok(if flat > 0 { signed } else { 0 })
}

/// All compositions finer than `alpha`, including `alpha` itself.
pub fn refinements(alpha: &Composition) -> Vec<Composition> {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for &part in alpha.parts() {
        let pieces = compositions_of(part);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(c.parts());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|v| Composition::new(v).expect("positive parts")).collect()
}
