//! Chromatic quasisymmetric functions `X_G(x; q)`.
//!
//! `X_G = Σ_κ q^{asc(κ)} x^κ` over proper colorings, where `asc(κ)` counts
//! edges `{i < j}` with `κ(i) < κ(j)`. The brute-force oracle enumerates
//! colorings of a fixed content, which is all a symmetric function needs;
//! the closed forms give e-expansions for complete graphs, paths, lollipops
//! and their relatives.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::combinat::{compositions_of, partitions_of, Composition, Partition};
use crate::error::{Error, Result};
use crate::qpoly::{q_factorial, q_int, QPoly};
use crate::relcheck::{RelationReport, ReportParams, Witness};
use crate::symfunc::{Basis, SymExpansion};
use crate::unigraphs::UnitIntervalGraph;

/// Largest vertex count the brute-force oracle accepts by default.
pub const DEFAULT_BRUTE_BOUND: usize = 8;

/// Lower neighbour lists (0-based) from a 1-based edge list.
fn lower_neighbours(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut lower = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (u, v) = (a.min(b), a.max(b));
        lower[v - 1].push(u - 1);
    }
    lower
}

/// Colorings with exactly `content[c]` vertices of colour `c`, as a
/// histogram over the number of ascents. With `proper = false` adjacent
/// vertices may share a colour.
pub(crate) fn content_count(lower: &[Vec<usize>], content: &[usize], proper: bool) -> Vec<u64> {
    fn rec(v: usize, lower: &[Vec<usize>], left: &mut [usize], colour: &mut [usize], asc: usize, proper: bool, hist: &mut Vec<u64>) {
        if v == lower.len() {
            if hist.len() <= asc {
                hist.resize(asc + 1, 0);
            }
            hist[asc] += 1;
            return;
        }
        for c in 0..left.len() {
            if left[c] == 0 {
                continue;
            }
            if proper && lower[v].iter().any(|&u| colour[u] == c) {
                continue;
            }
            let gained = lower[v].iter().filter(|&&u| colour[u] < c).count();
            left[c] -= 1;
            colour[v] = c;
            rec(v + 1, lower, left, colour, asc + gained, proper, hist);
            left[c] += 1;
        }
    }
    let mut left = content.to_vec();
    let mut colour = vec![usize::MAX; lower.len()];
    let mut hist = Vec::new();
    rec(0, lower, &mut left, &mut colour, 0, proper, &mut hist);
    hist
}

fn hist_poly(h: &[u64]) -> QPoly {
    QPoly::from_coeffs(h.iter().map(|&x| x.into()).collect())
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BruteForceBound { n, bound });
    }
    Ok(())
}

/// Monomial fingerprint of `X_G` for an arbitrary edge set on `1..=n`: the
/// coefficient of `x^λ` for each partition `λ ⊢ n`. For graphs that are not
/// natural unit interval this is only a symmetric function at `q = 1`.
pub fn chromatic_edges(n: usize, edges: &[(usize, usize)], bound: usize) -> Result<SymExpansion> {
    check_bound(n, bound)?;
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a == b || a == 0 || b == 0 || a > n || b > n) {
        return Err(Error::RangeViolation(format!("edge {{{a},{b}}} is not on distinct vertices of 1..={n}")));
    }
    let lower = lower_neighbours(n, edges);
    let parts = partitions_of(n);
    let coeffs: Vec<QPoly> = parts.par_iter().map(|l| hist_poly(&content_count(&lower, l.parts(), true))).collect();
    SymExpansion::from_terms(n, Basis::Monomial, parts.into_iter().zip(coeffs))
}

/// `X_G` by enumerating proper colorings, in the monomial basis.
pub fn chromatic_bruteforce(g: &UnitIntervalGraph) -> Result<SymExpansion> {
    chromatic_bruteforce_bounded(g, DEFAULT_BRUTE_BOUND)
}

pub fn chromatic_bruteforce_bounded(g: &UnitIntervalGraph, bound: usize) -> Result<SymExpansion> {
    chromatic_edges(g.n(), &g.edges(), bound)
}

/// Coefficient of `x_1^{α_1} ⋯ x_k^{α_k}` in `X_G` for every composition
/// `α ⊨ n`. For a symmetric function it depends only on the sorted `α`.
pub fn chromatic_quasimonomial(g: &UnitIntervalGraph, bound: usize) -> Result<BTreeMap<Composition, QPoly>> {
    check_bound(g.n(), bound)?;
    let lower = lower_neighbours(g.n(), &g.edges());
    let comps = compositions_of(g.n());
    let coeffs: Vec<QPoly> = comps.par_iter().map(|a| hist_poly(&content_count(&lower, a.parts(), true))).collect();
    Ok(comps.into_iter().zip(coeffs).collect())
}

/// Whether a quasimonomial table is constant on rearrangements.
pub fn is_quasi_symmetric_table(table: &BTreeMap<Composition, QPoly>) -> bool {
    table.iter().all(|(a, c)| table.get(&a.sorted().as_composition()) == Some(c))
}

fn e1(j: usize) -> Partition {
    Partition::new(vec![j]).expect("single part")
}

/// `f · e_j` for `f` in the e basis (`e_0 = 1`).
fn times_e(f: &SymExpansion, j: usize) -> SymExpansion {
    let mut out = SymExpansion::zero(f.degree() + j, Basis::Elementary);
    for (p, c) in f.terms() {
        let key = if j == 0 { p.clone() } else { p.union(&e1(j)) };
        out.add_term(key, c);
    }
    out
}

fn e_single(parts: Vec<usize>, c: QPoly) -> SymExpansion {
    SymExpansion::single(Basis::Elementary, Partition::from_multiset(parts.into_iter().filter(|&x| x > 0)), c)
}

fn accumulate(acc: &mut SymExpansion, f: &SymExpansion) {
    for (p, c) in f.terms() {
        acc.add_term(p.clone(), c);
    }
}

/// `X_{K_m} = [m]_q! e_m`.
pub fn x_complete(m: usize) -> SymExpansion {
    e_single(vec![m], q_factorial(m))
}

/// `X_{P_n}`: sum over compositions `(k_1, …, k_j)` of `n + 1` with all
/// parts at least 2 of `q^{j-1} Π [k_i - 1]_q e_{(k_1 - 1, k_2, …, k_j)}`.
/// `X_{P_0} = 1`.
pub fn x_path(n: usize) -> SymExpansion {
    if n == 0 {
        return SymExpansion::one(Basis::Elementary);
    }
    let mut out = SymExpansion::zero(n, Basis::Elementary);
    for k in compositions_of(n + 1) {
        let ks = k.parts();
        if ks.iter().any(|&x| x < 2) {
            continue;
        }
        let c = ks.iter().fold(QPoly::q_pow(ks.len() - 1), |acc, &x| &acc * &q_int(x - 1));
        let mut idx = ks.to_vec();
        idx[0] -= 1;
        out.add_term(Partition::from_multiset(idx), &c);
    }
    out
}

/// `[m+n]_q e_{m+n} + Σ_{i<n} q [m+i-1]_q X_{P_{n-i}} e_{m+i}`, the
/// bracket shared by the lollipop and melting lollipop formulas.
fn lollipop_bracket(m: usize, n: usize) -> SymExpansion {
    let mut out = e_single(vec![m + n], q_int(m + n));
    for i in 0..n {
        let c = q_int(m + i - 1).shift(1);
        accumulate(&mut out, &times_e(&x_path(n - i), m + i).scale(&c));
    }
    out
}

/// `X_{L_{m,n}} = [m-1]_q! (lollipop bracket)`. Also valid for `m = 1`,
/// where `L_{1,n} = P_{n+1}`.
fn x_lollipop_any(m: usize, n: usize) -> SymExpansion {
    lollipop_bracket(m, n).scale(&q_factorial(m - 1))
}

/// `X_{L_{m,n}}` for `m ≥ 2`; `L_{m,0} = K_m`.
pub fn x_lollipop(m: usize, n: usize) -> Result<SymExpansion> {
    if m < 2 {
        return Err(Error::RangeViolation(format!("lollipop needs m >= 2, got m = {m}")));
    }
    Ok(x_lollipop_any(m, n))
}

/// `X_G` for `G = K_r + K_{n-r+1}` (one shared vertex, `n` vertices):
/// `Σ_{i=0}^{min(n-r, r-1)} q^i [n-r]_q! [r-1]_q! [n-2i]_q e_{(n-i, i)}`.
pub fn x_join_complete_complete(r: usize, n: usize) -> Result<SymExpansion> {
    if r < 1 || r + 1 > n {
        return Err(Error::RangeViolation(format!("K_r + K_(n-r+1) needs 1 <= r <= n-1, got r = {r}, n = {n}")));
    }
    let base = &q_factorial(n - r) * &q_factorial(r - 1);
    let mut out = SymExpansion::zero(n, Basis::Elementary);
    for i in 0..=(n - r).min(r - 1) {
        let c = (&base * &q_int(n - 2 * i)).shift(i);
        accumulate(&mut out, &e_single(vec![n - i, i], c));
    }
    Ok(out)
}

/// `X_G` for `G = K_r + L_{m,n}`, with `d = n + m + r - 1` vertices:
/// `[m-1]_q! (Σ_{i<r} q^i [r-1]_q! [d-2i]_q e_{(d-i,i)}
///  + Σ_{j<n} q [n+m-j-2]_q X_{L_{r,j}} e_{n+m-j-1})`.
pub fn x_join_complete_lollipop(r: usize, m: usize, n: usize) -> Result<SymExpansion> {
    if m < 3 || r < 1 || r > m {
        return Err(Error::RangeViolation(format!("K_r + L_(m,n) needs m >= 3 and 1 <= r <= m, got r = {r}, m = {m}")));
    }
    let d = n + m + r - 1;
    let mut inner = SymExpansion::zero(d, Basis::Elementary);
    for i in 0..r {
        let c = (&q_factorial(r - 1) * &q_int(d - 2 * i)).shift(i);
        accumulate(&mut inner, &e_single(vec![d - i, i], c));
    }
    for j in 0..n {
        let c = q_int(n + m - j - 2).shift(1);
        accumulate(&mut inner, &times_e(&x_lollipop_any(r, j), n + m - j - 1).scale(&c));
    }
    Ok(inner.scale(&q_factorial(m - 1)))
}

/// `X_{L^{(k)}_{m,n}} = [m-k-1]_q [m-2]_q! (lollipop bracket)
///  + q^{m-k-1} [k]_q [m-2]_q! X_{P_{n+1}} e_{m-1}`.
pub fn x_melting_lollipop(m: usize, n: usize, k: usize) -> Result<SymExpansion> {
    if m < 2 || k > m - 1 {
        return Err(Error::RangeViolation(format!("melting lollipop needs m >= 2 and 0 <= k <= m-1, got m = {m}, k = {k}")));
    }
    let f = q_factorial(m - 2);
    let mut out = lollipop_bracket(m, n).scale(&(&q_int(m - k - 1) * &f));
    let c = (&q_int(k) * &f).shift(m - k - 1);
    accumulate(&mut out, &times_e(&x_path(n + 1), m - 1).scale(&c));
    Ok(out)
}

/// The graph `K_r + L_{m,n}`.
pub fn join_complete_lollipop_graph(r: usize, m: usize, n: usize) -> Result<UnitIntervalGraph> {
    UnitIntervalGraph::glue_sum(&UnitIntervalGraph::complete(r), &UnitIntervalGraph::lollipop(m, n)?)
}

/// The graph `K_r + K_{n-r+1}`.
pub fn join_complete_complete_graph(r: usize, n: usize) -> Result<UnitIntervalGraph> {
    if r < 1 || r + 1 > n {
        return Err(Error::RangeViolation(format!("K_r + K_(n-r+1) needs 1 <= r <= n-1, got r = {r}, n = {n}")));
    }
    UnitIntervalGraph::glue_sum(&UnitIntervalGraph::complete(r), &UnitIntervalGraph::complete(n - r + 1))
}

/// Triple deletion at `q = 1`: for edges `e1, e2, e3` forming a triangle,
/// `X_G = X_{G-e1} + X_{G-e2} - X_{G-e1-e2}`.
pub fn verify_triple_deletion(
    n: usize,
    edges: &[(usize, usize)],
    e1: (usize, usize),
    e2: (usize, usize),
    e3: (usize, usize),
    bound: usize,
) -> Result<RelationReport> {
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let set: BTreeSet<(usize, usize)> = edges.iter().copied().map(norm).collect();
    let tri = [norm(e1), norm(e2), norm(e3)];
    let verts: BTreeSet<usize> = tri.iter().flat_map(|&(a, b)| [a, b]).collect();
    let distinct: BTreeSet<(usize, usize)> = tri.iter().copied().collect();
    if verts.len() != 3 || distinct.len() != 3 || tri.iter().any(|e| e.0 == e.1 || !set.contains(e)) {
        return Err(Error::NotATriangle);
    }
    let without = |removed: &[(usize, usize)]| -> Vec<(usize, usize)> {
        set.iter().copied().filter(|e| !removed.contains(e)).collect()
    };
    let one = num_bigint::BigInt::from(1);
    let x = |es: &[(usize, usize)]| -> Result<SymExpansion> { Ok(chromatic_edges(n, es, bound)?.eval_q(&one)) };
    let all: Vec<(usize, usize)> = set.iter().copied().collect();
    let lhs = x(&all)?;
    let rhs = x(&without(&tri[..1]))?.add(&x(&without(&tri[1..2]))?)?.sub(&x(&without(&tri[..2]))?)?;
    let mut report = RelationReport::new(
        "triple_deletion",
        ReportParams { edge_count: Some(all.len()), ..Default::default() },
    );
    report.hypothesis_ok = true;
    report.notes.push(format!("triangle {:?} {:?} {:?}", tri[0], tri[1], tri[2]));
    match Witness::first_difference("chromatic at q=1", &lhs, &rhs) {
        Some(w) => {
            report.chromatic_ok = Some(false);
            Ok(report.fail(w))
        }
        None => {
            report.chromatic_ok = Some(true);
            report.identity_ok = true;
            Ok(report)
        }
    }
}
