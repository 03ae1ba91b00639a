//! Unicellular LLT polynomials.
//!
//! A Dyck diagram with area sequence `a` has a cell `(i, j)`, `i < j`, for
//! every pair of positions whose vertices `n+1-j < n+1-i` are adjacent in
//! the associated unit interval graph. For a word `w` the inversion count
//! is the number of cells with `w_i > w_j`, and
//! `LLT(x; q) = Σ_w q^{inv(w)} x^w` over all words. In vertex terms this is
//! the ascent statistic of the coloring `κ(v) = w_{n+1-v}`, without the
//! properness condition.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::chromaticq::chromatic_bruteforce_bounded;
use crate::combinat::{
    jdt_rectify, partitions_of, row_tableau, shuffle_words_dk, syt_enumerate, tableau_switch, Composition, Partition,
    SkewShape, Tableau,
};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;
use crate::relcheck::{RelationReport, ReportParams, Witness};
use crate::symfunc::{plethysm_q_shift, quasi_to_schur_elw, Basis, QuasiExpansion, SymExpansion};
use crate::unigraphs::{DyckDiagram, UnitIntervalGraph};

/// Default vertex bound for the all-words oracle.
pub const DEFAULT_WORD_BOUND: usize = 7;
/// Default vertex bound for the enumeration over permutations.
pub const DEFAULT_PERM_BOUND: usize = 9;

/// For each position `j` (0-based), the earlier positions `i` with a cell `(i, j)`.
fn earlier_cells(d: &DyckDiagram) -> Vec<Vec<usize>> {
    let n = d.n();
    (0..n)
        .map(|j| (0..j).filter(|&i| d.adjacent(n - j, n - i)).collect())
        .collect()
}

/// Number of diagram cells `(i, j)` with `w_i > w_j`.
pub fn inv_count(word: &[usize], d: &DyckDiagram) -> Result<usize> {
    if word.len() != d.n() {
        return Err(Error::LengthMismatch { expected: d.n(), got: word.len() });
    }
    let cells = earlier_cells(d);
    Ok(cells.iter().enumerate().map(|(j, is)| is.iter().filter(|&&i| word[i] > word[j]).count()).sum())
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BruteForceBound { n, bound });
    }
    Ok(())
}

fn hist_poly(h: &[u64]) -> QPoly {
    QPoly::from_coeffs(h.iter().map(|&x| x.into()).collect())
}

fn bump(hist: &mut Vec<u64>, k: usize) {
    if hist.len() <= k {
        hist.resize(k + 1, 0);
    }
    hist[k] += 1;
}

/// Words with letter multiplicities `content`, histogrammed by `inv`.
fn words_with_content(cells: &[Vec<usize>], content: &[usize]) -> Vec<u64> {
    fn rec(j: usize, cells: &[Vec<usize>], left: &mut [usize], word: &mut [usize], inv: usize, hist: &mut Vec<u64>) {
        if j == cells.len() {
            bump(hist, inv);
            return;
        }
        for c in 0..left.len() {
            if left[c] == 0 {
                continue;
            }
            let gained = cells[j].iter().filter(|&&i| word[i] > c).count();
            left[c] -= 1;
            word[j] = c;
            rec(j + 1, cells, left, word, inv + gained, hist);
            left[c] += 1;
        }
    }
    let mut hist = Vec::new();
    let mut word = vec![0; cells.len()];
    rec(0, cells, &mut content.to_vec(), &mut word, 0, &mut hist);
    hist
}

/// `LLT` by summing over all words, in the monomial basis.
pub fn llt_bruteforce_words(d: &DyckDiagram) -> Result<SymExpansion> {
    llt_bruteforce_words_bounded(d, DEFAULT_WORD_BOUND)
}

pub fn llt_bruteforce_words_bounded(d: &DyckDiagram, bound: usize) -> Result<SymExpansion> {
    check_bound(d.n(), bound)?;
    let cells = earlier_cells(d);
    let parts = partitions_of(d.n());
    let coeffs: Vec<QPoly> = parts.par_iter().map(|l| hist_poly(&words_with_content(&cells, l.parts()))).collect();
    SymExpansion::from_terms(d.n(), Basis::Monomial, parts.into_iter().zip(coeffs))
}

/// `LLT = Σ_σ q^{inv(σ)} F_{co(iDes(σ))}` over permutations `σ` of `[n]`,
/// where `iDes(σ)` holds the `i` such that `i + 1` appears before `i`.
pub fn llt_via_f(d: &DyckDiagram) -> Result<QuasiExpansion> {
    llt_via_f_bounded(d, DEFAULT_PERM_BOUND)
}

pub fn llt_via_f_bounded(d: &DyckDiagram, bound: usize) -> Result<QuasiExpansion> {
    let n = d.n();
    check_bound(n, bound)?;
    let mut out = QuasiExpansion::zero(n);
    if n == 0 {
        out.add_term(Composition::new(vec![])?, &QPoly::one())?;
        return Ok(out);
    }
    let cells = earlier_cells(d);

    // Inverse descents as a bitmask: bit i-1 set when i+1 precedes i.
    fn rec(j: usize, cells: &[Vec<usize>], used: &mut [bool], word: &mut [usize], pos: &mut [usize], inv: usize, acc: &mut HashMap<u32, Vec<u64>>) {
        let n = cells.len();
        if j == n {
            let mut mask = 0u32;
            for i in 0..n - 1 {
                if pos[i + 1] < pos[i] {
                    mask |= 1 << i;
                }
            }
            bump(acc.entry(mask).or_default(), inv);
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            let gained = cells[j].iter().filter(|&&i| word[i] > v).count();
            used[v] = true;
            word[j] = v;
            pos[v] = j;
            rec(j + 1, cells, used, word, pos, inv + gained, acc);
            used[v] = false;
        }
    }

    let partial: Vec<HashMap<u32, Vec<u64>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut used = vec![false; n];
            let mut word = vec![0; n];
            let mut pos = vec![0; n];
            used[first] = true;
            word[0] = first;
            pos[first] = 0;
            let mut acc = HashMap::new();
            rec(1, &cells, &mut used, &mut word, &mut pos, 0, &mut acc);
            acc
        })
        .collect();
    for acc in partial {
        for (mask, hist) in acc {
            let set: BTreeSet<usize> = (0..n - 1).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            out.add_term(Composition::from_descent_set(n, &set), &hist_poly(&hist))?;
        }
    }
    Ok(out)
}

/// Schur expansion of the LLT polynomial through its fundamental expansion.
pub fn llt_schur(d: &DyckDiagram) -> Result<SymExpansion> {
    llt_schur_bounded(d, DEFAULT_PERM_BOUND)
}

pub fn llt_schur_bounded(d: &DyckDiagram, bound: usize) -> Result<SymExpansion> {
    Ok(quasi_to_schur_elw(&llt_via_f_bounded(d, bound)?))
}

/// The statistic `wt(T) = Σ_{i ∈ D(T)} a_i` attached to an area sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WtStatistic {
    area: DyckDiagram,
}

impl WtStatistic {
    pub fn new(area: DyckDiagram) -> Self {
        WtStatistic { area }
    }

    pub fn area(&self) -> &DyckDiagram {
        &self.area
    }

    /// `wt` of a standard tableau with `n` cells.
    pub fn eval(&self, t: &Tableau) -> Result<usize> {
        if t.size() != self.area.n() || !t.is_standard() {
            return Err(Error::InvalidTableau(format!("expected a standard tableau with {} cells", self.area.n())));
        }
        Ok(t.descent_set().iter().map(|&i| self.area.area()[i - 1]).sum())
    }
}

/// `Σ_λ (Σ_{T ∈ SYT(λ)} q^{wt(T)}) s_λ`. Equals the LLT polynomial on the
/// families recognised by [`proved_wt_family`]; elsewhere it is only a
/// candidate.
pub fn schur_via_wt(d: &DyckDiagram) -> SymExpansion {
    let stat = WtStatistic::new(d.clone());
    let mut out = SymExpansion::zero(d.n(), Basis::Schur);
    for lambda in partitions_of(d.n()) {
        let mut hist = Vec::new();
        for t in syt_enumerate(&SkewShape::straight(lambda.clone())) {
            bump(&mut hist, stat.eval(&t).expect("standard of the right size"));
        }
        out.add_term(lambda, &hist_poly(&hist));
    }
    out
}

/// Names the family (as a graph DSL string) when `d` is a melting lollipop
/// `L^{(k)}_{m,n}`, a class containing complete graphs, paths, lollipops
/// and the graphs `K_n^{(k)}`; these are the diagrams where
/// [`schur_via_wt`] is known to give the LLT polynomial.
pub fn proved_wt_family(d: &DyckDiagram) -> Option<String> {
    let total = d.n();
    if total <= 1 {
        return Some(format!("complete:{total}"));
    }
    for m in 2..=total {
        let n = total - m;
        for k in 0..m {
            let g = UnitIntervalGraph::melting_lollipop(m, n, k).expect("in range");
            if g.area() == d.area() {
                return Some(format!("melting:{m},{n},{k}"));
            }
        }
    }
    None
}

/// Cocharge of a standard tableau: read rows bottom to top, give `1` index
/// 0, and let the index grow by one each time `i + 1` sits left of `i` in
/// the reading word; the cocharge is the sum of the indices.
pub fn cocharge(t: &Tableau) -> Result<usize> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau("cocharge needs a standard tableau".into()));
    }
    let word = t.reading_word();
    let mut pos = vec![0; word.len()];
    for (p, &v) in word.iter().enumerate() {
        pos[v - 1] = p;
    }
    let mut index = 0;
    let mut total = 0;
    for i in 1..word.len() {
        if pos[i] < pos[i - 1] {
            index += 1;
        }
        total += index;
    }
    Ok(total)
}

/// `Σ_λ (Σ_{T ∈ SYT(λ)} q^{cocharge(T)}) s_λ`, the LLT polynomial of `K_n`.
pub fn llt_complete_cocharge(n: usize) -> SymExpansion {
    let mut out = SymExpansion::zero(n, Basis::Schur);
    for lambda in partitions_of(n) {
        let mut hist = Vec::new();
        for t in syt_enumerate(&SkewShape::straight(lambda.clone())) {
            bump(&mut hist, cocharge(&t).expect("standard"));
        }
        out.add_term(lambda, &hist_poly(&hist));
    }
    out
}

/// How to compute the coefficient of the hook `s_{(k, 1^{n-k})}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookRoute {
    /// Sum of `q^{inv(u)}` over the shuffle words `D_k`.
    Shuffle,
    /// Sum of `q^{wt(T)}` over standard tableaux of the hook shape.
    Wt,
    /// Read off the Schur expansion of the fundamental expansion.
    Elw,
}

impl std::str::FromStr for HookRoute {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "shuffle" => Ok(HookRoute::Shuffle),
            "wt" => Ok(HookRoute::Wt),
            "elw" => Ok(HookRoute::Elw),
            _ => Err(format!("unknown hook route '{s}' (expected shuffle, wt or elw)")),
        }
    }
}

/// `inv` of a word of `D_k`: each descent at position `p` contributes the
/// number of cells in row `p` of the diagram.
fn shuffle_inv_fast(u: &[usize], d: &DyckDiagram) -> usize {
    let n = d.n();
    (1..n).filter(|&p| u[p - 1] > u[p]).map(|p| d.lower_degree(n + 1 - p)).sum()
}

fn hook_shuffle(d: &DyckDiagram, k: usize, fast: bool) -> Result<QPoly> {
    let mut hist = Vec::new();
    for u in shuffle_words_dk(d.n(), k)? {
        let inv = if fast { shuffle_inv_fast(&u, d) } else { inv_count(&u, d)? };
        bump(&mut hist, inv);
    }
    Ok(hist_poly(&hist))
}

/// Coefficient of `s_{(k, 1^{n-k})}` in the LLT polynomial of `d`.
pub fn hook_coefficient(d: &DyckDiagram, k: usize, route: HookRoute) -> Result<QPoly> {
    let n = d.n();
    if k == 0 || k > n {
        return Err(Error::RangeViolation(format!("hook needs 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let hook = Partition::hook(n, k);
    match route {
        HookRoute::Shuffle => hook_shuffle(d, k, true),
        HookRoute::Wt => {
            let stat = WtStatistic::new(d.clone());
            let mut hist = Vec::new();
            for t in syt_enumerate(&SkewShape::straight(hook)) {
                bump(&mut hist, stat.eval(&t)?);
            }
            Ok(hist_poly(&hist))
        }
        HookRoute::Elw => Ok(llt_schur(d)?.coeff(&hook)),
    }
}

/// Compares `X_G` with `(q-1)^{-n} LLT_G[(q-1)X]`.
pub fn plethysm_bridge_check(g: &UnitIntervalGraph, bound: usize) -> Result<RelationReport> {
    let mut report = RelationReport::new(
        "plethysm_bridge",
        ReportParams { area: Some(g.area()), graphs: Some(vec![g.mseq().to_vec()]), ..Default::default() },
    );
    report.hypothesis_ok = true;
    let x = chromatic_bruteforce_bounded(g, bound)?.change_basis(Basis::Elementary)?;
    let bridged = plethysm_q_shift(&llt_schur_bounded(&g.dyck(), bound.max(DEFAULT_PERM_BOUND))?)?;
    match Witness::first_difference("plethysm bridge", &x, &bridged) {
        Some(w) => Ok(report.fail(w)),
        None => {
            report.identity_ok = true;
            Ok(report)
        }
    }
}

/// `T` with every entry lowered by `by`.
fn lowered(t: &Tableau, by: usize) -> Tableau {
    Tableau::from_grid(t.grid().iter().map(|r| r.iter().map(|c| c.map(|v| v - by)).collect()).collect())
}

/// The product bijection `(R, P, Q) ↦ T`.
///
/// `P` and `Q` are standard of shapes λ ⊢ n and μ, and `R` is a standard
/// tableau of shape ν/μ rectifying to the row tableau `R_λ`. Switching
/// `(Q, R)` gives `(R_λ, Q_R)` with `Q_R` of shape ν/λ; `T` is `P` with `Q_R`
/// (entries raised by `n`) placed around it.
pub fn product_phi(r: &Tableau, p: &Tableau, q: &Tableau) -> Result<Tableau> {
    let (rect, q_r) = tableau_switch(q, r)?;
    if rect.outer() != p.outer() || rect.inner().size() != 0 {
        return Err(Error::ShapeMismatch(format!("R rectifies to shape {}, P has shape {}", rect.outer(), p.outer())));
    }
    let n = p.size();
    let pg = p.grid();
    let qg = q_r.shifted(n);
    let grid = qg
        .grid()
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, c)| c.or_else(|| pg.get(i).and_then(|r| r.get(j).copied().flatten()))).collect())
        .collect::<Vec<Vec<Option<usize>>>>();
    let grid = if pg.len() > grid.len() {
        let mut g = grid;
        g.extend(pg[g.len()..].iter().cloned());
        g
    } else {
        grid
    };
    Ok(Tableau::from_grid(grid))
}

/// Inverse of [`product_phi`] for a standard tableau `T` with `n` entries
/// assigned to the first factor.
pub fn product_phi_inverse(t: &Tableau, n: usize) -> Result<(Tableau, Tableau, Tableau)> {
    let total = t.size();
    if n > total {
        return Err(Error::RangeViolation(format!("split {n} exceeds tableau size {total}")));
    }
    let p = t.restrict(1, n)?;
    let upper = lowered(&t.restrict(n + 1, total)?, n);
    let (rect, r) = tableau_switch(&row_tableau(&p.outer()), &upper)?;
    Ok((r, p, rect))
}

/// Exhaustive check of [`product_phi`] onto `SYT(ν)` for one split `n + m = |ν|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub nu: Partition,
    pub n: usize,
    /// Number of triples `(R, P, Q)`.
    pub domain: usize,
    /// Number of distinct images.
    pub image: usize,
    /// `|SYT(ν)|`.
    pub target: usize,
    pub inverse_ok: bool,
    pub descents_ok: bool,
    pub weight_ok: bool,
}

impl BijectionReport {
    pub fn is_ok(&self) -> bool {
        self.domain == self.image && self.image == self.target && self.inverse_ok && self.descents_ok && self.weight_ok
    }
}

fn all_areas(n: usize) -> Vec<DyckDiagram> {
    crate::unigraphs::enumerate_nuio(n).into_iter().map(|g| g.dyck()).collect()
}

pub fn check_product_bijection(nu: &Partition, n: usize) -> Result<BijectionReport> {
    let total = nu.size();
    if n > total {
        return Err(Error::RangeViolation(format!("split {n} exceeds |nu| = {total}")));
    }
    let m = total - n;
    let targets = syt_enumerate(&SkewShape::straight(nu.clone()));
    let (areas_n, areas_m) = (all_areas(n), all_areas(m));
    let mut images = BTreeSet::new();
    let mut report = BijectionReport {
        nu: nu.clone(),
        n,
        domain: 0,
        image: 0,
        target: targets.len(),
        inverse_ok: true,
        descents_ok: true,
        weight_ok: true,
    };
    for lambda in partitions_of(n).into_iter().filter(|l| nu.contains(l)) {
        let r_lambda = row_tableau(&lambda);
        let ps = syt_enumerate(&SkewShape::straight(lambda.clone()));
        for mu in partitions_of(m).into_iter().filter(|l| nu.contains(l)) {
            let rs: Vec<Tableau> = syt_enumerate(&SkewShape::new(nu.clone(), mu.clone())?)
                .into_iter()
                .filter(|r| jdt_rectify(r) == r_lambda)
                .collect();
            if rs.is_empty() {
                continue;
            }
            let qs = syt_enumerate(&SkewShape::straight(mu.clone()));
            for r in &rs {
                for p in &ps {
                    for q in &qs {
                        report.domain += 1;
                        let t = product_phi(r, p, q)?;
                        if product_phi_inverse(&t, n)? != (r.clone(), p.clone(), q.clone()) {
                            report.inverse_ok = false;
                        }
                        let dt = t.descent_set();
                        let low: BTreeSet<usize> = dt.iter().copied().filter(|&i| i < n).collect();
                        let high: BTreeSet<usize> = dt.iter().filter(|&&i| i > n).map(|&i| i - n).collect();
                        if low != p.descent_set() || high != q.descent_set() {
                            report.descents_ok = false;
                        }
                        for a in &areas_n {
                            for b in &areas_m {
                                let mut joined = a.area().to_vec();
                                joined.extend_from_slice(b.area());
                                let w = WtStatistic::new(DyckDiagram::new(joined)?).eval(&t)?;
                                let wp = WtStatistic::new(a.clone()).eval(p)?;
                                let wq = WtStatistic::new(b.clone()).eval(q)?;
                                if w != wp + wq {
                                    report.weight_ok = false;
                                }
                            }
                        }
                        images.insert(t);
                    }
                }
            }
        }
    }
    report.image = images.len();
    if images.iter().any(|t| t.outer() != *nu || !t.is_standard()) {
        report.image = 0;
    }
    Ok(report)
}

/// `LLT` at `q = 1` is `e_1^n`, the sum of all words.
pub fn llt_at_one_is_power(f: &SymExpansion) -> Result<bool> {
    let one = BigInt::from(1);
    let at_one = f.eval_q(&one);
    let n = f.degree();
    let power = SymExpansion::single(Basis::PowerSum, Partition::new(vec![1; n])?, QPoly::one());
    at_one.same_function(&power)
}
