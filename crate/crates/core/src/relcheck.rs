//! Verifiers for the local linear relations between unicellular LLT
//! polynomials (and, through the plethystic bridge, chromatic
//! quasisymmetric functions), plus exhaustive scans over small diagrams.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromaticq::{chromatic_bruteforce_bounded, DEFAULT_BRUTE_BOUND};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::lltuni::{llt_schur_bounded, DEFAULT_PERM_BOUND};
use crate::qpoly::{q_int, QPoly};
use crate::symfunc::{Basis, SymExpansion};
use crate::unigraphs::{enumerate_nuio, DyckDiagram, UnitIntervalGraph};

/// Parameters identifying one checked instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub area: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge_count: Option<usize>,
    /// m-sequences of the graphs involved.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graphs: Option<Vec<Vec<usize>>>,
}

/// First discrepancy found: which form failed, at which basis element and
/// power of `q`, with the offending values rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub form: String,
    pub partition: Partition,
    pub q_power: usize,
    pub values: Vec<String>,
}

impl Witness {
    pub fn new(form: &str, partition: Partition, q_power: usize, values: Vec<String>) -> Self {
        Witness { form: form.into(), partition, q_power, values }
    }

    /// First `(partition, q-power)` where `lhs` and `rhs` differ once both
    /// are written in the basis of `lhs`; `None` if they agree.
    pub fn first_difference(form: &str, lhs: &SymExpansion, rhs: &SymExpansion) -> Option<Witness> {
        let rhs = rhs.change_basis(lhs.basis()).ok()?;
        let keys: std::collections::BTreeSet<&Partition> = lhs.terms().keys().chain(rhs.terms().keys()).collect();
        for p in keys.into_iter().rev() {
            let (a, b) = (lhs.coeff(p), rhs.coeff(p));
            if a == b {
                continue;
            }
            let top = a.coeffs().len().max(b.coeffs().len());
            let j = (0..top).find(|&j| a.coeff(j) != b.coeff(j)).expect("polynomials differ");
            return Some(Witness::new(form, p.clone(), j, vec![a.coeff(j).to_string(), b.coeff(j).to_string()]));
        }
        None
    }
}

/// Outcome of checking one relation or property instance.
/// `identity_ok` is only meaningful when `hypothesis_ok` holds, except for
/// scans that deliberately evaluate identities outside their hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation: String,
    pub params: ReportParams,
    pub hypothesis_ok: bool,
    pub identity_ok: bool,
    /// Identity in LLT form, when evaluated.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub llt_ok: Option<bool>,
    /// Identity in chromatic form, when evaluated.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chromatic_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl RelationReport {
    pub fn new(relation: &str, params: ReportParams) -> Self {
        RelationReport {
            relation: relation.into(),
            params,
            hypothesis_ok: false,
            identity_ok: false,
            llt_ok: None,
            chromatic_ok: None,
            witness: None,
            notes: Vec::new(),
        }
    }

    /// Marks the identity as failed with the given witness.
    pub fn fail(mut self, witness: Witness) -> Self {
        self.identity_ok = false;
        self.witness = Some(witness);
        self
    }

    /// Failure that counts: the hypotheses held but the identity did not.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_ok && !self.identity_ok
    }
}

/// Evaluates the LLT polynomial (Schur basis) and the chromatic
/// quasisymmetric function (e basis) of a diagram.
fn evaluate(d: &DyckDiagram, bound: usize) -> Result<(SymExpansion, SymExpansion)> {
    let llt = llt_schur_bounded(d, bound.max(DEFAULT_PERM_BOUND))?;
    let x = chromatic_bruteforce_bounded(&d.graph(), bound)?.change_basis(Basis::Elementary)?;
    Ok((llt, x))
}

type Evaluations = HashMap<Vec<usize>, (SymExpansion, SymExpansion)>;

fn lookup<'a>(cache: Option<&'a Evaluations>, d: &DyckDiagram, bound: usize, own: &'a mut Vec<(SymExpansion, SymExpansion)>) -> Result<&'a (SymExpansion, SymExpansion)> {
    if let Some(hit) = cache.and_then(|c| c.get(d.area())) {
        return Ok(hit);
    }
    own.push(evaluate(d, bound)?);
    Ok(own.last().expect("just pushed"))
}

/// `a^z`: the area sequence with `a_i` lowered by `z`, validated.
fn lowered_area(a: &[usize], i: usize, z: usize) -> Result<DyckDiagram> {
    let mut b = a.to_vec();
    b[i - 1] = b[i - 1].checked_sub(z).ok_or_else(|| Error::InvalidArea {
        index: i,
        reason: format!("a_{i} = {} cannot be lowered by {z}", a[i - 1]),
    })?;
    DyckDiagram::new(b)
}

/// `a_j` with the convention `a_0 = 1`; `j` is 1-based.
fn area_at(a: &[usize], j: usize) -> usize {
    if j == 0 {
        1
    } else {
        a[j - 1]
    }
}

/// Hypotheses of the deletion relations with depth `ell`:
/// `a_{i-1} + ell - 1 ≤ a_i` and `a_{i+a_i-t} = a_{i+a_i-t+1} + 1` for
/// `t = 1, …, ell - 1`. Assumes `a_i ≥ ell`.
fn deletion_hypothesis(a: &[usize], i: usize, ell: usize) -> bool {
    let ai = a[i - 1];
    area_at(a, i - 1) + ell - 1 <= ai && (1..ell).all(|t| area_at(a, i + ai - t) == area_at(a, i + ai - t + 1) + 1)
}

/// One linear combination `Σ c_z F(a^z)` that should vanish.
struct Combination<'a> {
    name: &'a str,
    terms: Vec<(QPoly, usize)>,
}

/// Evaluates every combination in LLT and chromatic form and records the
/// outcome (and the first discrepancy) in `report`.
fn check_combinations(
    report: &mut RelationReport,
    areas: &[DyckDiagram],
    combos: &[Combination],
    cache: Option<&Evaluations>,
    bound: usize,
) -> Result<()> {
    let mut own = Vec::with_capacity(areas.len());
    let mut values = Vec::with_capacity(areas.len());
    for d in areas {
        values.push(lookup(cache, d, bound, &mut own)?.clone());
    }
    let mut llt_ok = true;
    let mut chromatic_ok = true;
    for c in combos {
        for (form, pick) in [("llt", 0usize), ("chromatic", 1)] {
            let basis = if pick == 0 { Basis::Schur } else { Basis::Elementary };
            let mut sum = SymExpansion::zero(areas[0].n(), basis);
            for (coef, z) in &c.terms {
                let v = if pick == 0 { &values[*z].0 } else { &values[*z].1 };
                sum = sum.add(&v.scale(coef))?;
            }
            if let Some(w) = Witness::first_difference(&format!("{form} {}", c.name), &sum, &SymExpansion::zero(sum.degree(), basis)) {
                if pick == 0 {
                    llt_ok = false;
                } else {
                    chromatic_ok = false;
                }
                if report.witness.is_none() {
                    report.witness = Some(w);
                }
            }
        }
    }
    report.llt_ok = Some(llt_ok);
    report.chromatic_ok = Some(chromatic_ok);
    report.identity_ok = llt_ok && chromatic_ok;
    Ok(())
}

fn q_neg(p: QPoly) -> QPoly {
    -p
}

/// The three-term relation `LLT(a^0) + q LLT(a^2) = (1 + q) LLT(a^1)` under
/// `a_{i-1} + 1 ≤ a_i` (with `a_0 = 1`) and `a_{i+a_i-1} = a_{i+a_i} + 1`,
/// together with its chromatic form. The identity is evaluated even when
/// the hypotheses fail, so that the report shows whether they matter.
pub fn verify_lee(a: &[usize], i: usize) -> Result<RelationReport> {
    verify_lee_with(a, i, DEFAULT_BRUTE_BOUND)
}

pub fn verify_lee_with(a: &[usize], i: usize, bound: usize) -> Result<RelationReport> {
    lee_impl(a, i, None, bound)
}

fn lee_impl(a: &[usize], i: usize, cache: Option<&Evaluations>, bound: usize) -> Result<RelationReport> {
    let areas = deletion_areas(a, i, 2)?;
    let mut report = RelationReport::new(
        "lee",
        ReportParams { area: Some(a.to_vec()), i: Some(i), ..Default::default() },
    );
    report.hypothesis_ok = deletion_hypothesis(a, i, 2);
    let combo = Combination {
        name: "three-term",
        terms: vec![(QPoly::one(), 0), (QPoly::q_pow(1), 2), (q_neg(q_int(2)), 1)],
    };
    check_combinations(&mut report, &areas, &[combo], cache, bound)?;
    Ok(report)
}

/// `a^0, …, a^ell`, failing with `InvalidArea` if any is not a Dyck area.
fn deletion_areas(a: &[usize], i: usize, ell: usize) -> Result<Vec<DyckDiagram>> {
    DyckDiagram::new(a.to_vec())?;
    if i == 0 || i > a.len() {
        return Err(Error::RangeViolation(format!("row index i = {i} outside 1..={}", a.len())));
    }
    (0..=ell).map(|z| lowered_area(a, i, z)).collect()
}

/// The deletion relations of depth `ell` at row `i`:
/// (a) `LLT(a^0) + q [k]_q LLT(a^{k+1}) = [k+1]_q LLT(a^k)` and
/// (b) `[ell-k]_q LLT(a^0) + q^{ell-k} [k]_q LLT(a^ell) = [ell]_q LLT(a^k)`,
/// in LLT and chromatic form.
pub fn verify_k_deletion(a: &[usize], i: usize, ell: usize, k: usize) -> Result<RelationReport> {
    verify_k_deletion_with(a, i, ell, k, DEFAULT_BRUTE_BOUND)
}

pub fn verify_k_deletion_with(a: &[usize], i: usize, ell: usize, k: usize, bound: usize) -> Result<RelationReport> {
    kdel_impl(a, i, ell, k, None, bound)
}

fn kdel_impl(a: &[usize], i: usize, ell: usize, k: usize, cache: Option<&Evaluations>, bound: usize) -> Result<RelationReport> {
    let n = a.len();
    if ell < 2 || ell + 1 > n || k < 1 || k + 1 > ell {
        return Err(Error::RangeViolation(format!(
            "deletion needs 2 <= ell <= n-1 and 1 <= k <= ell-1, got ell = {ell}, k = {k}, n = {n}"
        )));
    }
    let areas = deletion_areas(a, i, ell)?;
    let mut report = RelationReport::new(
        "k_deletion",
        ReportParams { area: Some(a.to_vec()), i: Some(i), ell: Some(ell), k: Some(k), ..Default::default() },
    );
    report.hypothesis_ok = deletion_hypothesis(a, i, ell);
    let combos = [
        Combination {
            name: "(a)",
            terms: vec![(QPoly::one(), 0), (q_int(k).shift(1), k + 1), (q_neg(q_int(k + 1)), k)],
        },
        Combination {
            name: "(b)",
            terms: vec![(q_int(ell - k), 0), (q_int(k).shift(ell - k), ell), (q_neg(q_int(ell)), k)],
        },
    ];
    check_combinations(&mut report, &areas, &combos, cache, bound)?;
    Ok(report)
}

/// Checks that `Σ c_i X_{G_i}` and `Σ c_i LLT_{G_i}` vanish together.
pub fn verify_equivalence(coeffs: &[QPoly], graphs: &[UnitIntervalGraph]) -> Result<RelationReport> {
    verify_equivalence_with(coeffs, graphs, DEFAULT_BRUTE_BOUND)
}

pub fn verify_equivalence_with(coeffs: &[QPoly], graphs: &[UnitIntervalGraph], bound: usize) -> Result<RelationReport> {
    if coeffs.len() != graphs.len() {
        return Err(Error::LengthMismatch { expected: graphs.len(), got: coeffs.len() });
    }
    let n = graphs.first().map_or(0, |g| g.n());
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::SizeMismatch { left: n, right: g.n() });
    }
    let mut report = RelationReport::new(
        "equivalence",
        ReportParams { graphs: Some(graphs.iter().map(|g| g.mseq().to_vec()).collect()), ..Default::default() },
    );
    report.hypothesis_ok = true;
    let mut llt = SymExpansion::zero(n, Basis::Schur);
    let mut x = SymExpansion::zero(n, Basis::Elementary);
    for (c, g) in coeffs.iter().zip(graphs) {
        if c.is_zero() {
            continue;
        }
        let (l, xg) = evaluate(&g.dyck(), bound)?;
        llt = llt.add(&l.scale(c))?;
        x = x.add(&xg.scale(c))?;
    }
    let (llt_zero, x_zero) = (llt.is_zero(), x.is_zero());
    report.notes.push(format!(
        "chromatic combination {}, LLT combination {}",
        if x_zero { "vanishes" } else { "is nonzero" },
        if llt_zero { "vanishes" } else { "is nonzero" }
    ));
    if llt_zero == x_zero {
        report.identity_ok = true;
        return Ok(report);
    }
    let (form, f) = if x_zero { ("llt nonvanishing", &llt) } else { ("chromatic nonvanishing", &x) };
    let w = Witness::first_difference(form, f, &SymExpansion::zero(n, f.basis())).expect("nonzero");
    Ok(report.fail(w))
}

/// One relation instance found by [`scan_relations`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Instance {
    Lee { i: usize },
    Deletion { i: usize, ell: usize, k: usize },
}

/// Every instance of the three-term and deletion relations on NUIO area
/// sequences of length `n` for which all the lowered sequences `a^z` are
/// valid, in order of `(a, i, ell, k)` with the three-term relation first
/// at each `(a, i)`. Hypotheses are recorded per report; identities are
/// evaluated regardless.
pub fn scan_relations(n: usize) -> Result<Vec<RelationReport>> {
    scan_relations_with(n, DEFAULT_BRUTE_BOUND)
}

pub fn scan_relations_with(n: usize, bound: usize) -> Result<Vec<RelationReport>> {
    let areas: Vec<Vec<usize>> = enumerate_nuio(n).into_iter().map(|g| g.area()).collect();
    let evaluated: Vec<(SymExpansion, SymExpansion)> = areas
        .par_iter()
        .map(|a| evaluate(&DyckDiagram::new(a.clone())?, bound))
        .collect::<Result<_>>()?;
    let cache: Evaluations = areas.iter().cloned().zip(evaluated).collect();

    let mut instances = Vec::new();
    for a in &areas {
        for i in 1..=n {
            if deletion_areas(a, i, 2).is_ok() {
                instances.push((a.clone(), Instance::Lee { i }));
            }
            for ell in 2..n {
                if deletion_areas(a, i, ell).is_err() {
                    continue;
                }
                for k in 1..ell {
                    instances.push((a.clone(), Instance::Deletion { i, ell, k }));
                }
            }
        }
    }
    instances
        .par_iter()
        .map(|(a, inst)| match *inst {
            Instance::Lee { i } => lee_impl(a, i, Some(&cache), bound),
            Instance::Deletion { i, ell, k } => kdel_impl(a, i, ell, k, Some(&cache), bound),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromaticq::{x_lollipop, x_melting_lollipop};

    type Outcome = (bool, bool, Option<bool>, Option<bool>, Option<(Partition, usize, Vec<String>)>);

    /// Everything but the relation and form labels.
    fn strip(r: &RelationReport) -> Outcome {
        let w = r.witness.as_ref().map(|w| (w.partition.clone(), w.q_power, w.values.clone()));
        (r.hypothesis_ok, r.identity_ok, r.llt_ok, r.chromatic_ok, w)
    }

    #[test]
    fn three_term_example() {
        let r = verify_lee(&[2, 3, 3, 2, 1, 1, 0], 2).unwrap();
        assert!(r.hypothesis_ok && r.identity_ok, "{r:?}");
        assert_eq!(lowered_area(&[2, 3, 3, 2, 1, 1, 0], 2, 1).unwrap().area(), &[2, 2, 3, 2, 1, 1, 0]);
        assert_eq!(lowered_area(&[2, 3, 3, 2, 1, 1, 0], 2, 2).unwrap().area(), &[2, 1, 3, 2, 1, 1, 0]);
    }

    #[test]
    fn counterexample_fails_hypothesis_and_identity() {
        let r = verify_lee(&[2, 1, 1, 0], 1).unwrap();
        assert!(!r.hypothesis_ok);
        assert!(!r.identity_ok);
        assert_eq!(r.llt_ok, Some(false));
        assert_eq!(r.chromatic_ok, Some(false));
        assert!(r.witness.is_some());
        assert!(!r.is_violation());
    }

    #[test]
    fn invalid_lowering() {
        assert!(matches!(verify_lee(&[1, 0], 1), Err(Error::InvalidArea { .. })));
        assert!(matches!(verify_lee(&[2, 0, 0], 1), Err(Error::InvalidArea { .. })));
        assert!(matches!(verify_k_deletion(&[2, 1, 0], 1, 3, 1), Err(Error::RangeViolation(_))));
    }

    #[test]
    fn depth_two_deletion_is_three_term() {
        for g in enumerate_nuio(5) {
            let a = g.area();
            for i in 1..=5 {
                match (verify_lee(&a, i), verify_k_deletion(&a, i, 2, 1)) {
                    (Ok(l), Ok(d)) => assert_eq!(strip(&l), strip(&d)),
                    (Err(_), Err(_)) => {}
                    other => panic!("{a:?} {i}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn melting_relation_as_deletion() {
        // lollipop area with the junction row lowered: depth m-1 at row n+1
        for m in 3..=5 {
            for n in 0..=(7 - m) {
                let a = UnitIntervalGraph::lollipop(m, n).unwrap().area();
                for k in 1..m - 1 {
                    let r = verify_k_deletion(&a, n + 1, m - 1, k).unwrap();
                    assert!(r.hypothesis_ok && r.identity_ok, "{r:?}");
                }
                // closed forms obey (b) too
                let lhs = x_lollipop(m, n)
                    .unwrap()
                    .scale(&q_int(m - 2))
                    .add(&x_melting_lollipop(m, n, m - 1).unwrap().scale(&QPoly::q_pow(m - 2)))
                    .unwrap();
                assert_eq!(lhs, x_melting_lollipop(m, n, 1).unwrap().scale(&q_int(m - 1)));
            }
        }
    }

    #[test]
    fn equivalence() {
        let a = [2, 3, 3, 2, 1, 1, 0];
        let gs: Vec<UnitIntervalGraph> =
            (0..3).map(|z| lowered_area(&a, 2, z).unwrap().graph()).collect();
        let lee = [QPoly::one(), -q_int(2), QPoly::q_pow(1)];
        let r = verify_equivalence(&lee, &gs).unwrap();
        assert!(r.identity_ok);
        assert!(r.notes[0].contains("vanishes"));
        let r = verify_equivalence(&[QPoly::one(), QPoly::from_i64s(&[2, 1]), QPoly::q_pow(3)], &gs).unwrap();
        assert!(r.identity_ok && r.notes[0].contains("nonzero"));
        let r = verify_equivalence(&[QPoly::zero()], &[UnitIntervalGraph::path(3)]).unwrap();
        assert!(r.identity_ok);
        assert!(verify_equivalence(&[QPoly::one(), QPoly::one()], &[UnitIntervalGraph::path(3), UnitIntervalGraph::path(4)]).is_err());
    }

    #[test]
    fn scans() {
        assert!(scan_relations(2).unwrap().iter().all(|r| r.relation == "lee"));
        let four = scan_relations(4).unwrap();
        assert!(four.iter().all(|r| !r.is_violation()), "{:?}", four.iter().find(|r| r.is_violation()));
        let lee_ok = four.iter().filter(|r| r.relation == "lee" && r.hypothesis_ok).count();
        assert_eq!(lee_ok, LEE_HYPOTHESIS_COUNT_N4);
        let mut keys: Vec<_> = four.iter().map(|r| (r.params.area.clone(), r.params.i, r.params.ell, r.params.k)).collect();
        let sorted = {
            let mut s = keys.clone();
            s.sort();
            s
        };
        keys.dedup();
        assert_eq!(keys.len(), four.len());
        assert_eq!(keys, sorted);
        let json = serde_json::to_string(&four[0]).unwrap();
        let back: RelationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, four[0]);
    }

    const LEE_HYPOTHESIS_COUNT_N4: usize = 5;
}
