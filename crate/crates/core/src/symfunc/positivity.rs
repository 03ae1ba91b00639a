use num_traits::Signed;

use super::{Basis, SymExpansion};
use crate::error::Result;
use crate::qpoly::QPoly;
use crate::relcheck::{RelationReport, ReportParams, Witness};

/// `a_i(x)`: the coefficient of `q^i`, for `i = 0..=deg_q`, in the e basis.
pub fn slices(f: &SymExpansion) -> Result<Vec<SymExpansion>> {
    let e = f.change_basis(Basis::Elementary)?;
    let top = e.q_degree().map_or(0, |d| d + 1);
    Ok((0..top)
        .map(|i| {
            let mut s = SymExpansion::zero(e.degree(), Basis::Elementary);
            for (p, c) in e.terms() {
                s.add_term(p.clone(), &QPoly::constant(c.coeff(i)));
            }
            s
        })
        .collect())
}

/// First negative e-coefficient, scanning partitions in decreasing
/// lexicographic order and then powers of `q`.
fn first_negative(e: &SymExpansion, form: &str) -> Option<Witness> {
    for (p, c) in e.terms().iter().rev() {
        for (i, x) in c.coeffs().iter().enumerate() {
            if x.is_negative() {
                return Some(Witness::new(form, p.clone(), i, vec![x.to_string()]));
            }
        }
    }
    None
}

/// Whether every e-coefficient is a polynomial with nonnegative
/// coefficients; the witness is the first negative one.
pub fn e_positive(f: &SymExpansion) -> Result<(bool, Option<Witness>)> {
    let e = f.change_basis(Basis::Elementary)?;
    let w = first_negative(&e, "e-positivity");
    Ok((w.is_none(), w))
}

/// Checks the e-positivity / e-unimodality pattern with `m = edge_count`:
/// each slice `a_i` is e-positive, `a_i = a_{m-i}`, and `a_{i+1} - a_i` is
/// e-positive for `0 ≤ i < (m-1)/2`.
pub fn check_conjecture_sw(f: &SymExpansion, edge_count: usize) -> Result<RelationReport> {
    let m = edge_count;
    let mut report = RelationReport::new(
        "conjecture_sw",
        ReportParams { edge_count: Some(m), ..Default::default() },
    );
    let e = f.change_basis(Basis::Elementary)?;
    let mut a = slices(&e)?;
    if a.len() > m + 1 {
        let p = e.terms().iter().find(|(_, c)| c.degree() > Some(m)).map(|(p, _)| p.clone()).unwrap_or_default();
        return Ok(report.fail(Witness::new("degree", p, a.len() - 1, vec![format!("exceeds {m}")])));
    }
    a.resize(m + 1, SymExpansion::zero(e.degree(), Basis::Elementary));
    for (i, s) in a.iter().enumerate() {
        if let Some(w) = first_negative(s, "e-positivity") {
            return Ok(report.fail(Witness { q_power: i, ..w }));
        }
    }
    for i in 0..=m {
        if a[i] != a[m - i] {
            let w = Witness::first_difference("palindromicity", &a[i], &a[m - i]).map(|w| Witness { q_power: i, ..w });
            return Ok(report.fail(w.expect("slices differ")));
        }
    }
    for i in 0..=m {
        if 2 * i + 1 >= m {
            break;
        }
        let diff = a[i + 1].sub(&a[i])?;
        if let Some(w) = first_negative(&diff, "e-unimodality") {
            return Ok(report.fail(Witness { q_power: i, ..w }));
        }
    }
    report.hypothesis_ok = true;
    report.identity_ok = true;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Partition;
    use crate::qpoly::q_factorial;
    use crate::symfunc::expansion;

    #[test]
    fn complete_graph_passes() {
        for m in 1..=6 {
            let f = SymExpansion::single(Basis::Elementary, Partition::new(vec![m]).unwrap(), q_factorial(m));
            let r = check_conjecture_sw(&f, m * (m - 1) / 2).unwrap();
            assert!(r.identity_ok, "{r:?}");
            assert_eq!(r.params.edge_count, Some(m * (m - 1) / 2));
        }
    }

    #[test]
    fn negative_input_fails_with_witness() {
        let f = expansion(Basis::Elementary, &[(&[2, 1], &[1]), (&[3], &[-1])]);
        let (ok, w) = e_positive(&f).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.partition.parts(), &[3]);
        assert_eq!(w.values, vec!["-1".to_string()]);
        let r = check_conjecture_sw(&f, 0).unwrap();
        assert!(!r.identity_ok);
        assert_eq!(r.witness.unwrap().partition.parts(), &[3]);
    }

    #[test]
    fn asymmetric_and_non_unimodal_fail() {
        let f = expansion(Basis::Elementary, &[(&[2], &[1, 2])]);
        let r = check_conjecture_sw(&f, 1).unwrap();
        assert_eq!(r.witness.unwrap().form, "palindromicity");
        let g = expansion(Basis::Elementary, &[(&[2], &[2, 1, 2])]);
        let r = check_conjecture_sw(&g, 2).unwrap();
        assert_eq!(r.witness.unwrap().form, "e-unimodality");
    }
}
