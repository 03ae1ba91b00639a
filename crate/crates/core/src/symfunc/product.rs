use super::{Basis, SymExpansion};
use crate::combinat::{lr_coefficient, partitions_of, Partition};
use crate::error::Result;
use crate::qpoly::{Poly, Scalar};

/// Product of two symmetric functions, expressed in the basis of `f`.
///
/// e and p products concatenate indices, Schur products use
/// Littlewood–Richardson coefficients, and monomial products read the
/// coefficient of `x^ν` off every split `ν = α + β` of the exponent vector.
pub fn multiply<S: Scalar>(f: &SymExpansion<S>, g: &SymExpansion<S>) -> Result<SymExpansion<S>> {
    let g = g.change_basis(f.basis())?;
    let n = f.degree() + g.degree();
    let mut out = SymExpansion::zero(n, f.basis());
    match f.basis() {
        Basis::Elementary | Basis::PowerSum => {
            for (l, a) in f.terms() {
                for (m, b) in g.terms() {
                    out.add_term(l.union(m), &(a * b));
                }
            }
        }
        Basis::Schur => {
            for (l, a) in f.terms() {
                for (m, b) in g.terms() {
                    let ab = a * b;
                    for nu in partitions_of(n) {
                        if !nu.contains(l) || !nu.contains(m) {
                            continue;
                        }
                        let c = lr_coefficient(l, m, &nu)?;
                        if c > 0 {
                            out.add_term(nu, &ab.scale(&S::from_i64(c as i64)));
                        }
                    }
                }
            }
        }
        Basis::Monomial => {
            let k = f.degree();
            for nu in partitions_of(n) {
                let mut acc = Poly::zero();
                let mut alpha = vec![0; nu.len()];
                split(nu.parts(), 0, k, &mut alpha, &mut |alpha| {
                    let a = Partition::from_multiset(alpha.iter().copied());
                    let b = Partition::from_multiset(nu.parts().iter().zip(alpha).map(|(x, y)| x - y));
                    if let (Some(x), Some(y)) = (f.terms().get(&a), g.terms().get(&b)) {
                        acc += &(x * y);
                    }
                });
                out.add_term(nu, &acc);
            }
        }
    }
    Ok(out)
}

/// Calls `visit` on every `α` with `0 ≤ α_i ≤ ν_i` and `|α| = left` (at entry).
fn split(nu: &[usize], i: usize, left: usize, alpha: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i == nu.len() {
        if left == 0 {
            visit(alpha);
        }
        return;
    }
    let rest: usize = nu[i + 1..].iter().sum();
    for a in 0..=nu[i].min(left) {
        if left - a > rest {
            continue;
        }
        alpha[i] = a;
        split(nu, i + 1, left - a, alpha, visit);
    }
    alpha[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::QPoly;
    use crate::symfunc::expansion;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unit_and_pieri() {
        let f = expansion(Basis::Schur, &[(&[2, 1], &[1, 2])]);
        let one = SymExpansion::one(Basis::Schur);
        assert_eq!(multiply(&f, &one).unwrap(), f);
        let s1 = expansion(Basis::Schur, &[(&[1], &[1])]);
        assert_eq!(multiply(&s1, &s1).unwrap(), expansion(Basis::Schur, &[(&[2], &[1]), (&[1, 1], &[1])]));
    }

    #[test]
    fn e_route_matches_m_route() {
        let e2 = expansion(Basis::Elementary, &[(&[2], &[1])]);
        let e1 = expansion(Basis::Elementary, &[(&[1], &[1])]);
        let via_e = multiply(&e2, &e1).unwrap();
        let m2 = e2.change_basis(Basis::Monomial).unwrap();
        let m1 = e1.change_basis(Basis::Monomial).unwrap();
        let via_m = multiply(&m2, &m1).unwrap();
        assert!(via_e.same_function(&via_m).unwrap());
        assert_eq!(via_e, SymExpansion::single(Basis::Elementary, p(&[2, 1]), QPoly::one()));
    }

    #[test]
    fn schur_structure_constants_match_monomial_product() {
        for a in 1..=3 {
            for b in 1..=4 {
                for l in partitions_of(a) {
                    for m in partitions_of(b) {
                        let sl = SymExpansion::single(Basis::Schur, l.clone(), QPoly::one());
                        let sm = SymExpansion::single(Basis::Schur, m.clone(), QPoly::one());
                        let viasch = multiply(&sl, &sm).unwrap();
                        let viam = multiply(
                            &sl.change_basis(Basis::Monomial).unwrap(),
                            &sm.change_basis(Basis::Monomial).unwrap(),
                        )
                        .unwrap();
                        assert!(viasch.same_function(&viam).unwrap(), "{l} {m}");
                    }
                }
            }
        }
    }

    fn arb(n: usize, basis: Basis) -> impl Strategy<Value = SymExpansion> {
        let k = partitions_of(n).len();
        prop::collection::vec(prop::collection::vec(-3i64..4, 0..3), k).prop_map(move |cs| {
            SymExpansion::from_terms(n, basis, partitions_of(n).into_iter().zip(cs).map(|(p, c)| (p, QPoly::from_i64s(&c))))
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn commutative_associative(f in arb(2, Basis::Schur), g in arb(3, Basis::Elementary), h in arb(1, Basis::Monomial)) {
            let fg = multiply(&f, &g).unwrap();
            prop_assert_eq!(fg.degree(), 5);
            prop_assert!(fg.same_function(&multiply(&g, &f).unwrap()).unwrap());
            let l = multiply(&fg, &h).unwrap();
            let r = multiply(&f, &multiply(&g, &h).unwrap()).unwrap();
            prop_assert!(l.same_function(&r).unwrap());
        }
    }
}
