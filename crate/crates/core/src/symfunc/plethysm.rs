use num_bigint::BigInt;

use super::{Basis, SymExpansion, SymExpansionRat};
use crate::error::Result;
use crate::qpoly::{QPoly, QPolyRat};

/// The ring map `p_k ↦ (q^k - 1) p_k`, i.e. `f ↦ f[(q-1)X]`, returned in
/// the power-sum basis.
pub fn p_map(f: &SymExpansionRat) -> Result<SymExpansionRat> {
    let p = f.change_basis(Basis::PowerSum)?;
    let mut out = SymExpansion::zero(p.degree(), Basis::PowerSum);
    for (lambda, c) in p.terms() {
        let factor = lambda.parts().iter().fold(QPolyRat::one(), |acc, &k| {
            &acc * &(&QPolyRat::q_pow(k) - &QPolyRat::one())
        });
        out.add_term(lambda.clone(), &(c * &factor));
    }
    Ok(out)
}

/// `(q-1)^{-n} f[(q-1)X]`, in the basis of `f`.
///
/// The intermediate power-sum coefficients are rational; the final result
/// must be integral and divisible by `(q-1)^n`, otherwise
/// [`Error::NonzeroRemainder`](crate::Error::NonzeroRemainder) or
/// [`Error::NonIntegral`](crate::Error::NonIntegral) is returned.
pub fn plethysm_q_shift(f: &SymExpansion) -> Result<SymExpansion> {
    let mapped = p_map(&f.to_rational())?.change_basis(f.basis())?;
    let q_minus_one = QPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)]).to_rational();
    let den = q_minus_one.pow(f.degree() as u32);
    let mut out = SymExpansion::zero(f.degree(), f.basis());
    for (lambda, c) in mapped.terms() {
        out.add_term(lambda.clone(), &c.exact_div(&den)?);
    }
    out.narrow()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::symfunc::{expansion, multiply};
    use crate::combinat::partitions_of;
    use proptest::prelude::*;

    #[test]
    fn degree_one() {
        let p1 = expansion(Basis::PowerSum, &[(&[1], &[1])]);
        assert_eq!(plethysm_q_shift(&p1).unwrap(), p1);
        let s1 = expansion(Basis::Schur, &[(&[1], &[1])]);
        let out = plethysm_q_shift(&s1).unwrap();
        assert!(out.same_function(&expansion(Basis::Elementary, &[(&[1], &[1])])).unwrap());
    }

    #[test]
    fn llt_of_edge_gives_chromatic_of_edge() {
        // s_2 + q s_11  ->  (1+q) e_2
        let llt = expansion(Basis::Schur, &[(&[2], &[1]), (&[1, 1], &[0, 1])]);
        let x = plethysm_q_shift(&llt).unwrap().change_basis(Basis::Elementary).unwrap();
        assert_eq!(x, expansion(Basis::Elementary, &[(&[2], &[1, 1])]));
    }

    #[test]
    fn non_divisible_input_alarms() {
        // s_2 alone is h_2; h_2[(q-1)X]/(q-1)^2 is not a polynomial
        let s2 = expansion(Basis::Schur, &[(&[2], &[1])]);
        assert_eq!(plethysm_q_shift(&s2), Err(Error::NonzeroRemainder));
    }

    fn arb(n: usize) -> impl Strategy<Value = SymExpansion> {
        let k = partitions_of(n).len();
        prop::collection::vec(prop::collection::vec(-3i64..4, 0..3), k).prop_map(move |cs| {
            SymExpansion::from_terms(n, Basis::Schur, partitions_of(n).into_iter().zip(cs).map(|(p, c)| (p, QPoly::from_i64s(&c))))
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn p_map_is_multiplicative(f in (1usize..=3).prop_flat_map(arb), g in (1usize..=2).prop_flat_map(arb)) {
            let fg = multiply(&f.to_rational(), &g.to_rational()).unwrap();
            let lhs = p_map(&fg).unwrap();
            let rhs = multiply(&p_map(&f.to_rational()).unwrap(), &p_map(&g.to_rational()).unwrap()).unwrap();
            prop_assert!(lhs.same_function(&rhs).unwrap());
        }
    }
}
