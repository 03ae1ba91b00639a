//! Symmetric functions of a fixed degree with exact coefficients in `q`.
//!
//! A degree-`n` symmetric function is stored as a finite map from partitions
//! of `n` to polynomials in one of four bases. Conversions go through the
//! monomial basis using the per-degree tables in [`arena`]. Quasisymmetric
//! expansions use the fundamental basis `F_α`.

pub mod arena;
mod latex;
mod plethysm;
mod positivity;
mod product;
mod quasi;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::qpoly::{Poly, QPoly, Scalar};

pub use latex::{latex, latex_poly};
pub use plethysm::{p_map, plethysm_q_shift};
pub use positivity::{check_conjecture_sw, e_positive, slices};
pub use product::multiply;
pub use quasi::{quasi_to_schur_elw, quasi_to_sym, sym_to_quasi, QuasiExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "p")]
    PowerSum,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Elementary => 'e',
            Basis::Schur => 's',
            Basis::PowerSum => 'p',
        }
    }
}

impl std::str::FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "m" => Ok(Basis::Monomial),
            "e" => Ok(Basis::Elementary),
            "s" => Ok(Basis::Schur),
            "p" => Ok(Basis::PowerSum),
            _ => Err(format!("unknown basis '{s}' (expected m, e, s or p)")),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Homogeneous symmetric function of degree `degree` in one basis.
/// Absent partitions have coefficient zero; zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpansion<S = BigInt> {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Poly<S>>,
}

/// Power-sum expansions carry rational coefficients.
pub type SymExpansionRat = SymExpansion<BigRational>;

impl<S: Scalar> SymExpansion<S> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymExpansion { degree, basis, coeffs: BTreeMap::new() }
    }

    /// The constant 1 (degree 0).
    pub fn one(basis: Basis) -> Self {
        Self::single(basis, Partition::empty(), Poly::one())
    }

    /// `c · b_λ` for basis `b`.
    pub fn single(basis: Basis, lambda: Partition, c: Poly<S>) -> Self {
        let mut out = Self::zero(lambda.size(), basis);
        out.add_term(lambda, &c);
        out
    }

    pub fn from_terms(degree: usize, basis: Basis, terms: impl IntoIterator<Item = (Partition, Poly<S>)>) -> Result<Self> {
        let mut out = Self::zero(degree, basis);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::DegreeMismatch(degree, p.size()));
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Poly<S>> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> Poly<S> {
        self.coeffs.get(p).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · b_λ`; `λ` must have size `degree`.
    pub fn add_term(&mut self, lambda: Partition, c: &Poly<S>) {
        debug_assert_eq!(lambda.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda).or_insert_with(Poly::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Poly<S>) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (p, v) in &self.coeffs {
            out.add_term(p.clone(), &(v * c));
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly<S>) -> Poly<S>) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (p, v) in &self.coeffs {
            out.add_term(p.clone(), &f(v));
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    /// Sum, expressed in the basis of `self`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let other = other.change_basis(self.basis)?;
        let mut out = self.clone();
        for (p, v) in &other.coeffs {
            out.add_term(p.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.map_coeffs(|c| -c))
    }

    /// Equality as symmetric functions, independent of basis.
    pub fn same_function(&self, other: &Self) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(self.is_zero() && other.is_zero());
        }
        Ok(self.change_basis(Basis::Monomial)? == other.change_basis(Basis::Monomial)?)
    }

    /// Re-expresses in `target`. Fails with [`Error::NonIntegral`] when the
    /// scalar ring cannot hold the result (integers into the p basis).
    pub fn change_basis(&self, target: Basis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_monomial();
        m.from_monomial(target)
    }

    fn to_monomial(&self) -> Self {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let a = arena::arena(self.degree);
        let mat = match self.basis {
            Basis::Schur => &a.s_to_m,
            Basis::Elementary => &a.e_to_m,
            Basis::PowerSum => &a.p_to_m,
            Basis::Monomial => unreachable!(),
        };
        let mut acc: Vec<Poly<S>> = vec![Poly::zero(); a.len()];
        for (p, c) in &self.coeffs {
            let row = &mat[a.idx(p)];
            for (j, &x) in row.iter().enumerate() {
                if x != 0 {
                    acc[j] += &c.scale(&S::from_i64(x));
                }
            }
        }
        let mut out = Self::zero(self.degree, Basis::Monomial);
        for (j, c) in acc.into_iter().enumerate() {
            out.add_term(a.parts[j].clone(), &c);
        }
        out
    }

    /// Triangular solve from monomial coefficients.
    fn from_monomial(&self, target: Basis) -> Result<Self> {
        debug_assert_eq!(self.basis, Basis::Monomial);
        if target == Basis::Monomial {
            return Ok(self.clone());
        }
        let a = arena::arena(self.degree);
        let k = a.len();
        let mut rest: Vec<Poly<S>> = (0..k).map(|j| self.coeff(&a.parts[j])).collect();
        let mut out = Self::zero(self.degree, target);
        // (pivot column, matrix row) pairs in elimination order
        let (mat, order): (&Vec<Vec<i64>>, Vec<(usize, usize)>) = match target {
            // K is unitriangular: s_λ has leading term m_λ
            Basis::Schur => (&a.s_to_m, (0..k).map(|l| (l, l)).collect()),
            // e_λ has leading term m_{λ'}
            Basis::Elementary => {
                let mut inv = vec![0; k];
                for (l, &c) in a.conj.iter().enumerate() {
                    inv[c] = l;
                }
                (&a.e_to_m, (0..k).map(|mu| (mu, inv[mu])).collect())
            }
            // p_λ only reaches m_μ for μ coarser than λ
            Basis::PowerSum => (&a.p_to_m, (0..k).rev().map(|l| (l, l)).collect()),
            Basis::Monomial => unreachable!(),
        };
        for (pivot, row) in order {
            let c = std::mem::replace(&mut rest[pivot], Poly::zero());
            if c.is_zero() {
                continue;
            }
            let diag = S::from_i64(mat[row][pivot]);
            let c = Poly::from_coeffs(
                c.coeffs()
                    .iter()
                    .map(|x| x.div_exact(&diag).ok_or(Error::NonIntegral))
                    .collect::<Result<Vec<S>>>()?,
            );
            for (j, &x) in mat[row].iter().enumerate() {
                if x != 0 && j != pivot {
                    rest[j] -= &c.scale(&S::from_i64(x));
                }
            }
            out.add_term(a.parts[row].clone(), &c);
        }
        debug_assert!(rest.iter().all(|r| r.is_zero()));
        Ok(out)
    }

    /// Coefficient polynomials evaluated at `q = x`.
    pub fn eval_q(&self, x: &S) -> Self {
        self.map_coeffs(|c| Poly::constant(c.eval(x)))
    }

    /// Largest q-degree among the coefficients.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.values().filter_map(|c| c.degree()).max()
    }
}

impl SymExpansion<BigInt> {
    pub fn to_rational(&self) -> SymExpansionRat {
        SymExpansion {
            degree: self.degree,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), c.to_rational())).collect(),
        }
    }

    /// `Σ_λ c_λ e_λ` with every coefficient nonnegative, in the given basis.
    pub fn is_positive_in(&self, basis: Basis) -> Result<bool> {
        Ok(self.change_basis(basis)?.coeffs.values().all(|c| c.is_nonnegative()))
    }
}

impl SymExpansionRat {
    pub fn narrow(&self) -> Result<SymExpansion> {
        Ok(SymExpansion {
            degree: self.degree,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, c)| Ok((p.clone(), c.narrow()?)))
                .collect::<Result<_>>()?,
        })
    }
}

impl<S: Scalar> fmt::Debug for SymExpansion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(1+q)e_{2} + q e_{1,1}` style, one term per partition in increasing
/// lexicographic order of the map.
impl<S: Scalar> fmt::Display for SymExpansion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(p, c)| format!("({c}){}{}", self.basis.letter(), p))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct TermRepr<S: Scalar> {
    partition: Partition,
    poly: Poly<S>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct ExpansionRepr<S: Scalar> {
    degree: usize,
    basis: Basis,
    coeffs: Vec<TermRepr<S>>,
}

impl<S: Scalar> Serialize for SymExpansion<S> {
    fn serialize<Ser: serde::Serializer>(&self, ser: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        ExpansionRepr {
            degree: self.degree,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .rev()
                .map(|(p, c)| TermRepr { partition: p.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for SymExpansion<S> {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = ExpansionRepr::<S>::deserialize(de)?;
        SymExpansion::from_terms(r.degree, r.basis, r.coeffs.into_iter().map(|t| (t.partition, t.poly)))
            .map_err(serde::de::Error::custom)
    }
}

/// `Σ_λ c_λ b_λ` with integer constants, for tests and examples.
pub fn expansion(basis: Basis, terms: &[(&[usize], &[i64])]) -> SymExpansion {
    let degree = terms.first().map_or(0, |t| t.0.iter().sum());
    SymExpansion::from_terms(
        degree,
        basis,
        terms
            .iter()
            .map(|(p, c)| (Partition::new(p.to_vec()).expect("partition"), QPoly::from_i64s(c))),
    )
    .expect("homogeneous terms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn e_n_is_s_column() {
        for n in 1..=7 {
            let e = SymExpansion::single(Basis::Elementary, p(&[n]), QPoly::one());
            let s = e.change_basis(Basis::Schur).unwrap();
            assert_eq!(s, SymExpansion::single(Basis::Schur, Partition::new(vec![1; n]).unwrap(), QPoly::one()));
        }
    }

    #[test]
    fn schur_21_in_m() {
        let s = expansion(Basis::Schur, &[(&[2, 1], &[1])]);
        assert_eq!(s.change_basis(Basis::Monomial).unwrap(), expansion(Basis::Monomial, &[(&[2, 1], &[1]), (&[1, 1, 1], &[2])]));
    }

    #[test]
    fn integral_to_power_sum_fails() {
        let e2 = expansion(Basis::Elementary, &[(&[2], &[1])]);
        assert_eq!(e2.change_basis(Basis::PowerSum), Err(Error::NonIntegral));
        // e_2 = (p_11 - p_2) / 2
        let r = e2.to_rational().change_basis(Basis::PowerSum).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(r.coeff(&p(&[1, 1])), Poly::constant(half.clone()));
        assert_eq!(r.coeff(&p(&[2])), Poly::constant(-half));
    }

    #[test]
    fn json_shape() {
        let f = expansion(Basis::Elementary, &[(&[3, 1], &[0, 1, 1])]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"degree":4,"basis":"e","coeffs":[{"partition":[3,1],"poly":["0","1","1"]}]}"#);
        assert_eq!(serde_json::from_str::<SymExpansion>(&s).unwrap(), f);
    }

    #[test]
    fn zero_terms_dropped() {
        let mut f = expansion(Basis::Schur, &[(&[2], &[1])]);
        f.add_term(p(&[2]), &QPoly::from_i64s(&[-1]));
        assert!(f.is_zero());
    }

    fn arb_expansion(n: usize) -> impl Strategy<Value = SymExpansion> {
        let k = partitions_of(n).len();
        prop::collection::vec(prop::collection::vec(-5i64..6, 0..3), k).prop_map(move |cs| {
            let parts = partitions_of(n);
            SymExpansion::from_terms(n, Basis::Monomial, parts.into_iter().zip(cs).map(|(p, c)| (p, QPoly::from_i64s(&c))))
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn round_trip_m_e_s_p_m(f in arb_expansion(6)) {
            let e = f.change_basis(Basis::Elementary).unwrap();
            let s = e.change_basis(Basis::Schur).unwrap();
            let pr = s.to_rational().change_basis(Basis::PowerSum).unwrap();
            let back = pr.change_basis(Basis::Monomial).unwrap().narrow().unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
