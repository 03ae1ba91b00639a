use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::arena::arena;
use super::{Basis, SymExpansion};
use crate::combinat::{syt_enumerate, Composition, SkewShape};
use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// Quasisymmetric function of degree `degree` in the fundamental basis `F_α`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuasiExpansion {
    degree: usize,
    coeffs: BTreeMap<Composition, QPoly>,
}

impl QuasiExpansion {
    pub fn zero(degree: usize) -> Self {
        QuasiExpansion { degree, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Composition, QPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &Composition) -> QPoly {
        self.coeffs.get(alpha).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, alpha: Composition, c: &QPoly) -> Result<()> {
        if alpha.size() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, alpha.size()));
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.coeffs.entry(alpha.clone()).or_insert_with(QPoly::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&alpha);
        }
        Ok(())
    }

    /// Termwise sum; both sides must have the same degree.
    pub fn merge(&mut self, other: &QuasiExpansion) -> Result<()> {
        for (a, c) in &other.coeffs {
            self.add_term(a.clone(), c)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct QuasiTerm {
    composition: Composition,
    poly: QPoly,
}

#[derive(Serialize, Deserialize)]
struct QuasiRepr {
    degree: usize,
    basis: String,
    coeffs: Vec<QuasiTerm>,
}

impl Serialize for QuasiExpansion {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        QuasiRepr {
            degree: self.degree,
            basis: "F".into(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, c)| QuasiTerm { composition: a.clone(), poly: c.clone() })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QuasiExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = QuasiRepr::deserialize(de)?;
        let mut out = QuasiExpansion::zero(r.degree);
        for t in r.coeffs {
            out.add_term(t.composition, &t.poly).map_err(serde::de::Error::custom)?;
        }
        Ok(out)
    }
}

/// Expansion in fundamentals: `s_λ = Σ_{T ∈ SYT(λ)} F_{co(D(T))}`.
pub fn sym_to_quasi(f: &SymExpansion) -> Result<QuasiExpansion> {
    let s = f.change_basis(Basis::Schur)?;
    let n = s.degree();
    let mut out = QuasiExpansion::zero(n);
    for (lambda, c) in s.terms() {
        for t in syt_enumerate(&SkewShape::straight(lambda.clone())) {
            out.add_term(Composition::from_descent_set(n, &t.descent_set()), c)?;
        }
    }
    Ok(out)
}

/// Schur coefficients `c_λ = Σ_α d_α K*(α, λ)` of a symmetric function given
/// by its fundamental expansion. The input is assumed symmetric; an
/// asymmetric input yields a result that disagrees with [`quasi_to_sym`].
pub fn quasi_to_schur_elw(d: &QuasiExpansion) -> SymExpansion {
    let a = arena(d.degree());
    let (comps, table) = a.k_star_table();
    let mut out = SymExpansion::zero(d.degree(), Basis::Schur);
    for (alpha, c) in d.terms() {
        let row = &table[comps.binary_search(alpha).expect("composition of the right size")];
        for (l, &k) in row.iter().enumerate() {
            if k != 0 {
                out.add_term(a.parts[l].clone(), &c.scale(&BigInt::from(k)));
            }
        }
    }
    out
}

/// Monomial-basis reading of a symmetric quasisymmetric function:
/// `[x^λ] F_α = 1` exactly when λ, read as a composition, refines α.
pub fn quasi_to_sym(d: &QuasiExpansion) -> SymExpansion {
    let a = arena(d.degree());
    let mut out = SymExpansion::zero(d.degree(), Basis::Monomial);
    for lambda in &a.parts {
        let lc = lambda.as_composition();
        let mut acc = QPoly::zero();
        for (alpha, c) in d.terms() {
            if lc.refines(alpha) {
                acc += c;
            }
        }
        out.add_term(lambda.clone(), &acc);
    }
    out
}
