//! Exact univariate polynomials in `q`.
//!
//! [`Poly`] is dense and ascending: `coeffs[i]` is the coefficient of `q^i`.
//! The zero polynomial is the empty vector and a nonzero polynomial never
//! carries a trailing zero. Two scalar rings are used: arbitrary precision
//! integers ([`QPoly`]) everywhere, and rationals ([`QPolyRat`]) only inside
//! the power-sum pipeline.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact coefficient ring for [`Poly`].
pub trait Scalar:
    Clone
    + Eq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;
    /// `Some(self / rhs)` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    fn is_negative_scalar(&self) -> bool;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn is_negative_scalar(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn is_negative_scalar(&self) -> bool {
        self.is_negative()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

/// Integer polynomial in `q`: the scalar ring of every expansion.
pub type QPoly = Poly<BigInt>;
/// Rational polynomial in `q`, used for power-sum coefficients.
pub type QPolyRat = Poly<BigRational>;

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c q^deg`.
    pub fn monomial(c: S, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// `q^deg`.
    pub fn q_pow(deg: usize) -> Self {
        Self::monomial(S::one(), deg)
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at a scalar point.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_at_one(&self) -> S {
        self.coeffs.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    /// Quotient of an exact division in `S[q]`.
    ///
    /// Fails with [`Error::NonzeroRemainder`] when `den` does not divide
    /// `self`, including the integer case where a leading coefficient does
    /// not divide.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let dlead = den.leading().ok_or(Error::DivisionByZero)?.clone();
        let dn = den.coeffs.len() - 1;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() <= dn {
            return Err(Error::NonzeroRemainder);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![S::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dn].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(&dlead).ok_or(Error::NonzeroRemainder)?;
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroRemainder);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Coefficient of `q^i` equals coefficient of `q^(twice_center - i)` for
    /// every `i`; `twice_center` allows half-integral centers.
    pub fn is_palindromic(&self, twice_center: usize) -> bool {
        if let Some(d) = self.degree() {
            if d > twice_center {
                return false;
            }
        }
        (0..=twice_center).all(|i| self.coeff(i) == self.coeff(twice_center - i))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative_scalar())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl QPoly {
    pub fn to_rational(&self) -> QPolyRat {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPolyRat {
    /// Checked narrowing back to integer coefficients.
    pub fn narrow(&self) -> Result<QPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_int(n: usize) -> QPoly {
    Poly::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`; `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &q_int(k))
}

/// `exact_div` as a free function.
pub fn exact_div(num: &QPoly, den: &QPoly) -> Result<QPoly> {
    num.exact_div(den)
}

pub fn is_palindromic(p: &QPoly, twice_center: usize) -> bool {
    p.is_palindromic(twice_center)
}

impl<'a, S: Scalar> Add<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: &'a Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, S: Scalar> Sub<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: &'a Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, S: Scalar> Mul<&'a Poly<S>> for &'a Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: &'a Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr<Poly<S>> for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, S: Scalar> $tr<&'a Poly<S>> for Poly<S> {
            type Output = Poly<S>;
            fn $m(self, rhs: &'a Poly<S>) -> Poly<S> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

impl<S: Scalar> AddAssign<&Poly<S>> for Poly<S> {
    fn add_assign(&mut self, rhs: &Poly<S>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), S::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<S: Scalar> SubAssign<&Poly<S>> for Poly<S> {
    fn sub_assign(&mut self, rhs: &Poly<S>) {
        *self = &*self - rhs;
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Compact ascending form, e.g. `2q^6+q^7+q^8`, `1-q`, `0`.
impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_scalar();
            let abs = if neg { -c.clone() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let unit = abs.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) form back, tolerating spaces and
/// `*` between coefficient and `q`.
impl<S: Scalar> FromStr for Poly<S> {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let text: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if text.is_empty() {
            return Err("empty polynomial".into());
        }
        let bytes: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let mut acc = Poly::zero();
        while pos < bytes.len() {
            let mut neg = false;
            if bytes[pos] == '+' || bytes[pos] == '-' {
                neg = bytes[pos] == '-';
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == '/') {
                pos += 1;
            }
            let num: String = bytes[start..pos].iter().collect();
            let mut coeff = if num.is_empty() {
                S::one()
            } else {
                num.parse::<S>()
                    .map_err(|_| format!("bad coefficient '{num}' at {start}"))?
            };
            let mut exp = 0usize;
            if pos < bytes.len() && bytes[pos] == 'q' {
                pos += 1;
                exp = 1;
                if pos < bytes.len() && bytes[pos] == '^' {
                    pos += 1;
                    let estart = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let e: String = bytes[estart..pos].iter().collect();
                    exp = e.parse().map_err(|_| format!("bad exponent at {estart}"))?;
                }
            } else if num.is_empty() {
                return Err(format!("unexpected character at {pos}"));
            }
            if neg {
                coeff = -coeff;
            }
            acc += &Poly::monomial(coeff, exp);
            if pos < bytes.len() && bytes[pos] != '+' && bytes[pos] != '-' {
                return Err(format!("unexpected character '{}' at {pos}", bytes[pos]));
            }
        }
        Ok(acc)
    }
}

/// Serialized as an ascending list of decimal strings, e.g. `["1","2","2","1"]`.
impl<S: Scalar> Serialize for Poly<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Poly<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor<S>(std::marker::PhantomData<S>);

        impl<'de, S: Scalar> Visitor<'de> for PolyVisitor<S> {
            type Value = Poly<S>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a list of decimal coefficient strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Poly<S>, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<S>()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?;
                    coeffs.push(c);
                }
                Ok(Poly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(PolyVisitor(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn q_int_values() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), p(&[1]));
        assert_eq!(q_int(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(0), p(&[1]));
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(q_factorial(3).exact_div(&q_int(3)).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 1])), Err(Error::NonzeroRemainder));
        assert_eq!(p(&[1]).exact_div(&QPoly::zero()), Err(Error::DivisionByZero));
        // leading coefficient not divisible over Z
        assert_eq!(p(&[0, 1]).exact_div(&p(&[0, 2])), Err(Error::NonzeroRemainder));
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, 2, 1]).is_palindromic(2));
        assert!(p(&[1, 0, 1]).is_palindromic(2));
        assert!(!p(&[1, 2]).is_palindromic(1));
        assert!(p(&[0, 1, 1]).is_palindromic(3));
        assert!(QPoly::zero().is_palindromic(5));
    }

    #[test]
    fn display_and_parse() {
        let x = p(&[0, 0, 0, 0, 0, 0, 2, 1, 1]);
        assert_eq!(x.to_string(), "2q^6+q^7+q^8");
        assert_eq!(p(&[1, -1]).to_string(), "1-q");
        assert_eq!(p(&[-3, 0, -1]).to_string(), "-3-q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        for s in ["2q^6+q^7+q^8", "1-q", "-3-q^2", "0", "q", "-1-q"] {
            assert_eq!(s.parse::<QPoly>().unwrap().to_string(), s);
        }
        assert_eq!("1 + 2*q".parse::<QPoly>().unwrap(), p(&[1, 2]));
        assert!("1+x".parse::<QPoly>().is_err());
    }

    #[test]
    fn json_is_decimal_strings() {
        let s = serde_json::to_string(&q_factorial(3)).unwrap();
        assert_eq!(s, r#"["1","2","2","1"]"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q_factorial(3));
        let r = QPolyRat::from_coeffs(vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"["1/2"]"#);
    }

    #[test]
    fn narrowing() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(QPolyRat::from_coeffs(vec![half]).narrow(), Err(Error::NonIntegral));
        assert_eq!(p(&[3, 4]).to_rational().narrow().unwrap(), p(&[3, 4]));
    }

    #[test]
    fn q_factorial_at_one() {
        let mut fact = BigInt::one();
        for n in 0..=12usize {
            if n > 0 {
                fact *= n;
            }
            assert_eq!(q_factorial(n).eval_at_one(), fact);
        }
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(|v| QPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn q_int_split(m in 0usize..=50, n in 0usize..=50) {
            prop_assert_eq!(q_int(m + n), &q_int(m) + &q_int(n).shift(m));
        }

        #[test]
        fn display_roundtrip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a);
        }
    }
}
