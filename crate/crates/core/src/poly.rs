//! Dense univariate polynomials over arbitrary-precision integers, and
//! power-series expansion of rational functions in `z` whose coefficients
//! are such polynomials.
//!
//! The zero polynomial is the empty coefficient list; every constructor and
//! operation trims trailing zeros so that `degree` is unambiguous.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A polynomial `c_0 + c_1 x + ... + c_n x^n` with `BigInt` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients in increasing degree order.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// `1 + x + ... + x^n`, i.e. `(x^{n+1} - 1)/(x - 1)` without division.
    pub fn geometric(n: usize) -> Self {
        Self::from_coeffs(vec![1; n + 1])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^n`.
    pub fn shift_up(&self, n: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut n: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `p(x + c)` expanded in `x`.
    ///
    /// With `c = -1` this turns an f-polynomial into the h-polynomial
    /// `h(s) = f(s - 1)`; `c = +1` goes back.
    pub fn substitute_shift(&self, c: i64) -> IntPoly {
        let c = BigInt::from(c);
        let mut acc: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        // Horner in the ring: acc <- acc * (x + c) + a_i
        for a in self.coeffs.iter().rev() {
            acc.push(BigInt::zero());
            for i in (0..acc.len()).rev() {
                let lower = if i > 0 {
                    acc[i - 1].clone()
                } else {
                    BigInt::zero()
                };
                acc[i] = &acc[i] * &c + lower;
            }
            acc[0] += a;
        }
        IntPoly::from_coeffs(acc)
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, a| acc * x + a)
    }

    pub fn evaluate_i64(&self, x: i64) -> BigInt {
        self.evaluate(&BigInt::from(x))
    }

    /// Coefficients rendered as decimal strings, lowest degree first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Renders with the given variable name, highest degree first,
    /// e.g. `s^4+2s^3`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, var }
    }
}

struct PolyDisplay<'a> {
    poly: &'a IntPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let mag = c.abs();
            if deg == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{deg}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("t").fmt(f)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Product of two polynomials in `z` whose coefficients are [`IntPoly`]s.
pub fn mul_z(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![IntPoly::zero(); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            out[i + j] += &(p * q);
        }
    }
    trim_z(&mut out);
    out
}

fn trim_z(v: &mut Vec<IntPoly>) {
    while v.last().is_some_and(IntPoly::is_zero) {
        v.pop();
    }
}

/// A rational function `N(s, z) / D(s, z)` stored as coefficient lists in
/// `z`; entry `m` is the coefficient of `z^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRational {
    numerator: Vec<IntPoly>,
    denominator: Vec<IntPoly>,
}

impl SeriesRational {
    /// Normalizes so that the `z^0` coefficient of the denominator is `1`.
    ///
    /// That coefficient must be a nonzero constant dividing every
    /// coefficient of numerator and denominator.
    pub fn new(numerator: Vec<IntPoly>, denominator: Vec<IntPoly>) -> Result<Self> {
        let lead = denominator
            .first()
            .filter(|p| p.degree() == Some(0))
            .map(|p| p.coeff(0))
            .ok_or_else(|| {
                Error::InvalidArgument(
                    "denominator at z = 0 must be a nonzero constant".to_string(),
                )
            })?;
        let divide = |polys: Vec<IntPoly>| -> Result<Vec<IntPoly>> {
            polys
                .into_iter()
                .map(|p| {
                    let coeffs = p
                        .into_coeffs()
                        .into_iter()
                        .map(|c| {
                            if (&c % &lead).is_zero() {
                                Ok(c / &lead)
                            } else {
                                Err(Error::InvalidArgument(format!(
                                    "coefficient {c} not divisible by denominator constant {lead}"
                                )))
                            }
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(IntPoly::from_coeffs(coeffs))
                })
                .collect()
        };
        let mut numerator = divide(numerator)?;
        let mut denominator = divide(denominator)?;
        trim_z(&mut numerator);
        trim_z(&mut denominator);
        Ok(SeriesRational {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[IntPoly] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[IntPoly] {
        &self.denominator
    }

    /// Coefficients of `z^0 ..= z^k_max` of the power-series expansion.
    ///
    /// Uses `c_m = N_m - sum_{j >= 1} D_j c_{m-j}`, valid because `D_0 = 1`.
    pub fn series_coeffs(&self, k_max: usize) -> Vec<IntPoly> {
        let mut out: Vec<IntPoly> = Vec::with_capacity(k_max + 1);
        for m in 0..=k_max {
            let mut c = self.numerator.get(m).cloned().unwrap_or_default();
            for (j, d) in self.denominator.iter().enumerate().skip(1).take(m) {
                c = &c - &(d * &out[m - j]);
            }
            out.push(c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, 1]), p(&[2, 2]));
        assert_eq!(&p(&[3, 0, 5]) + &IntPoly::zero(), p(&[3, 0, 5]));
        let cancelled = &p(&[2, 1]) + &p(&[-2, -1]);
        assert!(cancelled.is_zero());
        assert!(cancelled.coeffs().is_empty());
        assert_eq!(cancelled.degree(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        let s2s = p(&[0, 1, 1]);
        let phi3 = &(&s2s * &s2s) - &p(&[0, 0, 1]);
        assert_eq!(phi3, p(&[0, 0, 0, 2, 1]));
        assert!((&p(&[4, 5]) * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn normalization_trims_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.coeffs().len(), 2);
        assert_eq!(q.degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn shift_examples() {
        let f = p(&[7, 11, 6, 1]);
        assert_eq!(f.substitute_shift(-1), p(&[1, 2, 3, 1]));
        assert_eq!(f.substitute_shift(0), f);
        assert_eq!(p(&[0, 1]).substitute_shift(-1), p(&[-1, 1]));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[7, 11, 6, 1]).evaluate_i64(-1), BigInt::from(1));
        assert_eq!(IntPoly::zero().evaluate_i64(17), BigInt::from(0));
        assert_eq!(p(&[4, 6, 4, 1]).evaluate_i64(-1), BigInt::from(1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, 0, 0, 2, 1]).display_in("s").to_string(), "s^4+2s^3");
        assert_eq!(
            p(&[0, 0, 0, -1, 1, 3, 1]).display_in("s").to_string(),
            "s^6+3s^5+s^4-s^3"
        );
        assert_eq!(p(&[7, 11, 6, 1]).to_string(), "t^3+6t^2+11t+7");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
    }

    #[test]
    fn pow_and_geometric() {
        assert_eq!(p(&[1, 1]).pow(4), p(&[1, 4, 6, 4, 1]));
        assert_eq!(p(&[3]).pow(0), IntPoly::one());
        assert_eq!(IntPoly::geometric(3), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn coefficients_exceed_machine_words() {
        let big = p(&[1, 1]).pow(200);
        assert_eq!(big.degree(), Some(200));
        assert!(big.to_i64_vec().is_none());
        assert_eq!(big.evaluate_i64(1), BigInt::from(2).pow(200));
    }

    // (1 - z)(1 - sz)(s^2 z^2 - (s^2 + s) z + 1), expanded independently
    // coefficient by coefficient in z.
    fn family_denominator() -> Vec<IntPoly> {
        vec![
            p(&[1]),
            p(&[-1, -2, -1]),
            p(&[0, 2, 3, 1]),
            p(&[0, 0, -2, -2]),
            p(&[0, 0, 0, 1]),
        ]
    }

    #[test]
    fn denominator_expansion_matches_factor_product() {
        let factors = [
            vec![p(&[1]), p(&[-1])],
            vec![p(&[1]), p(&[0, -1])],
            vec![p(&[1]), p(&[0, -1, -1]), p(&[0, 0, 1])],
        ];
        let prod = factors
            .iter()
            .fold(vec![IntPoly::one()], |acc, f| mul_z(&acc, f));
        assert_eq!(prod, family_denominator());
    }

    #[test]
    fn series_examples() {
        let r = SeriesRational::new(vec![p(&[1, 1]), p(&[0, -1])], family_denominator()).unwrap();
        assert_eq!(r.series_coeffs(0), vec![p(&[1, 1])]);

        let r = SeriesRational::new(vec![p(&[1]), p(&[0, -1])], family_denominator()).unwrap();
        assert_eq!(r.series_coeffs(1), vec![p(&[1]), p(&[1, 1, 1])]);

        let geo = SeriesRational::new(vec![p(&[1])], vec![p(&[1]), p(&[-1])]).unwrap();
        assert_eq!(geo.series_coeffs(2), vec![p(&[1]); 3]);
    }

    #[test]
    fn series_normalizes_constant_denominator() {
        let r = SeriesRational::new(vec![p(&[2])], vec![p(&[2]), p(&[-2])]).unwrap();
        assert_eq!(r.denominator()[0], IntPoly::one());
        assert_eq!(r.series_coeffs(3), vec![IntPoly::one(); 4]);
    }

    #[test]
    fn series_rejects_bad_denominators() {
        assert!(SeriesRational::new(vec![p(&[1])], vec![p(&[0, 1])]).is_err());
        assert!(SeriesRational::new(vec![p(&[1])], vec![]).is_err());
        assert!(SeriesRational::new(vec![p(&[1])], vec![p(&[2]), p(&[1])]).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(IntPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
            }
        }

        #[test]
        fn shift_round_trip(a in small_poly(), c in -3i64..4) {
            prop_assert_eq!(a.substitute_shift(1).substitute_shift(-1), a.clone());
            prop_assert_eq!(a.substitute_shift(c).substitute_shift(-c), a.clone());
            // p(x + c) evaluated at x agrees with p evaluated at x + c
            let x = BigInt::from(5);
            prop_assert_eq!(a.substitute_shift(c).evaluate(&x), a.evaluate(&(&x + c)));
        }

        #[test]
        fn series_prefix_stable(num in prop::collection::vec(small_poly(), 0..4), k in 0usize..8) {
            let r = SeriesRational::new(num, family_denominator()).unwrap();
            let longer = r.series_coeffs(k + 1);
            prop_assert_eq!(&longer[..=k], &r.series_coeffs(k)[..]);
        }
    }
}
