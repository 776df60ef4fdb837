//! Explicit formulas for three one-parameter families.
//!
//! * `GZ(1 2^k 3)`: piecewise h-vector coefficients and the solved scalar
//!   recurrence for its f-polynomial.
//! * `GZ(1 2 3^k)` and `GZ(2^2 3^k)`: h-polynomials as sums over the
//!   sequence `Phi_0 = 0, Phi_1 = 1, Phi_{k+1} = (s^2+s) Phi_k - s^2 Phi_{k-1}`,
//!   the same pair through powers of the 2x2 transfer matrix, and their
//!   generating functions in `z`.
//!
//! Every quotient `(s^n - 1)/(s - 1)` or `((1+t)^n - 1)/t` is expanded as an
//! explicit sum, so all arithmetic stays in the integer polynomial ring.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::poly::{mul_z, IntPoly, SeriesRational};
use crate::recurrence::simplex_f;

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(c.to_vec())
}

/// Grow-only cache of the `Phi` sequence, safe for concurrent readers.
#[derive(Debug)]
pub struct PhiSeq {
    cache: RwLock<Vec<IntPoly>>,
}

impl Default for PhiSeq {
    fn default() -> Self {
        PhiSeq {
            cache: RwLock::new(vec![IntPoly::zero(), IntPoly::one()]),
        }
    }
}

impl PhiSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, k: usize) -> IntPoly {
        if let Some(p) = self.cache.read().expect("phi lock poisoned").get(k) {
            return p.clone();
        }
        let mut cache = self.cache.write().expect("phi lock poisoned");
        let b = poly(&[0, 1, 1]);
        let a = poly(&[0, 0, 1]);
        while cache.len() <= k {
            let n = cache.len();
            let next = &(&b * &cache[n - 1]) - &(&a * &cache[n - 2]);
            cache.push(next);
        }
        cache[k].clone()
    }

    pub fn cached_len(&self) -> usize {
        self.cache.read().expect("phi lock poisoned").len()
    }
}

fn shared_phi() -> &'static PhiSeq {
    static PHI: OnceLock<PhiSeq> = OnceLock::new();
    PHI.get_or_init(PhiSeq::new)
}

/// `Phi_k` in the variable `s`.
pub fn phi(k: usize) -> IntPoly {
    shared_phi().get(k)
}

/// h-polynomial of `GZ(1 2^k 3)` from its coefficient formulas:
/// `h_{2k+1} = 1`, `h_{2k-2j} = 1 + 2(min(2j+1, k) - j)` for `j <= k`,
/// `h_{2k-2j-1} = 2(min(2j+2, k) - j)` for `j < k`.
pub fn h_12k3(k: usize) -> IntPoly {
    let mut h = vec![0i64; 2 * k + 2];
    h[2 * k + 1] = 1;
    let k_i = k as i64;
    for j in 0..=k {
        let ji = j as i64;
        h[2 * k - 2 * j] = 1 + 2 * ((2 * ji + 1).min(k_i) - ji);
        if j < k {
            h[2 * k - 2 * j - 1] = 2 * ((2 * ji + 2).min(k_i) - ji);
        }
    }
    poly(&h)
}

/// f-polynomial of `GZ(1 2^k 3)` from the solved scalar recurrence
/// `b_k = mu b_{k-1} + nu a_k + 1` with `mu = (1+t)^2`, `nu = 2 + 2t`,
/// `b_0 = 2 + t` and `a_j` the f-polynomial of the `j`-simplex.
pub fn f_12k3_solution(k: usize) -> IntPoly {
    let one_plus_t = poly(&[1, 1]);
    let nu = poly(&[2, 2]);
    let mut total = &one_plus_t.pow(2 * k as u32) * &poly(&[2, 1]);
    for j in 1..=k {
        let inner = &(&nu * &simplex_f(j)) + &IntPoly::one();
        total += &(&one_plus_t.pow(2 * (k - j) as u32) * &inner);
    }
    total
}

/// `sum_{j=0}^{k} (1 + s + ... + s^{j+1}) Phi_{k-j+1}`.
pub fn h_123k(k: usize) -> IntPoly {
    (0..=k)
        .map(|j| &IntPoly::geometric(j + 1) * &phi(k - j + 1))
        .sum()
}

/// `sum_{j=0}^{k} s^{j+2} Phi_{k-j} + (1 + s + ... + s^k)`.
pub fn h_223k(k: usize) -> IntPoly {
    let phis: IntPoly = (0..=k).map(|j| phi(k - j).shift_up(j + 2)).sum();
    &phis + &IntPoly::geometric(k)
}

/// h-polynomials of `GZ(1 2 3^k)` and `GZ(2^2 3^k)` for a common `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPair {
    pub h_123k: IntPoly,
    pub h_223k: IntPoly,
}

type Mat2 = [[IntPoly; 2]; 2];

/// `M_s^m` in closed form through `Phi`; `m = 0` is the identity.
fn transfer_power(m: usize) -> Mat2 {
    if m == 0 {
        return [
            [IntPoly::one(), IntPoly::zero()],
            [IntPoly::zero(), IntPoly::one()],
        ];
    }
    let (prev, cur, next) = (phi(m - 1), phi(m), phi(m + 1));
    [
        [&next - &cur, cur.clone()],
        [&poly(&[-1, 1]) * &cur, &cur - &prev.shift_up(2)],
    ]
}

fn apply(m: &Mat2, v: &[IntPoly; 2]) -> [IntPoly; 2] {
    [
        &(&m[0][0] * &v[0]) + &(&m[0][1] * &v[1]),
        &(&m[1][0] * &v[0]) + &(&m[1][1] * &v[1]),
    ]
}

/// The pair through the transfer matrix:
/// `M^k (s+1, 1)^T + sum_{j=1}^{k} M^{k-j} ((s+1) g_j, g_j)^T`,
/// `g_j = 1 + s + ... + s^j`.
pub fn h_pair_matrix(k: usize) -> HPair {
    let s_plus_1 = poly(&[1, 1]);
    let mut acc = apply(&transfer_power(k), &[s_plus_1.clone(), IntPoly::one()]);
    for j in 1..=k {
        let g = IntPoly::geometric(j);
        let term = apply(&transfer_power(k - j), &[&s_plus_1 * &g, g]);
        acc[0] += &term[0];
        acc[1] += &term[1];
    }
    let [h_123k, h_223k] = acc;
    HPair { h_123k, h_223k }
}

/// The two families with a rational generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `GZ(1 2 3^k)`, signature `(1, 1, k)`
    F123K,
    /// `GZ(2^2 3^k)`, signature `(2, k)`
    F223K,
}

/// `sum_k h_k(s) z^k` as a rational function with denominator
/// `(1 - z)(1 - sz)(s^2 z^2 - (s^2 + s) z + 1)`.
pub fn gf_family(family: Family) -> SeriesRational {
    let numerator = match family {
        Family::F123K => vec![poly(&[1, 1]), poly(&[0, -1])],
        Family::F223K => vec![poly(&[1]), poly(&[0, -1])],
    };
    let factors = [
        vec![poly(&[1]), poly(&[-1])],
        vec![poly(&[1]), poly(&[0, -1])],
        vec![poly(&[1]), poly(&[0, -1, -1]), poly(&[0, 0, 1])],
    ];
    let denominator = factors
        .iter()
        .fold(vec![IntPoly::one()], |acc, f| mul_z(&acc, f));
    SeriesRational::new(numerator, denominator).expect("denominator has constant term 1")
}

/// `Phi_k(s)` from the roots of `x^2 - (s^2 + s) x + s^2`, in floating point:
/// `s^{k-1} (l_+^k - l_-^k) / sqrt(s^2 + 2s - 3)` with
/// `l_(+/-) = (s + 1 +/- sqrt(s^2 + 2s - 3)) / 2`.
///
/// Only meaningful where `s^2 + 2s - 3 > 0`.
pub fn phi_radical(k: u32, s: f64) -> f64 {
    let disc = (s * s + 2.0 * s - 3.0).sqrt();
    let plus = (s + 1.0 + disc) / 2.0;
    let minus = (s + 1.0 - disc) / 2.0;
    let k = k as i32;
    s.powi(k - 1) * (plus.powi(k) - minus.powi(k)) / disc
}

/// Exact `Phi_k(s)` at an integer point.
pub fn phi_at(k: usize, s: i64) -> BigInt {
    phi(k).evaluate_i64(s)
}
