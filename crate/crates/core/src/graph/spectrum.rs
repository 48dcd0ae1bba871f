use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::OrthoGraph;

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    /// Coefficients of det(xI - A), leading coefficient first (`char_poly[0] == 1`).
    pub char_poly: Vec<BigInt>,
    /// Adjacency eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
}

impl SpectrumReport {
    /// Coefficient of `x^power`.
    pub fn coefficient(&self, power: usize) -> BigInt {
        let n = self.char_poly.len() - 1;
        if power > n {
            BigInt::zero()
        } else {
            self.char_poly[n - power].clone()
        }
    }

    /// |p(x)| divided by Σ|c_k|·max(1,|x|)^k, so roots score near machine
    /// precision whatever their size.
    pub fn scaled_residual(&self, x: f64) -> f64 {
        let mut value = 0.0f64;
        let mut scale = 0.0f64;
        let r = x.abs().max(1.0);
        for c in &self.char_poly {
            let c = c.to_f64().unwrap_or(f64::INFINITY);
            value = value * x + c;
            scale = scale * r + c.abs();
        }
        if scale == 0.0 {
            value.abs()
        } else {
            value.abs() / scale
        }
    }

    /// Human-readable polynomial, e.g. `x^2 - 1`.
    pub fn poly_string(&self) -> String {
        format_poly(&self.char_poly)
    }
}

/// Exact characteristic polynomial and floating-point spectrum.
pub fn spectrum(g: &OrthoGraph) -> SpectrumReport {
    let char_poly = characteristic_polynomial(&g.adjacency_matrix());
    let n = g.n();
    let a = DMatrix::from_fn(n, n, |i, j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 });
    let mut eigenvalues: Vec<f64> = if n == 0 {
        Vec::new()
    } else {
        a.symmetric_eigenvalues().iter().copied().collect()
    };
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    SpectrumReport {
        char_poly,
        eigenvalues,
    }
}

/// Division-free characteristic polynomial (Samuelson–Berkowitz).
///
/// Returns the coefficients of det(xI - M), leading coefficient first. Works
/// over the integers without any rounding, so results are exact for any size.
pub fn characteristic_polynomial(m: &[Vec<u8>]) -> Vec<BigInt> {
    let n = m.len();
    let entry = |i: usize, j: usize| BigInt::from(m[i][j]);
    let mut poly = vec![BigInt::one()];
    for k in 0..n {
        // Leading k x k block is A; column C = M[0..k][k], row R = M[k][0..k].
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-entry(k, k));
        let mut power_c: Vec<BigInt> = (0..k).map(|i| entry(i, k)).collect();
        for step in 0..k {
            let rac: BigInt = (0..k).map(|j| entry(k, j) * &power_c[j]).sum();
            toeplitz.push(-rac);
            if step + 1 < k {
                power_c = (0..k)
                    .map(|i| {
                        (0..k)
                            .filter(|&j| m[i][j] != 0)
                            .map(|j| entry(i, j) * &power_c[j])
                            .sum()
                    })
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                *slot += &toeplitz[i - j] * p;
            }
        }
        poly = next;
    }
    poly
}

/// Coefficient vector (leading first) of a product of integer polynomials.
pub fn poly_product(factors: &[&[i64]]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    for f in factors {
        let mut next = vec![BigInt::zero(); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, &b) in f.iter().enumerate() {
                next[i + j] += a * BigInt::from(b);
            }
        }
        acc = next;
    }
    acc
}

fn format_poly(coeffs: &[BigInt]) -> String {
    let n = coeffs.len().saturating_sub(1);
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = n - i;
        let negative = c < &BigInt::zero();
        let magnitude = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = magnitude.is_one();
        match power {
            0 => out.push_str(&magnitude.to_string()),
            1 if unit => out.push('x'),
            1 => out.push_str(&format!("{magnitude}x")),
            _ if unit => out.push_str(&format!("x^{power}")),
            _ => out.push_str(&format!("{magnitude}x^{power}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
