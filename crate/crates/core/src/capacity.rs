//! Shannon-capacity bounds: α of the graph and of its strong square from
//! below, the Lovász number from above.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{independence_number, strong_product, OrthoGraph};

/// Largest graph accepted by [`lovasz_theta`].
pub const THETA_LIMIT: usize = 64;
/// Largest graph whose strong square is searched for α.
pub const SQUARE_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaOptions {
    /// Relative primal and dual residual at which iteration stops.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for ThetaOptions {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            max_iterations: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CapacityBound {
    pub alpha1: usize,
    /// α(G⊠G); absent when k_max = 1 or the search budget ran out.
    pub alpha2: Option<usize>,
    /// max(α(G), √α(G⊠G)), a lower bound on the Shannon capacity.
    pub lower: f64,
    pub theta: f64,
    pub nontrivial: bool,
}

/// θ(C_n) = n cos(π/n) / (1 + cos(π/n)) for odd n ≥ 3.
pub fn cycle_theta(n: usize) -> Result<f64> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "cycle_theta needs odd n >= 3, got {n}"
        )));
    }
    let c = (std::f64::consts::PI / n as f64).cos();
    Ok(n as f64 * c / (1.0 + c))
}

pub fn lovasz_theta(g: &OrthoGraph) -> Result<f64> {
    lovasz_theta_with(g, ThetaOptions::default())
}

/// Lovász number from the SDP  max ⟨J, B⟩  s.t.  tr B = 1,  B_ij = 0 on edges,  B ⪰ 0.
///
/// Solved by the alternating direction method on the dual (Wen, Goldfarb and
/// Yin): a closed-form multiplier update for the affine constraints, then a
/// projection onto the PSD cone by clipping eigenvalues. The edge
/// constraints are scaled so that A·Aᵀ is diagonal. Returns the primal
/// objective once both relative residuals drop below `options.tol`.
pub fn lovasz_theta_with(g: &OrthoGraph, options: ThetaOptions) -> Result<f64> {
    let n = g.n();
    if n > THETA_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: THETA_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0.0);
    }
    let edges = g.edges();
    let m = edges.len() + 1;
    let r2 = std::f64::consts::SQRT_2;
    // constraint 0 is the trace, then one per edge
    let a_op = |x: &DMatrix<f64>| -> DVector<f64> {
        let mut out = DVector::zeros(m);
        out[0] = x.trace();
        for (k, &(i, j)) in edges.iter().enumerate() {
            out[k + 1] = r2 * x[(i, j)];
        }
        out
    };
    let a_adj = |y: &DVector<f64>| -> DMatrix<f64> {
        let mut out = DMatrix::from_diagonal_element(n, n, y[0]);
        for (k, &(i, j)) in edges.iter().enumerate() {
            out[(i, j)] = y[k + 1] / r2;
            out[(j, i)] = y[k + 1] / r2;
        }
        out
    };
    let aat_inv = |mut v: DVector<f64>| {
        v[0] /= n as f64;
        v
    };
    let mut b = DVector::zeros(m);
    b[0] = 1.0;
    let c = -DMatrix::from_element(n, n, 1.0);
    let c_norm = c.norm();

    let mut x = DMatrix::from_diagonal_element(n, n, 1.0 / n as f64);
    let mut s = DMatrix::zeros(n, n);
    let mut mu = 1.0f64;
    let (mut pinf, mut dinf) = (f64::INFINITY, f64::INFINITY);
    let mut ratio_log = 0.0f64;
    for it in 1..=options.max_iterations {
        let y = -aat_inv(mu * (a_op(&x) - &b) + a_op(&(&s - &c)));
        let aty = a_adj(&y);
        let v = &c - &aty - mu * &x;
        let (pos, neg) = split_psd(v);
        s = pos;
        x = neg / mu;

        pinf = (a_op(&x) - &b).norm() / 2.0;
        dinf = (&aty + &s - &c).norm() / (1.0 + c_norm);
        if pinf < options.tol && dinf < options.tol {
            return Ok(objective(&x));
        }
        // keep the two residuals balanced
        ratio_log += (pinf / dinf.max(f64::MIN_POSITIVE)).ln();
        if it % 20 == 0 {
            if ratio_log > 20.0 * 0.7 {
                mu = (mu * 1.6).min(1e4);
            } else if ratio_log < -20.0 * 0.7 {
                mu = (mu / 1.6).max(1e-4);
            }
            ratio_log = 0.0;
        }
    }
    Err(Error::NotConverged {
        iterations: options.max_iterations,
        best: objective(&x),
        residual: pinf.max(dinf),
    })
}

/// ⟨J, X⟩ after rescaling X to unit trace, which removes the dominant part
/// of the remaining primal residual.
fn objective(x: &DMatrix<f64>) -> f64 {
    let t = x.trace();
    if t > 0.0 {
        x.sum() / t
    } else {
        x.sum()
    }
}

/// Splits a symmetric matrix into its PSD part and the PSD part of its negation.
fn split_psd(v: DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = v.nrows();
    let sym = (&v + v.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let mut pos = DMatrix::zeros(n, n);
    let mut neg = DMatrix::zeros(n, n);
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        let u = eig.eigenvectors.column(k);
        let outer = u * u.transpose();
        if lambda > 0.0 {
            pos += outer * lambda;
        } else if lambda < 0.0 {
            neg -= outer * lambda;
        }
    }
    (pos, neg)
}

/// Independence numbers of G (and of G⊠G when `k_max` = 2) and the Lovász number.
///
/// `node_budget` bounds the branch and bound on the strong square only; when
/// it runs out `alpha2` is left empty and `lower` falls back to α(G).
pub fn capacity_bounds(
    g: &OrthoGraph,
    k_max: u8,
    node_budget: Option<u64>,
) -> Result<CapacityBound> {
    if !(1..=2).contains(&k_max) {
        return Err(Error::InvalidArgument(format!(
            "k_max must be 1 or 2, got {k_max}"
        )));
    }
    if k_max == 2 && g.n() > SQUARE_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: SQUARE_LIMIT,
        });
    }
    let (alpha1, _) = independence_number(g, None).expect("unbounded search always finishes");
    let alpha2 = if k_max == 2 {
        independence_number(&strong_product(g, g), node_budget).map(|(a, _)| a)
    } else {
        None
    };
    let lower = (alpha1 as f64).max(alpha2.map_or(0.0, |a| (a as f64).sqrt()));
    let theta = lovasz_theta(g)?;
    Ok(CapacityBound {
        alpha1,
        alpha2,
        lower,
        theta,
        nontrivial: lower > alpha1 as f64 + 1e-9,
    })
}
