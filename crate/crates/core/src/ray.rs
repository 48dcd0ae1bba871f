//! Projective rays with a canonical representative.
//!
//! Float coordinates are stored unit-normalized with the first nonzero entry
//! real and positive. When every coordinate, relative to that first entry,
//! lands on a small rational times a root of unity it is snapped onto that
//! grid; if all snapped values are real rationals the ray also carries a
//! primitive integer representative in `exact_coords`.

use std::cmp::Ordering;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default tolerance for zero tests, snapping, dedup and orthogonality.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Largest denominator tried when snapping magnitudes.
const MAX_DENOMINATOR: i64 = 12;

#[derive(Clone, Debug, Serialize)]
pub struct Ray {
    pub dimension: usize,
    #[serde(serialize_with = "serialize_complex")]
    pub coords: Vec<Complex64>,
    pub exact_coords: Option<Vec<i64>>,
    pub real: bool,
}

fn serialize_complex<S: serde::Serializer>(
    v: &[Complex64],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

/// Order of the roots of unity used by the snapping grid in dimension `dim`:
/// lcm(24, 2·dim), which is 24 for twelve-dimensional rays.
pub fn root_order(dim: usize) -> usize {
    let a = 24usize;
    let b = 2 * dim.max(1);
    a / gcd_usize(a, b) * b
}

fn gcd_usize(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ray {
    /// Exact ray from integer coordinates (reduced to a primitive vector).
    pub fn from_integers(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().all(|&x| x == 0) {
            return Err(Error::InvalidArgument("zero vector is not a ray".into()));
        }
        let g = coords.iter().fold(0, |acc, &x| gcd_i64(acc, x));
        let sign = coords.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
        let exact: Vec<i64> = coords.iter().map(|&x| sign * x / g).collect();
        let norm = (exact.iter().map(|&x| (x * x) as f64).sum::<f64>()).sqrt();
        Ok(Self {
            dimension: exact.len(),
            coords: exact
                .iter()
                .map(|&x| Complex64::new(x as f64 / norm, 0.0))
                .collect(),
            exact_coords: Some(exact),
            real: true,
        })
    }

    /// Exact ray from rationals `(numerator, denominator)`.
    pub fn from_rationals(coords: &[(i64, i64)]) -> Result<Self> {
        if coords.iter().any(|&(_, d)| d == 0) {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let lcm = coords
            .iter()
            .fold(1i64, |acc, &(_, d)| acc / gcd_i64(acc, d) * d.abs());
        Self::from_integers(coords.iter().map(|&(p, d)| p * (lcm / d)).collect())
    }

    /// Ray from arbitrary complex coordinates: canonical phase, then snapping.
    pub fn from_complex(coords: Vec<Complex64>, tol: f64) -> Result<Self> {
        let dimension = coords.len();
        let norm = coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::InvalidArgument("zero vector is not a ray".into()));
        }
        let unit: Vec<Complex64> = coords.iter().map(|z| z / norm).collect();
        let lead = unit
            .iter()
            .copied()
            .find(|z| z.norm() > tol)
            .expect("unit vector has a non-negligible entry");
        let phase = lead.conj() / lead.norm();
        let unit: Vec<Complex64> = unit.iter().map(|z| z * phase).collect();

        if let Some(snapped) = snap(&unit, tol) {
            return Ok(snapped);
        }
        let real = unit.iter().all(|z| z.im.abs() < tol);
        let coords = if real {
            unit.iter().map(|z| Complex64::new(z.re, 0.0)).collect()
        } else {
            unit
        };
        Ok(Self {
            dimension,
            coords,
            exact_coords: None,
            real,
        })
    }

    pub fn is_exact(&self) -> bool {
        self.exact_coords.is_some()
    }

    /// ⟨self, other⟩ = Σ conj(self_i) other_i on the unit representatives.
    pub fn inner(&self, other: &Ray) -> Complex64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Orthogonality: exact integer dot product when both rays are exact,
    /// otherwise |⟨u, v⟩| < tol on unit vectors.
    pub fn is_orthogonal(&self, other: &Ray, tol: f64) -> bool {
        match (&self.exact_coords, &other.exact_coords) {
            (Some(a), Some(b)) => a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() == 0,
            _ => self.inner(other).norm() < tol,
        }
    }

    /// Projective equality: |⟨u, v⟩|² ≥ (1 − tol) on unit vectors.
    pub fn same_ray(&self, other: &Ray, tol: f64) -> bool {
        if self.dimension != other.dimension {
            return false;
        }
        match (&self.exact_coords, &other.exact_coords) {
            (Some(a), Some(b)) => a == b,
            _ => self.inner(other).norm_sqr() >= 1.0 - tol,
        }
    }

    /// Total order used for canonical sorting: coordinates rounded to 1e-9,
    /// compared lexicographically by (re, im), larger first.
    pub fn canonical_cmp(&self, other: &Ray) -> Ordering {
        let key = |r: &Ray| -> Vec<(i64, i64)> {
            r.coords
                .iter()
                .map(|z| ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64))
                .collect()
        };
        key(other).cmp(&key(self))
    }
}

/// Snaps a unit vector whose first nonzero entry is real positive. Each
/// entry divided by that lead must be within `tol` of (p/s)·ζ with s <= 12 and
/// ζ a root of unity of order [`root_order`].
fn snap(unit: &[Complex64], tol: f64) -> Option<Ray> {
    let dimension = unit.len();
    let lead = unit.iter().find(|z| z.norm() > tol)?.re;
    let m = root_order(dimension);
    let mut grid: Vec<(i64, i64, usize)> = Vec::with_capacity(dimension);
    for z in unit {
        let r = z / lead;
        if r.norm() < tol {
            grid.push((0, 1, 0));
            continue;
        }
        let magnitude = r.norm();
        let (p, s) = (1..=MAX_DENOMINATOR).find_map(|s| {
            let p = (magnitude * s as f64).round() as i64;
            (p > 0 && (magnitude - p as f64 / s as f64).abs() < tol).then_some((p, s))
        })?;
        let turns = r.arg() / std::f64::consts::TAU * m as f64;
        let k = (turns.round() as i64).rem_euclid(m as i64) as usize;
        let candidate = Complex64::from_polar(
            p as f64 / s as f64,
            std::f64::consts::TAU * k as f64 / m as f64,
        );
        if (candidate - r).norm() >= tol {
            return None;
        }
        grid.push((p, s, k));
    }

    let rational = grid.iter().all(|&(p, _, k)| p == 0 || k == 0 || 2 * k == m);
    if rational {
        let exact: Vec<(i64, i64)> = grid
            .iter()
            .map(|&(p, s, k)| if 2 * k == m { (-p, s) } else { (p, s) })
            .collect();
        return Ray::from_rationals(&exact).ok();
    }
    let values: Vec<Complex64> = grid
        .iter()
        .map(|&(p, s, k)| {
            if p == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::from_polar(
                    p as f64 / s as f64,
                    std::f64::consts::TAU * k as f64 / m as f64,
                )
            }
        })
        .collect();
    let norm = values.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Some(Ray {
        dimension,
        coords: values.iter().map(|z| z / norm).collect(),
        exact_coords: None,
        real: false,
    })
}
