//! Weyl–Heisenberg operators of a single qudit and the joint eigenrays of
//! isotropic lines.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::OrthoGraph;
use crate::lattice::{divisor_sigma, enumerate_isotropic_lines, IsotropicLine};
use crate::ray::Ray;

pub type CMatrix = DMatrix<Complex64>;

/// Seed used when none is supplied on the command line or in the environment.
pub const DEFAULT_SEED: u64 = 0x5eed_0012;

/// How many random combinations are tried before a line is declared degenerate.
pub const EIGEN_ATTEMPTS: usize = 8;

/// ω^a X^b Z^c in dimension q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorSpec {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub q: u32,
}

impl OperatorSpec {
    pub fn new(a: i64, b: i64, c: i64, q: u32) -> Self {
        let r = |x: i64| x.rem_euclid(i64::from(q)) as u32;
        Self {
            a: r(a),
            b: r(b),
            c: r(c),
            q,
        }
    }

    /// Product rule. Z X = ω X Z gives Z^c X^b' = ω^{c b'} X^b' Z^c, hence
    /// (a,b,c)·(a',b',c') = (a + a' + c b', b + b', c + c').
    pub fn compose(self, other: OperatorSpec) -> OperatorSpec {
        let q = u64::from(self.q);
        let phase =
            (u64::from(self.a) + u64::from(other.a) + u64::from(self.c) * u64::from(other.b)) % q;
        OperatorSpec::new(
            phase as i64,
            i64::from(self.b + other.b),
            i64::from(self.c + other.c),
            self.q,
        )
    }
}

fn omega_power(k: u64, q: u32) -> Complex64 {
    let k = k % u64::from(q);
    Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / f64::from(q))
}

/// Shift X (|s⟩ ↦ |s+1⟩) and clock Z = diag(1, ω, …, ω^{q−1}).
pub fn weyl_pair(q: u32) -> Result<(CMatrix, CMatrix)> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "q must be at least 2, got {q}"
        )));
    }
    Ok((
        operator_matrix(OperatorSpec::new(0, 1, 0, q)),
        operator_matrix(OperatorSpec::new(0, 0, 1, q)),
    ))
}

/// The monomial unitary ω^a X^b Z^c, which sends |s⟩ to ω^{a + c s} |s + b⟩.
pub fn operator_matrix(spec: OperatorSpec) -> CMatrix {
    let q = spec.q as usize;
    let mut m = CMatrix::zeros(q, q);
    for s in 0..q {
        let row = (s + spec.b as usize) % q;
        m[(row, s)] = omega_power(u64::from(spec.a) + u64::from(spec.c) * s as u64, spec.q);
    }
    m
}

/// Pipeline knobs shared by the ray-producing operations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RayConfig {
    pub seed: u64,
    pub tol: f64,
}

impl Default for RayConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            tol: crate::ray::DEFAULT_TOL,
        }
    }
}

/// Per-line RNG seed, independent of scheduling.
fn line_seed(base: u64, q: u32, line_index: usize, attempt: usize) -> u64 {
    // splitmix64 over the packed tuple
    let mut z = base ^ (u64::from(q) << 48) ^ ((line_index as u64) << 16) ^ attempt as u64;
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Joint eigenrays of the operators X^b Z^c on `line`.
///
/// A random Hermitian combination Σ (c_k M_k + conj(c_k) M_k†) is
/// diagonalized; its eigenvectors are accepted only if each is a joint
/// eigenvector of every line operator (residual ≤ tol) and the joint
/// eigenvalue tuples are pairwise distinct. Otherwise a fresh combination is
/// drawn, up to [`EIGEN_ATTEMPTS`] times.
pub fn line_eigenrays(
    line: &IsotropicLine,
    line_index: usize,
    config: RayConfig,
) -> Result<Vec<Ray>> {
    let q = line.dimension;
    let ops: Vec<CMatrix> = line
        .nonzero_points()
        .map(|p| operator_matrix(OperatorSpec::new(0, i64::from(p.b), i64::from(p.c), q)))
        .collect();
    for attempt in 0..EIGEN_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(line_seed(config.seed, q, line_index, attempt));
        let dim = q as usize;
        let mut h = CMatrix::zeros(dim, dim);
        for m in &ops {
            let coef = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            h += m * coef + m.adjoint() * coef.conj();
        }
        let eig = h.symmetric_eigen();
        let vectors: Vec<Vec<Complex64>> = (0..dim)
            .map(|j| eig.eigenvectors.column(j).iter().copied().collect())
            .collect();
        if let Some(rays) = accept_joint_basis(&ops, &vectors, config.tol)? {
            return Ok(rays);
        }
    }
    Err(Error::DegenerateJointSpectrum {
        q,
        line: line_index,
        attempts: EIGEN_ATTEMPTS,
    })
}

fn accept_joint_basis(
    ops: &[CMatrix],
    vectors: &[Vec<Complex64>],
    tol: f64,
) -> Result<Option<Vec<Ray>>> {
    let mut tuples: Vec<Vec<Complex64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let col = nalgebra::DVector::from_column_slice(v);
        let mut tuple = Vec::with_capacity(ops.len());
        for m in ops {
            let mv = m * &col;
            let lambda = col.dotc(&mv);
            if (mv - &col * lambda).norm() > tol {
                return Ok(None);
            }
            tuple.push(lambda);
        }
        tuples.push(tuple);
    }
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            let gap = tuples[i]
                .iter()
                .zip(&tuples[j])
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            if gap <= tol {
                return Ok(None);
            }
        }
    }
    let mut rays = vectors
        .iter()
        .map(|v| Ray::from_complex(v.clone(), tol))
        .collect::<Result<Vec<_>>>()?;
    rays.sort_by(Ray::canonical_cmp);
    Ok(Some(rays))
}

/// Rays grouped by the line they came from, before deduplication.
#[derive(Clone, Debug)]
pub struct RayCensus {
    pub q: u32,
    pub lines: Vec<IsotropicLine>,
    pub per_line: Vec<Vec<Ray>>,
    /// Distinct rays, canonically sorted.
    pub rays: Vec<Ray>,
}

/// All distinct joint eigenrays over all isotropic lines of dimension q.
///
/// The distinct count must equal q·σ(q); otherwise [`Error::CountMismatch`].
pub fn enumerate_rays(q: u32, config: RayConfig) -> Result<RayCensus> {
    let lines = enumerate_isotropic_lines(q)?;
    let per_line = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| line_eigenrays(line, i, config))
        .collect::<Result<Vec<_>>>()?;
    let rays = dedup_rays(per_line.iter().flatten().cloned(), config.tol);
    let expected = q as usize * divisor_sigma(q) as usize;
    if rays.len() != expected {
        return Err(Error::CountMismatch {
            q,
            expected,
            found: rays.len(),
        });
    }
    Ok(RayCensus {
        q,
        lines,
        per_line,
        rays,
    })
}

/// Projective deduplication (first occurrence kept), then canonical sort.
pub fn dedup_rays(rays: impl IntoIterator<Item = Ray>, tol: f64) -> Vec<Ray> {
    let mut distinct: Vec<Ray> = Vec::new();
    for r in rays {
        if !distinct.iter().any(|d| d.same_ray(&r, tol)) {
            distinct.push(r);
        }
    }
    distinct.sort_by(Ray::canonical_cmp);
    distinct
}

pub fn filter_real(rays: &[Ray]) -> Vec<Ray> {
    rays.iter().filter(|r| r.real).cloned().collect()
}

/// Orthogonality graph; vertex i is ray i, labelled i+1.
pub fn orthogonality_graph(rays: &[Ray], tol: f64) -> Result<OrthoGraph> {
    if let Some(first) = rays.first() {
        if let Some(bad) = rays.iter().find(|r| r.dimension != first.dimension) {
            return Err(Error::InvalidArgument(format!(
                "mixed ray dimensions {} and {}",
                first.dimension, bad.dimension
            )));
        }
    }
    let mut g = OrthoGraph::empty(rays.len());
    for i in 0..rays.len() {
        for j in i + 1..rays.len() {
            if rays[i].is_orthogonal(&rays[j], tol) {
                g.connect(i, j);
            }
        }
    }
    Ok(g)
}
