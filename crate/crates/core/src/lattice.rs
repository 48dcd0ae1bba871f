//! Symplectic structure of Z_q × Z_q: commutation of single-qudit Pauli
//! operators modulo the center, and the isotropic lines (maximal commuting sets).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{maximum_cliques, OrthoGraph};

/// Largest dimension accepted by default by the pipeline and CLI.
pub const DEFAULT_MAX_Q: u32 = 24;

/// Class of ω^a X^b Z^c modulo the center; the phase `a` is not stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PauliPoint {
    pub b: u32,
    pub c: u32,
}

impl PauliPoint {
    pub fn new(b: i64, c: i64, q: u32) -> Self {
        let q = i64::from(q);
        Self {
            b: b.rem_euclid(q) as u32,
            c: c.rem_euclid(q) as u32,
        }
    }

    pub const ORIGIN: PauliPoint = PauliPoint { b: 0, c: 0 };

    pub fn is_origin(self) -> bool {
        self == Self::ORIGIN
    }

    pub fn add(self, other: PauliPoint, q: u32) -> PauliPoint {
        PauliPoint {
            b: (self.b + other.b) % q,
            c: (self.c + other.c) % q,
        }
    }

    /// Smallest k > 0 with k·p = 0.
    pub fn additive_order(self, q: u32) -> u32 {
        q / gcd(gcd(self.b, self.c), q)
    }
}

impl fmt::Display for PauliPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.c)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// (b1·c2 − c1·b2) mod q.
pub fn symplectic_product(p1: PauliPoint, p2: PauliPoint, q: u32) -> Result<u32> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be positive".into()));
    }
    let q64 = u64::from(q);
    let lhs = u64::from(p1.b % q) * u64::from(p2.c % q) % q64;
    let rhs = u64::from(p1.c % q) * u64::from(p2.b % q) % q64;
    Ok(((lhs + q64 - rhs) % q64) as u32)
}

/// The q²−1 nonzero points in lexicographic (b, c) order.
pub fn nonzero_points(q: u32) -> Vec<PauliPoint> {
    (0..q)
        .flat_map(|b| (0..q).map(move |c| PauliPoint { b, c }))
        .filter(|p| !p.is_origin())
        .collect()
}

fn require_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "q must be at least 2, got {q}"
        )));
    }
    Ok(())
}

/// Commutation graph on the nonzero points: adjacent iff the symplectic product vanishes.
pub fn commutation_graph(q: u32) -> Result<(Vec<PauliPoint>, OrthoGraph)> {
    require_q(q)?;
    let points = nonzero_points(q);
    let mut g = OrthoGraph::empty(points.len());
    for (i, &p) in points.iter().enumerate() {
        for (j, &r) in points.iter().enumerate().skip(i + 1) {
            if symplectic_product(p, r, q)? == 0 {
                g.connect(i, j);
            }
        }
    }
    let labels = points.iter().map(ToString::to_string).collect();
    Ok((points, g.with_labels(labels)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropicLine {
    pub dimension: u32,
    /// q points including the origin, sorted by (b, c).
    pub points: Vec<PauliPoint>,
    /// Generated by a single point of additive order q.
    pub cyclic: bool,
}

impl IsotropicLine {
    pub fn nonzero_points(&self) -> impl Iterator<Item = PauliPoint> + '_ {
        self.points.iter().copied().filter(|p| !p.is_origin())
    }

    pub fn is_pairwise_null(&self) -> bool {
        let q = self.dimension;
        self.points.iter().all(|&p| {
            self.points
                .iter()
                .all(|&r| symplectic_product(p, r, q).is_ok_and(|s| s == 0))
        })
    }

    pub fn is_additively_closed(&self) -> bool {
        let q = self.dimension;
        self.points.iter().all(|&p| {
            self.points
                .iter()
                .all(|&r| self.points.binary_search(&p.add(r, q)).is_ok())
        })
    }
}

/// All isotropic lines of Z_q², found as the maximum cliques of the commutation graph.
///
/// Each clique must have q−1 points, be additively closed once the origin is
/// added, and there must be σ(q) of them; anything else is reported as
/// [`Error::LineInconsistency`].
pub fn enumerate_isotropic_lines(q: u32) -> Result<Vec<IsotropicLine>> {
    let (points, g) = commutation_graph(q)?;
    let cliques = maximum_cliques(&g);
    let inconsistency = |detail: String| Error::LineInconsistency { q, detail };

    let mut lines = Vec::with_capacity(cliques.len());
    for clique in cliques {
        if clique.len() != (q - 1) as usize {
            return Err(inconsistency(format!(
                "maximum clique of size {} (expected {})",
                clique.len(),
                q - 1
            )));
        }
        let mut pts: Vec<PauliPoint> = clique.iter().map(|&i| points[i]).collect();
        pts.push(PauliPoint::ORIGIN);
        pts.sort_unstable();
        let cyclic = pts.iter().any(|p| p.additive_order(q) == q);
        let line = IsotropicLine {
            dimension: q,
            points: pts,
            cyclic,
        };
        if !line.is_pairwise_null() {
            return Err(inconsistency("clique is not pairwise null".into()));
        }
        if !line.is_additively_closed() {
            return Err(inconsistency(format!(
                "line {:?} is not closed under addition",
                line.points
            )));
        }
        lines.push(line);
    }
    let sigma = divisor_sigma(q) as usize;
    if lines.len() != sigma {
        return Err(inconsistency(format!(
            "{} lines, expected σ(q) = {sigma}",
            lines.len()
        )));
    }
    lines.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(lines)
}

/// Sum of divisors.
pub fn divisor_sigma(q: u32) -> u64 {
    (1..=q)
        .filter(|d| q.is_multiple_of(*d))
        .map(u64::from)
        .sum()
}

/// Dedekind ψ(q) = q · Π_{p | q} (1 + 1/p).
pub fn dedekind_psi(q: u32) -> u64 {
    let mut result = u64::from(q);
    let mut m = q;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            result = result / u64::from(p) * u64::from(p + 1);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        result = result / u64::from(m) * u64::from(m + 1);
    }
    result
}

pub fn is_square_free(q: u32) -> bool {
    (2..=q)
        .take_while(|p| p * p <= q)
        .all(|p| !q.is_multiple_of(p * p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineClassification {
    /// Per-line cyclic flag, in input order.
    pub cyclic_flags: Vec<bool>,
    pub cyclic: usize,
    pub outlier: usize,
}

pub fn classify_lines(lines: &[IsotropicLine]) -> Result<LineClassification> {
    if let Some(first) = lines.first() {
        if lines.iter().any(|l| l.dimension != first.dimension) {
            return Err(Error::InvalidArgument("lines of mixed dimension".into()));
        }
    }
    let cyclic_flags: Vec<bool> = lines
        .iter()
        .map(|l| {
            let q = l.dimension;
            l.points
                .iter()
                .any(|&p| p.additive_order(q) == q && generates(p, q).len() == l.points.len())
        })
        .collect();
    let cyclic = cyclic_flags.iter().filter(|&&f| f).count();
    Ok(LineClassification {
        outlier: lines.len() - cyclic,
        cyclic,
        cyclic_flags,
    })
}

fn generates(p: PauliPoint, q: u32) -> Vec<PauliPoint> {
    let mut multiples = vec![PauliPoint::ORIGIN];
    let mut cur = p;
    while !cur.is_origin() {
        multiples.push(cur);
        cur = cur.add(p, q);
    }
    multiples
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(b: u32, c: u32) -> PauliPoint {
        PauliPoint { b, c }
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(symplectic_product(pt(1, 0), pt(0, 1), 12).unwrap(), 1);
        assert_eq!(symplectic_product(pt(5, 7), pt(5, 7), 12).unwrap(), 0);
        assert_eq!(symplectic_product(pt(2, 3), pt(4, 6), 12).unwrap(), 0);
        assert!(symplectic_product(pt(1, 0), pt(0, 1), 0).is_err());
    }

    #[test]
    fn commutation_graph_small() {
        let (_, g2) = commutation_graph(2).unwrap();
        assert_eq!((g2.n(), g2.edge_count()), (3, 0));
        let (pts, g3) = commutation_graph(3).unwrap();
        assert_eq!((g3.n(), g3.edge_count()), (8, 4));
        // each nonzero point commutes only with its nonzero multiple
        for (i, &p) in pts.iter().enumerate() {
            let nbrs = g3.neighbors(i).to_vec();
            assert_eq!(nbrs.len(), 1);
            assert_eq!(pts[nbrs[0]], p.add(p, 3));
        }
        assert_eq!(commutation_graph(12).unwrap().1.n(), 143);
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(divisor_sigma(12), 28);
        assert_eq!(divisor_sigma(1), 1);
        assert_eq!(dedekind_psi(1), 1);
        assert_eq!(dedekind_psi(12), 24);
        assert_eq!(dedekind_psi(8), 12);
        assert_eq!(dedekind_psi(7), 8);
    }

    #[test]
    fn small_line_counts() {
        assert_eq!(enumerate_isotropic_lines(3).unwrap().len(), 4);
        assert_eq!(enumerate_isotropic_lines(4).unwrap().len(), 7);
    }

    #[test]
    fn prime_lines_all_cyclic() {
        let lines = enumerate_isotropic_lines(5).unwrap();
        let cls = classify_lines(&lines).unwrap();
        assert_eq!((cls.cyclic, cls.outlier), (6, 0));
    }

    #[test]
    fn line_through_shift_is_cyclic() {
        let lines = enumerate_isotropic_lines(6).unwrap();
        let shift_line = lines.iter().find(|l| l.points.contains(&pt(1, 0))).unwrap();
        assert!(shift_line.cyclic);
    }

    #[test]
    fn q_one_rejected() {
        assert!(enumerate_isotropic_lines(1).is_err());
    }
}
