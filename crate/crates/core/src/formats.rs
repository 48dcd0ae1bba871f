//! Plain-text ray and graph files.
//!
//! Ray file: one ray per line, whitespace-separated coordinates. A
//! coordinate is an integer, a rational `p/s`, a decimal, or a complex
//! `a+bi` built from those. `#` starts a comment; the first content line may
//! be `dim <d>`. Both `-` and U+2212 are accepted as minus signs.
//!
//! Graph file: `vertices <n>`, then one 0-based `u v` edge per line.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::OrthoGraph;
use crate::ray::{Ray, DEFAULT_TOL};

#[derive(Clone, Copy, Debug, PartialEq)]
enum Scalar {
    /// (numerator, denominator) with positive denominator.
    Rational(i64, i64),
    Float(f64),
}

impl Scalar {
    fn to_f64(self) -> f64 {
        match self {
            Scalar::Rational(p, s) => p as f64 / s as f64,
            Scalar::Float(x) => x,
        }
    }

    fn is_zero(self) -> bool {
        self.to_f64() == 0.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct Coordinate {
    re: Scalar,
    im: Scalar,
}

/// Content lines with 1-based line numbers; comments and blanks dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, String)> + '_ {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").replace('\u{2212}', "-");
        let line = line.trim().to_string();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_scalar(tok: &str) -> Option<Scalar> {
    if let Some((p, s)) = tok.split_once('/') {
        let (p, s): (i64, i64) = (p.parse().ok()?, s.parse().ok()?);
        if s == 0 {
            return None;
        }
        return Some(Scalar::Rational(p * s.signum(), s.abs()));
    }
    if let Ok(p) = tok.parse::<i64>() {
        return Some(Scalar::Rational(p, 1));
    }
    let x: f64 = tok.parse().ok()?;
    x.is_finite().then_some(Scalar::Float(x))
}

fn parse_coordinate(tok: &str) -> Option<Coordinate> {
    let zero = Scalar::Rational(0, 1);
    let Some(body) = tok.strip_suffix('i') else {
        return Some(Coordinate {
            re: parse_scalar(tok)?,
            im: zero,
        });
    };
    // split at the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_scalar(&body[..k])?, &body[k..]),
        None => (zero, body),
    };
    let im = match im {
        "" | "+" => Scalar::Rational(1, 1),
        "-" => Scalar::Rational(-1, 1),
        s => parse_scalar(s.strip_prefix('+').unwrap_or(s))?,
    };
    Some(Coordinate { re, im })
}

fn lcm(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a.abs(), b.abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a.abs() / x * b.abs()
}

fn build_ray(coords: &[Coordinate], tol: f64) -> Result<Ray> {
    let all_real = coords.iter().all(|c| c.im.is_zero());
    let rationals: Option<Vec<(i64, i64)>> = coords
        .iter()
        .map(|c| match c.re {
            Scalar::Rational(p, s) if all_real => Some((p, s)),
            _ => None,
        })
        .collect();
    if let Some(r) = rationals {
        return Ray::from_rationals(&r);
    }
    let z: Vec<Complex64> = coords
        .iter()
        .map(|c| Complex64::new(c.re.to_f64(), c.im.to_f64()))
        .collect();
    // exact Gaussian rationals are scaled to integers first so snapping sees clean values
    let denominators = coords.iter().try_fold(1i64, |acc, c| match (c.re, c.im) {
        (Scalar::Rational(_, a), Scalar::Rational(_, b)) => Some(lcm(lcm(acc, a), b)),
        _ => None,
    });
    let z = match denominators {
        Some(d) => z.iter().map(|x| x * d as f64).collect(),
        None => z,
    };
    Ray::from_complex(z, tol)
}

pub fn parse_rays(text: &str) -> Result<Vec<Ray>> {
    parse_rays_with(text, DEFAULT_TOL)
}

pub fn parse_rays_with(text: &str, tol: f64) -> Result<Vec<Ray>> {
    let mut dim: Option<usize> = None;
    let mut rays = Vec::new();
    for (k, (line_no, line)) in content_lines(text).enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "dim" {
            if k != 0 || toks.len() != 2 {
                return Err(Error::parse(
                    line_no,
                    "`dim <d>` must be the first content line",
                ));
            }
            let d: usize = toks[1]
                .parse()
                .ok()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::parse(line_no, format!("bad dimension {:?}", toks[1])))?;
            dim = Some(d);
            continue;
        }
        let coords = toks
            .iter()
            .map(|t| {
                parse_coordinate(t)
                    .ok_or_else(|| Error::parse(line_no, format!("bad coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match dim {
            Some(d) if d != coords.len() => {
                return Err(Error::parse(
                    line_no,
                    format!("ray has {} coordinates, expected {d}", coords.len()),
                ))
            }
            None => dim = Some(coords.len()),
            _ => {}
        }
        if coords.iter().all(|c| c.re.is_zero() && c.im.is_zero()) {
            return Err(Error::parse(line_no, "zero vector is not a ray"));
        }
        rays.push(build_ray(&coords, tol).map_err(|e| Error::parse(line_no, e.to_string()))?);
    }
    Ok(rays)
}

fn format_coordinate(z: Complex64) -> String {
    if z.im == 0.0 {
        return format!("{}", z.re);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{sign}{}i", z.re, z.im.abs())
}

/// Exact rays are written as primitive integer vectors, others as unit
/// vectors in shortest round-trip float notation.
pub fn write_rays(rays: &[Ray]) -> String {
    let mut out = String::new();
    if let Some(first) = rays.first() {
        out.push_str(&format!("dim {}\n", first.dimension));
    }
    for r in rays {
        let parts: Vec<String> = match &r.exact_coords {
            Some(v) => v.iter().map(ToString::to_string).collect(),
            None => r.coords.iter().map(|&z| format_coordinate(z)).collect(),
        };
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<OrthoGraph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `vertices <n>` header"))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["vertices", n] => n
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad vertex count {n:?}")))?,
        _ => return Err(Error::parse(line_no, "expected `vertices <n>`")),
    };
    let mut g = OrthoGraph::empty(n);
    for (line_no, line) in lines {
        let ends: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(line_no, format!("bad vertex {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [u, v] = ends[..] else {
            return Err(Error::parse(line_no, "expected `u v`"));
        };
        g.add_edge(u, v)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &OrthoGraph) -> String {
    let mut out = format!("vertices {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
