//! Condenser geometry: the X/Y/L configuration codec, explicit contours and
//! the labeled half-domain polygon used by the conformal solvers.

mod codec;
mod half;

pub use codec::build_contours;
pub use half::half_domain;

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};

pub type Point = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    Explicit,
}

impl Family {
    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
            Family::Explicit => 'X',
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            "EXPLICIT" | "X" => Ok(Family::Explicit),
            other => Err(Error::BadSpec(format!("unknown family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    /// Part of the grounded electrode (potential 0).
    Outer,
    /// Part of the unit-potential electrode.
    Inner,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourKind {
    PolylineClosed,
    /// Degenerate two-sided traversal of a slot skeleton.
    Slot,
    /// Analytic circle, used by the smooth-domain tests.
    Circle { center: Point, radius: f64 },
}

/// One boundary component. `vertices` is the closed traversal with the
/// condenser domain on the left of every directed leg; for slots each leg
/// represents the face on its left, so the loop covers both sides.
#[derive(Debug, Clone)]
pub struct Contour {
    pub kind: ContourKind,
    pub terminal: Terminal,
    pub vertices: Vec<Point>,
}

impl Contour {
    pub fn polyline(terminal: Terminal, vertices: Vec<Point>) -> Self {
        Contour {
            kind: ContourKind::PolylineClosed,
            terminal,
            vertices,
        }
    }

    pub fn slot(terminal: Terminal, vertices: Vec<Point>) -> Self {
        Contour {
            kind: ContourKind::Slot,
            terminal,
            vertices,
        }
    }

    pub fn circle(terminal: Terminal, center: Point, radius: f64) -> Self {
        Contour {
            kind: ContourKind::Circle { center, radius },
            terminal,
            vertices: Vec::new(),
        }
    }

    /// Directed legs of the traversal.
    pub fn legs(&self) -> Vec<(Point, Point)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }

    pub fn is_circle(&self) -> bool {
        matches!(self.kind, ContourKind::Circle { .. })
    }

    /// Polygonal approximation of a circle contour, oriented with the domain
    /// on the left (outer counterclockwise, inner clockwise). Default vertex
    /// count for rasterization paths is 512.
    pub fn polygonize(&self, n: usize) -> Vec<Point> {
        match self.kind {
            ContourKind::Circle { center, radius } => {
                let sign = match self.terminal {
                    Terminal::Outer => 1.0,
                    Terminal::Inner => -1.0,
                };
                (0..n)
                    .map(|i| {
                        let t = sign * 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                        center + radius * Complex64::new(t.cos(), t.sin())
                    })
                    .collect()
            }
            _ => self.vertices.clone(),
        }
    }

    fn scaled(&self, s: f64) -> Contour {
        let kind = match self.kind {
            ContourKind::Circle { center, radius } => ContourKind::Circle {
                center: center * s,
                radius: radius * s,
            },
            k => k,
        };
        Contour {
            kind,
            terminal: self.terminal,
            vertices: self.vertices.iter().map(|v| v * s).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ContourSet {
    pub contours: Vec<Contour>,
    pub bounded: bool,
}

impl ContourSet {
    pub fn outer(&self) -> Option<&Contour> {
        self.contours.iter().find(|c| c.terminal == Terminal::Outer)
    }

    pub fn scaled(&self, s: f64) -> ContourSet {
        ContourSet {
            contours: self.contours.iter().map(|c| c.scaled(s)).collect(),
            bounded: self.bounded,
        }
    }

    /// Axis-aligned bounding box over every contour: (min, max) corners.
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Complex64::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for c in &self.contours {
            for p in c.polygonize(64) {
                lo = Complex64::new(lo.re.min(p.re), lo.im.min(p.im));
                hi = Complex64::new(hi.re.max(p.re), hi.im.max(p.im));
            }
        }
        (lo, hi)
    }
}

/// Encoded geometry: family letter plus the X/Y/L arrays, or explicit
/// contours that override the codec.
#[derive(Debug, Clone)]
pub struct CondenserSpec {
    pub family: Family,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub l: Vec<f64>,
    pub l1: Vec<f64>,
    pub l2: Vec<f64>,
    pub contours: Option<ContourSet>,
}

impl CondenserSpec {
    pub fn family(family: Family, x: Vec<f64>, y: Vec<f64>, l: Vec<f64>) -> Result<Self> {
        CondenserSpec {
            family,
            x,
            y,
            l,
            l1: vec![],
            l2: vec![],
            contours: None,
        }
        .validated()
    }

    pub fn chains(family: Family, l1: Vec<f64>, l2: Vec<f64>) -> Result<Self> {
        CondenserSpec {
            family,
            x: vec![],
            y: vec![],
            l: vec![],
            l1,
            l2,
            contours: None,
        }
        .validated()
    }

    pub fn explicit(contours: ContourSet) -> Result<Self> {
        CondenserSpec {
            family: Family::Explicit,
            x: vec![],
            y: vec![],
            l: vec![],
            l1: vec![],
            l2: vec![],
            contours: Some(contours),
        }
        .validated()
    }

    pub fn scaled(&self, s: f64) -> CondenserSpec {
        assert!(s > 0.0);
        CondenserSpec {
            family: self.family,
            x: self.x.iter().map(|v| v * s).collect(),
            y: self.y.iter().map(|v| v * s).collect(),
            l: self.l.iter().map(|v| v * s).collect(),
            l1: self.l1.iter().map(|v| v * s).collect(),
            l2: self.l2.iter().map(|v| v * s).collect(),
            contours: self.contours.as_ref().map(|c| c.scaled(s)),
        }
    }

    pub fn validated(self) -> Result<Self> {
        let fam = self.family.letter();
        let arity = |cond: bool, detail: &str| -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::BadArity {
                    family: fam,
                    detail: detail.to_string(),
                })
            }
        };
        if self.family != Family::Explicit {
            if !self.x.is_empty() {
                if self.x[0] != 0.0 {
                    return Err(Error::NonMonotoneX);
                }
                if self.x.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(Error::NonMonotoneX);
                }
            }
            if self
                .y
                .iter()
                .chain(&self.l)
                .chain(&self.l1)
                .chain(&self.l2)
                .any(|&v| v <= 0.0)
            {
                return Err(Error::NonpositiveLength);
            }
        }
        match self.family {
            Family::A => {
                arity(self.x.len() == 8, "|x| must be 8")?;
                arity(self.y.is_empty(), "|y| must be 0")?;
                arity(!self.l.is_empty(), "|l| must be >= 1")?;
            }
            Family::B => {
                arity(self.x.len() == 8, "|x| must be 8")?;
                arity(self.y.len() == 2, "|y| must be 2")?;
                arity(!self.l.is_empty(), "|l| must be >= 1")?;
            }
            Family::C => {
                arity(self.x.len() == 8, "|x| must be 8")?;
                arity(self.y.len() == 1, "|y| must be 1")?;
                arity(self.l.len() == 3, "|l| must be 3")?;
            }
            Family::D => {
                arity(self.x.len() == 6, "|x| must be 6")?;
                arity(self.l.len() == 5, "|l| must be 5")?;
            }
            Family::E => {
                arity(self.x.len() == 2, "|x| must be 2")?;
                arity(self.y.len() == 2, "|y| must be 2")?;
                arity(self.l.is_empty(), "|l| must be 0")?;
            }
            Family::F => {
                arity(self.l1.len() == 2 && self.l2.len() == 2, "|l1| = |l2| = 2")?;
                arity(self.x.is_empty() && self.y.is_empty(), "x, y must be empty")?;
            }
            Family::G => {
                arity(self.l1.len() == 2, "|l1| must be 2")?;
                arity(
                    !self.l2.is_empty() && self.l2.len() % 2 == 0,
                    "|l2| must be even and nonzero",
                )?;
                arity(self.x.is_empty() && self.y.is_empty(), "x, y must be empty")?;
            }
            Family::Explicit => {
                if self.contours.is_none() {
                    return Err(Error::BadSpec("explicit family requires contours".into()));
                }
            }
        }
        Ok(self)
    }
}

#[derive(Deserialize)]
struct RawContour {
    kind: String,
    terminal: String,
    #[serde(default)]
    vertices: Vec<[f64; 2]>,
    center: Option<[f64; 2]>,
    radius: Option<f64>,
}

#[derive(Deserialize)]
struct RawSpec {
    family: String,
    #[serde(default)]
    x: Vec<f64>,
    #[serde(default)]
    y: Vec<f64>,
    #[serde(default)]
    l: Vec<f64>,
    #[serde(default)]
    l1: Vec<f64>,
    #[serde(default)]
    l2: Vec<f64>,
    #[serde(default)]
    contours: Option<Vec<RawContour>>,
}

/// Parse and validate a spec document (JSON with fields `family`, `x`, `y`,
/// `l`, `l1`, `l2` and optional `contours`).
pub fn parse_spec(raw: &str) -> Result<CondenserSpec> {
    let raw: RawSpec =
        serde_json::from_str(raw).map_err(|e| Error::BadSpec(format!("json: {e}")))?;
    let family: Family = raw.family.parse()?;
    let contours = match raw.contours {
        None => None,
        Some(list) => {
            let mut contours = Vec::new();
            for rc in list {
                let terminal = match rc.terminal.to_ascii_lowercase().as_str() {
                    "outer" => Terminal::Outer,
                    "inner" => Terminal::Inner,
                    other => return Err(Error::BadSpec(format!("terminal `{other}`"))),
                };
                let pts: Vec<Point> = rc
                    .vertices
                    .iter()
                    .map(|&[x, y]| Complex64::new(x, y))
                    .collect();
                let contour = match rc.kind.to_ascii_lowercase().as_str() {
                    "polyline" | "polyline_closed" => Contour::polyline(terminal, pts),
                    "slot" => Contour::slot(terminal, pts),
                    "circle" => {
                        let center = rc
                            .center
                            .ok_or_else(|| Error::BadSpec("circle needs center".into()))?;
                        let radius = rc
                            .radius
                            .ok_or_else(|| Error::BadSpec("circle needs radius".into()))?;
                        if radius <= 0.0 {
                            return Err(Error::NonpositiveLength);
                        }
                        Contour::circle(terminal, Complex64::new(center[0], center[1]), radius)
                    }
                    other => return Err(Error::BadSpec(format!("contour kind `{other}`"))),
                };
                contours.push(contour);
            }
            let bounded = contours
                .iter()
                .any(|c| c.terminal == Terminal::Outer && !matches!(c.kind, ContourKind::Slot));
            Some(ContourSet { contours, bounded })
        }
    };
    let spec = CondenserSpec {
        family,
        x: raw.x,
        y: raw.y,
        l: raw.l,
        l1: raw.l1,
        l2: raw.l2,
        contours,
    };
    spec.validated()
}

pub(crate) fn mirror_of(p: Point) -> Point {
    p.conj()
}

/// Check that every contour is mirror symmetric about the real axis.
pub(crate) fn check_mirror_symmetry(set: &ContourSet) -> Result<()> {
    for c in &set.contours {
        if c.is_circle() {
            let ContourKind::Circle { center, .. } = c.kind else {
                unreachable!()
            };
            if center.im.abs() > 1e-12 {
                return Err(Error::NotSymmetric);
            }
            continue;
        }
        // vertex multiset must be preserved by conjugation
        let mut pts = c.vertices.clone();
        let mut refl: Vec<Point> = c.vertices.iter().map(|&p| mirror_of(p)).collect();
        let key = |p: &Point| (p.re, p.im);
        pts.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        refl.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        let tol = 1e-12
            * pts
                .iter()
                .map(|p| p.norm())
                .fold(1.0f64, f64::max);
        if pts
            .iter()
            .zip(&refl)
            .any(|(a, b)| (a - b).norm() > tol)
        {
            return Err(Error::NotSymmetric);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_family_e() {
        let spec = parse_spec(r#"{"family":"E","x":[0,5],"y":[1,2]}"#).unwrap();
        assert_eq!(spec.family, Family::E);
        assert_eq!(spec.x, vec![0.0, 5.0]);
        assert_eq!(spec.y, vec![1.0, 2.0]);
    }

    #[test]
    fn parse_family_f() {
        let spec = parse_spec(r#"{"family":"F","l1":[3,4],"l2":[1,1]}"#).unwrap();
        assert_eq!(spec.family, Family::F);
        assert_eq!(spec.l1, vec![3.0, 4.0]);
    }

    #[test]
    fn non_monotone_x_rejected() {
        let err = parse_spec(
            r#"{"family":"A","x":[0,3,1,4,5,6,9,11],"l":[2]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonMonotoneX));
    }

    #[test]
    fn x_must_start_at_zero() {
        let err = parse_spec(
            r#"{"family":"A","x":[1,3,4,5,6,7,9,11],"l":[2]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonMonotoneX));
    }

    #[test]
    fn bad_arity_rejected() {
        let err = parse_spec(r#"{"family":"E","x":[0,5,7],"y":[1,2]}"#).unwrap_err();
        assert!(matches!(err, Error::BadArity { family: 'E', .. }));
    }

    #[test]
    fn nonpositive_length_rejected() {
        let err = parse_spec(r#"{"family":"E","x":[0,5],"y":[1,-2]}"#).unwrap_err();
        assert!(matches!(err, Error::NonpositiveLength));
    }

    #[test]
    fn explicit_contours_parse() {
        let spec = parse_spec(
            r#"{"family":"explicit","contours":[
                {"kind":"circle","terminal":"outer","center":[0,0],"radius":2.718281828459045},
                {"kind":"circle","terminal":"inner","center":[0,0],"radius":1.0}
            ]}"#,
        )
        .unwrap();
        let set = spec.contours.as_ref().unwrap();
        assert!(set.bounded);
        assert_eq!(set.contours.len(), 2);
    }
}
