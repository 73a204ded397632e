//! Decoding of the X/Y/L configuration encoding into explicit contours.
//!
//! Conventions (validated row by row against the finite-difference oracle):
//! - A: outer rectangle spans [x0, x7] with half-height l[0]; the inner
//!   electrode is the three axis slots [x1,x2], [x3,x4], [x5,x6].
//! - B: as A plus vertical slots crossing the axis at x2 and x4 with
//!   half-heights y[0], y[1]; each vertical slot is attached to the end of
//!   its horizontal slot, forming one compound conductor.
//! - C: as A with one vertical slot at x2 (half-height y[0]); the outer
//!   contour is the stepped chain up l0, right l1, down l2, closed to x7.
//! - D: two axis slots [x1,x2], [x3,x4]; outer chain up l0, right l1,
//!   up l2, right l3, down l4, closed to x5.
//! - E: vertical slots crossing the axis at x0 and x1 with half-heights
//!   y[0] (grounded) and y[1].
//! - F: concentric rectangles, quarter chains l1 = [half-height, half-width]
//!   for the outer and l2 likewise for the inner, common center.
//! - G: outer rectangle from l1; inner cross decoded from the north-west
//!   quarter chain l2 alternating up/right from the left axis point.

use num_complex::Complex64;

use super::{CondenserSpec, Contour, ContourSet, Family, Point, Terminal};
use crate::error::{Error, Result};

fn pt(x: f64, y: f64) -> Point {
    Complex64::new(x, y)
}

/// Full counterclockwise outer contour from its upper chain
/// (left axis point, ... , right axis point).
fn outer_from_upper(upper: &[Point]) -> Vec<Point> {
    let n = upper.len();
    debug_assert!(n >= 2 && upper[0].im == 0.0 && upper[n - 1].im == 0.0);
    let mut v = Vec::with_capacity(2 * n - 2);
    v.push(upper[0]);
    for p in &upper[1..n - 1] {
        v.push(p.conj());
    }
    v.push(upper[n - 1]);
    for p in upper[1..n - 1].iter().rev() {
        v.push(*p);
    }
    v
}

/// Full clockwise inner contour from its upper chain.
fn inner_from_upper(upper: &[Point]) -> Vec<Point> {
    let n = upper.len();
    debug_assert!(n >= 2 && upper[0].im == 0.0 && upper[n - 1].im == 0.0);
    let mut v = Vec::with_capacity(2 * n - 2);
    v.extend_from_slice(upper);
    for p in upper[1..n - 1].iter().rev() {
        v.push(p.conj());
    }
    v
}

fn drop_collinear(mut v: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(v.len());
    let n = v.len();
    for i in 0..n {
        let prev = v[(i + n - 1) % n];
        let here = v[i];
        let next = v[(i + 1) % n];
        let a = here - prev;
        let b = next - here;
        let cross = a.re * b.im - a.im * b.re;
        let dot = a.re * b.re + a.im * b.im;
        // drop only straight pass-through points, keep reversals
        if cross.abs() < 1e-14 * (a.norm() * b.norm()).max(1e-300) && dot > 0.0 {
            continue;
        }
        out.push(here);
    }
    v = out;
    v
}

/// Simple horizontal slot [a, b] on the axis.
fn horizontal_slot(terminal: Terminal, a: f64, b: f64) -> Contour {
    Contour::slot(terminal, vec![pt(a, 0.0), pt(b, 0.0)])
}

/// Vertical slot crossing the axis at x with half-height h.
fn vertical_slot(terminal: Terminal, x: f64, h: f64) -> Contour {
    Contour::slot(
        terminal,
        vec![pt(x, 0.0), pt(x, h), pt(x, 0.0), pt(x, -h)],
    )
}

/// Horizontal slot [a, b] with a vertical slot of half-height h attached at
/// its right end b.
fn compound_slot(terminal: Terminal, a: f64, b: f64, h: f64) -> Contour {
    Contour::slot(
        terminal,
        vec![
            pt(a, 0.0),
            pt(b, 0.0),
            pt(b, h),
            pt(b, 0.0),
            pt(b, -h),
            pt(b, 0.0),
        ],
    )
}

fn rectangle_outer(x_left: f64, x_right: f64, half_height: f64) -> Contour {
    Contour::polyline(
        Terminal::Outer,
        outer_from_upper(&[
            pt(x_left, 0.0),
            pt(x_left, half_height),
            pt(x_right, half_height),
            pt(x_right, 0.0),
        ]),
    )
}

/// Decode a spec into explicit, mirror-symmetric full-plane contours.
pub fn build_contours(spec: &CondenserSpec) -> Result<ContourSet> {
    if let Some(set) = &spec.contours {
        super::check_mirror_symmetry(set)?;
        return Ok(set.clone());
    }
    let set = match spec.family {
        Family::A => decode_a(spec)?,
        Family::B => decode_b(spec)?,
        Family::C => decode_c(spec)?,
        Family::D => decode_d(spec)?,
        Family::E => decode_e(spec)?,
        Family::F => decode_f(spec)?,
        Family::G => decode_g(spec)?,
        Family::Explicit => return Err(Error::BadSpec("explicit family requires contours".into())),
    };
    super::check_mirror_symmetry(&set)?;
    validate_slots_inside(&set)?;
    Ok(set)
}

fn decode_a(spec: &CondenserSpec) -> Result<ContourSet> {
    let x = &spec.x;
    let h = spec.l[0];
    let contours = vec![
        rectangle_outer(x[0], x[7], h),
        horizontal_slot(Terminal::Inner, x[1], x[2]),
        horizontal_slot(Terminal::Inner, x[3], x[4]),
        horizontal_slot(Terminal::Inner, x[5], x[6]),
    ];
    Ok(ContourSet {
        contours,
        bounded: true,
    })
}

fn decode_b(spec: &CondenserSpec) -> Result<ContourSet> {
    let x = &spec.x;
    let h = spec.l[0];
    for (&xi, &hi) in [x[2], x[4]].iter().zip(&spec.y) {
        let _ = xi;
        if hi >= h {
            return Err(Error::DecodeAmbiguous(format!(
                "vertical slot half-height {hi} reaches the outer wall {h}"
            )));
        }
    }
    let contours = vec![
        rectangle_outer(x[0], x[7], h),
        compound_slot(Terminal::Inner, x[1], x[2], spec.y[0]),
        compound_slot(Terminal::Inner, x[3], x[4], spec.y[1]),
        horizontal_slot(Terminal::Inner, x[5], x[6]),
    ];
    Ok(ContourSet {
        contours,
        bounded: true,
    })
}

fn stepped_outer(x_left: f64, x_right: f64, l: &[f64]) -> Result<Contour> {
    // chain: up l0, right l1, down l2; closure right to x_right at height
    // l0 - l2, then down to the axis
    let (l0, l1, l2) = (l[0], l[1], l[2]);
    if l2 >= l0 {
        return Err(Error::DecodeAmbiguous(format!(
            "step down {l2} not below chain height {l0}"
        )));
    }
    if l1 >= x_right - x_left {
        return Err(Error::DecodeAmbiguous(format!(
            "step width {l1} exceeds the span {}",
            x_right - x_left
        )));
    }
    Ok(Contour::polyline(
        Terminal::Outer,
        outer_from_upper(&[
            pt(x_left, 0.0),
            pt(x_left, l0),
            pt(x_left + l1, l0),
            pt(x_left + l1, l0 - l2),
            pt(x_right, l0 - l2),
            pt(x_right, 0.0),
        ]),
    ))
}

fn decode_c(spec: &CondenserSpec) -> Result<ContourSet> {
    let x = &spec.x;
    let outer = stepped_outer(x[0], x[7], &spec.l)?;
    let local_height = if x[2] <= x[0] + spec.l[1] {
        spec.l[0]
    } else {
        spec.l[0] - spec.l[2]
    };
    if spec.y[0] >= local_height {
        return Err(Error::DecodeAmbiguous(format!(
            "vertical slot half-height {} reaches the outer chain {local_height}",
            spec.y[0]
        )));
    }
    let contours = vec![
        outer,
        compound_slot(Terminal::Inner, x[1], x[2], spec.y[0]),
        horizontal_slot(Terminal::Inner, x[3], x[4]),
        horizontal_slot(Terminal::Inner, x[5], x[6]),
    ];
    Ok(ContourSet {
        contours,
        bounded: true,
    })
}

fn decode_d(spec: &CondenserSpec) -> Result<ContourSet> {
    let x = &spec.x;
    let l = &spec.l;
    // vertical signs up, up, down, per the reference figure; closure right
    // then down to the axis
    let h1 = l[0];
    let h2 = l[0] + l[2];
    let h3 = l[0] + l[2] - l[4];
    if h3 <= 0.0 {
        return Err(Error::DecodeAmbiguous(format!(
            "chain returns below the axis (height {h3})"
        )));
    }
    let x1 = x[0] + l[1];
    let x2 = x1 + l[3];
    if x2 >= x[5] {
        return Err(Error::DecodeAmbiguous(format!(
            "horizontal chain segments overrun the span ({x2} >= {})",
            x[5]
        )));
    }
    let outer = Contour::polyline(
        Terminal::Outer,
        outer_from_upper(&[
            pt(x[0], 0.0),
            pt(x[0], h1),
            pt(x1, h1),
            pt(x1, h2),
            pt(x2, h2),
            pt(x2, h3),
            pt(x[5], h3),
            pt(x[5], 0.0),
        ]),
    );
    let contours = vec![
        outer,
        horizontal_slot(Terminal::Inner, x[1], x[2]),
        horizontal_slot(Terminal::Inner, x[3], x[4]),
    ];
    Ok(ContourSet {
        contours,
        bounded: true,
    })
}

fn decode_e(spec: &CondenserSpec) -> Result<ContourSet> {
    let contours = vec![
        vertical_slot(Terminal::Outer, spec.x[0], spec.y[0]),
        vertical_slot(Terminal::Inner, spec.x[1], spec.y[1]),
    ];
    Ok(ContourSet {
        contours,
        bounded: false,
    })
}

fn decode_f(spec: &CondenserSpec) -> Result<ContourSet> {
    let (h1, w1) = (spec.l1[0], spec.l1[1]);
    let (h2, w2) = (spec.l2[0], spec.l2[1]);
    if h2 >= h1 || w2 >= w1 {
        return Err(Error::DecodeAmbiguous(
            "inner rectangle is not strictly inside the outer".into(),
        ));
    }
    let outer = rectangle_outer(-w1, w1, h1);
    let inner = Contour::polyline(
        Terminal::Inner,
        inner_from_upper(&[pt(-w2, 0.0), pt(-w2, h2), pt(w2, h2), pt(w2, 0.0)]),
    );
    Ok(ContourSet {
        contours: vec![outer, inner],
        bounded: true,
    })
}

fn decode_g(spec: &CondenserSpec) -> Result<ContourSet> {
    let (h1, w1) = (spec.l1[0], spec.l1[1]);
    // north-west quarter chain: up l2[0], right l2[1], up l2[2], ...
    let half_width: f64 = spec.l2.iter().skip(1).step_by(2).sum();
    let mut p = pt(-half_width, 0.0);
    let mut quarter = vec![p];
    for (i, &step) in spec.l2.iter().enumerate() {
        p += if i % 2 == 0 {
            Complex64::new(0.0, step)
        } else {
            Complex64::new(step, 0.0)
        };
        quarter.push(p);
    }
    let top = quarter.last().unwrap();
    if top.re.abs() > 1e-12 {
        return Err(Error::DecodeAmbiguous(
            "quarter chain does not end on the vertical symmetry axis".into(),
        ));
    }
    let height = top.im;
    if height >= h1 || half_width >= w1 {
        return Err(Error::DecodeAmbiguous(
            "inner chain is not strictly inside the outer rectangle".into(),
        ));
    }
    // upper chain: NW quarter, then its x-mirror reversed
    let mut upper = quarter.clone();
    for q in quarter.iter().rev().skip(1) {
        upper.push(pt(-q.re, q.im));
    }
    let inner = Contour::polyline(Terminal::Inner, drop_collinear(inner_from_upper(&upper)));
    let outer = rectangle_outer(-w1, w1, h1);
    Ok(ContourSet {
        contours: vec![outer, inner],
        bounded: true,
    })
}

/// Every inner contour must stay strictly inside the outer bounding chain.
fn validate_slots_inside(set: &ContourSet) -> Result<()> {
    if !set.bounded {
        return Ok(());
    }
    let outer = set.outer().ok_or(Error::DecodeAmbiguous(
        "bounded set without an outer contour".into(),
    ))?;
    let poly = outer.polygonize(512);
    for c in &set.contours {
        if std::ptr::eq(c, outer) {
            continue;
        }
        for v in c.polygonize(64) {
            if !point_in_polygon(v, &poly) && distance_to_polygon(v, &poly) > 1e-12 {
                return Err(Error::DecodeAmbiguous(format!(
                    "inner vertex ({}, {}) lies outside the outer contour",
                    v.re, v.im
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn point_in_polygon(p: Point, poly: &[Point]) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a.im > p.im) != (b.im > p.im) {
            let xi = a.re + (p.im - a.im) / (b.im - a.im) * (b.re - a.re);
            if p.re < xi {
                inside = !inside;
            }
        }
    }
    inside
}

pub(crate) fn distance_to_segment(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

fn distance_to_polygon(p: Point, poly: &[Point]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| distance_to_segment(p, poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}
