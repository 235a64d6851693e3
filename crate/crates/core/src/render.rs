//! SVG pictures of arrangements in dimension one and two.
//!
//! Geometry is computed exactly; only the final screen coordinates are
//! rounded, to two decimals, so the output is byte-stable.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arrangement::{chamber, Arrangement, SignVector};
use crate::error::{Error, Result};
use crate::feasibility::{affine_dimension, is_bounded, is_feasible, vertices_unguarded};
use crate::linalg::{format_rational, rat_int, solve_square, RatMatrix, Rational};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 30.0;
const MAX_RENDER_D: usize = 16;

const FILL: &str = "#c9d9ee";
const STROKE: &str = "#1f3b5c";
const ARROW: &str = "#b03a2e";

fn f(r: &Rational) -> f64 {
    r.to_f64().expect("finite")
}

/// Affine map from the padded box onto the canvas, `y` pointing up.
struct Viewport {
    lo: [Rational; 2],
    hi: [Rational; 2],
}

impl Viewport {
    fn around(points: &[[Rational; 2]]) -> Self {
        let mut lo = points[0].clone();
        let mut hi = points[0].clone();
        for p in points {
            for k in 0..2 {
                if p[k] < lo[k] {
                    lo[k] = p[k].clone();
                }
                if p[k] > hi[k] {
                    hi[k] = p[k].clone();
                }
            }
        }
        for k in 0..2 {
            let extent = &hi[k] - &lo[k];
            let pad = if extent.is_zero() {
                Rational::one()
            } else {
                extent / Rational::from_integer(5.into())
            };
            lo[k] -= &pad;
            hi[k] += &pad;
        }
        Self { lo, hi }
    }

    fn screen(&self, p: &[Rational; 2]) -> (f64, f64) {
        let span = SIZE - 2.0 * MARGIN;
        let sx = (f(&p[0]) - f(&self.lo[0])) / (f(&self.hi[0]) - f(&self.lo[0]));
        let sy = (f(&p[1]) - f(&self.lo[1])) / (f(&self.hi[1]) - f(&self.lo[1]));
        (MARGIN + sx * span, SIZE - MARGIN - sy * span)
    }

    /// The segment of `a.x + c = 0` inside the box, or `None` if it misses it.
    fn clip(&self, a: &[Rational; 2], c: &Rational) -> Option<([Rational; 2], [Rational; 2])> {
        let mut pts: Vec<[Rational; 2]> = Vec::new();
        for k in 0..2 {
            let other = 1 - k;
            if a[other].is_zero() {
                continue;
            }
            for bound in [&self.lo[k], &self.hi[k]] {
                let t = -(c + &a[k] * bound) / &a[other];
                if t >= self.lo[other] && t <= self.hi[other] {
                    let mut p = [Rational::zero(), Rational::zero()];
                    p[k] = bound.clone();
                    p[other] = t;
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
            }
        }
        // order along the direction (-a1, a0)
        let key = |p: &[Rational; 2]| -&a[1] * &p[0] + &a[0] * &p[1];
        pts.sort_by_key(key);
        match pts.len() {
            0 => None,
            _ => Some((pts[0].clone(), pts[pts.len() - 1].clone())),
        }
    }
}

/// Sorts the vertices of a convex polygon counterclockwise around their centroid.
fn angular_sort(mut vs: Vec<[Rational; 2]>) -> Vec<[Rational; 2]> {
    let n = Rational::from_integer((vs.len() as i64).into());
    let cx = vs.iter().map(|v| v[0].clone()).fold(Rational::zero(), |a, b| a + b) / &n;
    let cy = vs.iter().map(|v| v[1].clone()).fold(Rational::zero(), |a, b| a + b) / &n;
    let half = |x: &Rational, y: &Rational| -> u8 {
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    vs.sort_by(|p, q| {
        let (px, py) = (&p[0] - &cx, &p[1] - &cy);
        let (qx, qy) = (&q[0] - &cx, &q[1] - &cy);
        half(&px, &py).cmp(&half(&qx, &qy)).then_with(|| {
            let cross = &px * &qy - &py * &qx;
            if cross.is_positive() {
                Ordering::Less
            } else if cross.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    vs
}

fn bounded_chambers(arr: &Arrangement) -> Result<Vec<Vec<Vec<Rational>>>> {
    if arr.len() > MAX_RENDER_D {
        return Err(Error::GuardExceeded {
            what: "rendering",
            count: 1 << arr.len(),
            limit: 1 << MAX_RENDER_D,
        });
    }
    let mut out = Vec::new();
    for eps in SignVector::enumerate(arr.len()) {
        let ch = chamber(arr, &eps)?;
        if is_feasible(&ch).is_feasible() && is_bounded(&ch) && affine_dimension(&ch) == arr.dim() as i64 {
            out.push(vertices_unguarded(&ch));
        }
    }
    Ok(out)
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn arrow(out: &mut String, (x, y): (f64, f64), (dx, dy): (f64, f64)) {
    let len = (dx * dx + dy * dy).sqrt();
    let (ux, uy) = (dx / len, dy / len);
    let (tx, ty) = (x + 22.0 * ux, y + 22.0 * uy);
    let (bx, by) = (tx - 7.0 * ux, ty - 7.0 * uy);
    let (px, py) = (-uy * 4.0, ux * 4.0);
    let _ = writeln!(
        out,
        "<line x1=\"{x:.2}\" y1=\"{y:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\" stroke=\"{ARROW}\" stroke-width=\"1.5\"/>"
    );
    let _ = writeln!(
        out,
        "<polygon points=\"{tx:.2},{ty:.2} {:.2},{:.2} {:.2},{:.2}\" fill=\"{ARROW}\"/>",
        bx + px,
        by + py,
        bx - px,
        by - py
    );
}

fn render_plane(arr: &Arrangement) -> Result<String> {
    let d = arr.len();
    let normal = |i: usize| [rat_int(&arr.normal(i)[0]), rat_int(&arr.normal(i)[1])];
    let mut points = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let m = RatMatrix::from_rows(vec![normal(i).to_vec(), normal(j).to_vec()], 2).expect("2x2");
            let rhs = [-arr.lifts()[i].clone(), -arr.lifts()[j].clone()];
            if let Some(p) = solve_square(&m, &rhs) {
                let p = [p[0].clone(), p[1].clone()];
                if !points.contains(&p) {
                    points.push(p);
                }
            }
        }
    }
    let view = Viewport::around(&points);
    let mut out = String::new();
    header(&mut out, arr.name().unwrap_or("arrangement"));
    for vs in bounded_chambers(arr)? {
        let poly = angular_sort(vs.into_iter().map(|v| [v[0].clone(), v[1].clone()]).collect());
        let coords: Vec<String> = poly
            .iter()
            .map(|p| {
                let (x, y) = view.screen(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            "<polygon points=\"{}\" fill=\"{FILL}\" stroke=\"none\"/>",
            coords.join(" ")
        );
    }
    for i in 0..d {
        let a = normal(i);
        let Some((p, q)) = view.clip(&a, &arr.lifts()[i]) else { continue };
        let (x1, y1) = view.screen(&p);
        let (x2, y2) = view.screen(&q);
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{STROKE}\" stroke-width=\"2\"/>"
        );
        let mid = [(&p[0] + &q[0]) / Rational::from_integer(2.into()), (&p[1] + &q[1]) / Rational::from_integer(2.into())];
        arrow(&mut out, view.screen(&mid), (f(&a[0]), -f(&a[1])));
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"serif\" font-size=\"14\">H{}</text>",
            x2 + 4.0,
            y2 - 4.0,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn render_line(arr: &Arrangement) -> Result<String> {
    let d = arr.len();
    let pos: Vec<Rational> = (0..d)
        .map(|i| -&arr.lifts()[i] / rat_int(&arr.normal(i)[0]))
        .collect();
    let points: Vec<[Rational; 2]> = pos.iter().map(|x| [x.clone(), Rational::zero()]).collect();
    let view = Viewport::around(&points);
    let y0 = SIZE / 2.0;
    let at = |x: &Rational| view.screen(&[x.clone(), Rational::zero()]).0;
    let mut out = String::new();
    header(&mut out, arr.name().unwrap_or("arrangement"));
    for vs in bounded_chambers(arr)? {
        let (a, b) = (at(&vs[0][0]), at(&vs[vs.len() - 1][0]));
        let _ = writeln!(
            out,
            "<rect x=\"{a:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"12\" fill=\"{FILL}\"/>",
            y0 - 6.0,
            b - a
        );
    }
    let _ = writeln!(
        out,
        "<line x1=\"{MARGIN:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" stroke=\"{STROKE}\" stroke-width=\"2\"/>",
        SIZE - MARGIN
    );
    for (i, x) in pos.iter().enumerate() {
        let sx = at(x);
        let stack = pos[..i].iter().filter(|p| *p == x).count() as f64;
        let _ = writeln!(out, "<circle cx=\"{sx:.2}\" cy=\"{y0:.2}\" r=\"4\" fill=\"{STROKE}\"/>");
        let dir = if arr.normal(i)[0].is_positive() { 1.0 } else { -1.0 };
        arrow(&mut out, (sx, y0 - 16.0 - 22.0 * stack), (dir, 0.0));
        let _ = writeln!(
            out,
            "<text x=\"{sx:.2}\" y=\"{:.2}\" font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\">H{} = {}</text>",
            y0 + 26.0 + 18.0 * stack,
            i + 1,
            format_rational(x)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn render_svg(arr: &Arrangement) -> Result<String> {
    match arr.dim() {
        1 => render_line(arr),
        2 => render_plane(arr),
        n => Err(Error::RenderDimension(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rat;

    #[test]
    fn hirzebruch_picture() {
        let svg = render_svg(&fixtures::hirzebruch()).unwrap();
        assert_eq!(svg.matches("<polygon points").count() - 4, 2);
        assert_eq!(svg.matches("stroke-width=\"2\"").count(), 4);
        assert!(svg.contains(">H4<"));
        assert_eq!(svg, render_svg(&fixtures::hirzebruch()).unwrap());
    }

    #[test]
    fn number_line() {
        let svg = render_svg(&fixtures::three_points()).unwrap();
        for label in ["H1 = 1", "H2 = 1/2", "H3 = 0"] {
            assert!(svg.contains(label), "{label}");
        }
        assert_eq!(svg.matches("<rect").count() - 1, 2);
    }

    #[test]
    fn two_crossing_lines() {
        let arr = Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1]], vec![rat(0, 1), rat(0, 1)]).unwrap();
        let svg = render_svg(&arr).unwrap();
        assert_eq!(svg.matches("<polygon points").count(), 2);
    }

    #[test]
    fn higher_dimensions_rejected() {
        let arr = Arrangement::from_ints(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], vec![rat(0, 1); 3]).unwrap();
        assert_eq!(render_svg(&arr).unwrap_err().to_string(), "rendering supports n <= 2, got n = 3");
    }

    #[test]
    fn angular_order() {
        let sq = vec![[rat(1, 1), rat(1, 1)], [rat(0, 1), rat(0, 1)], [rat(1, 1), rat(0, 1)], [rat(0, 1), rat(1, 1)]];
        let sorted = angular_sort(sq);
        assert_eq!(sorted[0], [rat(1, 1), rat(1, 1)]);
        assert_eq!(sorted[1], [rat(0, 1), rat(1, 1)]);
        assert_eq!(sorted[2], [rat(0, 1), rat(0, 1)]);
    }
}
