//! Exact measure of unions of intervals and of unions of discs clipped to a
//! rectangle.
//!
//! The disc union area uses Green's theorem: the boundary of the clipped
//! union consists of circle arcs that lie outside every other disc and inside
//! the rectangle, and rectangle edge pieces that lie inside some disc. Each
//! piece contributes ½∮(x dy − y dx) in closed form.

use std::f64::consts::TAU;
use std::ops::{Add, Sub};

use num_traits::Zero;

/// Merge intervals into a sorted list of disjoint ones.
pub fn merge_intervals<T>(mut v: Vec<(T, T)>) -> Vec<(T, T)>
where
    T: Clone + PartialOrd,
{
    v.retain(|(a, b)| a < b);
    v.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut out: Vec<(T, T)> = Vec::with_capacity(v.len());
    for (a, b) in v {
        match out.last_mut() {
            Some(last) if a <= last.1 => {
                if b > last.1 {
                    last.1 = b;
                }
            }
            _ => out.push((a, b)),
        }
    }
    out
}

pub fn total_length<T>(merged: &[(T, T)]) -> T
where
    T: Clone + Zero + Add<Output = T> + Sub<Output = T>,
{
    merged.iter().fold(T::zero(), |s, (a, b)| s + (b.clone() - a.clone()))
}

/// Length of the intersection of two merged interval lists.
pub fn intersection_length<T>(a: &[(T, T)], b: &[(T, T)]) -> T
where
    T: Clone + PartialOrd + Zero + Add<Output = T> + Sub<Output = T>,
{
    let (mut i, mut j) = (0, 0);
    let mut total = T::zero();
    while i < a.len() && j < b.len() {
        let lo = if a[i].0 > b[j].0 { a[i].0.clone() } else { b[j].0.clone() };
        let hi = if a[i].1 < b[j].1 { a[i].1.clone() } else { b[j].1.clone() };
        if lo < hi {
            total = total + (hi - lo);
        }
        if a[i].1 < b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disc {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub const UNIT: Rect = Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 };

    fn distance_to(&self, x: f64, y: f64) -> f64 {
        let dx = (self.x0 - x).max(0.0).max(x - self.x1);
        let dy = (self.y0 - y).max(0.0).max(y - self.y1);
        dx.hypot(dy)
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        const EPS: f64 = 1e-12;
        x >= self.x0 - EPS && x <= self.x1 + EPS && y >= self.y0 - EPS && y <= self.y1 + EPS
    }
}

impl Disc {
    pub fn meets_rect(&self, rect: &Rect) -> bool {
        self.r > 0.0 && rect.distance_to(self.cx, self.cy) < self.r
    }

    fn dist(&self, o: &Disc) -> f64 {
        (o.cx - self.cx).hypot(o.cy - self.cy)
    }

    fn strictly_contains(&self, x: f64, y: f64) -> bool {
        (x - self.cx).hypot(y - self.cy) < self.r
    }
}

/// True when no disc of `a` meets a disc of `b` in a set of positive area.
pub fn pairwise_disjoint(a: &[Disc], b: &[Disc]) -> bool {
    a.iter().all(|p| b.iter().all(|q| p.dist(q) >= p.r + q.r))
}

fn norm_angle(t: f64) -> f64 {
    let t = t.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Area of (∪ discs) ∩ rect.
pub fn disc_union_area(discs: &[Disc], rect: Rect) -> f64 {
    let mut ds: Vec<Disc> = discs.iter().copied().filter(|d| d.meets_rect(&rect)).collect();
    ds.sort_by(|a, b| (a.cx, a.cy, a.r).partial_cmp(&(b.cx, b.cy, b.r)).unwrap());
    ds.dedup();
    // drop discs inside another one
    let keep: Vec<bool> = (0..ds.len())
        .map(|i| !(0..ds.len()).any(|j| j != i && ds[i].dist(&ds[j]) + ds[i].r <= ds[j].r))
        .collect();
    let ds: Vec<Disc> = ds.into_iter().zip(keep).filter(|(_, k)| *k).map(|(d, _)| d).collect();
    if ds.is_empty() {
        return 0.0;
    }
    let neighbours: Vec<Vec<usize>> = (0..ds.len())
        .map(|i| (0..ds.len()).filter(|&j| j != i && ds[i].dist(&ds[j]) < ds[i].r + ds[j].r).collect())
        .collect();

    let mut twice_area = 0.0;
    for (i, d) in ds.iter().enumerate() {
        let mut cuts = vec![0.0, TAU];
        for &j in &neighbours[i] {
            let o = &ds[j];
            let dist = d.dist(o);
            let a = (dist * dist + d.r * d.r - o.r * o.r) / (2.0 * dist);
            let alpha = (a / d.r).clamp(-1.0, 1.0).acos();
            let phi = (o.cy - d.cy).atan2(o.cx - d.cx);
            cuts.push(norm_angle(phi + alpha));
            cuts.push(norm_angle(phi - alpha));
        }
        for x in [rect.x0, rect.x1] {
            let c = (x - d.cx) / d.r;
            if c.abs() <= 1.0 {
                let t = c.acos();
                cuts.push(norm_angle(t));
                cuts.push(norm_angle(-t));
            }
        }
        for y in [rect.y0, rect.y1] {
            let s = (y - d.cy) / d.r;
            if s.abs() <= 1.0 {
                let t = s.asin();
                cuts.push(norm_angle(t));
                cuts.push(norm_angle(std::f64::consts::PI - t));
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in cuts.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b - a <= 1e-15 {
                continue;
            }
            let m = 0.5 * (a + b);
            let (px, py) = (d.cx + d.r * m.cos(), d.cy + d.r * m.sin());
            if !rect.contains(px, py) || neighbours[i].iter().any(|&j| ds[j].strictly_contains(px, py)) {
                continue;
            }
            twice_area += d.r * d.r * (b - a) + d.r * d.cx * (b.sin() - a.sin()) - d.r * d.cy * (b.cos() - a.cos());
        }
    }

    // rectangle edges, counterclockwise
    let corners = [(rect.x0, rect.y0), (rect.x1, rect.y0), (rect.x1, rect.y1), (rect.x0, rect.y1)];
    for k in 0..4 {
        let (ax, ay) = corners[k];
        let (bx, by) = corners[(k + 1) % 4];
        let (ex, ey) = (bx - ax, by - ay);
        let len2 = ex * ex + ey * ey;
        let mut cuts = vec![0.0, 1.0];
        for d in &ds {
            // |a + s e − c|² = r²
            let (fx, fy) = (ax - d.cx, ay - d.cy);
            let bq = 2.0 * (fx * ex + fy * ey);
            let cq = fx * fx + fy * fy - d.r * d.r;
            let disc = bq * bq - 4.0 * len2 * cq;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                for s in [(-bq - sq) / (2.0 * len2), (-bq + sq) / (2.0 * len2)] {
                    if s > 0.0 && s < 1.0 {
                        cuts.push(s);
                    }
                }
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in cuts.windows(2) {
            let (s0, s1) = (w[0], w[1]);
            if s1 - s0 <= 1e-15 {
                continue;
            }
            let sm = 0.5 * (s0 + s1);
            let (mx, my) = (ax + sm * ex, ay + sm * ey);
            if ds.iter().any(|d| d.strictly_contains(mx, my)) {
                let (x0, y0) = (ax + s0 * ex, ay + s0 * ey);
                let (x1, y1) = (ax + s1 * ex, ay + s1 * ey);
                twice_area += x0 * y1 - x1 * y0;
            }
        }
    }
    0.5 * twice_area
}
