//! Closed polylines and parametrization-independent measurements.
//!
//! The discrete curve is an ordered cyclic tuple of points in `R^d`; all
//! quantities (length, turning total, area, ...) are properties of the
//! polygon obtained by joining consecutive points, last back to first.

use thiserror::Error;

/// Relative tolerance (times the point-set diameter) below which consecutive
/// points are considered coincident and merged at construction.
pub const MERGE_TOL: f64 = 1e-14;

/// Default relative amplitude below which an extremum pair is treated as
/// sampling ripple by [`extremity_count`].
pub const DEFAULT_AMPLITUDE_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("closed polyline needs at least 3 distinct points, got {0}")]
    TooFewPoints(usize),
    #[error("point data of length {len} is not a multiple of dimension {dim}")]
    RaggedData { len: usize, dim: usize },
    #[error("spatial dimension must be at least 2, got {0}")]
    BadDimension(usize),
    #[error("all points coincide")]
    DegeneratePoints,
    #[error("resample count must be at least 3, got {0}")]
    BadResampleCount(usize),
    #[error("operation requires a planar curve, got dimension {0}")]
    NotPlanar(usize),
    #[error("curve has flattened: y-extent below {MERGE_TOL:e} of x-extent")]
    FlattenedCurve,
}

/// An ordered cyclic sequence of points in `R^d`, `d >= 2`.
///
/// Index arithmetic is modulo the point count. Construction merges
/// consecutive points closer than `MERGE_TOL` times the diameter, so every
/// edge of a valid polyline has positive length.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedPolyline {
    points: Vec<f64>, // flat, point-major: [x0, y0, ..., x1, y1, ...]
    dim: usize,
}

impl ClosedPolyline {
    pub fn new(points: Vec<f64>, dim: usize) -> Result<Self, GeometryError> {
        if dim < 2 {
            return Err(GeometryError::BadDimension(dim));
        }
        if points.len() % dim != 0 {
            return Err(GeometryError::RaggedData { len: points.len(), dim });
        }
        let n = points.len() / dim;
        if n < 3 {
            return Err(GeometryError::TooFewPoints(n));
        }
        let diameter = bbox_diagonal(&points, dim);
        if diameter == 0.0 {
            return Err(GeometryError::DegeneratePoints);
        }
        let tol = MERGE_TOL * diameter;
        let mut merged = Vec::with_capacity(points.len());
        for p in points.chunks_exact(dim) {
            if let Some(prev) = merged.chunks_exact(dim).last() {
                if dist(prev, p) <= tol {
                    continue;
                }
            }
            merged.extend_from_slice(p);
        }
        // wrap-around pair
        while merged.len() >= 2 * dim {
            let first = merged[..dim].to_vec();
            let last = &merged[merged.len() - dim..];
            if dist(&first, last) <= tol {
                merged.truncate(merged.len() - dim);
            } else {
                break;
            }
        }
        if merged.len() / dim < 3 {
            return Err(GeometryError::TooFewPoints(merged.len() / dim));
        }
        Ok(Self { points: merged, dim })
    }

    /// Planar helper, mostly for tests and generators.
    pub fn from_xy(points: &[(f64, f64)]) -> Result<Self, GeometryError> {
        let mut flat = Vec::with_capacity(points.len() * 2);
        for &(x, y) in points {
            flat.push(x);
            flat.push(y);
        }
        Self::new(flat, 2)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point_count(&self) -> usize {
        self.points.len() / self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        let i = i % self.point_count();
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    /// Flat coordinate storage, point-major.
    pub fn coords(&self) -> &[f64] {
        &self.points
    }

    pub fn iter_points(&self) -> impl Iterator<Item = &[f64]> {
        self.points.chunks_exact(self.dim)
    }

    /// Largest axis-aligned extent, used to scale relative tolerances.
    pub fn diameter(&self) -> f64 {
        bbox_diagonal(&self.points, self.dim)
    }
}

fn bbox_diagonal(points: &[f64], dim: usize) -> f64 {
    let mut sum = 0.0;
    for c in 0..dim {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for p in points.chunks_exact(dim) {
            lo = lo.min(p[c]);
            hi = hi.max(p[c]);
        }
        sum += (hi - lo) * (hi - lo);
    }
    sum.sqrt()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Cumulative chord lengths `0 = l_0 <= l_1 <= ... <= l_n = L`.
#[derive(Debug, Clone)]
pub struct ArclengthTable {
    cumulative: Vec<f64>,
}

impl ArclengthTable {
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn total(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }
}

/// Polygon length: sum of edge lengths including the closing edge.
pub fn polygon_length(p: &ClosedPolyline) -> f64 {
    arclength_table(p).total()
}

/// Cumulative arclength along the polygon. Compensated summation keeps the
/// table symmetric under index reflection to near machine precision, which
/// the flow's symmetry preservation relies on.
pub fn arclength_table(p: &ClosedPolyline) -> ArclengthTable {
    let n = p.point_count();
    let mut cumulative = Vec::with_capacity(n + 1);
    cumulative.push(0.0);
    let mut sum = 0.0;
    let mut comp = 0.0;
    for i in 0..n {
        let e = dist(p.point(i), p.point(i + 1));
        let y = e - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        cumulative.push(sum);
    }
    ArclengthTable { cumulative }
}

/// Uniform-arclength resampling: `n_out` points on the polygon of `p`, spaced
/// `L / n_out` apart along it, anchored so the first output point is `p`'s
/// first point.
pub fn resample_uniform(p: &ClosedPolyline, n_out: usize) -> Result<ClosedPolyline, GeometryError> {
    if n_out < 3 {
        return Err(GeometryError::BadResampleCount(n_out));
    }
    let table = arclength_table(p);
    let cum = table.cumulative();
    let total = table.total();
    let n_in = p.point_count();
    let dim = p.dim();
    let mut out = Vec::with_capacity(n_out * dim);
    let mut seg = 0usize; // current polygon segment; targets are increasing
    for j in 0..n_out {
        let target = total * (j as f64) / (n_out as f64);
        while seg + 1 < n_in && cum[seg + 1] <= target {
            seg += 1;
        }
        let len = cum[seg + 1] - cum[seg];
        let frac = if len > 0.0 { (target - cum[seg]) / len } else { 0.0 };
        let a = p.point(seg);
        let b = p.point(seg + 1);
        for c in 0..dim {
            out.push(a[c] + frac * (b[c] - a[c]));
        }
    }
    ClosedPolyline::new(out, dim)
}

fn unit_edges(p: &ClosedPolyline) -> Vec<f64> {
    let n = p.point_count();
    let dim = p.dim();
    let mut t = Vec::with_capacity(n * dim);
    for i in 0..n {
        let a = p.point(i);
        let b = p.point(i + 1);
        let len = dist(a, b);
        for c in 0..dim {
            t.push((b[c] - a[c]) / len);
        }
    }
    t
}

/// Total turning curvature: the sum over vertices of the angle in `[0, pi]`
/// between incoming and outgoing edge directions (the polygon total
/// curvature in the Milnor sense).
pub fn turning_total_curvature(p: &ClosedPolyline) -> f64 {
    let t = unit_edges(p);
    let n = p.point_count();
    let dim = p.dim();
    let mut total = 0.0;
    for i in 0..n {
        let a = &t[i * dim..(i + 1) * dim];
        let j = (i + 1) % n;
        let b = &t[j * dim..(j + 1) * dim];
        let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        total += dot.clamp(-1.0, 1.0).acos();
    }
    total
}

/// Tantrix chord length: the sum of Euclidean norms of consecutive unit
/// tangent differences. Coincides with the turning total to second order for
/// smooth curves but is strictly smaller at sharp corners
/// (`|dT| = 2 sin(theta/2) <= theta`).
pub fn chord_total_curvature(p: &ClosedPolyline) -> f64 {
    let t = unit_edges(p);
    let n = p.point_count();
    let dim = p.dim();
    let mut total = 0.0;
    for i in 0..n {
        let a = &t[i * dim..(i + 1) * dim];
        let j = (i + 1) % n;
        let b = &t[j * dim..(j + 1) * dim];
        total += dist(a, b);
    }
    total
}

/// Shoelace signed area (planar curves only). Sign follows orientation.
pub fn signed_area(p: &ClosedPolyline) -> Result<f64, GeometryError> {
    if p.dim() != 2 {
        return Err(GeometryError::NotPlanar(p.dim()));
    }
    let n = p.point_count();
    let mut acc = 0.0;
    for i in 0..n {
        let a = p.point(i);
        let b = p.point(i + 1);
        acc += a[0] * b[1] - b[0] * a[1];
    }
    Ok(0.5 * acc)
}

/// Ratio of coordinate diameters `diam_x / diam_y` (planar curves only).
///
/// Errors with [`GeometryError::FlattenedCurve`] once the y-extent drops
/// below `1e-14` of the x-extent; callers treat that as an effectively
/// infinite ratio.
pub fn aspect_ratio(p: &ClosedPolyline) -> Result<f64, GeometryError> {
    if p.dim() != 2 {
        return Err(GeometryError::NotPlanar(p.dim()));
    }
    let (mut xlo, mut xhi) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ylo, mut yhi) = (f64::INFINITY, f64::NEG_INFINITY);
    for pt in p.iter_points() {
        xlo = xlo.min(pt[0]);
        xhi = xhi.max(pt[0]);
        ylo = ylo.min(pt[1]);
        yhi = yhi.max(pt[1]);
    }
    let dx = xhi - xlo;
    let dy = yhi - ylo;
    if dy < 1e-14 * dx {
        return Err(GeometryError::FlattenedCurve);
    }
    Ok(dx / dy)
}

/// Counts extremity points: for each coordinate component, the surviving
/// local maxima and minima of the cyclic sample sequence after merging
/// plateaus and pruning alternations whose amplitude is below
/// `amplitude_tol` times the component diameter. Returns the sum over
/// components.
pub fn extremity_count(p: &ClosedPolyline, amplitude_tol: f64) -> usize {
    let mut total = 0;
    for c in 0..p.dim() {
        let values: Vec<f64> = p.iter_points().map(|pt| pt[c]).collect();
        total += component_extrema(&values, amplitude_tol);
    }
    total
}

fn component_extrema(values: &[f64], amplitude_tol: f64) -> usize {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let diam = hi - lo;
    if diam <= 0.0 {
        return 0;
    }
    // merge plateaus (consecutive equal values, cyclically)
    let mut w: Vec<f64> = Vec::with_capacity(values.len());
    for &v in values {
        if w.last() != Some(&v) {
            w.push(v);
        }
    }
    while w.len() > 1 && w.first() == w.last() {
        w.pop();
    }
    let n = w.len();
    if n < 2 {
        return 0;
    }
    // cyclic local extrema, alternating max/min by construction
    let mut ext: Vec<f64> = Vec::new();
    for i in 0..n {
        let prev = w[(i + n - 1) % n];
        let cur = w[i];
        let next = w[(i + 1) % n];
        if (cur > prev && cur > next) || (cur < prev && cur < next) {
            ext.push(cur);
        }
    }
    // prune smallest-amplitude adjacent pairs below threshold
    let thresh = amplitude_tol * diam;
    while ext.len() >= 2 {
        let m = ext.len();
        let (mut jmin, mut amin) = (0usize, f64::INFINITY);
        for j in 0..m {
            let amp = (ext[(j + 1) % m] - ext[j]).abs();
            if amp < amin {
                amin = amp;
                jmin = j;
            }
        }
        if amin >= thresh {
            break;
        }
        let j2 = (jmin + 1) % m;
        if j2 > jmin {
            ext.remove(j2);
            ext.remove(jmin);
        } else {
            ext.remove(jmin);
            ext.remove(j2);
        }
    }
    ext.len()
}

/// Subtracts the edge-length-weighted midpoint centroid and rescales to unit
/// polygon length. The weighting approximates the curve's center of mass
/// rather than the sample set's.
pub fn recenter_rescale(p: &ClosedPolyline) -> ClosedPolyline {
    let dim = p.dim();
    let n = p.point_count();
    let mut centroid = vec![0.0; dim];
    let mut total = 0.0;
    for i in 0..n {
        let a = p.point(i);
        let b = p.point(i + 1);
        let e = dist(a, b);
        total += e;
        for c in 0..dim {
            centroid[c] += 0.5 * (a[c] + b[c]) * e;
        }
    }
    for c in centroid.iter_mut() {
        *c /= total;
    }
    let coords: Vec<f64> = p
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - centroid[i % dim]) / total)
        .collect();
    ClosedPolyline::new(coords, dim).expect("rescaling a valid polyline stays valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ClosedPolyline {
        ClosedPolyline::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    fn regular_ngon(n: usize) -> ClosedPolyline {
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let a = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
                (a.cos(), a.sin())
            })
            .collect();
        ClosedPolyline::from_xy(&pts).unwrap()
    }

    #[test]
    fn construction_rejects_degenerate_input() {
        assert!(matches!(
            ClosedPolyline::from_xy(&[(0.0, 0.0), (1.0, 0.0)]),
            Err(GeometryError::TooFewPoints(2))
        ));
        assert!(matches!(
            ClosedPolyline::from_xy(&[(1.0, 1.0), (1.0, 1.0), (1.0, 1.0)]),
            Err(GeometryError::DegeneratePoints)
        ));
        assert!(matches!(
            ClosedPolyline::new(vec![0.0; 9], 4),
            Err(GeometryError::RaggedData { len: 9, dim: 4 })
        ));
        assert!(matches!(ClosedPolyline::new(vec![0.0; 6], 1), Err(GeometryError::BadDimension(1))));
    }

    #[test]
    fn construction_merges_coincident_neighbors() {
        let eps = 1e-16;
        let p = ClosedPolyline::from_xy(&[
            (0.0, 0.0),
            (0.0, eps),
            (1.0, 0.0),
            (0.0, 1.0),
            (eps, 1.0),
        ])
        .unwrap();
        assert_eq!(p.point_count(), 3);
    }

    #[test]
    fn construction_merges_wraparound_duplicate() {
        let p = ClosedPolyline::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, 0.0)]).unwrap();
        assert_eq!(p.point_count(), 3);
    }

    #[test]
    fn length_of_unit_square_is_four() {
        assert_eq!(polygon_length(&unit_square()), 4.0);
    }

    #[test]
    fn length_of_doubly_covered_segment() {
        // out-and-back over [-1,1] sampled with 4 points
        let p = ClosedPolyline::from_xy(&[(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0), (0.0, 0.0)]).unwrap();
        assert!((polygon_length(&p) - 4.0).abs() < 1e-15);
    }

    #[test]
    fn length_of_regular_ngon_matches_chord_formula() {
        let n = 1024;
        let p = regular_ngon(n);
        let expected = 2.0 * (n as f64) * (std::f64::consts::PI / n as f64).sin();
        assert!((polygon_length(&p) - expected).abs() < 1e-12);
        assert!((polygon_length(&p) - 2.0 * std::f64::consts::PI).abs() < 1e-4);
    }

    #[test]
    fn arclength_table_unit_square() {
        let t = arclength_table(&unit_square());
        assert_eq!(t.cumulative(), &[0.0, 1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn arclength_table_equilateral_triangle() {
        let h = 3.0f64.sqrt();
        let p = ClosedPolyline::from_xy(&[(0.0, 0.0), (2.0, 0.0), (1.0, h)]).unwrap();
        let t = arclength_table(&p);
        for (got, want) in t.cumulative().iter().zip([0.0, 2.0, 4.0, 6.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn arclength_table_ends_at_polygon_length() {
        let p = regular_ngon(137);
        let t = arclength_table(&p);
        let l = polygon_length(&p);
        assert!((t.total() - l).abs() <= 1e-12 * l);
    }

    #[test]
    fn resample_square_to_eight_gives_vertices_and_midpoints() {
        let p = resample_uniform(&unit_square(), 8).unwrap();
        let expected = [
            (0.0, 0.0),
            (0.5, 0.0),
            (1.0, 0.0),
            (1.0, 0.5),
            (1.0, 1.0),
            (0.5, 1.0),
            (0.0, 1.0),
            (0.0, 0.5),
        ];
        assert_eq!(p.point_count(), 8);
        for (i, &(x, y)) in expected.iter().enumerate() {
            assert!((p.point(i)[0] - x).abs() < 1e-15);
            assert!((p.point(i)[1] - y).abs() < 1e-15);
        }
    }

    #[test]
    fn resample_triangle_hand_walk() {
        // 3-4-5 triangle, L = 12, N = 3: targets at arclengths 0, 4, 8.
        // Arclength 4 sits 1 unit into the hypotenuse; arclength 8 is
        // exactly the third vertex.
        let p = ClosedPolyline::from_xy(&[(0.0, 0.0), (3.0, 0.0), (0.0, 4.0)]).unwrap();
        let r = resample_uniform(&p, 3).unwrap();
        let expected = [(0.0, 0.0), (2.4, 0.8), (0.0, 4.0)];
        for (i, &(x, y)) in expected.iter().enumerate() {
            assert!((r.point(i)[0] - x).abs() < 1e-12, "point {i}: {:?}", r.point(i));
            assert!((r.point(i)[1] - y).abs() < 1e-12);
        }
    }

    #[test]
    fn resample_rejects_small_counts() {
        assert!(matches!(resample_uniform(&unit_square(), 2), Err(GeometryError::BadResampleCount(2))));
    }

    #[test]
    fn resample_anchors_first_point() {
        let p = regular_ngon(17);
        let r = resample_uniform(&p, 64).unwrap();
        assert!(dist(p.point(0), r.point(0)) < 1e-15);
    }

    #[test]
    fn turning_total_of_square_is_two_pi() {
        let k = turning_total_curvature(&unit_square());
        assert!((k - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn collinear_vertices_contribute_no_turning() {
        let with_collinear = ClosedPolyline::from_xy(&[
            (0.0, 0.0),
            (0.25, 0.0),
            (0.5, 0.0),
            (0.75, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
        ])
        .unwrap();
        let k = turning_total_curvature(&with_collinear);
        let square = turning_total_curvature(
            &ClosedPolyline::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap(),
        );
        assert!((k - square).abs() < 1e-12);
    }

    #[test]
    fn nfold_circle_turning_total() {
        for nfold in [1usize, 2, 3] {
            let n = 256 * nfold;
            let pts: Vec<(f64, f64)> = (0..n)
                .map(|j| {
                    let a = 2.0 * std::f64::consts::PI * (nfold as f64) * (j as f64) / (n as f64);
                    (a.cos(), a.sin())
                })
                .collect();
            let p = ClosedPolyline::from_xy(&pts).unwrap();
            let k = turning_total_curvature(&p);
            let expected = 2.0 * std::f64::consts::PI * nfold as f64;
            assert!((k - expected).abs() < 1e-3, "nfold={nfold}: {k} vs {expected}");
        }
    }

    #[test]
    fn chord_total_of_square_is_four_root_two() {
        let k = chord_total_curvature(&unit_square());
        assert!((k - 4.0 * 2.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn chord_and_turning_totals_agree_for_smooth_circle() {
        let p = regular_ngon(1024);
        let kc = chord_total_curvature(&p);
        let kt = turning_total_curvature(&p);
        let two_pi = 2.0 * std::f64::consts::PI;
        assert!((kc - kt).abs() < 1e-4);
        assert!((kc - two_pi).abs() < 1e-4);
        assert!((kt - two_pi).abs() < 1e-4);
    }

    #[test]
    fn signed_area_of_ccw_unit_square_is_one() {
        assert_eq!(signed_area(&unit_square()).unwrap(), 1.0);
    }

    #[test]
    fn signed_area_of_regular_ngon() {
        let n = 1024;
        let p = regular_ngon(n);
        let expected = (n as f64 / 2.0) * (2.0 * std::f64::consts::PI / n as f64).sin();
        let a = signed_area(&p).unwrap();
        assert!((a - expected).abs() < 1e-12);
        assert!((a - std::f64::consts::PI).abs() < 1e-4);
    }

    #[test]
    fn signed_area_rejects_non_planar() {
        let p = ClosedPolyline::new(
            vec![0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0],
            3,
        )
        .unwrap();
        assert!(matches!(signed_area(&p), Err(GeometryError::NotPlanar(3))));
    }

    #[test]
    fn aspect_ratio_of_circle_is_one() {
        let p = regular_ngon(512);
        assert!((aspect_ratio(&p).unwrap() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn aspect_ratio_of_ellipse() {
        let n = 1024;
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let a = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
                (3.0 * a.cos(), a.sin())
            })
            .collect();
        let p = ClosedPolyline::from_xy(&pts).unwrap();
        assert!((aspect_ratio(&p).unwrap() - 3.0).abs() < 1e-6);
    }

    #[test]
    fn aspect_ratio_flags_flattened_curves() {
        let p = ClosedPolyline::from_xy(&[(-1.0, 0.0), (0.0, 1e-16), (1.0, 0.0), (0.0, -1e-16)]).unwrap();
        assert!(matches!(aspect_ratio(&p), Err(GeometryError::FlattenedCurve)));
    }

    #[test]
    fn extremity_count_circle_is_four() {
        assert_eq!(extremity_count(&regular_ngon(256), DEFAULT_AMPLITUDE_TOL), 4);
    }

    #[test]
    fn extremity_count_convoluted_lissajous() {
        // (3cos(6 pi r), sin(16 pi r)): 6 + 16 analytic extrema
        let n = 4096;
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let r = j as f64 / n as f64;
                (
                    3.0 * (6.0 * std::f64::consts::PI * r).cos(),
                    (16.0 * std::f64::consts::PI * r).sin(),
                )
            })
            .collect();
        let p = ClosedPolyline::from_xy(&pts).unwrap();
        assert_eq!(extremity_count(&p, DEFAULT_AMPLITUDE_TOL), 22);
    }

    #[test]
    fn extremity_count_merges_plateaus_and_ripple() {
        // square wave with a tiny ripple: plateaus merge, ripple pruned
        let mut pts = Vec::new();
        for j in 0..64 {
            let x = j as f64 / 64.0;
            let base = if j < 32 { 1.0 } else { -1.0 };
            pts.push((x, base));
        }
        let p = ClosedPolyline::from_xy(&pts).unwrap();
        // x runs 0..1 then jumps back: 2 extrema; y is a two-plateau wave: 2 extrema
        assert_eq!(extremity_count(&p, DEFAULT_AMPLITUDE_TOL), 4);
    }

    #[test]
    fn recenter_rescale_normalizes_length_and_centroid() {
        let n = 256;
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let a = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
                (7.0 + 5.0 * a.cos(), -3.0 + 5.0 * a.sin())
            })
            .collect();
        let p = ClosedPolyline::from_xy(&pts).unwrap();
        let r = recenter_rescale(&p);
        assert!((polygon_length(&r) - 1.0).abs() < 1e-12);
        let mut c = [0.0, 0.0];
        let mut total = 0.0;
        for i in 0..r.point_count() {
            let a = r.point(i).to_vec();
            let b = r.point(i + 1).to_vec();
            let e = dist(&a, &b);
            total += e;
            c[0] += 0.5 * (a[0] + b[0]) * e;
            c[1] += 0.5 * (a[1] + b[1]) * e;
        }
        assert!((c[0] / total).abs() < 1e-12);
        assert!((c[1] / total).abs() < 1e-12);
        // radius scales to 1/(2 pi) up to polygonal shortfall
        let rad = (r.point(0)[0].powi(2) + r.point(0)[1].powi(2)).sqrt();
        assert!((rad - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-4);
    }

    #[test]
    fn recenter_rescale_fixes_normalized_curves() {
        let n = 256;
        let pts: Vec<(f64, f64)> = (0..n)
            .map(|j| {
                let a = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
                let r = 1.0 / (2.0 * std::f64::consts::PI);
                (r * a.cos(), r * a.sin())
            })
            .collect();
        let p = ClosedPolyline::from_xy(&pts).unwrap();
        let scale = polygon_length(&p);
        // already centered; rescale by its own (near-1) length and compare
        let r = recenter_rescale(&p);
        for i in 0..n {
            assert!((r.point(i)[0] - p.point(i)[0] / scale).abs() < 1e-12);
            assert!((r.point(i)[1] - p.point(i)[1] / scale).abs() < 1e-12);
        }
    }

    #[test]
    fn orientation_reversal_flips_area_keeps_length_and_turning() {
        let p = ClosedPolyline::from_xy(&[(0.0, 0.0), (2.0, 0.0), (2.5, 1.5), (1.0, 2.0), (-0.5, 0.8)]).unwrap();
        let rev: Vec<(f64, f64)> = p
            .iter_points()
            .map(|q| (q[0], q[1]))
            .rev()
            .collect();
        let r = ClosedPolyline::from_xy(&rev).unwrap();
        assert!((signed_area(&p).unwrap() + signed_area(&r).unwrap()).abs() < 1e-14);
        assert!((polygon_length(&p) - polygon_length(&r)).abs() < 1e-14);
        assert!((turning_total_curvature(&p) - turning_total_curvature(&r)).abs() < 1e-12);
    }
}
