//! Planar convex hulls, for Gauss–Lucas sanity checks on critical points, and
//! point-set matching for comparing root sets.

use num_complex::Complex64;

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Counter-clockwise hull by Andrew's monotone chain. Collinear points are
/// dropped; degenerate inputs give 1 or 2 vertices.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Complex64>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Euclidean distance from `p` to the hull of `points` (0 inside).
pub fn distance_to_hull(p: Complex64, points: &[Complex64]) -> f64 {
    let hull = convex_hull(points);
    match hull.len() {
        0 => f64::INFINITY,
        1 => (p - hull[0]).norm(),
        2 => segment_distance(p, hull[0], hull[1]),
        m => {
            let inside = (0..m).all(|i| cross(hull[i], hull[(i + 1) % m], p) >= 0.0);
            if inside {
                0.0
            } else {
                (0..m).map(|i| segment_distance(p, hull[i], hull[(i + 1) % m])).fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Assignment minimising `sum |a[i] - b[perm[i]]|` (Hungarian method, O(n^3)).
/// Both slices must have the same length.
pub fn optimal_matching(a: &[Complex64], b: &[Complex64]) -> Vec<usize> {
    assert_eq!(a.len(), b.len(), "matching needs equal-sized sets");
    let n = a.len();
    // 1-based potentials formulation; row 0 / column 0 are sentinels
    let (mut u, mut v) = (vec![0.0; n + 1], vec![0.0; n + 1]);
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = (a[i0 - 1] - b[j - 1]).norm() - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut perm = vec![0; n];
    for j in 1..=n {
        perm[owner[j] - 1] = j - 1;
    }
    perm
}

/// Largest pairwise distance under [`optimal_matching`].
pub fn matching_error(a: &[Complex64], b: &[Complex64]) -> f64 {
    optimal_matching(a, b).iter().enumerate().map(|(i, &j)| (a[i] - b[j]).norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn square_hull_and_distances() {
        let pts = [c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0), c(0.5, 0.5)];
        assert_eq!(convex_hull(&pts).len(), 4);
        assert_eq!(distance_to_hull(c(0.5, 0.5), &pts), 0.0);
        assert!((distance_to_hull(c(2.0, 0.5), &pts) - 1.0).abs() < 1e-15);
        assert!((distance_to_hull(c(-1.0, -1.0), &pts) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn degenerate_hulls() {
        assert!((distance_to_hull(c(0.0, 1.0), &[c(-1.0, 0.0), c(1.0, 0.0)]) - 1.0).abs() < 1e-15);
        assert!((distance_to_hull(c(0.0, 1.0), &[c(0.0, 0.0)]) - 1.0).abs() < 1e-15);
        // collinear triple behaves like a segment
        assert!((distance_to_hull(c(3.0, 0.0), &[c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn matching_beats_greedy() {
        // greedy nearest-first pairs 0.0 with 0.1 and leaves 1.0 against -0.9
        let a = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let b = [Complex64::new(0.1, 0.0), Complex64::new(-0.9, 0.0)];
        assert_eq!(optimal_matching(&a, &b), vec![1, 0]);
        assert!((matching_error(&a, &b) - 0.9).abs() < 1e-15);
    }

    #[test]
    fn matching_recovers_permutation() {
        let a: Vec<Complex64> = (0..9).map(|k| Complex64::from_polar(0.8, k as f64)).collect();
        let perm = [3, 7, 0, 8, 1, 5, 2, 6, 4];
        let b: Vec<Complex64> = perm.iter().map(|&k| a[k] * Complex64::new(1.0, 1e-9)).collect();
        let m = optimal_matching(&a, &b);
        for (i, &j) in m.iter().enumerate() {
            assert_eq!(perm[j], i);
        }
        assert!(matching_error(&a, &b) < 1e-8);
        assert!(optimal_matching(&[], &[]).is_empty());
    }
}
