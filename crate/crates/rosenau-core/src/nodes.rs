//! Node set generation and classification for intervals, squares, and the
//! starfish domain.
//!
//! A [`NodeSet`] is a classified point cloud: interior points, boundary points
//! with outward unit normals, and fictitious points placed strictly outside
//! the closed domain. Unknown ordering everywhere in the crate is
//! (interior, boundary, fictitious), exposed through the index maps.
//!
//! Auxiliary points are PDE collocation points for the resampling method and
//! live in their own [`AuxiliarySet`]: a square resampled system with `N`
//! unknowns and `N_b` boundary points needs exactly `N - 2 N_b` of them
//! (`N - 4` on an interval).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A point in at most two dimensions; 1D sets keep `y = 0`.
pub type Point = [f64; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeClass {
    Interior,
    Boundary,
    Fictitious,
}

/// Classified point cloud with boundary normals and class index maps.
#[derive(Clone, Debug)]
pub struct NodeSet {
    dim: usize,
    points: Vec<Point>,
    classes: Vec<NodeClass>,
    normals: Vec<Option<Point>>,
    idx_interior: Vec<usize>,
    idx_boundary: Vec<usize>,
    idx_fictitious: Vec<usize>,
}

impl NodeSet {
    /// Validate and build a node set. Points must be pairwise distinct,
    /// classes partition the set, and every boundary point carries an outward
    /// unit normal (`||n|| = 1` within 1e-12).
    pub fn new(
        dim: usize,
        points: Vec<Point>,
        classes: Vec<NodeClass>,
        normals: Vec<Option<Point>>,
    ) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(Error::InvalidArgument("dimension must be 1 or 2"));
        }
        if points.is_empty() || classes.len() != points.len() || normals.len() != points.len() {
            return Err(Error::InvalidArgument("points, classes and normals must have equal nonzero length"));
        }
        let mut extent = 0.0f64;
        for p in &points {
            extent = extent.max(libm::fabs(p[0])).max(libm::fabs(p[1]));
            if dim == 1 && p[1] != 0.0 {
                return Err(Error::InvalidArgument("1D node sets must have zero y coordinates"));
            }
        }
        let tol = 1e-12 * extent.max(1.0);
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if dist(points[i], points[j]) <= tol {
                    return Err(Error::InvalidArgument("node points must be pairwise distinct"));
                }
            }
        }
        let mut idx_interior = Vec::new();
        let mut idx_boundary = Vec::new();
        let mut idx_fictitious = Vec::new();
        for (i, class) in classes.iter().enumerate() {
            match class {
                NodeClass::Interior => idx_interior.push(i),
                NodeClass::Boundary => idx_boundary.push(i),
                NodeClass::Fictitious => idx_fictitious.push(i),
            }
            let is_boundary = *class == NodeClass::Boundary;
            match (&normals[i], is_boundary) {
                (Some(n), true) => {
                    let len = libm::hypot(n[0], n[1]);
                    if libm::fabs(len - 1.0) > 1e-12 {
                        return Err(Error::InvalidArgument("boundary normals must have unit length"));
                    }
                }
                (None, true) => {
                    return Err(Error::InvalidArgument("every boundary point needs a normal"));
                }
                (Some(_), false) => {
                    return Err(Error::InvalidArgument("only boundary points carry normals"));
                }
                (None, false) => {}
            }
        }
        Ok(NodeSet { dim, points, classes, normals, idx_interior, idx_boundary, idx_fictitious })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn class(&self, i: usize) -> NodeClass {
        self.classes[i]
    }

    pub fn normal(&self, i: usize) -> Option<Point> {
        self.normals[i]
    }

    pub fn interior_indices(&self) -> &[usize] {
        &self.idx_interior
    }

    pub fn boundary_indices(&self) -> &[usize] {
        &self.idx_boundary
    }

    pub fn fictitious_indices(&self) -> &[usize] {
        &self.idx_fictitious
    }

    /// (interior, boundary, fictitious) counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.idx_interior.len(), self.idx_boundary.len(), self.idx_fictitious.len())
    }

    /// Points of one class, in index-map order.
    pub fn class_points(&self, class: NodeClass) -> Vec<Point> {
        let idx = match class {
            NodeClass::Interior => &self.idx_interior,
            NodeClass::Boundary => &self.idx_boundary,
            NodeClass::Fictitious => &self.idx_fictitious,
        };
        idx.iter().map(|&i| self.points[i]).collect()
    }

    /// Outward unit normals of the boundary points, in index-map order.
    pub fn boundary_normals(&self) -> Vec<Point> {
        self.idx_boundary.iter().map(|&i| self.normals[i].expect("validated")).collect()
    }

    /// The same set with fictitious points dropped (resampling methods use
    /// plain interior + boundary centres).
    pub fn without_fictitious(&self) -> NodeSet {
        let keep: Vec<usize> =
            (0..self.len()).filter(|&i| self.classes[i] != NodeClass::Fictitious).collect();
        NodeSet::new(
            self.dim,
            keep.iter().map(|&i| self.points[i]).collect(),
            keep.iter().map(|&i| self.classes[i]).collect(),
            keep.iter().map(|&i| self.normals[i]).collect(),
        )
        .expect("subset of a valid node set is valid")
    }

    pub fn min_pairwise_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                best = best.min(dist(self.points[i], self.points[j]));
            }
        }
        best
    }
}

/// Auxiliary PDE collocation points for the resampling method, all strictly
/// inside the domain.
#[derive(Clone, Debug)]
pub struct AuxiliarySet {
    dim: usize,
    points: Vec<Point>,
}

impl AuxiliarySet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

#[inline]
pub(crate) fn dist(a: Point, b: Point) -> f64 {
    libm::hypot(a[0] - b[0], a[1] - b[1])
}

/// Uniform 1D nodes for the fictitious point method: `n` equispaced points
/// remapped so the 2nd and (n-1)th land exactly on `-l` and `l`, leaving the
/// first and last as exterior fictitious points.
pub fn uniform1d_fictitious(n: usize, l: f64) -> Result<NodeSet> {
    if n < 5 {
        return Err(Error::InvalidArgument("fictitious 1D grid needs at least 5 points"));
    }
    if !(l > 0.0) {
        return Err(Error::InvalidArgument("half-length must be positive"));
    }
    let denom = (n - 3) as f64;
    let mut points = Vec::with_capacity(n);
    let mut classes = Vec::with_capacity(n);
    let mut normals = Vec::with_capacity(n);
    for i in 0..n {
        let t = (i as f64 - 1.0) / denom;
        points.push([l * (2.0 * t - 1.0), 0.0]);
        if i == 0 || i == n - 1 {
            classes.push(NodeClass::Fictitious);
            normals.push(None);
        } else if i == 1 || i == n - 2 {
            classes.push(NodeClass::Boundary);
            normals.push(Some([if i == 1 { -1.0 } else { 1.0 }, 0.0]));
        } else {
            classes.push(NodeClass::Interior);
            normals.push(None);
        }
    }
    NodeSet::new(1, points, classes, normals)
}

/// Plain uniform 1D nodes on `[-l, l]` (no fictitious points), for the
/// resampling method.
pub fn uniform1d(n: usize, l: f64) -> Result<NodeSet> {
    if n < 4 {
        return Err(Error::InvalidArgument("1D grid needs at least 4 points"));
    }
    if !(l > 0.0) {
        return Err(Error::InvalidArgument("half-length must be positive"));
    }
    let denom = (n - 1) as f64;
    let mut points = Vec::with_capacity(n);
    let mut classes = Vec::with_capacity(n);
    let mut normals = Vec::with_capacity(n);
    for i in 0..n {
        let t = i as f64 / denom;
        points.push([l * (2.0 * t - 1.0), 0.0]);
        if i == 0 || i == n - 1 {
            classes.push(NodeClass::Boundary);
            normals.push(Some([if i == 0 { -1.0 } else { 1.0 }, 0.0]));
        } else {
            classes.push(NodeClass::Interior);
            normals.push(None);
        }
    }
    NodeSet::new(1, points, classes, normals)
}

/// Auxiliary interior points for 1D resampling: the first `n - 4` points of a
/// uniform `(n-3)`-point grid on `[-l, l]`, shifted inward by half a spacing.
pub fn auxiliary1d(n: usize, l: f64) -> Result<AuxiliarySet> {
    if n < 6 {
        return Err(Error::InvalidArgument("1D resampling needs at least 6 nodes"));
    }
    if !(l > 0.0) {
        return Err(Error::InvalidArgument("half-length must be positive"));
    }
    let m = n - 4;
    let denom = (n - 4) as f64;
    let spacing = 2.0 * l / denom;
    let points = (0..m)
        .map(|j| {
            let t = j as f64 / denom;
            [l * (2.0 * t - 1.0) + 0.5 * spacing, 0.0]
        })
        .collect();
    Ok(AuxiliarySet { dim: 1, points })
}

/// Uniform tensor grid on `[-l, l]^2` with `n` points per side, plus one
/// fictitious partner outside the domain per boundary point, at distance
/// `fictitious_offset` along the outward normal. Corner normals are the unit
/// diagonals.
pub fn square_grid(n: usize, l: f64, fictitious_offset: f64) -> Result<NodeSet> {
    if n < 4 {
        return Err(Error::InvalidArgument("square grid needs at least 4 points per side"));
    }
    if !(l > 0.0) || !(fictitious_offset > 0.0) {
        return Err(Error::InvalidArgument("half-length and fictitious offset must be positive"));
    }
    let denom = (n - 1) as f64;
    let coord = |i: usize| l * (2.0 * (i as f64 / denom) - 1.0);
    let mut points = Vec::new();
    let mut classes = Vec::new();
    let mut normals = Vec::new();
    let mut boundary = Vec::new();
    for iy in 0..n {
        for ix in 0..n {
            let p = [coord(ix), coord(iy)];
            let on_x = ix == 0 || ix == n - 1;
            let on_y = iy == 0 || iy == n - 1;
            if on_x || on_y {
                let mut nx = if ix == 0 { -1.0 } else if ix == n - 1 { 1.0 } else { 0.0 };
                let mut ny = if iy == 0 { -1.0 } else if iy == n - 1 { 1.0 } else { 0.0 };
                if on_x && on_y {
                    let s = 1.0 / libm::sqrt(2.0);
                    nx *= s;
                    ny *= s;
                }
                points.push(p);
                classes.push(NodeClass::Boundary);
                normals.push(Some([nx, ny]));
                boundary.push((p, [nx, ny]));
            } else {
                points.push(p);
                classes.push(NodeClass::Interior);
                normals.push(None);
            }
        }
    }
    for (p, nrm) in boundary {
        points.push([p[0] + fictitious_offset * nrm[0], p[1] + fictitious_offset * nrm[1]]);
        classes.push(NodeClass::Fictitious);
        normals.push(None);
    }
    NodeSet::new(2, points, classes, normals)
}

/// Auxiliary points for square-domain resampling: exactly `n^2 - 8n + 8`
/// points (`N - 2 N_b` for the grid of [`square_grid`]), farthest-point
/// thinned from a twice-refined interior candidate grid.
pub fn square_auxiliary(n: usize, l: f64) -> Result<AuxiliarySet> {
    if n < 4 || !(l > 0.0) {
        return Err(Error::InvalidArgument("square auxiliary set needs n >= 4 and positive half-length"));
    }
    let total = n * n;
    let nb = 4 * n - 4;
    if total < 2 * nb {
        return Err(Error::InvalidArgument("resampling underdetermined: fewer unknowns than boundary conditions"));
    }
    let count = total - 2 * nb;
    let fine = 2 * n - 3;
    let denom = (2 * n - 2) as f64;
    let mut candidates = Vec::with_capacity(fine * fine);
    for iy in 1..=fine {
        for ix in 1..=fine {
            candidates.push([
                l * (2.0 * (ix as f64 / denom) - 1.0),
                l * (2.0 * (iy as f64 / denom) - 1.0),
            ]);
        }
    }
    Ok(AuxiliarySet { dim: 2, points: farthest_point_thin(&candidates, count) })
}

/// Boundary radius of the starfish domain, `r(theta) = 1 + 0.07 (sin 6t + sin 3t)`.
pub fn starfish_radius(theta: f64) -> f64 {
    1.0 + 0.07 * (libm::sin(6.0 * theta) + libm::sin(3.0 * theta))
}

/// `dr/dtheta` for the starfish boundary.
pub fn starfish_radius_deriv(theta: f64) -> f64 {
    0.07 * (6.0 * libm::cos(6.0 * theta) + 3.0 * libm::cos(3.0 * theta))
}

/// Boundary points of the starfish domain at uniformly spaced parameter
/// values, with outward unit normals.
pub fn starfish_boundary(n_b: usize) -> Result<Vec<(Point, Point)>> {
    if n_b < 8 {
        return Err(Error::InvalidArgument("starfish boundary needs at least 8 points"));
    }
    let mut out = Vec::with_capacity(n_b);
    for k in 0..n_b {
        let theta = 2.0 * core::f64::consts::PI * k as f64 / n_b as f64;
        let (s, c) = (libm::sin(theta), libm::cos(theta));
        let r = starfish_radius(theta);
        let rp = starfish_radius_deriv(theta);
        let den = libm::sqrt(rp * rp + r * r);
        out.push(([r * c, r * s], [(rp * s + r * c) / den, (-rp * c + r * s) / den]));
    }
    Ok(out)
}

/// Interior points of the starfish domain: rings of parameter-equispaced
/// points at radii scaled to the local boundary radius. Ring `m` of `M` sits
/// at radial fraction `m / (M + 1)` and receives a share of points
/// proportional to `m`, so e.g. a target of 253 yields exactly the rings
/// 1..22 with `m` points each.
pub fn starfish_interior(target: usize) -> Result<Vec<Point>> {
    if target == 0 {
        return Err(Error::InvalidArgument("interior point count must be positive"));
    }
    // Largest M with M(M+1)/2 <= target.
    let mut rings = 1usize;
    while (rings + 1) * (rings + 2) / 2 <= target {
        rings += 1;
    }
    let t_m = rings * (rings + 1) / 2;
    let mut counts = vec![0usize; rings + 1];
    let mut fracs: Vec<(f64, usize)> = Vec::new();
    let mut assigned = 0;
    for m in 1..=rings {
        let quota = target as f64 * m as f64 / t_m as f64;
        let base = quota as usize;
        counts[m] = base;
        assigned += base;
        fracs.push((quota - base as f64, m));
    }
    // Hamilton apportionment of the remainder: largest fractional parts win,
    // outer rings break ties.
    fracs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(b.1.cmp(&a.1)));
    for (_, m) in fracs.iter().take(target - assigned) {
        counts[*m] += 1;
    }
    let mut out = Vec::with_capacity(target);
    for m in 1..=rings {
        let rho = m as f64 / (rings + 1) as f64;
        let stagger = 0.5 * ((m % 2) as f64);
        for k in 0..counts[m] {
            let theta = 2.0 * core::f64::consts::PI * (k as f64 + stagger) / counts[m] as f64;
            let r = rho * starfish_radius(theta);
            out.push([r * libm::cos(theta), r * libm::sin(theta)]);
        }
    }
    Ok(out)
}

/// Fictitious partners for starfish boundary points, displaced along the
/// outward normals and verified to lie strictly outside the domain.
pub fn starfish_fictitious(boundary: &[(Point, Point)], offset: f64) -> Result<Vec<Point>> {
    if !(offset > 0.0) {
        return Err(Error::InvalidArgument("fictitious offset must be positive"));
    }
    let mut out = Vec::with_capacity(boundary.len());
    for (p, nrm) in boundary {
        let q = [p[0] + offset * nrm[0], p[1] + offset * nrm[1]];
        let theta = libm::atan2(q[1], q[0]);
        if libm::hypot(q[0], q[1]) <= starfish_radius(theta) {
            return Err(Error::InvalidArgument("fictitious offset places a point inside the starfish domain"));
        }
        out.push(q);
    }
    Ok(out)
}

/// Auxiliary points for starfish resampling: exactly `n_total - 2 n_b` points
/// for a square DAE with `n_total` unknowns, farthest-point thinned from a
/// finer radially uniform candidate cloud.
pub fn starfish_auxiliary(n_total: usize, n_b: usize) -> Result<AuxiliarySet> {
    if n_total < 2 * n_b {
        return Err(Error::InvalidArgument("resampling underdetermined: fewer unknowns than boundary conditions"));
    }
    let count = n_total - 2 * n_b;
    if count == 0 {
        return Ok(AuxiliarySet { dim: 2, points: Vec::new() });
    }
    let candidates = starfish_interior((4 * count).max(32))?;
    Ok(AuxiliarySet { dim: 2, points: farthest_point_thin(&candidates, count) })
}

/// Mean spacing between consecutive boundary points; the default fictitious
/// offset for the starfish domain.
pub fn mean_boundary_spacing(boundary: &[(Point, Point)]) -> f64 {
    if boundary.len() < 2 {
        return 0.0;
    }
    let n = boundary.len();
    let mut acc = 0.0;
    for k in 0..n {
        acc += dist(boundary[k].0, boundary[(k + 1) % n].0);
    }
    acc / n as f64
}

/// Assemble a complete starfish node set. `offset = None` uses the mean
/// boundary spacing; `with_fictitious = false` builds the resampling variant.
pub fn starfish_nodeset(
    target_interior: usize,
    n_b: usize,
    with_fictitious: bool,
    offset: Option<f64>,
) -> Result<NodeSet> {
    let boundary = starfish_boundary(n_b)?;
    let interior = starfish_interior(target_interior)?;
    let mut points = Vec::new();
    let mut classes = Vec::new();
    let mut normals = Vec::new();
    for p in &interior {
        points.push(*p);
        classes.push(NodeClass::Interior);
        normals.push(None);
    }
    for (p, nrm) in &boundary {
        points.push(*p);
        classes.push(NodeClass::Boundary);
        normals.push(Some(*nrm));
    }
    if with_fictitious {
        let off = offset.unwrap_or_else(|| mean_boundary_spacing(&boundary));
        for p in starfish_fictitious(&boundary, off)? {
            points.push(p);
            classes.push(NodeClass::Fictitious);
            normals.push(None);
        }
    }
    NodeSet::new(2, points, classes, normals)
}

/// Fill distance: the largest distance from any probe point to its nearest
/// interior or boundary node.
pub fn fill_distance(nodes: &NodeSet, probe: &[Point]) -> f64 {
    assert!(!probe.is_empty(), "fill distance needs a nonempty probe set");
    let active: Vec<Point> = nodes
        .points()
        .iter()
        .zip(0..nodes.len())
        .filter(|(_, i)| nodes.class(*i) != NodeClass::Fictitious)
        .map(|(p, _)| *p)
        .collect();
    assert!(!active.is_empty(), "fill distance needs interior or boundary nodes");
    let mut h = 0.0f64;
    for q in probe {
        let mut best = f64::INFINITY;
        for p in &active {
            best = best.min(dist(*q, *p));
        }
        h = h.max(best);
    }
    h
}

/// Deterministic greedy farthest-point thinning to an exact count. Seeds at
/// the candidate nearest the centroid, then repeatedly takes the candidate
/// farthest from the selected set (ties resolved by index).
fn farthest_point_thin(candidates: &[Point], count: usize) -> Vec<Point> {
    if count >= candidates.len() {
        return candidates.to_vec();
    }
    if count == 0 {
        return Vec::new();
    }
    let n = candidates.len();
    let cx = candidates.iter().map(|p| p[0]).sum::<f64>() / n as f64;
    let cy = candidates.iter().map(|p| p[1]).sum::<f64>() / n as f64;
    let mut seed = 0;
    let mut best = f64::INFINITY;
    for (i, p) in candidates.iter().enumerate() {
        let d = dist(*p, [cx, cy]);
        if d < best {
            best = d;
            seed = i;
        }
    }
    let mut selected = Vec::with_capacity(count);
    selected.push(candidates[seed]);
    let mut min_dist: Vec<f64> = candidates.iter().map(|p| dist(*p, candidates[seed])).collect();
    while selected.len() < count {
        let mut next = 0;
        let mut far = -1.0;
        for (i, d) in min_dist.iter().enumerate() {
            if *d > far {
                far = *d;
                next = i;
            }
        }
        selected.push(candidates[next]);
        for (i, d) in min_dist.iter_mut().enumerate() {
            *d = d.min(dist(candidates[i], candidates[next]));
        }
    }
    selected
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn uniform1d_fictitious_five_points() {
        let ns = uniform1d_fictitious(5, 1.0).unwrap();
        let xs: Vec<f64> = ns.points().iter().map(|p| p[0]).collect();
        assert_eq!(xs, vec![-2.0, -1.0, 0.0, 1.0, 2.0]);
        assert_eq!(ns.class(0), NodeClass::Fictitious);
        assert_eq!(ns.class(1), NodeClass::Boundary);
        assert_eq!(ns.class(2), NodeClass::Interior);
        assert_eq!(ns.class(4), NodeClass::Fictitious);
        assert_eq!(ns.counts(), (1, 2, 2));
    }

    #[test]
    fn uniform1d_fictitious_boundary_exact() {
        let ns = uniform1d_fictitious(7, 1.0).unwrap();
        let b = ns.class_points(NodeClass::Boundary);
        assert_eq!(b[0][0], -1.0);
        assert_eq!(b[1][0], 1.0);
        // fictitious symmetric about 0
        let f = ns.class_points(NodeClass::Fictitious);
        assert!((f[0][0] + f[1][0]).abs() < 1e-12);
    }

    #[test]
    fn uniform1d_fictitious_uniform_spacing() {
        for (n, l) in [(9usize, 1.0), (30, 1.0), (100, 10.0)] {
            let ns = uniform1d_fictitious(n, l).unwrap();
            let xs: Vec<f64> = ns.points().iter().map(|p| p[0]).collect();
            let diffs: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
            let mn = diffs.iter().cloned().fold(f64::INFINITY, f64::min);
            let mx = diffs.iter().cloned().fold(0.0f64, f64::max);
            assert!(mx - mn < 1e-12, "n={n} l={l}: {mn} .. {mx}");
        }
        assert!(uniform1d_fictitious(4, 1.0).is_err());
    }

    #[test]
    fn auxiliary1d_hand_checked() {
        let aux = auxiliary1d(7, 1.0).unwrap();
        let xs: Vec<f64> = aux.points().iter().map(|p| p[0]).collect();
        assert_eq!(xs.len(), 3);
        assert!((xs[0] + 2.0 / 3.0).abs() < 1e-15);
        assert!(xs[1].abs() < 1e-15);
        assert!((xs[2] - 2.0 / 3.0).abs() < 1e-15);

        let aux = auxiliary1d(6, 1.0).unwrap();
        let xs: Vec<f64> = aux.points().iter().map(|p| p[0]).collect();
        assert_eq!(xs.len(), 2);
        assert!((xs[0] + xs[1]).abs() < 1e-15);

        assert!(auxiliary1d(5, 1.0).is_err());
    }

    #[test]
    fn auxiliary1d_strictly_inside() {
        for n in 6..40 {
            let aux = auxiliary1d(n, 2.5).unwrap();
            assert_eq!(aux.len(), n - 4);
            for p in aux.points() {
                assert!(p[0] > -2.5 && p[0] < 2.5);
            }
        }
    }

    #[test]
    fn square_grid_counts_and_partners() {
        let ns = square_grid(5, 1.0, 0.25).unwrap();
        let (nd, nb, nf) = ns.counts();
        assert_eq!((nd, nb, nf), (9, 16, 16));
        assert_eq!(ns.len(), 41);

        // boundary point (l, 0) has fictitious partner (l + offset, 0)
        let b = ns.class_points(NodeClass::Boundary);
        let f = ns.class_points(NodeClass::Fictitious);
        let i = b.iter().position(|p| p[0] == 1.0 && p[1] == 0.0).unwrap();
        assert_eq!(f[i], [1.25, 0.0]);

        // corner (l, l) offsets along the unit diagonal
        let i = b.iter().position(|p| p[0] == 1.0 && p[1] == 1.0).unwrap();
        let s = 0.25 / libm::sqrt(2.0);
        assert!((f[i][0] - (1.0 + s)).abs() < 1e-15);
        assert!((f[i][1] - (1.0 + s)).abs() < 1e-15);

        assert!(square_grid(3, 1.0, 0.1).is_err());
    }

    #[test]
    fn square_auxiliary_count_and_interiority() {
        for n in [9usize, 10, 14] {
            let aux = square_auxiliary(n, 2.0).unwrap();
            assert_eq!(aux.len(), n * n - 8 * n + 8);
            for p in aux.points() {
                assert!(p[0].abs() < 2.0 && p[1].abs() < 2.0);
            }
        }
        assert!(square_auxiliary(5, 1.0).is_err());
    }

    #[test]
    fn starfish_boundary_normals() {
        let b = starfish_boundary(8).unwrap();
        // theta = 0: point (1, 0), frozen normal from the closed form with r = 1, r' = 0.63.
        assert!((b[0].0[0] - 1.0).abs() < 1e-15);
        assert!(b[0].0[1].abs() < 1e-15);
        assert!((b[0].1[0] - 0.846091518038926866).abs() < 1e-14);
        assert!((b[0].1[1] - (-0.533037656364523926)).abs() < 1e-14);
        // theta = pi/2: point (0, 0.93), r' = -0.42.
        assert!((b[2].0[1] - 0.93).abs() < 1e-15);
        assert!((b[2].1[0] - (-0.411586722426498327)).abs() < 1e-14);
        assert!((b[2].1[1] - 0.911370599658674868).abs() < 1e-14);
        for (_, n) in &b {
            assert!((libm::hypot(n[0], n[1]) - 1.0).abs() < 1e-12);
        }
        assert!(starfish_boundary(7).is_err());
    }

    #[test]
    fn starfish_periodicity() {
        for k in 0..10 {
            let theta = 0.63 * k as f64;
            let tau = theta + 2.0 * core::f64::consts::PI;
            assert!((starfish_radius(theta) - starfish_radius(tau)).abs() < 1e-12);
            assert!((starfish_radius_deriv(theta) - starfish_radius_deriv(tau)).abs() < 1e-12);
        }
    }

    #[test]
    fn starfish_interior_exact_counts() {
        let pts = starfish_interior(253).unwrap();
        assert_eq!(pts.len(), 253);
        for p in &pts {
            let theta = libm::atan2(p[1], p[0]);
            assert!(libm::hypot(p[0], p[1]) < starfish_radius(theta));
        }
        for target in [1usize, 10, 141, 465, 600] {
            assert_eq!(starfish_interior(target).unwrap().len(), target);
        }
    }

    #[test]
    fn starfish_fictitious_outside() {
        let b = starfish_boundary(56).unwrap();
        let f = starfish_fictitious(&b, mean_boundary_spacing(&b)).unwrap();
        assert_eq!(f.len(), 56);
        for p in &f {
            let theta = libm::atan2(p[1], p[0]);
            assert!(libm::hypot(p[0], p[1]) > starfish_radius(theta));
        }
    }

    #[test]
    fn starfish_auxiliary_counts() {
        // 253 unknowns with 56 boundary points leave 141 PDE collocation rows.
        let aux = starfish_auxiliary(253, 56).unwrap();
        assert_eq!(aux.len(), 141);
        for p in aux.points() {
            let theta = libm::atan2(p[1], p[0]);
            assert!(libm::hypot(p[0], p[1]) < starfish_radius(theta));
        }
        assert!(starfish_auxiliary(100, 56).is_err());
    }

    #[test]
    fn starfish_nodeset_assembly() {
        let ns = starfish_nodeset(253, 56, true, None).unwrap();
        assert_eq!(ns.counts(), (253, 56, 56));
        assert!(ns.min_pairwise_distance() > 1e-10);
        let ns = starfish_nodeset(253, 56, false, None).unwrap();
        assert_eq!(ns.counts(), (253, 56, 0));
    }

    #[test]
    fn fill_distance_1d_uniform() {
        let ns = uniform1d(11, 1.0).unwrap();
        let probe: Vec<Point> = (0..2001).map(|i| [-1.0 + i as f64 * 0.001, 0.0]).collect();
        let h = fill_distance(&ns, &probe);
        assert!((h - 0.1).abs() < 2e-3, "h = {h}");
    }

    #[test]
    fn fill_distance_single_node() {
        let ns = NodeSet::new(1, vec![[0.3, 0.0]], vec![NodeClass::Interior], vec![None]).unwrap();
        assert_eq!(fill_distance(&ns, &[[0.3, 0.0]]), 0.0);
    }

    #[test]
    fn fill_distance_2d_grid() {
        let ns = square_grid(5, 1.0, 0.5).unwrap().without_fictitious();
        let mut probe = Vec::new();
        for iy in 0..=200 {
            for ix in 0..=200 {
                probe.push([-1.0 + ix as f64 * 0.01, -1.0 + iy as f64 * 0.01]);
            }
        }
        let h = fill_distance(&ns, &probe);
        let expected = 0.5 * libm::sqrt(2.0) / 2.0;
        assert!((h - expected).abs() < 0.02, "h = {h}, expected {expected}");
    }

    #[test]
    fn duplicate_points_rejected() {
        let r = NodeSet::new(
            1,
            vec![[0.0, 0.0], [0.0, 0.0]],
            vec![NodeClass::Interior, NodeClass::Interior],
            vec![None, None],
        );
        assert!(r.is_err());
    }

    proptest! {
        #[test]
        fn generated_1d_sets_are_distinct(n in 5usize..60, l in 0.5f64..20.0) {
            let ns = uniform1d_fictitious(n, l).unwrap();
            prop_assert!(ns.min_pairwise_distance() > 1e-10 * l);
            let (nd, nb, nf) = ns.counts();
            prop_assert_eq!(nd + nb + nf, n);
            prop_assert_eq!(nb, 2);
            prop_assert_eq!(nf, 2);
        }

        #[test]
        fn generated_square_sets_are_distinct(n in 4usize..12, l in 0.5f64..4.0) {
            let ns = square_grid(n, l, 2.0 * l / (n as f64 - 1.0)).unwrap();
            prop_assert!(ns.min_pairwise_distance() > 1e-10 * l);
            let (nd, nb, nf) = ns.counts();
            prop_assert_eq!(nd, (n - 2) * (n - 2));
            prop_assert_eq!(nb, 4 * n - 4);
            prop_assert_eq!(nf, nb);
        }
    }
}
