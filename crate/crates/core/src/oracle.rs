//! Brute-force raster ground truth: cell classification by winding number
//! and an exact Euclidean distance transform on the resulting mask.

use rayon::prelude::*;

use crate::curve::{JordanCurve, Location};
use crate::error::{GeomError, Result};
use crate::kernel::{Disk, Point};

pub const MAX_CELLS: u64 = 100_000_000;

/// Classification of cell centers on a regular grid.
#[derive(Clone, Debug, PartialEq)]
pub struct RasterMask {
    /// Center of cell `(0, 0)`.
    pub origin: Point,
    pub resolution: f64,
    pub width: usize,
    pub height: usize,
    /// Row-major, `height` rows of `width` cells.
    pub cells: Vec<Location>,
}

impl RasterMask {
    pub fn center(&self, i: usize, j: usize) -> Point {
        self.origin + Point::new(i as f64, j as f64) * self.resolution
    }

    pub fn at(&self, i: usize, j: usize) -> Location {
        self.cells[j * self.width + i]
    }

    pub fn interior_count(&self) -> usize {
        self.cells.iter().filter(|c| **c == Location::Interior).count()
    }

    /// Interior cells plus half of the boundary cells, times the cell area.
    pub fn area_estimate(&self) -> f64 {
        let boundary = self.cells.iter().filter(|c| **c == Location::Boundary).count();
        (self.interior_count() as f64 + 0.5 * boundary as f64) * self.resolution * self.resolution
    }
}

/// Classifies every cell center of a grid covering the curve's bounding box
/// (with a one-cell margin).
pub fn rasterize(curve: &JordanCurve, resolution: f64) -> Result<RasterMask> {
    if !(resolution > 0.0 && resolution.is_finite()) {
        return Err(GeomError::InvalidInput(format!(
            "resolution must be positive, got {resolution}"
        )));
    }
    let (lo, hi) = curve.bbox();
    let w = ((hi.x - lo.x) / resolution).ceil() + 3.0;
    let h = ((hi.y - lo.y) / resolution).ceil() + 3.0;
    let cells = w * h;
    if !cells.is_finite() || cells > MAX_CELLS as f64 {
        return Err(GeomError::GridTooLarge(if cells.is_finite() { cells as u64 } else { u64::MAX }));
    }
    let (width, height) = (w as usize, h as usize);
    let origin = lo - Point::new(resolution, resolution);
    let mut out = vec![Location::Exterior; width * height];
    out.par_chunks_mut(width).enumerate().for_each(|(j, row)| {
        for (i, cell) in row.iter_mut().enumerate() {
            let p = origin + Point::new(i as f64, j as f64) * resolution;
            *cell = curve.point_location(p);
        }
    });
    Ok(RasterMask {
        origin,
        resolution,
        width,
        height,
        cells: out,
    })
}

/// Stand-in for "no seed" that keeps the parabola arithmetic finite.
const FAR: f64 = 1e30;

/// One-dimensional squared distance transform (lower envelope of parabolas).
fn edt_1d(f: &[f64], out: &mut [f64], v: &mut [usize], z: &mut [f64]) {
    let n = f.len();
    let mut k = 0usize;
    v[0] = 0;
    z[0] = f64::NEG_INFINITY;
    z[1] = f64::INFINITY;
    let key = |q: usize| f[q] + (q * q) as f64;
    for q in 1..n {
        let mut s = (key(q) - key(v[k])) / (2.0 * (q - v[k]) as f64);
        while s <= z[k] {
            k -= 1;
            s = (key(q) - key(v[k])) / (2.0 * (q - v[k]) as f64);
        }
        k += 1;
        v[k] = q;
        z[k] = s;
        z[k + 1] = f64::INFINITY;
    }
    k = 0;
    for (q, o) in out.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as f64 - v[k] as f64;
        *o = (d * d + f[v[k]]).min(FAR);
    }
}

/// Squared distance, in cells, from every cell to the nearest non-interior cell.
pub fn distance_transform(mask: &RasterMask) -> Vec<f64> {
    let (w, h) = (mask.width, mask.height);
    let mut grid: Vec<f64> = mask
        .cells
        .iter()
        .map(|c| if *c == Location::Interior { FAR } else { 0.0 })
        .collect();
    let n = w.max(h);
    let mut buf_f = vec![0.0; n];
    let mut buf_o = vec![0.0; n];
    let mut v = vec![0usize; n];
    let mut z = vec![0.0; n + 1];
    for i in 0..w {
        for j in 0..h {
            buf_f[j] = grid[j * w + i];
        }
        edt_1d(&buf_f[..h], &mut buf_o[..h], &mut v, &mut z);
        for j in 0..h {
            grid[j * w + i] = buf_o[j];
        }
    }
    for j in 0..h {
        buf_f[..w].copy_from_slice(&grid[j * w..(j + 1) * w]);
        edt_1d(&buf_f[..w], &mut buf_o[..w], &mut v, &mut z);
        grid[j * w..(j + 1) * w].copy_from_slice(&buf_o[..w]);
    }
    grid
}

/// Approximate largest inscribed disk from the mask: the interior cell
/// farthest from any non-interior cell. The radius is accurate to within
/// two cell sizes.
pub fn grid_inscribed_disk(mask: &RasterMask) -> Result<Disk> {
    let dt = distance_transform(mask);
    let (best, d2) = dt
        .iter()
        .enumerate()
        .filter(|(k, _)| mask.cells[*k] == Location::Interior)
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(k, d)| (k, *d))
        .ok_or(GeomError::EmptyInterior)?;
    let (i, j) = (best % mask.width, best / mask.width);
    let r = (d2.sqrt() - 0.5) * mask.resolution;
    Disk::new(mask.center(i, j), r.max(0.5 * mask.resolution))
}
