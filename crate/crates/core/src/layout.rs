//! Deterministic 2D drawing of small graphs for the puzzle UI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::pixels::PixelImage;

/// Seed for the initial jitter; fixed so that layouts are reproducible.
pub const LAYOUT_SEED: u64 = 0x6e62_7273_6c61_796f;
/// Side of the square drawing area, in abstract units.
pub const CANVAS: f64 = 100.0;
/// Minimum distance between any two spots.
pub const MIN_SEPARATION: f64 = 8.0;

const ITERATIONS: usize = 250;
const MARGIN: f64 = 5.0;

/// Force-directed (Fruchterman-Reingold) layout inside a
/// [`CANVAS`]-sized box, started from a jittered circle. Coordinates are
/// rounded to two decimals and pairwise at least [`MIN_SEPARATION`] apart.
/// A single vertex sits at the origin.
pub fn layout(g: &Graph) -> Vec<[f64; 2]> {
    let n = g.n();
    match n {
        0 => return Vec::new(),
        1 => return vec![[0.0, 0.0]],
        _ => {}
    }

    let mut rng = ChaCha8Rng::seed_from_u64(LAYOUT_SEED);
    let centre = CANVAS / 2.0;
    let mut pos: Vec<[f64; 2]> = (0..n)
        .map(|i| {
            let angle = std::f64::consts::TAU * i as f64 / n as f64;
            [
                centre + 0.4 * CANVAS * angle.cos() + rng.random_range(-1.0..1.0),
                centre + 0.4 * CANVAS * angle.sin() + rng.random_range(-1.0..1.0),
            ]
        })
        .collect();

    let k = (CANVAS * CANVAS / n as f64).sqrt();
    let mut temperature = CANVAS / 10.0;
    let edges = g.edges();
    for _ in 0..ITERATIONS {
        let mut disp = vec![[0.0f64; 2]; n];
        for u in 0..n {
            for v in u + 1..n {
                let (dx, dy, d) = delta(pos[u], pos[v]);
                let force = k * k / d;
                let (fx, fy) = (dx / d * force, dy / d * force);
                disp[u][0] += fx;
                disp[u][1] += fy;
                disp[v][0] -= fx;
                disp[v][1] -= fy;
            }
        }
        for &(u, v) in &edges {
            let (dx, dy, d) = delta(pos[u], pos[v]);
            let force = d * d / k;
            let (fx, fy) = (dx / d * force, dy / d * force);
            disp[u][0] -= fx;
            disp[u][1] -= fy;
            disp[v][0] += fx;
            disp[v][1] += fy;
        }
        for (p, d) in pos.iter_mut().zip(&disp) {
            let len = d[0].hypot(d[1]).max(1e-9);
            let step = len.min(temperature);
            p[0] += d[0] / len * step;
            p[1] += d[1] / len * step;
        }
        temperature *= 0.98;
    }

    fit_to_canvas(&mut pos);
    separate(&mut pos);
    for p in &mut pos {
        p[0] = (p[0] * 100.0).round() / 100.0;
        p[1] = (p[1] * 100.0).round() / 100.0;
    }
    if !well_separated(&pos, MIN_SEPARATION - 0.02) {
        return circle(n);
    }
    pos
}

fn delta(a: [f64; 2], b: [f64; 2]) -> (f64, f64, f64) {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    (dx, dy, dx.hypot(dy).max(1e-6))
}

fn fit_to_canvas(pos: &mut [[f64; 2]]) {
    let (mut lo, mut hi) = ([f64::MAX; 2], [f64::MIN; 2]);
    for p in pos.iter() {
        for a in 0..2 {
            lo[a] = lo[a].min(p[a]);
            hi[a] = hi[a].max(p[a]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    if span < 1e-9 {
        return;
    }
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    for p in pos.iter_mut() {
        for a in 0..2 {
            p[a] = MARGIN + (p[a] - lo[a]) * scale;
        }
    }
}

fn separate(pos: &mut [[f64; 2]]) {
    let n = pos.len();
    for _ in 0..200 {
        let mut moved = false;
        for u in 0..n {
            for v in u + 1..n {
                let dx = pos[v][0] - pos[u][0];
                let dy = pos[v][1] - pos[u][1];
                let d = dx.hypot(dy);
                if d >= MIN_SEPARATION + 0.05 {
                    continue;
                }
                let (ux, uy) = if d < 1e-9 {
                    let angle = std::f64::consts::TAU * (u * n + v) as f64 / (n * n) as f64;
                    (angle.cos(), angle.sin())
                } else {
                    (dx / d, dy / d)
                };
                let push = (MIN_SEPARATION + 0.1 - d) / 2.0;
                pos[u][0] -= ux * push;
                pos[u][1] -= uy * push;
                pos[v][0] += ux * push;
                pos[v][1] += uy * push;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
}

fn well_separated(pos: &[[f64; 2]], min: f64) -> bool {
    (0..pos.len()).all(|u| (u + 1..pos.len()).all(|v| delta(pos[u], pos[v]).2 >= min))
}

fn circle(n: usize) -> Vec<[f64; 2]> {
    // neighbouring chords are at least twice the separation
    let radius = (MIN_SEPARATION / (std::f64::consts::PI / n as f64).sin()).max(CANVAS / 2.0 - MARGIN);
    (0..n)
        .map(|i| {
            let angle = std::f64::consts::TAU * i as f64 / n as f64;
            [
                ((radius * angle.cos()) * 100.0).round() / 100.0,
                ((radius * angle.sin()) * 100.0).round() / 100.0,
            ]
        })
        .collect()
}

/// Lattice coordinates of an image, scaled by `spacing`, with y pointing
/// down so the first row is drawn at the top.
pub fn lattice_positions(image: &PixelImage, spacing: f64) -> Vec<[f64; 2]> {
    let top = image.points().iter().map(|p| p.y).max().unwrap_or(0);
    image
        .points()
        .iter()
        .map(|p| [p.x as f64 * spacing, (top - p.y) as f64 * spacing])
        .collect()
}
