//! Digital images: finite sets of lattice points and their adjacency graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The bundled 38-point test image.
pub const PAPPY: &str = include_str!("../assets/pappy.txt");

/// Pixel adjacency scheme in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdjacencyMode {
    /// Horizontal and vertical neighbours only (Manhattan distance 1).
    Four,
    /// Diagonals included (Chebyshev distance 1).
    Eight,
}

impl AdjacencyMode {
    pub fn adjacent(self, a: Point, b: Point) -> bool {
        let dx = (a.x - b.x).abs();
        let dy = (a.y - b.y).abs();
        match self {
            AdjacencyMode::Four => dx + dy == 1,
            AdjacencyMode::Eight => dx.max(dy) == 1,
        }
    }
}

impl FromStr for AdjacencyMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "4" | "four" => Ok(AdjacencyMode::Four),
            "8" | "eight" => Ok(AdjacencyMode::Eight),
            other => Err(format!(
                "unknown adjacency mode {other:?} (expected four or eight)"
            )),
        }
    }
}

impl fmt::Display for AdjacencyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdjacencyMode::Four => "four",
            AdjacencyMode::Eight => "eight",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

// Row-major from the top: y descending, then x ascending.
impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.y.cmp(&self.y).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite set of lattice points.
///
/// Points are kept in vertex order (top row first, left to right), so the
/// index of a point in [`PixelImage::points`] is its vertex id in
/// [`PixelImage::to_graph`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PixelImage {
    points: Vec<Point>,
}

impl PixelImage {
    /// Builds an image from points; duplicates collapse.
    pub fn new(points: impl IntoIterator<Item = Point>) -> Self {
        let set: BTreeSet<Point> = points.into_iter().collect();
        PixelImage {
            points: set.into_iter().collect(),
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The adjacency graph of the image under `mode`.
    pub fn to_graph(&self, mode: AdjacencyMode) -> Graph {
        let mut g = Graph::empty(self.points.len());
        for (i, &a) in self.points.iter().enumerate() {
            for (j, &b) in self.points.iter().enumerate().skip(i + 1) {
                // sorted by row, so nothing further than one row down can touch
                if a.y - b.y > 1 {
                    break;
                }
                if mode.adjacent(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Parses the plain-text format: one `x y` pair per line, `#` starts a
    /// comment, blank lines are ignored. Repeated points are an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::Pixels {
                line: idx + 1,
                reason,
            };
            let mut fields = line.split_whitespace();
            let mut coord = |name: &str| -> Result<i64> {
                let field = fields
                    .next()
                    .ok_or_else(|| err(format!("missing {name} coordinate")))?;
                field
                    .parse()
                    .map_err(|_| err(format!("{name} coordinate {field:?} is not an integer")))
            };
            let p = Point::new(coord("x")?, coord("y")?);
            if fields.next().is_some() {
                return Err(err("expected exactly two integers".into()));
            }
            if !seen.insert(p) {
                return Err(err(format!("duplicate point ({}, {})", p.x, p.y)));
            }
        }
        Ok(PixelImage {
            points: seen.into_iter().collect(),
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        PixelImage::parse(&text)
    }

    pub fn pappy() -> Self {
        PixelImage::parse(PAPPY).expect("bundled image parses")
    }
}

/// Graph of `image` under `mode`; vertex `i` is `image.points()[i]`.
pub fn from_pixels(image: &PixelImage, mode: AdjacencyMode) -> Graph {
    image.to_graph(mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(points: &[(i64, i64)]) -> PixelImage {
        PixelImage::new(points.iter().map(|&(x, y)| Point::new(x, y)))
    }

    #[test]
    fn unit_offsets() {
        let horiz = img(&[(0, 0), (1, 0)]);
        assert_eq!(horiz.to_graph(AdjacencyMode::Four).edge_count(), 1);
        assert_eq!(horiz.to_graph(AdjacencyMode::Eight).edge_count(), 1);

        let diag = img(&[(0, 0), (1, 1)]);
        assert_eq!(diag.to_graph(AdjacencyMode::Four).edge_count(), 0);
        assert_eq!(diag.to_graph(AdjacencyMode::Eight).edge_count(), 1);
    }

    #[test]
    fn vertex_order_is_row_major_from_top() {
        let image = img(&[(1, 0), (0, 0), (5, 3), (0, 3)]);
        assert_eq!(
            image.points(),
            &[
                Point::new(0, 3),
                Point::new(5, 3),
                Point::new(0, 0),
                Point::new(1, 0)
            ]
        );
    }

    #[test]
    fn empty_image() {
        let g = PixelImage::default().to_graph(AdjacencyMode::Eight);
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = PixelImage::parse("0 0\n# c\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Pixels { line: 3, .. }), "{e}");
        let e = PixelImage::parse("0 0\n0 0 # again\n").unwrap_err();
        assert!(matches!(e, Error::Pixels { line: 2, .. }), "{e}");
        let e = PixelImage::parse("1 2 3").unwrap_err();
        assert!(matches!(e, Error::Pixels { line: 1, .. }), "{e}");
    }

    #[test]
    fn pappy_has_38_points() {
        assert_eq!(PixelImage::pappy().len(), 38);
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("8".parse::<AdjacencyMode>().unwrap(), AdjacencyMode::Eight);
        assert_eq!("FOUR".parse::<AdjacencyMode>().unwrap(), AdjacencyMode::Four);
        assert!("six".parse::<AdjacencyMode>().is_err());
    }
}
