//! Drawn reference data for the 38-point test image.
//!
//! Pixel `(x, y)` carries the id `10 * (8 - y) + x`.

#![allow(dead_code)]

pub fn pixel_id(x: i64, y: i64) -> u32 {
    (10 * (8 - y) + x) as u32
}

/// Edges of the image under 4-adjacency.
pub const FOUR_EDGES: &[(u32, u32)] = &[
    (12, 13),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (19, 9),
    (20, 21),
    (21, 22),
    (22, 12),
    (24, 25),
    (24, 14),
    (25, 15),
    (27, 28),
    (27, 17),
    (28, 29),
    (29, 19),
    (30, 20),
    (32, 33),
    (32, 22),
    (33, 34),
    (34, 35),
    (34, 24),
    (35, 36),
    (35, 25),
    (36, 37),
    (37, 27),
    (40, 30),
    (42, 32),
    (47, 37),
    (52, 53),
    (52, 42),
    (56, 57),
    (57, 47),
    (63, 64),
    (63, 53),
    (64, 65),
    (65, 66),
    (66, 56),
    (82, 72),
    (87, 77),
];

/// Edges of the image under 8-adjacency.
pub const EIGHT_EDGES: &[(u32, u32)] = &[
    (12, 13),
    (13, 14),
    (13, 24),
    (14, 15),
    (14, 25),
    (15, 16),
    (16, 17),
    (16, 27),
    (17, 28),
    (19, 9),
    (20, 21),
    (21, 22),
    (21, 12),
    (21, 32),
    (22, 12),
    (22, 13),
    (22, 33),
    (24, 25),
    (24, 14),
    (24, 15),
    (24, 35),
    (25, 15),
    (25, 16),
    (25, 36),
    (27, 28),
    (27, 17),
    (28, 29),
    (28, 19),
    (29, 19),
    (30, 20),
    (30, 21),
    (32, 33),
    (32, 22),
    (33, 34),
    (33, 24),
    (34, 35),
    (34, 24),
    (34, 25),
    (35, 36),
    (35, 25),
    (36, 37),
    (36, 27),
    (36, 47),
    (37, 27),
    (37, 28),
    (40, 30),
    (42, 32),
    (42, 33),
    (42, 53),
    (47, 37),
    (52, 53),
    (52, 42),
    (52, 63),
    (53, 64),
    (56, 57),
    (56, 47),
    (57, 47),
    (63, 64),
    (63, 53),
    (64, 65),
    (65, 66),
    (65, 56),
    (66, 56),
    (66, 57),
    (66, 77),
    (72, 63),
    (82, 72),
    (87, 77),
];

/// Pixels and edges left after fully reducing the 4-adjacency graph.
pub const FOUR_REDUCED_PIXELS: &[u32] = &[
    12, 13, 14, 15, 16, 17, 22, 24, 25, 27, 32, 33, 34, 35, 36, 37, 42, 47, 52, 53, 56, 57, 63, 64, 65, 66,
    82, 87,
];
pub const FOUR_REDUCED_EDGES: &[(u32, u32)] = &[
    (12, 13),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (22, 12),
    (24, 25),
    (24, 14),
    (25, 15),
    (27, 17),
    (32, 33),
    (32, 22),
    (33, 34),
    (34, 35),
    (34, 24),
    (35, 36),
    (35, 25),
    (36, 37),
    (37, 27),
    (42, 32),
    (47, 37),
    (52, 53),
    (52, 42),
    (56, 57),
    (57, 47),
    (63, 64),
    (63, 53),
    (64, 65),
    (65, 66),
    (66, 56),
];

/// Pixels left after fully reducing the 8-adjacency graph (a 10-cycle).
pub const EIGHT_REDUCED_PIXELS: &[u32] = &[24, 25, 33, 36, 42, 47, 53, 56, 64, 65];
pub const EIGHT_REDUCED_EDGES: &[(u32, u32)] = &[
    (24, 25),
    (25, 36),
    (33, 24),
    (36, 47),
    (42, 33),
    (42, 53),
    (53, 64),
    (56, 47),
    (64, 65),
    (65, 56),
];
