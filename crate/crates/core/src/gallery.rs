//! Named small graphs that come up repeatedly in examples and tests.

use crate::graph::Graph;

/// Pentagon `0..5` with a centre `5` joined to vertices 0 and 3. Reducible,
/// but every reduction moves every vertex.
pub fn twisted_pentagon() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 3)])
}

/// The reduction of [`twisted_pentagon`] that turns the pentagon one step
/// and sends the centre to vertex 0.
pub fn twisted_pentagon_witness() -> Vec<usize> {
    vec![1, 2, 3, 4, 0, 0]
}

/// Hexagon `0..6` with a centre `6` joined to the opposite vertices 0 and 3.
pub fn hexagon_with_spoke_pair() -> Graph {
    Graph::from_edges(
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 3)],
    )
}

/// Pentagon `0..5` with a two-vertex bridge: `0 - 5 - 6` and `6` joined to
/// both 2 and 3.
pub fn pentagon_with_bridge() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (3, 6),
            (6, 2),
            (6, 5),
            (5, 0),
        ],
    )
}

/// Every connected irreducible graph on at most seven vertices: the single
/// vertex, the 5-, 6- and 7-cycles, and the two 7-vertex graphs above.
pub fn small_irreducibles() -> Vec<Graph> {
    vec![
        Graph::empty(1),
        Graph::cycle(5),
        Graph::cycle(6),
        Graph::cycle(7),
        hexagon_with_spoke_pair(),
        pentagon_with_bridge(),
    ]
}
