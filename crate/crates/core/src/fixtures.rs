//! Small clutters that recur in examples and tests.

use crate::clutter::Clutter;
use crate::vertex::VertexSet;

fn clutter(n: usize, circuits: &[[usize; 3]]) -> Clutter {
    Clutter::new(n, 3, circuits.iter().map(|c| VertexSet::from(*c))).expect("fixture is valid")
}

/// The triangular bipyramid: triangle `123` with apexes `4` and `5`.
///
/// Six faces, and the smallest sphere triangulation whose complement ideal is
/// not linear (its regularity is 4).
pub fn hexahedron() -> Clutter {
    clutter(5, &[[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 4], [2, 3, 5]])
}

/// The octahedron with antipodal pairs `(1,4)`, `(2,5)`, `(3,6)`.
pub fn octahedron() -> Clutter {
    let faces: Vec<VertexSet> = [1, 4]
        .iter()
        .flat_map(|&a| [2, 5].iter().flat_map(move |&b| [3, 6].iter().map(move |&c| VertexSet::from([a, b, c]))))
        .collect();
    Clutter::new(6, 3, faces).expect("fixture is valid")
}

/// The regular icosahedron: 12 vertices, 30 edges, 20 faces.
pub fn icosahedron() -> Clutter {
    // Vertex 1 on top, 12 at the bottom, upper ring 2..=6, lower ring 7..=11.
    let mut faces = Vec::new();
    for k in 0..5 {
        let (u, u_next) = (2 + k, 2 + (k + 1) % 5);
        let (l, l_next) = (7 + k, 7 + (k + 1) % 5);
        faces.push([1, u, u_next]);
        faces.push([u, u_next, l]);
        faces.push([u_next, l, l_next]);
        faces.push([12, l, l_next]);
    }
    clutter(12, &faces)
}

/// `{123, 124, 134, 234, 125, 126, 156, 256}`: reducible to the empty clutter by
/// simplicial-edge deletions, yet not generalized chordal.
pub fn reducible_non_chordal() -> Clutter {
    clutter(6, &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4], [1, 2, 5], [1, 2, 6], [1, 5, 6], [2, 5, 6]])
}
