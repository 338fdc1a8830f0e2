//! Small complexes with known topology, shared by tests, the acceptance
//! suite and the documentation.

use crate::complex::SimplexPool;
use crate::sequence::GradientVectorField;
use crate::simplex::{Simplex, Vertex};
use crate::stack::{induced_stack, Stack, VertexMap};

fn s(v: &[Vertex]) -> Simplex {
    Simplex::new(v.to_vec()).expect("fixture simplexes are well formed")
}

fn closure_of(generators: &[&[Vertex]]) -> SimplexPool {
    SimplexPool::from_generators(generators.iter().map(|g| s(g)))
}

/// Closure of `{1,2,3}`.
pub fn triangle() -> SimplexPool {
    closure_of(&[&[1, 2, 3]])
}

/// Boundary of a triangle: a circle with three vertices.
pub fn hollow_triangle() -> SimplexPool {
    closure_of(&[&[1, 2], &[1, 3], &[2, 3]])
}

/// Closure of `{1,2,3,4}`.
pub fn tetrahedron() -> SimplexPool {
    closure_of(&[&[1, 2, 3, 4]])
}

/// Boundary of a tetrahedron: a 2-sphere.
pub fn hollow_tetrahedron() -> SimplexPool {
    closure_of(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
}

/// Path `1 - 2 - ... - n`.
pub fn path(n: Vertex) -> SimplexPool {
    let edges: Vec<Simplex> = (1..n).map(|v| s(&[v, v + 1])).collect();
    if edges.is_empty() {
        SimplexPool::new((1..=n).map(Simplex::vertex))
    } else {
        SimplexPool::from_generators(edges)
    }
}

/// Seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus() -> SimplexPool {
    SimplexPool::from_generators((0..7).flat_map(|i| {
        [
            s(&[i, (i + 1) % 7, (i + 3) % 7]),
            s(&[i, (i + 2) % 7, (i + 3) % 7]),
        ]
    }))
}

/// Six-vertex real projective plane.
pub fn projective_plane() -> SimplexPool {
    closure_of(&[
        &[1, 2, 3],
        &[1, 3, 4],
        &[1, 4, 5],
        &[1, 5, 6],
        &[1, 2, 6],
        &[2, 3, 5],
        &[3, 4, 6],
        &[2, 4, 5],
        &[3, 5, 6],
        &[2, 4, 6],
    ])
}

/// Vertex id of grid point `(i, j)` in a `k x k` grid.
pub fn grid_vertex(k: usize, i: usize, j: usize) -> Vertex {
    (i * k + j) as Vertex
}

/// Triangulated square with `k x k` vertices, each cell cut along the same
/// diagonal.
pub fn grid(k: usize) -> SimplexPool {
    let mut triangles = Vec::with_capacity(2 * k.saturating_sub(1).pow(2));
    for i in 0..k.saturating_sub(1) {
        for j in 0..k - 1 {
            let a = grid_vertex(k, i, j);
            let b = grid_vertex(k, i, j + 1);
            let c = grid_vertex(k, i + 1, j);
            let d = grid_vertex(k, i + 1, j + 1);
            triangles.push(s(&[a, b, d]));
            triangles.push(s(&[a, c, d]));
        }
    }
    if triangles.is_empty() {
        return SimplexPool::new((0..(k * k) as Vertex).map(Simplex::vertex));
    }
    SimplexPool::from_generators(triangles)
}

/// A 4-cycle with a pairing that goes all the way round, so its gradient
/// paths close up.
pub fn cyclic_square_pairing() -> (SimplexPool, GradientVectorField) {
    let k = closure_of(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
    let gvf = GradientVectorField::new([
        (s(&[1]), s(&[1, 2])),
        (s(&[2]), s(&[2, 3])),
        (s(&[3]), s(&[3, 4])),
        (s(&[4]), s(&[1, 4])),
    ]);
    (k, gvf)
}

/// A 4x4 triangulated square with a stack that has two basins.
///
/// Vertices on the outer ring sit at level 1 except two opposite corners at
/// level 0; the four interior vertices sit at level 2. The stack on simplexes
/// is the maximum over their vertices.
pub fn two_basin_square() -> (SimplexPool, VertexMap, Stack) {
    let k = grid(4);
    let values: VertexMap = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| {
            let level = if (i, j) == (0, 0) || (i, j) == (3, 3) {
                0
            } else if i == 0 || j == 0 || i == 3 || j == 3 {
                1
            } else {
                2
            };
            (grid_vertex(4, i, j), level)
        })
        .collect();
    let f = induced_stack(&values, &k).expect("every grid vertex has a value");
    (k, values, f)
}
