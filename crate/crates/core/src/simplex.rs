use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::Error;

/// Vertex identifier.
pub type Vertex = u32;

/// Vertices of a simplex; up to tetrahedra they stay inline.
pub(crate) type VertexList = SmallVec<[Vertex; 4]>;

/// A non-empty finite set of vertices, stored sorted ascending.
///
/// Simplexes order by dimension first and then lexicographically by their
/// vertex sequence. This is the canonical iteration order of every pool.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: VertexList,
}

impl Simplex {
    /// Builds a simplex from arbitrary vertex ids, sorting them.
    ///
    /// Fails on an empty list or on repeated ids.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Self {
            vertices: VertexList::from_vec(vertices),
        })
    }

    /// Builds a simplex from ids that are already strictly increasing.
    pub(crate) fn from_sorted(vertices: VertexList) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertex(v: Vertex) -> Self {
        Self {
            vertices: smallvec![v],
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// `|vertices| - 1`.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Whether `self ⊆ other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Whether `self ⊂ other` with a dimension gap of exactly one.
    pub fn is_facet_of(&self, other: &Simplex) -> bool {
        self.len() + 1 == other.len() && self.is_face_of(other)
    }

    /// The codimension-one faces, each obtained by dropping one vertex.
    /// A vertex has none.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.len() > 1 { self.len() } else { 0 };
        (0..n).map(move |skip| {
            let mut v = VertexList::with_capacity(self.len() - 1);
            v.extend_from_slice(&self.vertices[..skip]);
            v.extend_from_slice(&self.vertices[skip + 1..]);
            Simplex::from_sorted(v)
        })
    }

    /// All non-empty subsets, the simplex itself included.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.len();
        assert!(
            n < usize::BITS as usize,
            "simplex too large to enumerate faces"
        );
        (1usize..(1 << n)).map(|mask| self.subset(mask)).collect()
    }

    /// The subset selected by the bits of `mask` (bit `i` keeps vertex `i`).
    pub(crate) fn subset(&self, mask: usize) -> Simplex {
        let v = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        Simplex::from_sorted(v)
    }

    /// `self ∪ {v}`; `None` if `v` is already a vertex.
    pub fn with_vertex(&self, v: Vertex) -> Option<Simplex> {
        match self.vertices.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = self.vertices.clone();
                out.insert(pos, v);
                Some(Simplex::from_sorted(out))
            }
        }
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Space separated vertex ids, the form used in every text format.
impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Shorthand used throughout the tests: `simplex![1, 2, 3]`.
#[macro_export]
macro_rules! simplex {
    ($($v:expr),+ $(,)?) => {
        $crate::Simplex::new(vec![$($v),+]).expect("valid simplex literal")
    };
}
