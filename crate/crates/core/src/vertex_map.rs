//! Vertex permutations: isomorphism witnesses and the self-inverse maps the
//! root-isomorphism construction produces.

use std::fmt;

use crate::graph::Graph;

/// A bijection on vertex indices `0..n`, stored as the image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexMap {
    image: Vec<usize>,
}

impl VertexMap {
    /// Panics unless `image` is a permutation of `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Self {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            assert!(v < n, "image value {v} out of range for n = {n}");
            assert!(!seen[v], "image value {v} repeated; not a permutation");
            seen[v] = true;
        }
        VertexMap { image }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> VertexMap {
        let mut inv = vec![0; self.image.len()];
        for (v, &img) in self.image.iter().enumerate() {
            inv[img] = v;
        }
        VertexMap { image: inv }
    }

    /// The composition `self ∘ inner`: first apply `inner`, then `self`.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        assert_eq!(self.len(), inner.len());
        VertexMap {
            image: inner.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &img)| v == img)
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(v, &img)| self.image[img] == v)
    }

    /// True iff this map carries the edge set of `from` exactly onto the
    /// edge set of `to`.
    pub fn maps_edges_onto(&self, from: &Graph, to: &Graph) -> bool {
        if from.vertex_count() != self.len() || to.vertex_count() != self.len() {
            return false;
        }
        if from.edge_count() != to.edge_count() {
            return false;
        }
        from.edges()
            .all(|(u, v)| to.has_edge(self.apply(u), self.apply(v)))
    }

    /// Nontrivial cycles, each starting at its smallest element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.image[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        let p = VertexMap::new(vec![1, 2, 0, 3]);
        let q = VertexMap::new(vec![1, 0, 3, 2]);
        let pq = p.compose(&q);
        for v in 0..4 {
            assert_eq!(pq.apply(v), p.apply(q.apply(v)));
        }
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn involution_detection() {
        assert!(VertexMap::new(vec![1, 0, 2, 3]).is_involution());
        assert!(VertexMap::identity(5).is_involution());
        assert!(!VertexMap::new(vec![1, 2, 0]).is_involution());
    }

    #[test]
    fn cycle_notation() {
        let f = VertexMap::new(vec![0, 2, 1, 3, 5, 4]);
        assert_eq!(f.to_string(), "(1 2)(4 5)");
        assert_eq!(VertexMap::identity(3).to_string(), "()");
        assert_eq!(VertexMap::new(vec![1, 2, 0]).to_string(), "(0 1 2)");
    }

    #[test]
    #[should_panic(expected = "not a permutation")]
    fn rejects_non_permutation() {
        VertexMap::new(vec![0, 0, 1]);
    }

    #[test]
    fn relabeling_moves_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]);
        let m = VertexMap::new(vec![3, 1, 0, 2]);
        let h = g.relabeled(&m);
        assert!(h.has_edge(3, 1) && h.has_edge(1, 0));
        assert_eq!(h.edge_count(), 2);
        assert!(m.maps_edges_onto(&g, &h));
    }
}
