//! Isomorphism testing by backtracking over color-refined vertex classes.
//! Built for the small graphs this crate works with (n <= 16 or so), where
//! degree profiles plus neighbor-color multisets prune almost everything.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::vertex_map::VertexMap;

/// Witness permutation `m` with `(u,v) in E(a)  <=>  (m(u),m(v)) in E(b)`,
/// or `None` if the graphs are not isomorphic.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<VertexMap> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(VertexMap::identity(0));
    }

    let (colors_a, colors_b) = refine_jointly(a, b)?;

    // Candidate lists per color on the b side.
    let mut by_color_b: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors_b.iter().enumerate() {
        by_color_b.entry(c).or_default().push(v);
    }

    // Assign the most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let class = by_color_b.get(&colors_a[v]).map_or(0, Vec::len);
        (class, colors_a[v], v)
    });

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &order, &colors_a, &by_color_b, &mut map, &mut used, 0) {
        let m = VertexMap::new(map);
        debug_assert!(m.maps_edges_onto(a, b));
        Some(m)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    colors_a: &[usize],
    by_color_b: &BTreeMap<usize, Vec<usize>>,
    map: &mut [usize],
    used: &mut [bool],
    depth: usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let va = order[depth];
    let Some(candidates) = by_color_b.get(&colors_a[va]) else {
        return false;
    };
    'next: for &vb in candidates {
        if used[vb] {
            continue;
        }
        for &ua in &order[..depth] {
            if a.has_edge(va, ua) != b.has_edge(vb, map[ua]) {
                continue 'next;
            }
        }
        map[va] = vb;
        used[vb] = true;
        if assign(a, b, order, colors_a, by_color_b, map, used, depth + 1) {
            return true;
        }
        map[va] = usize::MAX;
        used[vb] = false;
    }
    false
}

/// Iterated color refinement run jointly on both graphs so class ids are
/// comparable. Returns `None` as soon as the color histograms diverge.
fn refine_jointly(a: &Graph, b: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.vertex_count();
    let mut ca: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let next_a = recolor(a, &ca, &mut palette);
        let next_b = recolor(b, &cb, &mut palette);
        let stable = class_count(&next_a) == class_count(&ca);
        ca = next_a;
        cb = next_b;
        if stable {
            if histogram(&ca) != histogram(&cb) {
                return None;
            }
            return Some((ca, cb));
        }
    }
}

fn recolor(
    g: &Graph,
    colors: &[usize],
    palette: &mut BTreeMap<(usize, Vec<usize>), usize>,
) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
            around.sort_unstable();
            let fresh = palette.len();
            *palette.entry((colors[v], around)).or_insert(fresh)
        })
        .collect()
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

fn class_count(colors: &[usize]) -> usize {
    histogram(colors).len()
}
