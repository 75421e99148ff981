//! Independent reference computations. Everything here walks the graph
//! through `mate` only and uses plain BFS, so it shares no code with the
//! library's union-find census.
#![allow(dead_code)]

use std::collections::VecDeque;

use gemkit_core::catalog;
use gemkit_core::ColoredGraph;
use proptest::prelude::*;

pub fn fig(name: &str) -> ColoredGraph {
    catalog::builtin(name).unwrap().graph
}

fn colors_of(dim: usize, bits: u32) -> Vec<usize> {
    (0..=dim).filter(|c| bits & (1 << c) != 0).collect()
}

/// Components of `Γ_B` as vertex lists, found by BFS.
pub fn bfs_components(g: &ColoredGraph, colors: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &c in colors {
                if let Some(w) = g.mate(c, v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        out.push(comp);
    }
    out
}

/// `g_B`.
pub fn g_of(g: &ColoredGraph, colors: &[usize]) -> usize {
    bfs_components(g, colors).len()
}

/// `ġ_B`.
pub fn regular_of(g: &ColoredGraph, colors: &[usize]) -> usize {
    bfs_components(g, colors)
        .iter()
        .filter(|comp| comp.iter().all(|&v| colors.iter().all(|&c| g.mate(c, v).is_some())))
        .count()
}

/// `g` of the complement of `colors`.
pub fn g_hat(g: &ColoredGraph, colors: &[usize]) -> usize {
    let rest: Vec<usize> = (0..=g.dim()).filter(|c| !colors.contains(c)).collect();
    g_of(g, &rest)
}

/// `f_k = Σ_{|B| = k+1} g_{Δ∖B}`.
pub fn faces(g: &ColoredGraph) -> Vec<usize> {
    let d = g.dim();
    let mut f = vec![0; d + 1];
    for bits in 1u32..(1 << (d + 1)) {
        let b = colors_of(d, bits);
        let rest = colors_of(d, !bits & ((1 << (d + 1)) - 1));
        f[b.len() - 1] += if rest.is_empty() { g.vertex_count() } else { g_of(g, &rest) };
    }
    f
}

pub fn euler(g: &ColoredGraph) -> i64 {
    faces(g)
        .iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

pub fn two_colorable(g: &ColoredGraph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for c in 0..=g.dim() {
                if let Some(w) = g.mate(c, v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// The boundary graph by walking alternating `(j, d)`-paths: returns the
/// pairs of boundary vertices (parent numbering) joined in color `j`.
pub fn boundary_pairs(g: &ColoredGraph, j: usize) -> Vec<(usize, usize)> {
    let d = g.dim();
    let mut out = Vec::new();
    for v in g.boundary_vertices() {
        let mut cur = g.mate(j, v).unwrap();
        while let Some(next) = g.mate(d, cur) {
            cur = g.mate(j, next).unwrap();
        }
        if v < cur {
            out.push((v, cur));
        }
    }
    out
}

/// `∂g_B` for colors `B ⊆ {0..d-1}`, via BFS over the walked pairs.
pub fn boundary_g(g: &ColoredGraph, colors: &[usize]) -> usize {
    let bv = g.boundary_vertices();
    let index = |v: usize| bv.iter().position(|&w| w == v).unwrap();
    let mut adj = vec![Vec::new(); bv.len()];
    for &j in colors {
        for (a, b) in boundary_pairs(g, j) {
            adj[index(a)].push(index(b));
            adj[index(b)].push(index(a));
        }
    }
    let mut seen = vec![false; bv.len()];
    let mut count = 0;
    for s in 0..bv.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Number of boundary components: `∂g` over all boundary colors.
pub fn boundary_count(g: &ColoredGraph) -> usize {
    if g.is_closed() {
        return 0;
    }
    boundary_g(g, &(0..g.dim()).collect::<Vec<_>>())
}

pub fn all_color_sets(dim: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << (dim + 1))).map(move |b| colors_of(dim, b))
}

fn pair_up(order: &[usize]) -> Vec<(usize, usize)> {
    order.chunks(2).map(|p| (p[0], p[1])).collect()
}

/// Random graphs with colors `0..d-1` total and color `d` partial, on an
/// even number of vertices. With `bipartite`, every edge joins an even
/// vertex to an odd one.
pub fn arb_gem(max_dim: usize, max_half: usize, bipartite: bool) -> impl Strategy<Value = ColoredGraph> {
    (2..=max_dim).prop_flat_map(move |dim| arb_gem_of_dim(dim, max_half, bipartite))
}

pub fn arb_gem_of_dim(dim: usize, max_half: usize, bipartite: bool) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_half).prop_flat_map(move |half| {
        let n = 2 * half;
        let perms = proptest::collection::vec(Just((0..half).collect::<Vec<_>>()).prop_shuffle(), dim + 1);
        let flat = proptest::collection::vec(Just((0..n).collect::<Vec<_>>()).prop_shuffle(), dim + 1);
        (perms, flat, 0..=half).prop_map(move |(perms, flat, last)| {
            let colors: Vec<Vec<(usize, usize)>> = (0..=dim)
                .map(|c| {
                    let mut pairs: Vec<(usize, usize)> = if bipartite {
                        (0..half).map(|i| (2 * i, 2 * perms[c][i] + 1)).collect()
                    } else {
                        pair_up(&flat[c])
                    };
                    if c == dim {
                        pairs.truncate(last);
                    }
                    pairs
                })
                .collect();
            ColoredGraph::from_pairs(dim, n, &colors).unwrap()
        })
    })
}
