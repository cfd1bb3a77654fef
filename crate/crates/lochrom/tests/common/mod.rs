//! Brute-force oracles, kept deliberately independent of the library's
//! computation paths: adjacency lists instead of index arithmetic,
//! per-vertex BFS instead of multi-source sweeps, and no symmetry pruning.

// Shared across test binaries; not every binary uses every oracle.
#![allow(dead_code)]

use lochrom::NaryTree;

/// Explicit adjacency lists, built only from the parent relation.
pub fn adjacency(tree: &NaryTree) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); tree.vertex_count()];
    for v in 1..tree.vertex_count() {
        let p = tree.parent(v).unwrap();
        adj[p].push(v);
        adj[v].push(p);
    }
    adj
}

/// Single-source BFS distances over explicit adjacency.
pub fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Color codes the slow way: one BFS per vertex, then a minimum per class.
pub fn naive_codes(adj: &[Vec<usize>], colors: &[u32], m: u32) -> Vec<Vec<u32>> {
    let v_count = adj.len();
    let mut codes = vec![vec![u32::MAX; m as usize]; v_count];
    for v in 0..v_count {
        let dist = bfs_distances(adj, v);
        for u in 0..v_count {
            let class = colors[u] as usize - 1;
            codes[v][class] = codes[v][class].min(dist[u]);
        }
    }
    codes
}

/// All-pairs comparison oracle for the locating property. Assumes every
/// color in `1..=m` is used.
pub fn naive_is_locating(adj: &[Vec<usize>], colors: &[u32], m: u32) -> bool {
    for (u, nbrs) in adj.iter().enumerate() {
        for &w in nbrs {
            if colors[u] == colors[w] {
                return false;
            }
        }
    }
    let codes = naive_codes(adj, colors, m);
    for u in 0..adj.len() {
        for w in u + 1..adj.len() {
            if codes[u] == codes[w] {
                return false;
            }
        }
    }
    true
}

fn all_colors_used(colors: &[u32], m: u32) -> bool {
    let mut used = vec![false; m as usize];
    for &c in colors {
        used[c as usize - 1] = true;
    }
    used.into_iter().all(|u| u)
}

/// Whether any locating `m`-coloring exists, by enumerating every one of the
/// `m^V` assignments with an odometer. Only sane for tiny trees.
pub fn naive_exists_full_enum(tree: &NaryTree, m: u32) -> bool {
    let adj = adjacency(tree);
    let v_count = tree.vertex_count();
    let mut colors = vec![1u32; v_count];
    loop {
        if all_colors_used(&colors, m) && naive_is_locating(&adj, &colors, m) {
            return true;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == v_count {
                return false;
            }
            if colors[i] < m {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Smallest `m` admitting a locating coloring, via the full enumeration.
pub fn naive_chi(tree: &NaryTree) -> u32 {
    let mut m = 1;
    loop {
        if naive_exists_full_enum(tree, m) {
            return m;
        }
        m += 1;
    }
}

/// Whether any locating `m`-coloring exists, enumerating proper colorings
/// recursively but with no symmetry pruning at all.
pub fn naive_exists_proper_enum(tree: &NaryTree, m: u32) -> bool {
    let adj = adjacency(tree);
    let v_count = tree.vertex_count();
    let mut colors = vec![0u32; v_count];
    fn rec(tree: &NaryTree, adj: &[Vec<usize>], colors: &mut Vec<u32>, v: usize, m: u32) -> bool {
        if v == colors.len() {
            return all_colors_used(colors, m) && naive_is_locating(adj, colors, m);
        }
        let parent_color = tree.parent(v).map_or(0, |p| colors[p]);
        for c in 1..=m {
            if c != parent_color {
                colors[v] = c;
                if rec(tree, adj, colors, v + 1, m) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    rec(tree, &adj, &mut colors, 0, m)
}

/// Random coloring that uses every color in `1..=m`: each color is planted
/// at a distinct random vertex, the rest are uniform.
pub fn random_surjective_coloring(rng: &mut impl rand::Rng, v_count: usize, m: u32) -> Vec<u32> {
    assert!(m as usize <= v_count);
    let mut colors: Vec<u32> = (0..v_count).map(|_| rng.gen_range(1..=m)).collect();
    let mut slots: Vec<usize> = (0..v_count).collect();
    for c in 1..=m {
        let at = rng.gen_range(0..slots.len());
        colors[slots.swap_remove(at)] = c;
    }
    colors
}
