//! Vertex colorings, color codes, and the locating-coloring verifier.
//!
//! A coloring assigns each vertex a color in `1..=m` with no empty color
//! class. The color code of a vertex is its vector of distances to each
//! class; a proper coloring whose codes are pairwise distinct is locating.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tree::{NaryTree, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    EmptyAssignment,
    ColorOutOfRange {
        vertex: VertexId,
        color: u32,
        m: u32,
    },
    /// Distances to an empty class are undefined, so every color must be used.
    UnusedColor {
        color: u32,
    },
    SizeMismatch {
        expected: usize,
        got: usize,
    },
    BadPermutation,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::EmptyAssignment => write!(f, "coloring has no vertices"),
            ColoringError::ColorOutOfRange { vertex, color, m } => {
                write!(f, "vertex {vertex} has color {color}, outside 1..={m}")
            }
            ColoringError::UnusedColor { color } => {
                write!(f, "color {color} is used by no vertex (empty class)")
            }
            ColoringError::SizeMismatch { expected, got } => {
                write!(f, "coloring covers {got} vertices, tree has {expected}")
            }
            ColoringError::BadPermutation => write!(f, "relabeling is not a palette permutation"),
        }
    }
}

impl std::error::Error for ColoringError {}

/// A total assignment of palette colors `1..=m` to vertices, with every
/// color used at least once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    m: u32,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(m: u32, colors: Vec<u32>) -> Result<Self, ColoringError> {
        if colors.is_empty() {
            return Err(ColoringError::EmptyAssignment);
        }
        let mut used = vec![false; m as usize];
        for (v, &c) in colors.iter().enumerate() {
            if c < 1 || c > m {
                return Err(ColoringError::ColorOutOfRange {
                    vertex: v,
                    color: c,
                    m,
                });
            }
            used[c as usize - 1] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(ColoringError::UnusedColor {
                color: c as u32 + 1,
            });
        }
        Ok(Coloring { m, colors })
    }

    pub fn palette_size(&self) -> u32 {
        self.m
    }

    pub fn color(&self, v: VertexId) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    /// Applies a palette permutation: `perm[c-1]` is the new name of color `c`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Coloring, ColoringError> {
        if perm.len() != self.m as usize {
            return Err(ColoringError::BadPermutation);
        }
        let mut seen = vec![false; self.m as usize];
        for &p in perm {
            if p < 1 || p > self.m || seen[p as usize - 1] {
                return Err(ColoringError::BadPermutation);
            }
            seen[p as usize - 1] = true;
        }
        let colors = self.colors.iter().map(|&c| perm[c as usize - 1]).collect();
        Coloring::new(self.m, colors)
    }

    fn check_tree(&self, tree: &NaryTree) -> Result<(), ColoringError> {
        if self.colors.len() != tree.vertex_count() {
            return Err(ColoringError::SizeMismatch {
                expected: tree.vertex_count(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Per-vertex distance vectors, one entry per color class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    m: usize,
    data: Vec<u32>,
}

impl CodeTable {
    pub fn palette_size(&self) -> usize {
        self.m
    }

    pub fn code(&self, v: VertexId) -> &[u32] {
        &self.data[v * self.m..(v + 1) * self.m]
    }

    pub fn vertex_count(&self) -> usize {
        self.data.len() / self.m
    }
}

/// Color codes via one multi-source BFS sweep per color class: `O(m·V)`.
pub fn color_codes(tree: &NaryTree, coloring: &Coloring) -> Result<CodeTable, ColoringError> {
    coloring.check_tree(tree)?;
    let v_count = tree.vertex_count();
    let m = coloring.palette_size() as usize;
    let mut data = vec![u32::MAX; v_count * m];
    let mut dist = vec![u32::MAX; v_count];
    let mut queue = VecDeque::new();
    for class in 1..=m as u32 {
        dist.fill(u32::MAX);
        queue.clear();
        for (v, d) in dist.iter_mut().enumerate() {
            if coloring.color(v) == class {
                *d = 0;
                queue.push_back(v);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            if let Some(p) = tree.parent(u) {
                if dist[p] == u32::MAX {
                    dist[p] = du + 1;
                    queue.push_back(p);
                }
            }
            for c in tree.children(u) {
                if dist[c] == u32::MAX {
                    dist[c] = du + 1;
                    queue.push_back(c);
                }
            }
        }
        for v in 0..v_count {
            data[v * m + class as usize - 1] = dist[v];
        }
    }
    Ok(CodeTable { m, data })
}

/// True iff no parent-child pair shares a color.
pub fn is_proper(tree: &NaryTree, coloring: &Coloring) -> bool {
    (1..tree.vertex_count()).all(|v| coloring.color(v) != coloring.color(tree.parent(v).unwrap()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocatingVerdict {
    Locating,
    /// First edge (scanning children in index order) whose endpoints share a color.
    ImproperEdge {
        parent: VertexId,
        child: VertexId,
    },
    /// Lexicographically smallest pair of vertices with identical codes.
    CodeClash {
        u: VertexId,
        w: VertexId,
    },
}

impl LocatingVerdict {
    pub fn is_locating(&self) -> bool {
        matches!(self, LocatingVerdict::Locating)
    }
}

/// Locating iff proper and all color codes are pairwise distinct.
pub fn is_locating(tree: &NaryTree, coloring: &Coloring) -> Result<LocatingVerdict, ColoringError> {
    coloring.check_tree(tree)?;
    for v in 1..tree.vertex_count() {
        let p = tree.parent(v).unwrap();
        if coloring.color(v) == coloring.color(p) {
            return Ok(LocatingVerdict::ImproperEdge {
                parent: p,
                child: v,
            });
        }
    }
    let codes = color_codes(tree, coloring)?;
    let mut order: Vec<VertexId> = (0..tree.vertex_count()).collect();
    order.sort_unstable_by(|&a, &b| codes.code(a).cmp(codes.code(b)));
    let mut clash: Option<(VertexId, VertexId)> = None;
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && codes.code(order[i]) == codes.code(order[j]) {
            j += 1;
        }
        if j - i > 1 {
            let mut group: Vec<VertexId> = order[i..j].to_vec();
            group.sort_unstable();
            let pair = (group[0], group[1]);
            if clash.is_none_or(|best| pair < best) {
                clash = Some(pair);
            }
        }
        i = j;
    }
    Ok(match clash {
        Some((u, w)) => LocatingVerdict::CodeClash { u, w },
        None => LocatingVerdict::Locating,
    })
}

/// One more than the maximum number of leaves adjacent to a single vertex;
/// every locating coloring needs at least this many colors because such
/// leaves are mutual twins. Equals `n+1` on every `T(n,k)`.
pub fn twin_lower_bound(tree: &NaryTree) -> u32 {
    let mut best = 0;
    for v in 0..tree.vertex_count() {
        let leaf_children = tree.children(v).filter(|&c| tree.is_leaf(c)).count();
        best = best.max(leaf_children);
    }
    best as u32 + 1
}

/// Coloring type of a palm: branch color plus the set of its leaf colors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PalmSignature {
    pub branch_color: u32,
    /// Sorted, distinct.
    pub leaf_colors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CensusError {
    Coloring(ColoringError),
    /// Two sibling leaves share a color, so the coloring cannot be locating.
    RepeatedLeafColors {
        branch_vertex: VertexId,
    },
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::Coloring(e) => e.fmt(f),
            CensusError::RepeatedLeafColors { branch_vertex } => {
                write!(f, "palm at vertex {branch_vertex} repeats a leaf color")
            }
        }
    }
}

impl std::error::Error for CensusError {}

impl From<ColoringError> for CensusError {
    fn from(e: ColoringError) -> Self {
        CensusError::Coloring(e)
    }
}

/// Multiset of palm signatures; multiplicities sum to `n^(k-1)`.
pub fn palm_census(
    tree: &NaryTree,
    coloring: &Coloring,
) -> Result<BTreeMap<PalmSignature, u64>, CensusError> {
    coloring.check_tree(tree)?;
    let mut census = BTreeMap::new();
    for palm in tree.palms() {
        let mut leaf_colors: Vec<u32> = palm
            .leaf_vertices
            .iter()
            .map(|&l| coloring.color(l))
            .collect();
        leaf_colors.sort_unstable();
        if leaf_colors.windows(2).any(|w| w[0] == w[1]) {
            return Err(CensusError::RepeatedLeafColors {
                branch_vertex: palm.branch_vertex,
            });
        }
        let sig = PalmSignature {
            branch_color: coloring.color(palm.branch_vertex),
            leaf_colors,
        };
        *census.entry(sig).or_insert(0) += 1;
    }
    Ok(census)
}

/// On-disk form of a coloring, in canonical vertex order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoringFile {
    pub n: u32,
    pub k: u32,
    pub m: u32,
    pub colors: Vec<u32>,
}

impl ColoringFile {
    pub fn from_parts(tree: &NaryTree, coloring: &Coloring) -> Self {
        ColoringFile {
            n: tree.branching(),
            k: tree.depth(),
            m: coloring.palette_size(),
            colors: coloring.colors().to_vec(),
        }
    }

    /// Validates the payload against `tree` and returns the coloring.
    pub fn into_coloring(self, tree: &NaryTree) -> Result<Coloring, ColoringError> {
        if self.colors.len() != tree.vertex_count()
            || self.n != tree.branching()
            || self.k != tree.depth()
        {
            return Err(ColoringError::SizeMismatch {
                expected: tree.vertex_count(),
                got: self.colors.len(),
            });
        }
        Coloring::new(self.m, self.colors)
    }
}

/// Graphviz rendering with color annotations.
pub fn to_dot_colored(tree: &NaryTree, coloring: &Coloring) -> String {
    let mut out = String::from("graph nary_tree {\n  node [shape=circle];\n");
    for v in 0..tree.vertex_count() {
        out.push_str(&format!("  {v} [label=\"{v}:c{}\"];\n", coloring.color(v)));
    }
    for v in 1..tree.vertex_count() {
        out.push_str(&format!("  {} -- {};\n", tree.parent(v).unwrap(), v));
    }
    out.push_str("}\n");
    out
}
