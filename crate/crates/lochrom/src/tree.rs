//! Complete n-ary trees `T(n,k)` with canonical level-order indexing.
//!
//! `T(n,1)` is the star `S_n`; for deeper trees, `T(n,k)` joins a new root to
//! the centers of `n` disjoint copies of `T(n,k-1)`. Vertices are numbered
//! level by level, so level, parent and children of a vertex are plain index
//! arithmetic and no adjacency lists are stored. Trees are immutable after
//! construction and safe to share across threads.

use std::fmt;
use std::ops::Range;

/// Vertex handle: position in the canonical level-order numbering.
pub type VertexId = usize;

/// Default cap on the number of vertices a single tree may occupy.
/// `n^k` grows fast enough that accidental huge inputs are likely.
pub const DEFAULT_VERTEX_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// Requires `n >= 2` and `k >= 1`.
    InvalidParams { n: u32, k: u32 },
    /// The tree would need more vertices than the configured budget.
    BudgetExceeded { required: u128, budget: usize },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::InvalidParams { n, k } => {
                write!(
                    f,
                    "invalid tree parameters n={n}, k={k} (need n >= 2, k >= 1)"
                )
            }
            TreeError::BudgetExceeded { required, budget } => {
                write!(f, "tree needs {required} vertices, budget is {budget}")
            }
        }
    }
}

impl std::error::Error for TreeError {}

/// The complete n-ary tree of depth `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaryTree {
    n: u32,
    k: u32,
    vertex_count: usize,
    /// `level_offsets[j]` is the index of the first vertex of level `j`;
    /// the final entry equals `vertex_count`.
    level_offsets: Vec<usize>,
}

/// A level-`(k-1)` vertex together with its `n` leaf children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalmLocation {
    pub branch_vertex: VertexId,
    pub leaf_vertices: Vec<VertexId>,
}

impl NaryTree {
    /// Builds `T(n,k)` under the default vertex budget.
    pub fn new(n: u32, k: u32) -> Result<Self, TreeError> {
        Self::with_budget(n, k, DEFAULT_VERTEX_BUDGET)
    }

    /// Builds `T(n,k)`, refusing to construct more than `budget` vertices.
    pub fn with_budget(n: u32, k: u32, budget: usize) -> Result<Self, TreeError> {
        if n < 2 || k < 1 {
            return Err(TreeError::InvalidParams { n, k });
        }
        let mut offsets = Vec::with_capacity(k as usize + 2);
        offsets.push(0usize);
        let mut total: u128 = 0;
        let mut width: u128 = 1;
        for _ in 0..=k {
            total += width;
            if total > budget as u128 {
                // Finish the exact count for the error message.
                let mut required = total;
                let mut w = width;
                for _ in offsets.len()..=k as usize {
                    w = w.saturating_mul(n as u128);
                    required = required.saturating_add(w);
                }
                return Err(TreeError::BudgetExceeded { required, budget });
            }
            offsets.push(total as usize);
            width *= n as u128;
        }
        Ok(NaryTree {
            n,
            k,
            vertex_count: total as usize,
            level_offsets: offsets,
        })
    }

    pub fn branching(&self) -> u32 {
        self.n
    }

    pub fn depth(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Every path between two vertices has length at most `2k`.
    pub fn diameter(&self) -> u32 {
        2 * self.k
    }

    pub fn level_of(&self, v: VertexId) -> u32 {
        debug_assert!(v < self.vertex_count);
        (self.level_offsets.partition_point(|&off| off <= v) - 1) as u32
    }

    /// Index of `v` within its own level, 0-based.
    pub fn position_in_level(&self, v: VertexId) -> usize {
        v - self.level_offsets[self.level_of(v) as usize]
    }

    /// Vertex indices of level `j` (empty range past the last level).
    pub fn level_range(&self, j: u32) -> Range<VertexId> {
        if j > self.k {
            return self.vertex_count..self.vertex_count;
        }
        self.level_offsets[j as usize]..self.level_offsets[j as usize + 1]
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        let j = self.level_of(v);
        if j == 0 {
            return None;
        }
        let pos = v - self.level_offsets[j as usize];
        Some(self.level_offsets[j as usize - 1] + pos / self.n as usize)
    }

    /// Children of `v`; the empty range for leaves.
    pub fn children(&self, v: VertexId) -> Range<VertexId> {
        let j = self.level_of(v);
        if j == self.k {
            return v..v;
        }
        let pos = v - self.level_offsets[j as usize];
        let start = self.level_offsets[j as usize + 1] + pos * self.n as usize;
        start..start + self.n as usize
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.level_of(v) == self.k
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let kids = self.children(v).len();
        if v == 0 {
            kids
        } else {
            kids + 1
        }
    }

    /// Exact tree distance via the lowest common ancestor, computed on the
    /// index arithmetic alone.
    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        let (mut u, mut v) = (u, v);
        let mut lu = self.level_of(u);
        let mut lv = self.level_of(v);
        let mut d = 0u32;
        while lu > lv {
            u = self.parent(u).unwrap();
            lu -= 1;
            d += 1;
        }
        while lv > lu {
            v = self.parent(v).unwrap();
            lv -= 1;
            d += 1;
        }
        while u != v {
            u = self.parent(u).unwrap();
            v = self.parent(v).unwrap();
            d += 2;
        }
        d
    }

    /// Breadth-first distances from `v` to every vertex.
    pub fn distances_from(&self, v: VertexId) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        dist[v] = 0;
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            if let Some(p) = self.parent(u) {
                if dist[p] == u32::MAX {
                    dist[p] = du + 1;
                    queue.push_back(p);
                }
            }
            for c in self.children(u) {
                if dist[c] == u32::MAX {
                    dist[c] = du + 1;
                    queue.push_back(c);
                }
            }
        }
        dist
    }

    /// The set `D_t(v)` of vertices at distance exactly `t` from `v`,
    /// in ascending index order.
    pub fn level_set(&self, v: VertexId, t: u32) -> Vec<VertexId> {
        self.distances_from(v)
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == t)
            .map(|(u, _)| u)
            .collect()
    }

    /// All `n^(k-1)` palms: one per level-`(k-1)` vertex.
    pub fn palms(&self) -> Vec<PalmLocation> {
        self.level_range(self.k - 1)
            .map(|b| PalmLocation {
                branch_vertex: b,
                leaf_vertices: self.children(b).collect(),
            })
            .collect()
    }

    /// Graphviz rendering; vertex labels are canonical indices, optionally
    /// annotated with the level.
    pub fn to_dot(&self, annotate_levels: bool) -> String {
        let mut out = String::from("graph nary_tree {\n  node [shape=circle];\n");
        for v in 0..self.vertex_count {
            if annotate_levels {
                out.push_str(&format!("  {v} [label=\"{v}\\nL{}\"];\n", self.level_of(v)));
            } else {
                out.push_str(&format!("  {v} [label=\"{v}\"];\n"));
            }
        }
        for v in 1..self.vertex_count {
            out.push_str(&format!("  {} -- {};\n", self.parent(v).unwrap(), v));
        }
        out.push_str("}\n");
        out
    }

    /// JSON descriptor `{"n":…, "k":…}`.
    pub fn descriptor_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.n, "k": self.k })
    }
}
