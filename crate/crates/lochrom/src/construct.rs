//! Constructive locating colorings.
//!
//! The construction is built from two pieces:
//!
//! * a base coloring of `T(n,i)` for `t <= i <= 2t-1` that is locating and
//!   satisfies the shell property below, obtained by giving levels 0, `t`
//!   and `i` fresh colors and painting everything else with the two shell
//!   colors `{1,2}`;
//! * a lift that turns a locating `m`-coloring of `T(n,k)` with the shell
//!   property into a locating `(m+2)`-coloring of `T(n,k+t)` by hanging
//!   `n^t` recolored copies of the inner tree under a fresh root.
//!
//! Iterating the lift scales the palette additively (+2 per `t` extra
//! levels) instead of linearly in the depth.
//!
//! The shell property with radius `t`, center color `a` and color set `A`
//! asks that the root is colored `a ∉ A`, the distance-`t` shell uses
//! exactly the `n^t` distinct colors of `A`, and every shell closer than
//! `t` uses exactly the colors `{1,2}`.

use std::collections::BTreeSet;
use std::fmt;

use crate::coloring::{is_locating, Coloring, ColoringError, LocatingVerdict};
use crate::tree::{NaryTree, TreeError, VertexId};

/// Parameters of the shell property: radius `t`, center color, and the
/// exact color set of the distance-`t` shell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CtPropertySpec {
    pub t: u32,
    pub center_color: u32,
    pub shell_t_colors: BTreeSet<u32>,
}

impl CtPropertySpec {
    pub fn new(t: u32, center_color: u32, shell_t_colors: BTreeSet<u32>) -> Self {
        CtPropertySpec {
            t,
            center_color,
            shell_t_colors,
        }
    }
}

/// First violated condition of the shell property, in definition order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CtViolation {
    RadiusExceedsDepth {
        t: u32,
        depth: u32,
    },
    /// Spec asks for `|A| = n^t` but the set has the wrong size.
    ShellSetSizeMismatch {
        expected: u128,
        got: usize,
    },
    /// Colors 1 and 2 are reserved for the inner shells when `t >= 2`.
    ReservedColorInShellSet {
        color: u32,
    },
    CenterColorMismatch {
        expected: u32,
        found: u32,
    },
    CenterColorInShellSet {
        color: u32,
    },
    ShellTColorsMismatch,
    InnerShellForeignColor {
        level: u32,
        vertex: VertexId,
        color: u32,
    },
    InnerShellMissingColor {
        level: u32,
        color: u32,
    },
}

impl fmt::Display for CtViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CtViolation::RadiusExceedsDepth { t, depth } => {
                write!(f, "shell radius {t} exceeds tree depth {depth}")
            }
            CtViolation::ShellSetSizeMismatch { expected, got } => {
                write!(f, "shell color set has {got} colors, expected {expected}")
            }
            CtViolation::ReservedColorInShellSet { color } => {
                write!(
                    f,
                    "reserved shell color {color} appears in the distance-t color set"
                )
            }
            CtViolation::CenterColorMismatch { expected, found } => {
                write!(f, "center colored {found}, expected {expected}")
            }
            CtViolation::CenterColorInShellSet { color } => {
                write!(
                    f,
                    "center color {color} also appears in the distance-t color set"
                )
            }
            CtViolation::ShellTColorsMismatch => {
                write!(f, "distance-t shell colors differ from the declared set")
            }
            CtViolation::InnerShellForeignColor {
                level,
                vertex,
                color,
            } => {
                write!(
                    f,
                    "level {level} vertex {vertex} uses color {color}, only 1 and 2 allowed"
                )
            }
            CtViolation::InnerShellMissingColor { level, color } => {
                write!(f, "level {level} never uses shell color {color}")
            }
        }
    }
}

impl std::error::Error for CtViolation {}

/// Checks the shell property; `Ok(())` or the first violated condition.
pub fn has_ct_property(
    tree: &NaryTree,
    coloring: &Coloring,
    spec: &CtPropertySpec,
) -> Result<(), CtViolation> {
    let n = tree.branching() as u128;
    let t = spec.t;
    if t > tree.depth() {
        return Err(CtViolation::RadiusExceedsDepth {
            t,
            depth: tree.depth(),
        });
    }
    let expected = n.pow(t);
    if spec.shell_t_colors.len() as u128 != expected {
        return Err(CtViolation::ShellSetSizeMismatch {
            expected,
            got: spec.shell_t_colors.len(),
        });
    }
    if t >= 2 {
        for reserved in [1u32, 2] {
            if spec.shell_t_colors.contains(&reserved) {
                return Err(CtViolation::ReservedColorInShellSet { color: reserved });
            }
        }
    }
    // (i) center color
    let center = coloring.color(0);
    if center != spec.center_color {
        return Err(CtViolation::CenterColorMismatch {
            expected: spec.center_color,
            found: center,
        });
    }
    if spec.shell_t_colors.contains(&center) {
        return Err(CtViolation::CenterColorInShellSet { color: center });
    }
    // (ii) distance-t shell uses exactly the declared set
    let shell: BTreeSet<u32> = tree.level_range(t).map(|v| coloring.color(v)).collect();
    if shell != spec.shell_t_colors || tree.level_range(t).len() as u128 != expected {
        return Err(CtViolation::ShellTColorsMismatch);
    }
    // (iii) inner shells use exactly {1,2}
    for level in 1..t {
        let mut seen = [false; 2];
        for v in tree.level_range(level) {
            match coloring.color(v) {
                1 => seen[0] = true,
                2 => seen[1] = true,
                c => {
                    return Err(CtViolation::InnerShellForeignColor {
                        level,
                        vertex: v,
                        color: c,
                    })
                }
            }
        }
        if tree.level_range(level).len() >= 2 {
            for (idx, used) in seen.iter().enumerate() {
                if !used {
                    return Err(CtViolation::InnerShellMissingColor {
                        level,
                        color: idx as u32 + 1,
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    InvalidParams {
        reason: String,
    },
    Tree(TreeError),
    Coloring(ColoringError),
    Ct(CtViolation),
    /// Normalization needs room for the center color above the shell set.
    PaletteTooSmall {
        m: u32,
        required: u32,
    },
    /// A constructed coloring failed verification; carries the witness pair.
    VerificationFailed {
        stage: Stage,
        u: VertexId,
        w: VertexId,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Base,
    /// 0-based index of the lift that failed.
    Lift(usize),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::InvalidParams { reason } => write!(f, "invalid parameters: {reason}"),
            ConstructError::Tree(e) => e.fmt(f),
            ConstructError::Coloring(e) => e.fmt(f),
            ConstructError::Ct(v) => v.fmt(f),
            ConstructError::PaletteTooSmall { m, required } => {
                write!(
                    f,
                    "palette of {m} colors too small, need at least {required}"
                )
            }
            ConstructError::VerificationFailed { stage, u, w } => {
                let stage = match stage {
                    Stage::Base => "base coloring".to_string(),
                    Stage::Lift(i) => format!("lift {}", i + 1),
                };
                write!(
                    f,
                    "{stage} is not locating: vertices {u} and {w} share a color code"
                )
            }
        }
    }
}

impl std::error::Error for ConstructError {}

impl From<TreeError> for ConstructError {
    fn from(e: TreeError) -> Self {
        ConstructError::Tree(e)
    }
}

impl From<ColoringError> for ConstructError {
    fn from(e: ColoringError) -> Self {
        ConstructError::Coloring(e)
    }
}

impl From<CtViolation> for ConstructError {
    fn from(e: CtViolation) -> Self {
        ConstructError::Ct(e)
    }
}

/// Record of one base coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseRecord {
    pub n: u32,
    pub i: u32,
    pub t: u32,
    pub palette: u32,
}

/// Record of one lift: palette sizes, the color each copy omits, and the
/// palette permutation applied to each copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftRecord {
    pub input_palette: u32,
    pub output_palette: u32,
    pub t: u32,
    /// `forbidden_colors[i]` is missing from copy `i` (0-based copies).
    pub forbidden_colors: Vec<u32>,
    /// `permutations[i][c-1]` is the output color for inner color `c` in copy `i`.
    pub permutations: Vec<Vec<u32>>,
}

/// Full record of a recursive construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub n: u32,
    pub k: u32,
    pub t: u32,
    /// `k = lifts * t + base_depth` with `t <= base_depth <= 2t-1`.
    pub base_depth: u32,
    pub lift_count: u32,
    pub base: BaseRecord,
    pub lifts: Vec<LiftRecord>,
    pub final_palette: u32,
}

impl ConstructionTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "decomposition": { "base_depth": self.base_depth, "lifts": self.lift_count },
            "base": {
                "n": self.base.n,
                "i": self.base.i,
                "t": self.base.t,
                "palette": self.base.palette,
            },
            "lifts": self.lifts.iter().map(|l| serde_json::json!({
                "input_palette": l.input_palette,
                "output_palette": l.output_palette,
                "t": l.t,
                "forbidden_colors": l.forbidden_colors,
                "permutations": l.permutations,
            })).collect::<Vec<_>>(),
            "final_palette": self.final_palette,
        })
    }
}

/// A base coloring together with its tree and shell spec.
#[derive(Debug, Clone)]
pub struct BaseColoring {
    pub tree: NaryTree,
    pub coloring: Coloring,
    pub spec: CtPropertySpec,
    pub record: BaseRecord,
}

/// A lifted coloring together with its tree, spec and lift record.
#[derive(Debug, Clone)]
pub struct Lifted {
    pub tree: NaryTree,
    pub coloring: Coloring,
    pub spec: CtPropertySpec,
    pub record: LiftRecord,
}

/// Result of the full recursive construction.
#[derive(Debug, Clone)]
pub struct Construction {
    pub tree: NaryTree,
    pub coloring: Coloring,
    pub spec: CtPropertySpec,
    pub trace: ConstructionTrace,
}

/// Two-color scheme for shell and filler levels: under a parent colored
/// outside `{1,2}` the first child takes 1 and the others 2; under a parent
/// colored 1 or 2 every child takes the other shell color. Keeps the
/// coloring proper and puts both shell colors on every level of width >= 2.
fn shell_color(parent_color: u32, first_child: bool) -> u32 {
    match parent_color {
        1 => 2,
        2 => 1,
        _ if first_child => 1,
        _ => 2,
    }
}

fn integer_pow(n: u32, e: u32) -> u64 {
    (n as u64).pow(e)
}

/// Locating coloring of `T(n,i)` with shell radius `t`, for
/// `t <= i <= 2t-1`: levels 0, `t` and `i` receive fresh colors, everything
/// else the two shell colors. Verified locating before being returned.
pub fn base_coloring(n: u32, i: u32, t: u32) -> Result<BaseColoring, ConstructError> {
    if n < 2 || t < 1 || i < t || i > 2 * t - 1 {
        return Err(ConstructError::InvalidParams {
            reason: format!("need n >= 2 and t <= i <= 2t-1, got n={n}, i={i}, t={t}"),
        });
    }
    let tree = NaryTree::new(n, i)?;
    let v_count = tree.vertex_count();
    let mut colors = vec![0u32; v_count];
    let (m, shell_set): (u32, BTreeSet<u32>) = if t == 1 {
        // i == 1: the star. No inner shells exist, so colors 1..n go to the
        // leaves and the root takes n+1.
        for (p, v) in tree.level_range(1).enumerate() {
            colors[v] = p as u32 + 1;
        }
        colors[0] = n + 1;
        (n + 1, (1..=n).collect())
    } else {
        let nt = integer_pow(n, t);
        let ni = if i > t { integer_pow(n, i) } else { 0 };
        let m = (3 + nt + ni) as u32;
        colors[0] = m;
        for level in 1..=i {
            for (pos, v) in tree.level_range(level).enumerate() {
                colors[v] = if level == t {
                    3 + pos as u32
                } else if level == i {
                    (nt + 3) as u32 + pos as u32
                } else {
                    shell_color(colors[tree.parent(v).unwrap()], pos % n as usize == 0)
                };
            }
        }
        (m, (3..3 + nt as u32).collect())
    };
    let coloring = Coloring::new(m, colors)?;
    let spec = CtPropertySpec::new(t, m, shell_set);
    has_ct_property(&tree, &coloring, &spec)?;
    match is_locating(&tree, &coloring)? {
        LocatingVerdict::Locating => {}
        LocatingVerdict::CodeClash { u, w } => {
            return Err(ConstructError::VerificationFailed {
                stage: Stage::Base,
                u,
                w,
            })
        }
        LocatingVerdict::ImproperEdge { parent, child } => {
            return Err(ConstructError::VerificationFailed {
                stage: Stage::Base,
                u: parent,
                w: child,
            })
        }
    }
    let record = BaseRecord {
        n,
        i,
        t,
        palette: m,
    };
    Ok(BaseColoring {
        tree,
        coloring,
        spec,
        record,
    })
}

/// Normal form used by the lift: center color at the top of the palette
/// (`a = m`) and the distance-`t` shell colored `{3, …, n^t + 2}`, with the
/// inner shells keeping `{1,2}`. Relabeling classes permutes the code
/// coordinates, so the locating property survives.
pub fn normalize_ct(
    tree: &NaryTree,
    coloring: &Coloring,
    spec: &CtPropertySpec,
) -> Result<(Coloring, CtPropertySpec), ConstructError> {
    has_ct_property(tree, coloring, spec)?;
    let n = tree.branching();
    let nt = integer_pow(n, spec.t) as u32;
    let m = coloring.palette_size();
    // a -> m and A -> {3..n^t+2} must not collide, which needs m >= n^t + 3.
    if m < nt + 3 {
        return Err(ConstructError::PaletteTooSmall {
            m,
            required: nt + 3,
        });
    }
    let mut perm = vec![0u32; m as usize];
    let mut taken = vec![false; m as usize];
    let assign = |src: u32, dst: u32, perm: &mut Vec<u32>, taken: &mut Vec<bool>| {
        perm[src as usize - 1] = dst;
        taken[dst as usize - 1] = true;
    };
    assign(spec.center_color, m, &mut perm, &mut taken);
    for (offset, &a) in spec.shell_t_colors.iter().enumerate() {
        assign(a, 3 + offset as u32, &mut perm, &mut taken);
    }
    if spec.t >= 2 {
        assign(1, 1, &mut perm, &mut taken);
        assign(2, 2, &mut perm, &mut taken);
    }
    let mut free = (1..=m).filter(|&c| !taken[c as usize - 1]);
    for src in 1..=m {
        if perm[src as usize - 1] == 0 {
            perm[src as usize - 1] = free.next().expect("permutation target exhausted");
        }
    }
    let normalized = coloring.relabel(&perm)?;
    let new_spec = CtPropertySpec::new(spec.t, m, (3..3 + nt).collect());
    has_ct_property(tree, &normalized, &new_spec)?;
    Ok((normalized, new_spec))
}

fn check_normalized(
    tree: &NaryTree,
    coloring: &Coloring,
    spec: &CtPropertySpec,
) -> Result<u32, ConstructError> {
    has_ct_property(tree, coloring, spec)?;
    let n = tree.branching();
    let nt = integer_pow(n, spec.t) as u32;
    let m = coloring.palette_size();
    if m < nt + 3 {
        return Err(ConstructError::PaletteTooSmall {
            m,
            required: nt + 3,
        });
    }
    let expected: BTreeSet<u32> = (3..3 + nt).collect();
    if spec.center_color != m || spec.shell_t_colors != expected {
        return Err(ConstructError::InvalidParams {
            reason: "coloring is not in normal form; call normalize_ct first".into(),
        });
    }
    Ok(nt)
}

/// Lifts a normalized locating `m`-coloring of `T(n,k)` to a locating
/// `(m+2)`-coloring of `T(n,k+t)`: the new root takes `m+2`, the new inner
/// shells take `{1,2}`, and copy `i` of the inner tree is recolored by a
/// palette permutation onto `{1,…,m+1}` minus one forbidden color, chosen so
/// that each copy misses a different color. The result is re-verified; a
/// verification failure is reported with its witness pair rather than
/// panicking.
pub fn lift(
    tree: &NaryTree,
    inner: &Coloring,
    spec: &CtPropertySpec,
) -> Result<Lifted, ConstructError> {
    let nt = check_normalized(tree, inner, spec)? as u64;
    let n = tree.branching();
    let k = tree.depth();
    let t = spec.t;
    let m = inner.palette_size();
    let out_tree = NaryTree::new(n, k + t)?;
    let mut colors = vec![0u32; out_tree.vertex_count()];
    colors[0] = m + 2;
    for level in 1..t {
        for (pos, v) in out_tree.level_range(level).enumerate() {
            colors[v] = shell_color(colors[out_tree.parent(v).unwrap()], pos % n as usize == 0);
        }
    }
    // Per-copy palette permutations {1..m} -> {1..m+1} minus the forbidden
    // color: fix 1 and 2, send the old center to the copy's fresh center
    // color i+2, send the shell set ascending onto the copy's new shell set,
    // and shift the rest up by 2.
    let nt_prev = integer_pow(n, t - 1);
    let mut permutations: Vec<Vec<u32>> = Vec::with_capacity(nt as usize);
    let mut forbidden_colors: Vec<u32> = Vec::with_capacity(nt as usize);
    for copy in 1..=nt {
        let forbidden = ((copy + nt_prev - 1) % nt) as u32 + 3;
        let center: u32 = copy as u32 + 2;
        let new_shell: Vec<u32> = (3..nt as u32 + 5)
            .filter(|&c| c != center && c != forbidden)
            .collect();
        debug_assert_eq!(new_shell.len() as u64, nt);
        let mut perm = vec![0u32; m as usize];
        perm[0] = 1;
        perm[1] = 2;
        perm[m as usize - 1] = center;
        for (idx, src) in (3..nt as u32 + 3).enumerate() {
            perm[src as usize - 1] = new_shell[idx];
        }
        for src in nt as u32 + 3..m {
            perm[src as usize - 1] = src + 2;
        }
        forbidden_colors.push(forbidden);
        permutations.push(perm);
    }
    // Copy the inner coloring into each subtree hanging below level t.
    let inner_width = |j: u32| integer_pow(n, j) as usize;
    for j in 0..=k {
        let level = t + j;
        let width = inner_width(j);
        let inner_level: Vec<u32> = tree.level_range(j).map(|v| inner.color(v)).collect();
        for (pos, v) in out_tree.level_range(level).enumerate() {
            let copy = pos / width;
            let inner_color = inner_level[pos % width];
            colors[v] = permutations[copy][inner_color as usize - 1];
        }
    }
    let coloring = Coloring::new(m + 2, colors)?;
    let out_spec = CtPropertySpec::new(t, m + 2, (3..3 + nt as u32).collect());
    has_ct_property(&out_tree, &coloring, &out_spec)?;
    let record = LiftRecord {
        input_palette: m,
        output_palette: m + 2,
        t,
        forbidden_colors,
        permutations,
    };
    match is_locating(&out_tree, &coloring)? {
        LocatingVerdict::Locating => Ok(Lifted {
            tree: out_tree,
            coloring,
            spec: out_spec,
            record,
        }),
        LocatingVerdict::CodeClash { u, w } => Err(ConstructError::VerificationFailed {
            stage: Stage::Lift(0),
            u,
            w,
        }),
        LocatingVerdict::ImproperEdge { parent, child } => {
            Err(ConstructError::VerificationFailed {
                stage: Stage::Lift(0),
                u: parent,
                w: child,
            })
        }
    }
}

/// Builds a locating coloring of `T(n,k)` by writing `k = a·t + i` with
/// `t <= i <= 2t-1`, starting from `base_coloring(n, i, t)` and lifting `a`
/// times. Every intermediate coloring is verified.
pub fn construct_coloring(n: u32, k: u32, t: u32) -> Result<Construction, ConstructError> {
    if n < 2 || t < 1 || k < t {
        return Err(ConstructError::InvalidParams {
            reason: format!("need n >= 2 and k >= t >= 1, got n={n}, k={k}, t={t}"),
        });
    }
    let i = t + (k % t);
    let a = (k - i) / t;
    let base = base_coloring(n, i, t)?;
    let base_record = base.record.clone();
    let (mut tree, mut coloring, mut spec) = (base.tree, base.coloring, base.spec);
    let mut lifts = Vec::with_capacity(a as usize);
    for stage in 0..a {
        match lift(&tree, &coloring, &spec) {
            Ok(lifted) => {
                tree = lifted.tree;
                coloring = lifted.coloring;
                spec = lifted.spec;
                lifts.push(lifted.record);
            }
            Err(ConstructError::VerificationFailed {
                stage: Stage::Lift(_),
                u,
                w,
            }) => {
                return Err(ConstructError::VerificationFailed {
                    stage: Stage::Lift(stage as usize),
                    u,
                    w,
                });
            }
            Err(e) => return Err(e),
        }
    }
    let trace = ConstructionTrace {
        n,
        k,
        t,
        base_depth: i,
        lift_count: a,
        base: base_record,
        lifts,
        final_palette: coloring.palette_size(),
    };
    Ok(Construction {
        tree,
        coloring,
        spec,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ct_property_direct_checks() {
        let tree = NaryTree::new(2, 2).unwrap();
        let coloring = Coloring::new(7, vec![7, 1, 2, 3, 4, 5, 6]).unwrap();
        let spec = CtPropertySpec::new(2, 7, [3, 4, 5, 6].into());
        assert_eq!(has_ct_property(&tree, &coloring, &spec), Ok(()));

        let bad = CtPropertySpec::new(2, 7, [3, 4, 5, 7].into());
        assert_eq!(
            has_ct_property(&tree, &coloring, &bad),
            Err(CtViolation::CenterColorInShellSet { color: 7 })
        );
    }

    #[test]
    fn ct_property_radius_one_skips_shell_conditions() {
        let tree = NaryTree::new(2, 1).unwrap();
        let coloring = Coloring::new(3, vec![3, 1, 2]).unwrap();
        let spec = CtPropertySpec::new(1, 3, [1, 2].into());
        assert_eq!(has_ct_property(&tree, &coloring, &spec), Ok(()));
    }

    #[test]
    fn base_cases() {
        let b = base_coloring(2, 2, 2).unwrap();
        assert_eq!(b.coloring.palette_size(), 7);
        assert!(b.coloring.palette_size() <= 11);
        assert!(is_locating(&b.tree, &b.coloring).unwrap().is_locating());

        let b = base_coloring(2, 3, 2).unwrap();
        assert!(b.coloring.palette_size() <= 15);
        assert!(is_locating(&b.tree, &b.coloring).unwrap().is_locating());

        let star = base_coloring(3, 1, 1).unwrap();
        assert_eq!(star.coloring.palette_size(), 4);
        assert!(is_locating(&star.tree, &star.coloring)
            .unwrap()
            .is_locating());
    }

    #[test]
    fn base_rejects_bad_ranges() {
        assert!(base_coloring(2, 4, 2).is_err());
        assert!(base_coloring(2, 1, 2).is_err());
        assert!(base_coloring(1, 1, 1).is_err());
    }

    #[test]
    fn normalize_identity_and_permuted() {
        let tree = NaryTree::new(2, 2).unwrap();
        let coloring = Coloring::new(7, vec![7, 1, 2, 3, 4, 5, 6]).unwrap();
        let spec = CtPropertySpec::new(2, 7, [3, 4, 5, 6].into());
        let (norm, nspec) = normalize_ct(&tree, &coloring, &spec).unwrap();
        assert_eq!(norm, coloring);
        assert_eq!(nspec, spec);

        // Same tree with a=3 and A={4,5,6,7}.
        let coloring = Coloring::new(7, vec![3, 1, 2, 4, 5, 6, 7]).unwrap();
        let spec = CtPropertySpec::new(2, 3, [4, 5, 6, 7].into());
        let (norm, nspec) = normalize_ct(&tree, &coloring, &spec).unwrap();
        assert_eq!(nspec.center_color, 7);
        assert_eq!(nspec.shell_t_colors, [3, 4, 5, 6].into());
        assert_eq!(has_ct_property(&tree, &norm, &nspec), Ok(()));
        assert!(is_locating(&tree, &norm).unwrap().is_locating());
    }

    #[test]
    fn normalize_rejects_small_palette() {
        // The star's n+1 colors leave no room for the normal form.
        let star = base_coloring(2, 1, 1).unwrap();
        assert_eq!(
            normalize_ct(&star.tree, &star.coloring, &star.spec),
            Err(ConstructError::PaletteTooSmall { m: 3, required: 5 })
        );
    }

    #[test]
    fn lift_from_small_base() {
        let b = base_coloring(2, 2, 2).unwrap();
        let lifted = lift(&b.tree, &b.coloring, &b.spec).unwrap();
        assert_eq!(lifted.tree.depth(), 4);
        assert_eq!(lifted.tree.vertex_count(), 31);
        assert_eq!(lifted.coloring.palette_size(), 9);
        assert!(is_locating(&lifted.tree, &lifted.coloring)
            .unwrap()
            .is_locating());
        // Each copy misses exactly its forbidden color.
        assert_eq!(lifted.record.forbidden_colors, vec![5, 6, 3, 4]);
    }

    #[test]
    fn lift_requires_normal_form() {
        let tree = NaryTree::new(2, 2).unwrap();
        let coloring = Coloring::new(7, vec![3, 1, 2, 4, 5, 6, 7]).unwrap();
        let spec = CtPropertySpec::new(2, 3, [4, 5, 6, 7].into());
        assert!(matches!(
            lift(&tree, &coloring, &spec),
            Err(ConstructError::InvalidParams { .. })
        ));
    }

    #[test]
    fn construct_decompositions() {
        let c = construct_coloring(2, 5, 2).unwrap();
        assert_eq!(c.trace.base_depth, 3);
        assert_eq!(c.trace.lift_count, 1);
        assert_eq!(c.trace.final_palette, c.trace.base.palette + 2);
        assert_eq!(c.tree.vertex_count(), 63);
        assert!(is_locating(&c.tree, &c.coloring).unwrap().is_locating());

        let pure = construct_coloring(2, 3, 3).unwrap();
        assert_eq!(pure.trace.lift_count, 0);
        assert_eq!(pure.trace.base_depth, 3);
        assert!(pure.trace.lifts.is_empty());
    }

    #[test]
    fn construct_radius_one_reports_palette_error() {
        // The star base has n+1 colors, too few for any lift.
        assert!(matches!(
            construct_coloring(2, 2, 1),
            Err(ConstructError::PaletteTooSmall { .. })
        ));
    }

    #[test]
    fn trace_json_shape() {
        let c = construct_coloring(2, 4, 2).unwrap();
        let json = c.trace.to_json();
        assert_eq!(json["decomposition"]["lifts"], 1);
        assert_eq!(json["final_palette"], 9);
        assert_eq!(
            json["lifts"][0]["forbidden_colors"]
                .as_array()
                .unwrap()
                .len(),
            4
        );
    }
}
