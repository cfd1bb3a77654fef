//! Property and randomized-invariant tests.

mod common;

use common::*;
use lochrom::construct::{base_coloring, construct_coloring, lift, normalize_ct};
use lochrom::solver::{chi_l_exact, SolveOutcome};
use lochrom::{
    bounds, color_codes, is_locating, is_proper, palm_census, twin_lower_bound, Coloring,
    LocatingVerdict, NaryTree, SolverConfig,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn small_tree_params() -> impl Strategy<Value = (u32, u32)> {
    prop_oneof![(2u32..=5, 1u32..=3), (6u32..=9, 1u32..=2),]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tree_structure_invariants((n, k) in small_tree_params()) {
        let tree = NaryTree::new(n, k).unwrap();
        let expected: usize = (0..=k).map(|j| (n as usize).pow(j)).sum();
        prop_assert_eq!(tree.vertex_count(), expected);
        for j in 0..=k {
            prop_assert_eq!(tree.level_range(j).len(), (n as usize).pow(j));
        }
        let palms = tree.palms();
        prop_assert_eq!(palms.len(), (n as usize).pow(k - 1));
        for palm in &palms {
            prop_assert_eq!(
                palm.leaf_vertices.clone(),
                tree.children(palm.branch_vertex).collect::<Vec<_>>()
            );
            for &leaf in &palm.leaf_vertices {
                prop_assert!(tree.is_leaf(leaf));
            }
        }
        // Root-centered distance sets are exactly the levels.
        for t in 0..=k {
            prop_assert_eq!(
                tree.level_set(0, t),
                tree.level_range(t).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn distance_symmetry_and_diameter((n, k) in (2u32..=4, 1u32..=3), seed in any::<u64>()) {
        let tree = NaryTree::new(n, k).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        for _ in 0..32 {
            let u = rng.gen_range(0..tree.vertex_count());
            let w = rng.gen_range(0..tree.vertex_count());
            let d = tree.distance(u, w);
            prop_assert_eq!(d, tree.distance(w, u));
            prop_assert!(d <= tree.diameter());
        }
        // Equality is achieved by leaves in distinct root subtrees.
        let first_leaf = tree.level_range(k).start;
        let last_leaf = tree.level_range(k).end - 1;
        prop_assert_eq!(tree.distance(first_leaf, last_leaf), 2 * k);
    }

    #[test]
    fn code_invariants((n, k) in (2u32..=3, 1u32..=3), seed in any::<u64>()) {
        let tree = NaryTree::new(n, k).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let v_count = tree.vertex_count();
        let m = rng.gen_range(2..=(v_count as u32).min(6));
        let coloring =
            Coloring::new(m, random_surjective_coloring(&mut rng, v_count, m)).unwrap();
        let codes = color_codes(&tree, &coloring).unwrap();
        for v in 0..v_count {
            prop_assert_eq!(codes.code(v)[coloring.color(v) as usize - 1], 0);
            prop_assert!(codes.code(v).iter().all(|&d| d <= tree.diameter()));
        }
    }

    #[test]
    fn relabel_never_changes_the_verdict((n, k) in (2u32..=3, 1u32..=3), seed in any::<u64>()) {
        let tree = NaryTree::new(n, k).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let v_count = tree.vertex_count();
        let m = rng.gen_range(2..=(v_count as u32).min(6));
        let coloring =
            Coloring::new(m, random_surjective_coloring(&mut rng, v_count, m)).unwrap();
        let verdict = is_locating(&tree, &coloring).unwrap();
        let mut perm: Vec<u32> = (1..=m).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let relabeled = coloring.relabel(&perm).unwrap();
        prop_assert_eq!(
            is_locating(&tree, &relabeled).unwrap().is_locating(),
            verdict.is_locating()
        );
        // A clash pair survives relabeling exactly (codes permute coordinates).
        if let LocatingVerdict::CodeClash { u, w } = verdict {
            prop_assert_eq!(
                is_locating(&tree, &relabeled).unwrap(),
                LocatingVerdict::CodeClash { u, w }
            );
        }
    }
}

#[test]
fn sibling_leaves_with_equal_colors_always_fail() {
    let params = [(2u32, 2u32), (2, 3), (3, 2), (4, 1), (3, 3)];
    let mut rng = rand::rngs::StdRng::seed_from_u64(42);
    for trial in 0..100 {
        let (n, k) = params[trial % params.len()];
        let tree = NaryTree::new(n, k).unwrap();
        let v_count = tree.vertex_count();
        let m = rng.gen_range(3..=(v_count as u32).min(8));
        let mut colors = random_surjective_coloring(&mut rng, v_count, m);
        // Force one palm to repeat a color on two of its leaves.
        let palms = tree.palms();
        let palm = &palms[rng.gen_range(0..palms.len())];
        let shared = rng.gen_range(1..=m);
        colors[palm.leaf_vertices[0]] = shared;
        colors[palm.leaf_vertices[1]] = shared;
        for c in 1..=m {
            if !colors.contains(&c) {
                // keep every class non-empty without touching the twin pair
                let slot = (0..v_count)
                    .find(|v| !palm.leaf_vertices[..2].contains(v))
                    .unwrap();
                colors[slot] = c;
            }
        }
        let Ok(coloring) = Coloring::new(m, colors) else {
            continue;
        };
        let verdict = is_locating(&tree, &coloring).unwrap();
        assert!(!verdict.is_locating(), "trial {trial} on T({n},{k})");
        // The twins' codes are equal entry-wise.
        let codes = color_codes(&tree, &coloring).unwrap();
        assert_eq!(
            codes.code(palm.leaf_vertices[0]),
            codes.code(palm.leaf_vertices[1])
        );
    }
}

#[test]
fn census_multiplicities_sum_to_palm_count() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    for (n, k) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3)] {
        let tree = NaryTree::new(n, k).unwrap();
        let m = n + 3;
        'trials: for _ in 0..20 {
            // Proper coloring with distinct sibling leaves: internal vertices
            // pick anything but the parent color, palm leaves pick distinct
            // colors avoiding the branch color.
            let mut colors = vec![0u32; tree.vertex_count()];
            colors[0] = rng.gen_range(1..=m);
            for level in 1..k {
                for v in tree.level_range(level) {
                    let pc = colors[tree.parent(v).unwrap()];
                    let mut c = rng.gen_range(1..=m - 1);
                    if c >= pc {
                        c += 1;
                    }
                    colors[v] = c;
                }
            }
            for palm in tree.palms() {
                let branch = colors[palm.branch_vertex];
                let mut avail: Vec<u32> = (1..=m).filter(|&c| c != branch).collect();
                for &leaf in &palm.leaf_vertices {
                    let at = rng.gen_range(0..avail.len());
                    colors[leaf] = avail.swap_remove(at);
                }
            }
            let Ok(coloring) = Coloring::new(m, colors) else {
                continue 'trials;
            };
            assert!(is_proper(&tree, &coloring));
            let census = palm_census(&tree, &coloring).unwrap();
            let total: u64 = census.values().sum();
            assert_eq!(total, (n as u64).pow(k - 1));
        }
    }
}

#[test]
fn constructed_colorings_verify_everywhere() {
    for (n, i, t) in [
        (2u32, 2u32, 2u32),
        (2, 3, 2),
        (3, 2, 2),
        (2, 3, 3),
        (3, 1, 1),
    ] {
        let base = base_coloring(n, i, t).unwrap();
        assert!(is_locating(&base.tree, &base.coloring)
            .unwrap()
            .is_locating());
        assert!(lochrom::has_ct_property(&base.tree, &base.coloring, &base.spec).is_ok());
        let formula = bounds::base_palette_formula(n as u64, t as u64);
        assert!(
            base.coloring.palette_size() as u64 <= 2 + formula.to_string().parse::<u64>().unwrap()
        );
    }
}

#[test]
fn lift_properties_hold_by_direct_scan() {
    for (n, i, t) in [(2u32, 2u32, 2u32), (3, 2, 2), (2, 3, 3)] {
        let base = base_coloring(n, i, t).unwrap();
        let lifted = lift(&base.tree, &base.coloring, &base.spec).unwrap();
        let tree = &lifted.tree;
        let coloring = &lifted.coloring;
        let m_out = coloring.palette_size();
        assert_eq!(m_out, base.coloring.palette_size() + 2);

        // The new root is the unique vertex of its color.
        assert_eq!(coloring.color(0), m_out);
        assert_eq!(
            (0..tree.vertex_count())
                .filter(|&v| coloring.color(v) == m_out)
                .count(),
            1
        );

        // Each copy misses exactly its forbidden color, which every other
        // copy uses.
        let nt = (n as usize).pow(t);
        let copy_of = |v: usize| -> Option<usize> {
            let level = tree.level_of(v);
            if level < t {
                return None;
            }
            let width = (n as usize).pow(level - t);
            Some(tree.position_in_level(v) / width)
        };
        let mut used_in_copy = vec![vec![false; m_out as usize + 1]; nt];
        for v in 0..tree.vertex_count() {
            if let Some(c) = copy_of(v) {
                used_in_copy[c][coloring.color(v) as usize] = true;
            }
        }
        for (copy, &forbidden) in lifted.record.forbidden_colors.iter().enumerate() {
            for (other, used) in used_in_copy.iter().enumerate() {
                if other == copy {
                    assert!(
                        !used[forbidden as usize],
                        "copy {copy} must miss {forbidden}"
                    );
                } else {
                    assert!(
                        used[forbidden as usize],
                        "copy {other} must use {forbidden}"
                    );
                }
            }
        }

        // Distance formula spot-check: whenever the nearest forbidden-color
        // vertex sits at level 2t in an adjacent copy, the code entry is
        // (r - t) + 2 + t.
        let codes = color_codes(tree, coloring).unwrap();
        for v in 0..tree.vertex_count() {
            let Some(copy) = copy_of(v) else { continue };
            let r = tree.level_of(v);
            if r <= t {
                continue;
            }
            let a = lifted.record.forbidden_colors[copy];
            let d = codes.code(v)[a as usize - 1];
            let mut adjacent_at_2t = u32::MAX;
            for w in tree.level_range(2 * t) {
                if coloring.color(w) == a {
                    let wc = copy_of(w).unwrap();
                    if wc + 1 == copy || copy + 1 == wc {
                        adjacent_at_2t = adjacent_at_2t.min(tree.distance(v, w));
                    }
                }
            }
            if adjacent_at_2t == d {
                assert_eq!(d, (r - t) + 2 + t, "vertex {v} in copy {copy}");
            }
        }
    }
}

#[test]
fn normalize_permutes_code_coordinates_exactly() {
    let tree = NaryTree::new(2, 2).unwrap();
    let coloring = Coloring::new(7, vec![4, 1, 2, 5, 6, 7, 3]).unwrap();
    let spec = lochrom::CtPropertySpec::new(2, 4, [3, 5, 6, 7].into());
    let (norm, nspec) = normalize_ct(&tree, &coloring, &spec).unwrap();
    assert_eq!(nspec.center_color, 7);

    // Recover the palette permutation from the two assignments.
    let mut perm = [0u32; 7];
    for v in 0..tree.vertex_count() {
        perm[coloring.color(v) as usize - 1] = norm.color(v);
    }
    let before = color_codes(&tree, &coloring).unwrap();
    let after = color_codes(&tree, &norm).unwrap();
    for v in 0..tree.vertex_count() {
        for c in 1..=7usize {
            assert_eq!(
                before.code(v)[c - 1],
                after.code(v)[perm[c - 1] as usize - 1]
            );
        }
    }
    assert!(is_locating(&tree, &norm).unwrap().is_locating());
}

#[test]
fn symmetry_pruning_never_changes_chi() {
    // Every complete n-ary tree with at most 15 vertices.
    let instances = [
        (2u32, 1u32),
        (3, 1),
        (4, 1),
        (5, 1),
        (6, 1),
        (7, 1),
        (8, 1),
        (9, 1),
        (10, 1),
        (11, 1),
        (12, 1),
        (13, 1),
        (14, 1),
        (2, 2),
        (3, 2),
        (2, 3),
    ];
    for (n, k) in instances {
        let tree = NaryTree::new(n, k).unwrap();
        assert!(tree.vertex_count() <= 15);
        let pruned = chi_l_exact(&tree, &SolverConfig::default());
        let plain = chi_l_exact(
            &tree,
            &SolverConfig {
                sibling_symmetry: false,
                ..SolverConfig::default()
            },
        );
        match (pruned, plain) {
            (SolveOutcome::Exact(a), SolveOutcome::Exact(b)) => {
                assert_eq!(a.chi_l, b.chi_l, "T({n},{k})");
            }
            _ => panic!("both searches must complete on T({n},{k})"),
        }
    }
}

#[test]
fn solver_respects_twin_bound_and_known_values() {
    for (n, k) in [(2u32, 1u32), (3, 1), (2, 2), (3, 2), (2, 3)] {
        let tree = NaryTree::new(n, k).unwrap();
        match chi_l_exact(&tree, &SolverConfig::default()) {
            SolveOutcome::Exact(r) => {
                assert!(r.chi_l >= twin_lower_bound(&tree));
                let expected = if k == 1 { n + 1 } else { n + k - 1 };
                assert_eq!(r.chi_l, expected);
                assert!(is_locating(&tree, &r.witness).unwrap().is_locating());
            }
            _ => panic!(),
        }
    }
}

#[test]
fn construction_chain_stays_locating() {
    for (n, k, t) in [(2u32, 5u32, 2u32), (2, 7, 2), (3, 4, 2)] {
        let c = construct_coloring(n, k, t).unwrap();
        assert!(is_locating(&c.tree, &c.coloring).unwrap().is_locating());
        assert_eq!(
            c.trace.final_palette,
            c.trace.base.palette + 2 * c.trace.lift_count
        );
        // Every lift record adds exactly two colors and omits one color per copy.
        let mut palette = c.trace.base.palette;
        for l in &c.trace.lifts {
            assert_eq!(l.input_palette, palette);
            assert_eq!(l.output_palette, palette + 2);
            for perm in &l.permutations {
                let mut targets: Vec<u32> = perm.clone();
                targets.sort_unstable();
                targets.dedup();
                assert_eq!(targets.len(), l.input_palette as usize);
                assert!(targets.iter().all(|&c| c >= 1 && c <= l.input_palette + 1));
            }
            palette += 2;
        }
    }
}

#[test]
fn bounds_ratio_decreases_in_k() {
    // Finite o(k) behavior on a small sample beyond the acceptance grid.
    let r1 = bounds::recursive_upper_bound(3, 50).unwrap();
    let r2 = bounds::recursive_upper_bound(3, 500).unwrap();
    assert!(r1.overall as u128 * 500 > r2.overall as u128 * 50);
}

#[test]
fn recursive_bound_is_witnessed_constructively() {
    // For every grid cell the constructor realizes a locating coloring
    // within 2 colors of the formula bound 2a + f(n,t) at the same radius.
    use num_traits::ToPrimitive;
    for (n, t) in [(2u32, 2u32), (2, 3), (3, 2)] {
        for a in 0..=2u32 {
            for i in t..=2 * t - 1 {
                let k = a * t + i;
                let c = construct_coloring(n, k, t).unwrap();
                let f = bounds::base_palette_formula(n as u64, t as u64)
                    .to_u64()
                    .unwrap();
                let bound_t = 2 * a as u64 + f;
                assert!(
                    (c.trace.final_palette as u64) <= bound_t + 2,
                    "construct({n},{k},{t}) uses {} colors, formula bound {bound_t}",
                    c.trace.final_palette
                );
            }
        }
    }
}

#[test]
fn palm_type_count_matches_enumeration() {
    for n in 2u64..=4 {
        for c in (n + 1)..=8 {
            let mut count = 0u64;
            // branch color x, then any n-subset of the remaining colors
            let sets = |avail: u64, n: u64| -> u64 {
                // enumerate subsets by bitmask over c-1 colors
                let mut total = 0;
                for mask in 0u32..(1 << avail) {
                    if mask.count_ones() as u64 == n {
                        total += 1;
                    }
                }
                total
            };
            for _branch in 1..=c {
                count += sets(c - 1, n);
            }
            assert_eq!(
                bounds::palm_type_count(c, n).unwrap().to_string(),
                count.to_string(),
                "c={c}, n={n}"
            );
        }
    }
}
