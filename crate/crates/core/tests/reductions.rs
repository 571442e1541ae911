use proptest::prelude::*;

use rainbow_core::bcc::{forced_sides, solve_bcc, verify_bipartition, BccInstance, Bipartitioning};
use rainbow_core::equivalence::{
    bipartite_to_matrix, bipartite_to_packing, colouring_to_matrix, colouring_to_packing,
    decide_bipartite_rainbow, decide_matrix_exhaustive, decide_packing_exhaustive,
    rc2_core_to_bipartite, verify_bipartite_rainbow, verify_matrix, verify_packing,
    BipartiteInstance,
};
use rainbow_core::exact::solve_rc2;
use rainbow_core::graph::Graph;
use rainbow_core::rainbow::verify_rainbow_with_budget;
use rainbow_core::reduction::{
    assignment_to_bipartition, bcc_to_rc2, bipartition_to_assignment, bipartition_to_colouring,
    colouring_to_bipartition, sat_to_bcc, CnfFormula, SatAssignment,
};

const BUDGET: u64 = 10_000_000;

fn bcc_instance() -> impl Strategy<Value = BccInstance> {
    (2usize..=5).prop_flat_map(|n| {
        let sets = proptest::collection::vec(0u32..1 << n, 1..=3);
        let pairs = n * (n - 1) / 2;
        (Just(n), sets, proptest::collection::vec(0u8..4, pairs)).prop_map(|(n, sets, pick)| {
            let family: Vec<Vec<usize>> = sets
                .iter()
                .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
                .collect();
            let inside =
                |u: usize, v: usize| family.iter().any(|t| t.contains(&u) && t.contains(&v));
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            // mostly pairs some set can cover, occasionally one no set can
            let edges = all
                .zip(pick)
                .filter(|&((u, v), p)| if inside(u, v) { p >= 2 } else { p == 3 })
                .map(|(e, _)| e);
            BccInstance::new(Graph::new(n, edges).unwrap(), family).unwrap()
        })
    })
}

/// Every choice of proper subsets, checked edge by edge.
fn brute_bcc(inst: &BccInstance) -> bool {
    let sizes: Vec<usize> = inst.family.iter().map(Vec::len).collect();
    let total: u32 = sizes.iter().map(|&s| s as u32).sum();
    'outer: for code in 0u64..1 << total {
        let mut shift = 0;
        let mut masks = Vec::new();
        for &s in &sizes {
            let m = (code >> shift) & ((1 << s) - 1);
            if s > 0 && m == (1 << s) - 1 {
                continue 'outer;
            }
            masks.push(m);
            shift += s;
        }
        let side = |i: usize, v: usize| {
            let pos = inst.family[i].iter().position(|&w| w == v);
            pos.map(|p| masks[i] >> p & 1 == 1)
        };
        let covered = inst.base.edges().iter().all(|&(u, v)| {
            (0..inst.family.len())
                .any(|i| matches!((side(i, u), side(i, v)), (Some(a), Some(b)) if a != b))
        });
        if covered {
            return true;
        }
    }
    false
}

fn bipartite_instance(max_cells: usize) -> impl Strategy<Value = BipartiteInstance> {
    (1usize..=4, 2usize..=4)
        .prop_filter("cells", move |&(a, b)| a * b <= max_cells)
        .prop_flat_map(|(n_a, n_b)| {
            proptest::collection::vec(0u8..3, n_a * n_b).prop_map(move |bits| {
                let edges = (0..n_a)
                    .flat_map(|a| (0..n_b).map(move |b| (a, b)))
                    .zip(bits)
                    .filter(|&(_, p)| p > 0)
                    .map(|(e, _)| e)
                    .collect();
                BipartiteInstance::new(n_a, n_b, edges).unwrap()
            })
        })
}

fn brute_bipartite(h: &BipartiteInstance) -> bool {
    let m = h.edges.len();
    (0u32..1 << m).any(|mask| {
        let col = |a: usize, b: usize| {
            h.edges
                .iter()
                .position(|&e| e == (a, b))
                .map(|i| mask >> i & 1)
        };
        (0..h.n_b).all(|b1| {
            (b1 + 1..h.n_b).all(|b2| {
                (0..h.n_a).any(|a| matches!((col(a, b1), col(a, b2)), (Some(x), Some(y)) if x != y))
            })
        })
    })
}

fn cnf() -> impl Strategy<Value = CnfFormula> {
    (3usize..=4).prop_flat_map(|n| {
        let vars = proptest::sample::subsequence((1..=n as i32).collect::<Vec<_>>(), 3);
        let clause =
            (vars, proptest::collection::vec(any::<bool>(), 3)).prop_map(|(vars, signs)| {
                let mut c = [0i32; 3];
                for i in 0..3 {
                    c[i] = if signs[i] { vars[i] } else { -vars[i] };
                }
                c
            });
        proptest::collection::vec(clause, 1..=3).prop_map(move |cs| CnfFormula::new(n, cs).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bcc_solver_matches_exhaustive(inst in bcc_instance()) {
        let sol = solve_bcc(&inst, BUDGET).unwrap();
        prop_assert_eq!(sol.is_some(), brute_bcc(&inst));
        if let Some(x) = sol {
            let (ok, uncovered) = verify_bipartition(&inst, &x).unwrap();
            prop_assert!(ok, "uncovered {:?}", uncovered);
        }
    }

    #[test]
    fn forced_sides_hold_in_every_solution(inst in bcc_instance()) {
        let Some(forced) = forced_sides(&inst) else {
            prop_assert!(!brute_bcc(&inst));
            return Ok(());
        };
        if let Some(x) = solve_bcc(&inst, BUDGET).unwrap() {
            // read sides with each set's first member taken as "in X"
            let side = |s: usize, v: usize| x.contains(s, v) == x.contains(s, inst.family[s][0]);
            for ((s1, u), (s2, v), differ) in forced {
                prop_assert_eq!(side(s1, u) != side(s2, v), differ);
            }
        }
    }

    #[test]
    fn bcc_and_rc2_agree(inst in bcc_instance()) {
        let (g, labels) = bcc_to_rc2(&inst);
        let non_edges = {
            let n = inst.base.vertex_count();
            n * (n - 1) / 2 - inst.base.edge_count()
        };
        prop_assert_eq!(g.vertex_count(), 2 * inst.base.vertex_count() + inst.family.len() + non_edges);

        let x = solve_bcc(&inst, BUDGET).unwrap();
        let c = solve_rc2(&g).unwrap();
        prop_assert_eq!(x.is_some(), c.is_some());
        if let Some(x) = x {
            let col = bipartition_to_colouring(&inst, &labels, &g, &x).unwrap();
            prop_assert!(verify_rainbow_with_budget(&g, &col, 2).unwrap().connected);
        }
        if let Some(c) = c {
            let back = colouring_to_bipartition(&inst, &labels, &g, &c).unwrap();
            prop_assert!(verify_bipartition(&inst, &back).unwrap().0);
        }

        let h = rc2_core_to_bipartite(&g, &labels).unwrap();
        prop_assert_eq!(decide_bipartite_rainbow(&h, BUDGET).unwrap().is_some(), solve_rc2(&g).unwrap().is_some());
    }

    #[test]
    fn sat_gadget_sizes_and_lifts(phi in cnf()) {
        let (n, m) = (phi.num_vars(), phi.clauses().len());
        let (inst, labels) = sat_to_bcc(&phi);
        prop_assert_eq!(inst.base.vertex_count(), 7 * n + 2 * m);
        prop_assert_eq!(inst.family.len(), 2 * n + 3 * m);

        let sat = phi.find_satisfying();
        let x = solve_bcc(&inst, BUDGET).unwrap();
        prop_assert_eq!(sat.is_some(), x.is_some());
        if let Some(eval) = sat {
            let x = assignment_to_bipartition(&phi, &labels, &eval).unwrap();
            prop_assert!(verify_bipartition(&inst, &x).unwrap().0);
        }
        if let Some(x) = x {
            let eval = bipartition_to_assignment(&phi, &inst, &labels, &x).unwrap();
            prop_assert!(phi.is_satisfied_by(&eval));
        }
    }

    #[test]
    fn bipartite_matrix_packing_agree(h in bipartite_instance(12)) {
        let col = decide_bipartite_rainbow(&h, BUDGET).unwrap();
        prop_assert_eq!(col.is_some(), brute_bipartite(&h));

        let mat = bipartite_to_matrix(&h);
        let pack = bipartite_to_packing(&h);
        prop_assert_eq!(decide_matrix_exhaustive(&mat).unwrap().is_some(), col.is_some());
        prop_assert_eq!(decide_packing_exhaustive(&pack).unwrap().is_some(), col.is_some());
        if let Some(col) = col {
            prop_assert!(verify_bipartite_rainbow(&h, &col));
            prop_assert!(verify_matrix(&mat, &colouring_to_matrix(&h, &col)).unwrap());
            prop_assert!(verify_packing(&pack, &colouring_to_packing(&h, &col)).unwrap().0);
        }
    }
}

#[test]
fn unsatisfiable_formula_has_no_bipartitioning() {
    let clauses = (0..8)
        .map(|m: i32| [1, 2, 3].map(|v| if m >> (v - 1) & 1 == 1 { -v } else { v }))
        .collect();
    let phi = CnfFormula::new(3, clauses).unwrap();
    assert!(phi.find_satisfying().is_none());
    let (inst, _) = sat_to_bcc(&phi);
    assert!(solve_bcc(&inst, BUDGET).unwrap().is_none());
}

#[test]
fn wrong_bipartition_does_not_lift() {
    let phi = CnfFormula::new(3, vec![[1, 2, 3]]).unwrap();
    let (inst, labels) = sat_to_bcc(&phi);
    let empty = Bipartitioning::new(vec![Vec::new(); inst.family.len()]);
    assert!(bipartition_to_assignment(&phi, &inst, &labels, &empty).is_err());
    let eval = SatAssignment::new(vec![false, false, false]);
    let x = assignment_to_bipartition(&phi, &labels, &eval).unwrap();
    assert!(!verify_bipartition(&inst, &x).unwrap().0);
}
