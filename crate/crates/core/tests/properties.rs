use std::collections::BTreeMap;

use proofnet::cut::{find_redexes, normalize, reduce_step, Strategy as Reduction};
use proofnet::generator::{permute_rules, random_proof, random_ps, GenParams};
use proofnet::graph::{canonical_form, iso, parse_ps, to_dsl, to_json};
use proofnet::sequent::{parse_proof, proof_to_text};
use proofnet::sequentialize::splitting_candidates;
use proofnet::switching::{
    check, components_and_acyclicity, switching_graph, switchings, Criterion, Filter,
};
use proofnet::*;
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["X", "Y"]).prop_map(Formula::atom),
        prop::sample::select(vec!["X", "Y"]).prop_map(Formula::dual_atom),
        Just(Formula::One),
        Just(Formula::Bottom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::tensor(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::parr(a, b)),
        ]
    })
}

fn params(frag: FragmentId, seed: u64) -> GenParams {
    GenParams { max_rules: 10, max_nodes: 10, ..GenParams::new(frag, seed) }
}

fn holds(ps: &ProofStructure, c: Criterion) -> bool {
    check(ps, c).unwrap().holds
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn negation_is_an_involution(f in formula()) {
        prop_assert_eq!(f.negate().negate(), f);
    }

    #[test]
    fn formulas_print_and_parse_back(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn starred_grammar_is_closed_under_negation(f in formula()) {
        if f.in_fragment(FragmentId::BtenllStar).is_some() {
            prop_assert!(f.negate().in_fragment(FragmentId::BtenllStar).is_some());
        }
        if f.in_fragment(FragmentId::Mll).is_some() {
            prop_assert!(f.in_fragment(FragmentId::Btenll).is_some());
        }
    }

    #[test]
    fn structures_round_trip_through_both_formats(seed in any::<u64>()) {
        let ps = random_ps(&GenParams { cut_probability: 0.3, ..params(FragmentId::MllU, seed) });
        prop_assert_eq!(&parse_ps(&to_json(&ps)).unwrap(), &ps);
        prop_assert_eq!(&parse_ps(&to_dsl(&ps)).unwrap(), &ps);
    }

    #[test]
    fn canonical_form_ignores_ids(seed in any::<u64>(), shift in 1u32..50) {
        let ps = random_ps(&params(FragmentId::MllU, seed));
        let nodes: BTreeMap<NodeId, NodeId> = ps.nodes.keys().map(|n| (*n, NodeId(n.0 * 3 + shift))).collect();
        let arcs: BTreeMap<ArcId, ArcId> = ps.arcs.keys().map(|a| (*a, ArcId(a.0 * 7 + shift))).collect();
        let moved = ps.relabel(&nodes, &arcs);
        prop_assert_eq!(canonical_form(&moved), canonical_form(&ps));
    }

    #[test]
    fn proofs_print_and_parse_back(seed in any::<u64>()) {
        let pi = random_proof(&GenParams { cut_probability: 0.3, ..params(FragmentId::MllU, seed) });
        let back = parse_proof(&proof_to_text(&pi, Some(FragmentId::MllU))).unwrap();
        prop_assert_eq!(back.proof, pi);
    }

    #[test]
    fn acyclic_switching_graphs_count_components(seed in any::<u64>()) {
        let ps = random_ps(&params(FragmentId::MllU, seed));
        for phi in switchings(&ps, Filter::All).unwrap() {
            let g = switching_graph(&ps, &phi);
            let an = components_and_acyclicity(&g);
            let euler = g.nodes.len() as i64 - g.arcs.len() as i64;
            if an.acyclic {
                prop_assert_eq!(an.cc as i64, euler);
            } else {
                prop_assert!((an.cc as i64) > euler);
            }
        }
    }

    #[test]
    fn desequentializations_satisfy_accw(seed in any::<u64>()) {
        let pi = random_proof(&GenParams { cut_probability: 0.3, ..params(FragmentId::MllU, seed) });
        let ps = desequentialize(&pi).ps;
        prop_assert!(holds(&ps, Criterion::Accw));
        prop_assert!(is_sequential_oracle(&ps).is_some());
    }

    #[test]
    fn reduction_steps_preserve_accw(seed in any::<u64>()) {
        let pi = random_proof(&GenParams { cut_probability: 0.5, ..params(FragmentId::MllU, seed) });
        let mut cur = desequentialize(&pi).ps;
        loop {
            let (redexes, clashes) = find_redexes(&cur);
            prop_assert!(clashes.is_empty());
            let Some(r) = redexes.first() else { break };
            cur = reduce_step(&cur, r).unwrap();
            prop_assert!(holds(&cur, Criterion::Accw));
        }
        prop_assert_eq!(cur.count(Label::Cut), 0);
    }

    #[test]
    fn strategies_agree_on_normal_forms(seed in any::<u64>(), s in any::<u64>()) {
        let pi = random_proof(&GenParams { cut_probability: 0.5, ..params(FragmentId::MllU, seed) });
        let ps = desequentialize(&pi).ps;
        let a = normalize(&ps, Reduction::Deterministic).normal_form;
        let b = normalize(&ps, Reduction::RandomSeeded(s)).normal_form;
        prop_assert!(iso(&a, &b));
    }

    #[test]
    fn wten_is_cw_forall(seed in any::<u64>()) {
        let ps = random_ps(&params(FragmentId::MllU, seed));
        prop_assert_eq!(ps.is_wten(), holds(&ps, Criterion::CwForall));
    }

    #[test]
    fn split_parts_keep_accw(seed in any::<u64>()) {
        let pi = random_proof(&params(FragmentId::Btenll, seed));
        let ps = desequentialize(&pi).ps;
        let terminal_peelable = ps
            .terminal_nodes()
            .iter()
            .any(|n| matches!(ps.label(*n), Label::Bot | Label::Parr));
        if !terminal_peelable {
            prop_assert_eq!(ps.components().len(), 1);
            let splits = splitting_candidates(&ps);
            let nodes: std::collections::BTreeSet<NodeId> = splits.iter().map(|s| s.node).collect();
            prop_assert_eq!(nodes.len(), splits.len(), "each node splits in one way");
            for s in splits {
                prop_assert!(holds(&s.left, Criterion::Accw) && holds(&s.right, Criterion::Accw));
            }
        }
    }

    #[test]
    fn btenll_round_trip(seed in any::<u64>()) {
        let pi = random_proof(&params(FragmentId::Btenll, seed));
        let ps = desequentialize(&pi).ps.strip_types();
        let back = sequentialize_wten(&ps).unwrap();
        prop_assert!(iso(&desequentialize(&back).ps.strip_types(), &ps));
    }

    #[test]
    fn canonical_jumps_are_correct(seed in any::<u64>()) {
        let pi = random_proof(&params(FragmentId::Btenll, seed));
        let ps = desequentialize(&pi).ps;
        let erasing = ps.erasing_nodes();
        let m = *ps.nodes.keys().find(|n| !erasing.contains(n) && ps.label(**n) != Label::Dot).unwrap();
        let j = canonical_jumps_btenll(&ps, m).unwrap();
        prop_assert!(j.jump_correct);
        let (proof, _) = sequentialize_btenll(&ps, m).unwrap();
        prop_assert!(proofnet::sequent::deseq_relation_holds(&proof, &j.ps).unwrap());
    }

    #[test]
    fn permutations_preserve_the_class(seed in any::<u64>(), s in any::<u64>()) {
        let pi = random_proof(&params(FragmentId::MllU, seed));
        let q = permute_rules(&pi, s);
        prop_assert!(check_proof(&q, FragmentId::MllU).ok);
        prop_assert!(proofs_equivalent(&pi, &q));
    }

    #[test]
    fn icomll_sequentializes(seed in any::<u64>()) {
        let pi = random_proof(&params(FragmentId::Icomll, seed));
        let ps = desequentialize(&pi).ps;
        let (proof, j) = sequentialize_icomll(&ps).unwrap();
        prop_assert!(j.jump_correct);
        prop_assert!(check_proof(&proof, FragmentId::Icomll).ok);
        prop_assert!(iso(&desequentialize(&proof).ps, &ps));
    }
}
