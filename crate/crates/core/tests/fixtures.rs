use std::collections::BTreeMap;
use std::path::PathBuf;

use proofnet::graph::{iso, parse_ps};
use proofnet::sequent::parse_proof;
use proofnet::sequentialize::splitting_candidates;
use proofnet::switching::{check, output_stats, CheckOptions, Criterion};
use proofnet::*;

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn ps(name: &str) -> ProofStructure {
    parse_ps(&std::fs::read_to_string(path(name)).unwrap()).unwrap()
}

fn proof(name: &str) -> SequentProof {
    parse_proof(&std::fs::read_to_string(path(name)).unwrap()).unwrap().proof
}

fn holds(ps: &ProofStructure, c: Criterion) -> bool {
    check(ps, c).unwrap().holds
}

#[test]
fn fixtures_validate_in_their_fragments() {
    for (name, frag) in [
        ("bot_tensor.ps", FragmentId::MllU),
        ("regnier.ps", FragmentId::MllU),
        ("counter_int.ps", FragmentId::Imll),
        ("btenll_jumps.ps", FragmentId::Btenll),
        ("icomll_jumps.ps", FragmentId::Icomll),
        ("wten_cut.ps", FragmentId::MllU),
    ] {
        let r = ps(name).validate(Some(frag));
        assert!(r.ok, "{name}: {r}");
    }
}

#[test]
fn bot_tensor_matches_its_proof() {
    let r = ps("bot_tensor.ps");
    assert!(iso(&r, &desequentialize(&proof("bot_tensor.proof")).ps));
    assert!(holds(&r, Criterion::Accw));
    let w = check(&r, Criterion::Wten).unwrap();
    assert!(!w.holds);
    let witness = w.witness.unwrap();
    assert_eq!((witness.node, witness.arc), (NodeId(4), ArcId(0)));
}

#[test]
fn bot_tensor_splits_three_ways() {
    let r = ps("bot_tensor.ps");
    let splits = splitting_candidates(&r);
    assert_eq!(splits.len(), 3);
    let good: Vec<_> = splits
        .iter()
        .filter(|s| holds(&s.left, Criterion::Accw) && holds(&s.right, Criterion::Accw))
        .collect();
    assert_eq!(good.len(), 1);
    assert_eq!(good[0].left.count(Label::One), 1);
    assert_eq!(good[0].right.count(Label::One), 1);
}

#[test]
fn counterexamples_are_correct_but_not_sequential() {
    for name in ["regnier.ps", "counter_int.ps"] {
        let r = ps(name);
        assert!(holds(&r, Criterion::Accw), "{name}");
        assert!(!r.is_wten(), "{name}");
        assert!(is_sequential_oracle(&r).is_none(), "{name}");
        assert!(matches!(sequentialize_wten(&r), Err(Error::NotWten { .. })), "{name}");
    }
    let stats = output_stats(&ps("counter_int.ps"), &CheckOptions::default()).unwrap();
    assert_eq!(stats.outputs, 1);
    assert!(stats.cc_law_holds());
}

#[test]
fn regnier_differs_from_bot_tensor() {
    assert!(!iso(&ps("regnier.ps"), &ps("bot_tensor.ps")));
}

#[test]
fn btenll_canonical_jumps() {
    let r = ps("btenll_jumps.ps");
    let erasing = r.erasing_nodes();
    assert_eq!(erasing.len(), 3);
    for m in r.nodes.keys().filter(|n| !erasing.contains(n) && r.label(**n) != Label::Dot) {
        let j = canonical_jumps_btenll(&r, *m).unwrap();
        assert_eq!(j.ps.jumps, BTreeMap::from([(NodeId(4), NodeId(3)), (NodeId(5), NodeId(3))]));
        assert!(j.jump_total && j.jump_correct);
        let (pi, jumped) = sequentialize_btenll(&r, *m).unwrap();
        assert_eq!(jumped, j);
        assert!(iso(&desequentialize(&pi).ps, &r));
    }
}

#[test]
fn icomll_canonical_jumps() {
    let r = ps("icomll_jumps.ps");
    let j = canonical_jumps_icomll(&r).unwrap();
    assert_eq!(j.ps.jumps, BTreeMap::from([(NodeId(0), NodeId(3)), (NodeId(5), NodeId(3))]));
    assert!(j.jump_correct);
    let (pi, _) = sequentialize_icomll(&r).unwrap();
    assert!(check_proof(&pi, FragmentId::Icomll).ok);
    assert!(iso(&desequentialize(&pi).ps, &r));
}

#[test]
fn wten_cut_sequentializes() {
    let r = ps("wten_cut.ps");
    assert!(r.is_wten());
    assert!(holds(&r, Criterion::Accw));
    assert!(holds(&r, Criterion::CwForall));
    let pi = sequentialize_wten(&r).unwrap();
    assert!(iso(&desequentialize(&pi).ps, &r));
    assert!(is_sequential_oracle(&r).is_some());
}

#[test]
fn permuted_proofs_are_equivalent() {
    let (a, b) = (proof("bot_below.proof"), proof("bot_above.proof"));
    assert_ne!(a, b);
    assert!(check_proof(&a, FragmentId::Btenll).ok);
    assert!(proofs_equivalent(&a, &b));
}
