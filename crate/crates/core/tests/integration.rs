use burnside::abgrp::{AbElem, FinAbGroup};
use burnside::burncalc::cache::Cache;
use burnside::burncalc::{burn_eq, header_b, present_b, present_bc, BurnVerdict};
use burnside::io::{self, ClassFile, GroupLiteral, SymbolLiteral};
use burnside::models::{product_trivial_pm, projective_space_action};
use burnside::symb::{CContext, ClassVector, FieldData};
use proptest::prelude::*;

fn ch(x: u64) -> AbElem {
    AbElem(vec![x])
}

#[test]
fn class_files_round_trip() {
    let g = FinAbGroup::cyclic(5);
    let act = projective_space_action(&g, &[ch(0), ch(1), ch(3)]).unwrap();
    let c = act.class_b().unwrap();
    let file = ClassFile::from_b(&g, 2, &c);
    let text = serde_json::to_string(&file).unwrap();
    let back: ClassFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_b().unwrap(), c);
}

#[test]
fn action_files_round_trip() {
    let g = FinAbGroup::cyclic(5);
    let act = projective_space_action(&g, &[ch(0), ch(1), ch(3)]).unwrap();
    let (blown, _) = act.star_subdivide(&[1, 2]).unwrap();
    let back = io::parse_action(&io::action_json(&blown)).unwrap();
    assert_eq!(back.class_b().unwrap(), blown.class_b().unwrap());
    assert_eq!(back.fan(), blown.fan());
}

#[test]
fn cached_presentations_decide_like_fresh_ones() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    let g = FinAbGroup::cyclic(7);
    let header = header_b(&g, 2);
    let (fresh, _) = cache.get_or_build(&header, || present_b(&g, 2)).unwrap();
    let (loaded, hit) = cache.get_or_build(&header, || present_b(&g, 2)).unwrap();
    assert!(hit);
    for (a, b) in [(1, 2), (1, 3), (2, 5)] {
        let u = projective_space_action(&g, &[ch(0), ch(1), ch(a)]).unwrap().class_b().unwrap();
        let v = projective_space_action(&g, &[ch(0), ch(1), ch(b)]).unwrap().class_b().unwrap();
        assert_eq!(fresh.class_eq(&u, &v).unwrap(), loaded.class_eq(&u, &v).unwrap());
    }
}

#[test]
fn stable_range_terms_vanish_in_burn() {
    let g = FinAbGroup::cyclic(3);
    let ctx = CContext::from_abelian(&g).unwrap();
    let whole = ctx.group().whole();
    let k = |x: u64, params: usize| {
        let beta = vec![ctx.values_from_coords(&ch(x)).unwrap()];
        ctx.canon_k(&whole, &whole, beta, FieldData::new("k", params, params).unwrap(), true, 1 + params).unwrap()
    };
    let bc = present_bc(&ctx, 3, None).unwrap();
    let stable = ClassVector::from_terms([(k(1, 2), 1), (k(2, 2), 1)]);
    assert_eq!(burn_eq(&bc, &stable, &ClassVector::zero()).unwrap(), BurnVerdict::Equal);
    let unstable = ClassVector::from_terms([(k(1, 1), 1)]);
    assert_ne!(burn_eq(&bc, &unstable, &ClassVector::zero()).unwrap(), BurnVerdict::Equal);
}

#[test]
fn products_with_projective_space_raise_the_dimension() {
    let g = FinAbGroup::cyclic(3);
    let act = projective_space_action(&g, &[ch(0), ch(1)]).unwrap();
    let c = product_trivial_pm(&g, &act.class_b().unwrap(), 2);
    // The trivial factor contributes zero characters to each fixed component.
    assert_eq!(c.to_string(), "[(0,0,1)] + [(0,0,2)]");
}

fn s3_amb() -> io::Ambient {
    GroupLiteral::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] }.load(100).unwrap()
}

#[test]
fn permutation_symbols_round_trip() {
    let amb = s3_amb();
    let lit = SymbolLiteral {
        h: Some(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]),
        y: vec![],
        beta: vec![vec![0, 1, 2]],
        field: None,
        h1_surjective: None,
    };
    let s = io::parse_c(&amb, &lit, 2).unwrap();
    let again = io::parse_c(&amb, &io::c_literal(&amb, &s), 2).unwrap();
    assert_eq!(s, again);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn abelian_symbols_round_trip(order in 2u64..10, a in 1u64..10, b in 0u64..10, y in 0u64..10) {
        let amb = GroupLiteral::Abelian { orders: vec![order] }.load(100).unwrap();
        let sub = |d: u64| -> Vec<Vec<i64>> { (0..order / d).map(|k| vec![(k * d) as i64]).collect() };
        // H = <d> for a divisor d of the order, beta one or two characters of H.
        let d = (1..=order).filter(|d| order % d == 0).nth((y % 2) as usize).unwrap_or(1);
        let h = sub(d);
        let e = h.len() as i64;
        let beta = vec![
            (0..e).map(|k| k * (a as i64) % e.max(1)).collect::<Vec<_>>(),
            (0..e).map(|k| k * (b as i64) % e.max(1)).collect::<Vec<_>>(),
        ];
        let lit = SymbolLiteral { h: Some(h), y: vec![vec![y as i64]], beta, field: None, h1_surjective: None };
        if let Ok(s) = io::parse_c(&amb, &lit, 2) {
            let again = io::parse_c(&amb, &io::c_literal(&amb, &s), 2).unwrap();
            prop_assert_eq!(&s, &again);
        }
    }

    #[test]
    fn blow_ups_preserve_classes(a in 0u64..7, b in 0u64..7, c in 0u64..7, pick in 0usize..64) {
        let g = FinAbGroup::cyclic(7);
        let Ok(act) = projective_space_action(&g, &[ch(a), ch(b), ch(c)]) else { return Ok(()) };
        let cones: Vec<Vec<usize>> = act.fan().cones().into_iter().filter(|c| c.len() >= 2).collect();
        let tau = &cones[pick % cones.len()];
        let (blown, _) = act.star_subdivide(tau).unwrap();
        let p = present_b(&g, 2).unwrap();
        prop_assert!(p.class_eq(&act.class_b().unwrap(), &blown.class_b().unwrap()).unwrap().is_equal());
    }
}
