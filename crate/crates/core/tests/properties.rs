//! Property tests for the algebraic and geometric invariants that random
//! sweeps express better than fixed cases.

use std::collections::BTreeMap;

use proptest::prelude::*;

use hexagrammum::exactalg::{t_strip, MultiPoly, Rational, UniPoly};
use hexagrammum::hexagram::kirkman_point;
use hexagrammum::projgeom::{
    induced_plane_map, join, meet, polar, pole, tangent_at, tau, Mobius, P1Point, ProjLine,
    ProjPoint,
};
use hexagrammum::sample::Sampler;
use hexagrammum::sextuple::{in_h_circ, in_polydiagonal, theta, Partition, Sextuple};
use hexagrammum::symbols::{kirkman_triples, Letter, LetterPerm};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=8).prop_map(|(n, d)| Rational::new(n, d))
}

fn p1_point() -> impl Strategy<Value = P1Point> {
    prop_oneof![
        9 => small_rational().prop_map(P1Point::from_rational),
        1 => Just(P1Point::infinity()),
    ]
}

fn proj_point() -> impl Strategy<Value = ProjPoint> {
    (small_rational(), small_rational(), small_rational())
        .prop_filter_map("nonzero", |(a, b, c)| ProjPoint::new([a, b, c]).ok())
}

fn proj_line() -> impl Strategy<Value = ProjLine> {
    (small_rational(), small_rational(), small_rational())
        .prop_filter_map("nonzero", |(a, b, c)| ProjLine::new([a, b, c]).ok())
}

fn mobius() -> impl Strategy<Value = Mobius> {
    (
        small_rational(),
        small_rational(),
        small_rational(),
        small_rational(),
    )
        .prop_filter_map("invertible", |(a, b, c, d)| {
            Mobius::new([[a, b], [c, d]]).ok()
        })
}

/// A small polynomial in a and b.
fn small_poly() -> impl Strategy<Value = MultiPoly> {
    let term = (-5i64..=5, 0u32..=2, 0u32..=2).prop_map(|(c, ea, eb)| {
        let mono = &MultiPoly::var("a").pow(ea) * &MultiPoly::var("b").pow(eb);
        mono.scale(&Rational::from_int(c))
    });
    proptest::collection::vec(term, 0..4)
        .prop_map(|terms| terms.iter().fold(MultiPoly::zero(), |acc, t| &acc + t))
}

proptest! {
    #[test]
    fn rational_ring_axioms(x in small_rational(), y in small_rational(), z in small_rational()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn multipoly_ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn substitution_composes(p in small_poly(), qa in small_poly(), qb in small_poly(), rv in small_rational()) {
        // sigma: a -> qa(a,b), b -> qb(a,b); tau: a -> rv, b -> rv + 1
        let mut sigma = BTreeMap::new();
        sigma.insert("a".to_string(), qa.clone());
        sigma.insert("b".to_string(), qb.clone());
        let mut tau_sub = BTreeMap::new();
        tau_sub.insert("a".to_string(), MultiPoly::constant(rv.clone()));
        tau_sub.insert(
            "b".to_string(),
            MultiPoly::constant(&rv + &Rational::one()),
        );
        let lhs = p.substitute(&sigma).substitute(&tau_sub);
        let mut composed = BTreeMap::new();
        composed.insert("a".to_string(), qa.substitute(&tau_sub));
        composed.insert("b".to_string(), qb.substitute(&tau_sub));
        let rhs = p.substitute(&composed);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn t_strip_monomial_scale_equivariance(
        c0 in 1i64..=9,
        k in 0usize..=3,
        a0 in -5i64..=5, a1 in -5i64..=5, b1 in -5i64..=5, c2 in -5i64..=5,
    ) {
        let triple = [
            UniPoly::from_ints(&[a0, a1]),
            UniPoly::from_ints(&[0, b1]),
            UniPoly::from_ints(&[0, 0, c2]),
        ];
        prop_assume!(triple.iter().any(|p| !p.is_zero()));
        let scalar = UniPoly::term(Rational::from_int(c0), k);
        let scaled = [
            &triple[0] * &scalar,
            &triple[1] * &scalar,
            &triple[2] * &scalar,
        ];
        let (v, lim) = t_strip(&triple).unwrap();
        let (vs, lims) = t_strip(&scaled).unwrap();
        prop_assert_eq!(vs, v + k);
        for i in 0..3 {
            prop_assert_eq!(lims[i].clone(), &lim[i] * &Rational::from_int(c0));
        }
    }

    #[test]
    fn join_is_incident_with_both_points(p in proj_point(), q in proj_point()) {
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        prop_assert!(p.on_line(&l));
        prop_assert!(q.on_line(&l));
    }

    #[test]
    fn join_meet_duality(l in proj_line(), m in proj_line()) {
        prop_assume!(l != m);
        // meet computed as the dual join: exchanging point and line coordinates
        let p = meet(&l, &m).unwrap();
        let dual = join(
            &ProjPoint::new(l.coords()).unwrap(),
            &ProjPoint::new(m.coords()).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(p.coords(), dual.coords());
        prop_assert!(p.on_line(&l));
        prop_assert!(p.on_line(&m));
    }

    #[test]
    fn pole_polar_are_inverse(p in proj_point(), l in proj_line()) {
        prop_assert_eq!(pole(&polar(&p)), p);
        prop_assert_eq!(polar(&pole(&l)), l);
    }

    #[test]
    fn tangent_is_polar_of_conic_point(p in p1_point()) {
        prop_assert_eq!(tangent_at(&p), polar(&tau(&p)));
        prop_assert!(tau(&p).on_conic());
    }

    #[test]
    fn induced_map_commutes_with_tau(m in mobius(), p in p1_point()) {
        let n = induced_plane_map(&m);
        prop_assert_eq!(tau(&m.apply(&p)), n.apply_point(&tau(&p)));
    }

    #[test]
    fn induced_map_is_multiplicative(m1 in mobius(), m2 in mobius()) {
        let lhs = induced_plane_map(&m1.compose(&m2));
        let rhs = induced_plane_map(&m1).compose(&induced_plane_map(&m2));
        prop_assert_eq!(lhs.canonical_entries(), rhs.canonical_entries());
    }

    #[test]
    fn theta_is_mobius_invariant(m in mobius(), seed in 0u64..5000) {
        let mut sampler = Sampler::new(seed);
        let h = sampler.sextuple();
        prop_assert_eq!(theta(&h), theta(&h.mobius_transform(&m)));
    }
}

/// All set partitions of the six letters, by recursive block assignment.
fn all_partitions() -> Vec<Partition> {
    fn go(rest: &[Letter], blocks: &mut Vec<Vec<Letter>>, out: &mut Vec<Partition>) {
        match rest.split_first() {
            None => out.push(Partition::new(blocks).expect("valid")),
            Some((&l, tail)) => {
                for i in 0..blocks.len() {
                    blocks[i].push(l);
                    go(tail, blocks, out);
                    blocks[i].pop();
                }
                blocks.push(vec![l]);
                go(tail, blocks, out);
                blocks.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&Letter::ALL, &mut Vec::new(), &mut out);
    out
}

#[test]
fn partition_enumeration_has_bell_number_size() {
    assert_eq!(all_partitions().len(), 203);
}

#[test]
fn h_circ_matches_brute_force_over_forbidden_polydiagonals() {
    // the open locus removes exactly the polydiagonals of type (3,2,1) and
    // (4,1,1); everything they do not contain stays
    let forbidden: Vec<Partition> = all_partitions()
        .into_iter()
        .filter(|p| {
            let t = p.ptype();
            t == vec![3, 2, 1] || t == vec![4, 1, 1]
        })
        .collect();
    assert_eq!(forbidden.len(), 60 + 15);
    let mut sampler = Sampler::new(99);
    let mut cases: Vec<Sextuple> = (0..60).map(|_| sampler.sextuple()).collect();
    // force interesting coincidence types into the mix
    cases.push(Sextuple::from_ints([3, 3, 3, 1, 1, 4])); // (3,2,1)
    cases.push(Sextuple::from_ints([3, 3, 3, 3, 1, 4])); // (4,1,1)
    cases.push(Sextuple::from_ints([3, 3, 3, 1, 7, 4])); // (3,1,1,1)
    cases.push(Sextuple::from_ints([1, 2, 3, 3, 2, 1])); // (2,2,2)
    cases.push(Sextuple::from_ints([9, 9, 9, 9, 9, 9])); // (6)
    for h in &cases {
        let removed = forbidden.iter().any(|p| in_polydiagonal(h, p));
        assert_eq!(in_h_circ(h), !removed, "h = {h}");
    }
}

#[test]
fn kirkman_point_is_letter_equivariant() {
    // relabelling letters does not move any geometry: the Kirkman point of
    // the relabelled sextuple and triple is the same projective point
    let mut sampler = Sampler::new(2024);
    let h = sampler.injective_sextuple();
    for perm in LetterPerm::all().into_iter().step_by(97) {
        for kt in kirkman_triples().iter().step_by(13) {
            let relabelled = kt.relabel(perm);
            assert_eq!(
                kirkman_point(&h.relabel(perm), &relabelled),
                kirkman_point(&h, kt)
            );
        }
    }
}
