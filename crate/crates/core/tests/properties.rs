//! Property tests for the algebraic identities the calculators rely on.

use modsing::classify::{coarse_space_status, CoarseSpace};
use modsing::cyclic::{self, units, CyclicRep};
use modsing::determinantal::{self, DetPairSpec};
use modsing::picard::{self, BasisKey, BigHypotheses, DivisorClass, PicBasis};
use modsing::rational::{rat_int, rat_wide, Rational};
use num::Zero;
use proptest::prelude::*;

fn arb_rep(max_order: u64, max_mult: u64) -> impl Strategy<Value = CyclicRep> {
    (1..=max_order).prop_flat_map(move |order| {
        proptest::collection::vec(0..=max_mult, order as usize)
            .prop_map(move |mult| CyclicRep::new(order, mult).unwrap())
    })
}

fn arb_rep_pair(max_order: u64, max_mult: u64) -> impl Strategy<Value = (CyclicRep, CyclicRep)> {
    (1..=max_order).prop_flat_map(move |order| {
        let vecs = proptest::collection::vec(0..=max_mult, order as usize);
        (vecs.clone(), vecs).prop_map(move |(a, b)| {
            (
                CyclicRep::new(order, a).unwrap(),
                CyclicRep::new(order, b).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn invariant_is_additive_over_direct_sums((a, b) in arb_rep_pair(12, 5)) {
        let sum = a.direct_sum(&b).unwrap();
        for u in units(a.order()) {
            prop_assert_eq!(
                sum.rsbt_invariant_wrt(u).unwrap(),
                a.rsbt_invariant_wrt(u).unwrap() + b.rsbt_invariant_wrt(u).unwrap()
            );
        }
    }

    #[test]
    fn invariant_pairs_with_the_dual(rep in arb_rep(12, 5)) {
        // strip trivial summands: they are self-dual with invariant 0
        let mut mult = rep.multiplicities().to_vec();
        mult[0] = 0;
        let stripped = CyclicRep::new(rep.order(), mult).unwrap();
        let dim = rat_int(stripped.dim() as i64);
        for u in units(rep.order()) {
            let direct = stripped.rsbt_invariant_wrt(u).unwrap();
            let dual = stripped.dual().rsbt_invariant_wrt(u).unwrap();
            prop_assert_eq!(direct + dual, dim.clone());
        }
    }

    #[test]
    fn dual_is_an_involution(rep in arb_rep(16, 4)) {
        prop_assert_eq!(rep.dual().dual(), rep);
    }

    #[test]
    fn tensor_with_the_regular_rep_absorbs(rep in arb_rep(10, 3)) {
        let regular = CyclicRep::regular(rep.order());
        let product = rep.tensor(&regular).unwrap();
        prop_assert_eq!(product, regular.repeated(rep.dim()));
    }

    #[test]
    fn induction_identity(rep in arb_rep(8, 3), index in 1u64..=3) {
        let induced = rep.induce(index).unwrap();
        let shift = rat_wide((index as i128 - 1) * rep.dim() as i128, 2);
        for u in units(rep.order() * index) {
            prop_assert_eq!(
                induced.rsbt_invariant_wrt(u).unwrap(),
                rep.rsbt_invariant_wrt(u % rep.order()).unwrap() + shift.clone()
            );
        }
    }

    #[test]
    fn log_discrepancy_decreases_in_multiplicity(
        g in 1u32..=5,
        fd in 0u32..=4,
        q in 0u32..=6,
    ) {
        let f = g + fd;
        let k = g - 1;
        let lower = DetPairSpec::new(g, f, q, k, 0).unwrap();
        let higher = DetPairSpec::new(g, f, q + 1, k, 0).unwrap();
        let a = determinantal::log_discrepancies(&lower);
        let b = determinantal::log_discrepancies(&higher);
        for ((i, x), (j, y)) in a.iter().zip(b.iter()) {
            prop_assert_eq!(i, j);
            // step size k+1-i >= 1 on every tracked level
            prop_assert!(y < x);
        }
    }

    #[test]
    fn relative_canonical_matches_multiplicity_free_discrepancies(
        g in 1u32..=6,
        fd in 0u32..=4,
    ) {
        let f = g + fd;
        let coeffs = determinantal::relative_canonical_coeffs(g, f, 0, g).unwrap();
        let pair = DetPairSpec::new(g, f, 0, g - 1, 0).unwrap();
        let discrepancies = determinantal::log_discrepancies(&pair);
        prop_assert_eq!(coeffs.len(), discrepancies.len());
        for ((i, coeff), (j, disc)) in coeffs.iter().zip(discrepancies.iter()) {
            prop_assert_eq!(i, j);
            prop_assert_eq!(*coeff, disc - 1);
        }
    }
}

/// Random valid divisor class over a small unmarked basis.
fn arb_unmarked_class() -> impl Strategy<Value = DivisorClass> {
    (3u32..=8, 1u32..=6).prop_flat_map(|(n, e)| {
        let basis = PicBasis::new(n, e, 0).unwrap();
        let coeffs = proptest::collection::vec((-20i64..=20, 1i64..=12), 0..=6);
        coeffs.prop_map(move |pairs| {
            let mut class = DivisorClass::zero(basis);
            for (slot, (numer, denom)) in pairs.into_iter().enumerate() {
                let key = if slot == 0 {
                    BasisKey::H
                } else {
                    let weight = 1 + (slot as u32 - 1) % (e / 2).max(1);
                    if weight > e / 2 {
                        continue;
                    }
                    BasisKey::Boundary { weight, size: 0 }
                };
                class
                    .add_term(key, rat_wide(numer as i128, denom as i128))
                    .unwrap();
            }
            class
        })
    })
}

proptest! {
    #[test]
    fn class_arithmetic_is_linear(class in arb_unmarked_class(), numer in -9i64..=9, denom in 1i64..=7) {
        let factor = rat_wide(numer as i128, denom as i128);
        let doubled = class.checked_add(&class).unwrap();
        let scaled = class.scaled(&factor);
        let keys: Vec<BasisKey> = class.terms().map(|(k, _)| *k).collect();
        for key in keys {
            prop_assert_eq!(doubled.coeff(key), class.coeff(key) * rat_int(2));
            prop_assert_eq!(scaled.coeff(key), class.coeff(key) * factor.clone());
        }
        // zero terms are never stored
        prop_assert!(class.terms().all(|(_, v)| !v.is_zero()));
    }

    #[test]
    fn bigness_is_monotone_under_effective_additions(
        class in arb_unmarked_class(),
        h_boost in 1i64..=10,
        boundary_boost in 0i64..=10,
    ) {
        let hypotheses = BigHypotheses { birational_generic: true, irreducible_generic: true };
        let before = picard::is_big_sufficient(&class, hypotheses).unwrap();
        let mut boosted = class.clone();
        boosted.add_term(BasisKey::H, rat_int(h_boost)).unwrap();
        let e = class.basis().degree;
        if e >= 2 {
            boosted
                .add_term(BasisKey::Boundary { weight: 1, size: 0 }, rat_int(boundary_boost))
                .unwrap();
        }
        let after = picard::is_big_sufficient(&boosted, hypotheses).unwrap();
        if before.big {
            prop_assert!(after.big, "adding positive H and nonnegative boundary flipped big -> not big");
        }
    }
}

#[test]
fn basis_audit_over_grid() {
    // every emitted key must validate in its own basis
    for n in 2u32..=8 {
        for e in 1u32..=6 {
            if (n, e) == (2, 2) {
                continue;
            }
            for marks in 0u32..=3 {
                let basis = PicBasis::new(n, e, marks).unwrap();
                let mut classes = vec![picard::omega_c1(n, e, marks).unwrap()];
                for d in 1..=3 {
                    classes.push(picard::sections_c1(n, e, marks, d).unwrap());
                    classes.push(
                        picard::canonical_complete_intersection(n, &[d, 1], e, marks).unwrap(),
                    );
                }
                if marks == 0 {
                    classes.push(picard::omega_unmarked(n, e).unwrap());
                    classes.push(picard::canonical_hypersurface(n, 2, e).unwrap());
                }
                for class in classes {
                    for (key, value) in class.terms() {
                        assert!(
                            basis.is_valid_key(*key),
                            "invalid key {key} emitted at (n,e,marks)=({n},{e},{marks})"
                        );
                        assert_eq!(basis.canonical_key(*key).unwrap(), *key, "non-canonical key stored");
                        assert!(!value.is_zero(), "zero coefficient stored for {key}");
                    }
                }
            }
        }
    }
}

#[test]
fn stratum_codim_matches_counting_polynomial_degrees() {
    // the degree drop of the cumulative rank-count polynomial is the
    // stratum codimension
    for g in 1u32..=3 {
        for f in g..=3 {
            for k in 0..=g {
                let mut degree = None;
                for j in 0..=k {
                    let poly = modsing::oracle::rank_count_polynomial(g, f, j).unwrap();
                    degree = degree.max(poly.degree());
                }
                let full = (g * f) as i64;
                let drop = full - degree.unwrap();
                assert_eq!(
                    drop as u64,
                    determinantal::stratum_codim(g, f, k).unwrap(),
                    "(g,f,k)=({g},{f},{k})"
                );
            }
        }
    }
}

#[test]
fn classification_ladder_is_monotone() {
    // raising the multiplicity can only worsen the class
    for g in 1u32..=4 {
        for f in g..=8 {
            let mut previous: Option<determinantal::SingularityTag> = None;
            for q in 0..=(f - g + 2) {
                let class =
                    determinantal::classify_pair(&DetPairSpec::new(g, f, q, g - 1, 0).unwrap());
                if let Some(prev) = previous {
                    assert!(class.tag <= prev, "class improved as q grew at ({g},{f},{q})");
                }
                previous = Some(class.tag);
            }
        }
    }
}

#[test]
fn cone_criterion_consistent_with_pair_route() {
    // inside the direct-sum criterion, the underlying pair with
    // q = copies * quot_rank on the top stratum is canonical
    for g in 1u32..=4 {
        for f in (g + 1)..=9 {
            for a in 1u32..=3 {
                for r in 1u32..=3 {
                    if a * r > f - g {
                        continue;
                    }
                    let pair = DetPairSpec::new(g, f, a * r, g - 1, 0).unwrap();
                    let class = determinantal::classify_pair(&pair);
                    assert!(
                        class.tag.is_canonical(),
                        "pair route not canonical at (g,f,a,r)=({g},{f},{a},{r})"
                    );
                    let cone = determinantal::direct_sum_cone_classify(g, f, a, 0, r).unwrap();
                    assert!(cone.applies);
                }
            }
        }
    }
}

#[test]
fn terminal_coarse_spaces_have_invariant_above_one() {
    // cross-module consistency: the coarse-space table agrees with the
    // tangent invariant at smooth-domain points
    for n in 1u32..=6 {
        for e in 1u32..=8 {
            let status = coarse_space_status(n, e).unwrap();
            if status == CoarseSpace::Excluded {
                continue;
            }
            let mut min_alpha: Option<Rational> = None;
            for r in 2..=e {
                if e % r != 0 {
                    continue;
                }
                let alpha = cyclic::tangent_rep_multiple_cover(n, e, r)
                    .unwrap()
                    .invariant();
                min_alpha = Some(match min_alpha {
                    None => alpha,
                    Some(current) => current.min(alpha),
                });
            }
            let Some(min_alpha) = min_alpha else { continue };
            match status {
                CoarseSpace::Terminal => {
                    assert!(min_alpha > rat_int(1), "(n,e)=({n},{e}) should exceed 1")
                }
                // canonical coarse spaces never drop below 1 at smooth-domain
                // points; the exact-1 witnesses there are (1,3), (1,4), (3,2)
                // (for n = 1, e >= 5 the invariant-1 points have nodal domain)
                CoarseSpace::Canonical => {
                    assert!(min_alpha >= rat_int(1), "(n,e)=({n},{e}) should be at least 1");
                    if matches!((n, e), (1, 3) | (1, 4) | (3, 2)) {
                        assert_eq!(min_alpha, rat_int(1), "(n,e)=({n},{e}) should hit exactly 1");
                    }
                }
                CoarseSpace::Excluded => unreachable!(),
            }
        }
    }
}
