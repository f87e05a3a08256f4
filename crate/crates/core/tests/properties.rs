//! Cross-module law checks: operad axioms, Hopf axioms, module morphisms.

use wsym_core::bwsym::{self, BWBasis, BWSymElement};
use wsym_core::combinat::{
    partial_compose, perm_partial_compose, set_compositions, set_partitions, list_set_partitions,
    ListSetPartition, Permutation, SetComposition, SetPartition,
};
use wsym_core::linear::{rat, LinComb, Tensor};
use wsym_core::wsym::{self, WBasis, WSymElement};

fn proper_compositions(n: usize) -> Vec<SetComposition> {
    set_compositions(n)
        .into_iter()
        .filter(|c| matches!(c, SetComposition::Proper { .. }))
        .collect()
}

fn block_sizes(c: &SetComposition) -> Vec<usize> {
    c.blocks().unwrap().iter().map(|b| b.len()).collect()
}

#[test]
fn operad_associativity_exhaustive() {
    for n in 1..=4 {
        for p in proper_compositions(n) {
            let sizes = block_sizes(&p);
            let k = sizes.len();
            for j in 1..=k {
                for q in proper_compositions(sizes[j - 1]) {
                    let kq = q.arity();
                    let pq = partial_compose(&p, j, &q).unwrap();
                    // nested case: j <= i < kq + j
                    let qsizes = block_sizes(&q);
                    for i in j..j + kq {
                        for r in proper_compositions(qsizes[i - j]) {
                            let lhs = partial_compose(&pq, i, &r).unwrap();
                            let qr = partial_compose(&q, i - j + 1, &r).unwrap();
                            let rhs = partial_compose(&p, j, &qr).unwrap();
                            assert_eq!(lhs, rhs, "nested: {p} o_{j} {q} o_{i} {r}");
                        }
                    }
                    // disjoint case: 1 <= i < j
                    for i in 1..j {
                        for r in proper_compositions(sizes[i - 1]) {
                            let lhs = partial_compose(&pq, i, &r).unwrap();
                            let pr = partial_compose(&p, i, &r).unwrap();
                            let rhs =
                                partial_compose(&pr, j + r.arity() - 1, &q).unwrap();
                            assert_eq!(lhs, rhs, "left-disjoint: {p} {q} {r}");
                        }
                    }
                    // disjoint case: j + kq <= i < k + kq - 1
                    for i in j + kq..k + kq {
                        for r in proper_compositions(sizes[i - kq]) {
                            let lhs = partial_compose(&pq, i, &r).unwrap();
                            let pr = partial_compose(&p, i - kq + 1, &r).unwrap();
                            let rhs = partial_compose(&pr, j, &q).unwrap();
                            assert_eq!(lhs, rhs, "right-disjoint: {p} {q} {r}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn operad_equivariance() {
    for n in 1..=3 {
        for p in proper_compositions(n) {
            let k = p.arity();
            for tau in Permutation::all(k) {
                let ptau = p.permuted(&tau).unwrap();
                for i in 1..=k {
                    let target = block_sizes(&p)[tau.apply(i as u32) as usize - 1];
                    for m in 1..=3 {
                        for q in proper_compositions(m) {
                            for sigma in Permutation::all(q.arity()) {
                                let qsigma = q.permuted(&sigma).unwrap();
                                let lhs = partial_compose(&ptau, i, &qsigma).unwrap();
                                let inner =
                                    partial_compose(&p, tau.apply(i as u32) as usize, &q)
                                        .unwrap();
                                let combined = perm_partial_compose(&tau, i, &sigma);
                                let rhs = inner.permuted(&combined).unwrap();
                                let _ = target;
                                assert_eq!(lhs, rhs, "{p} tau={tau} i={i} {q} sigma={sigma}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn operad_unit_and_absorbing_laws() {
    for n in 0..=4 {
        for p in set_compositions(n) {
            for i in 1..=p.arity() {
                assert_eq!(partial_compose(&p, i, &SetComposition::Unit).unwrap(), p);
                let absorbed = partial_compose(&p, i, &SetComposition::Absorbing(2)).unwrap();
                assert_eq!(absorbed, SetComposition::Absorbing(p.arity() + 1));
            }
            assert_eq!(partial_compose(&SetComposition::Unit, 1, &p).unwrap(), p);
        }
    }
}

fn phi_concat(a: &SetPartition, b: &SetPartition) -> SetPartition {
    let mut blocks = a.blocks().to_vec();
    blocks.extend(b.shift(a.n()).blocks().iter().cloned());
    SetPartition::new(a.n() + b.n(), blocks).unwrap()
}

type WTensor = LinComb<Tensor<SetPartition, SetPartition>>;

fn wsym_tensor_mul(a: &WTensor, b: &WTensor) -> WTensor {
    let mut out = LinComb::zero();
    for (Tensor(a1, a2), c1) in a.iter() {
        for (Tensor(b1, b2), c2) in b.iter() {
            out.add_term(Tensor(phi_concat(a1, b1), phi_concat(a2, b2)), c1 * c2);
        }
    }
    out
}

#[test]
fn wsym_coassociativity_and_counit() {
    for basis in [WBasis::Phi, WBasis::M] {
        for n in 0..=4 {
            for pi in set_partitions(n) {
                let e = WSymElement::new(basis, LinComb::unit(pi.clone()));
                let d = wsym::coproduct(&e);

                let mut left: LinComb<Tensor<SetPartition, Tensor<SetPartition, SetPartition>>> =
                    LinComb::zero();
                let mut right: LinComb<Tensor<SetPartition, Tensor<SetPartition, SetPartition>>> =
                    LinComb::zero();
                for (Tensor(l, r), c) in d.terms().iter() {
                    let dl = wsym::coproduct(&WSymElement::new(basis, LinComb::unit(l.clone())));
                    for (Tensor(x, y), c2) in dl.terms().iter() {
                        left.add_term(
                            Tensor(x.clone(), Tensor(y.clone(), r.clone())),
                            c * c2,
                        );
                    }
                    let dr = wsym::coproduct(&WSymElement::new(basis, LinComb::unit(r.clone())));
                    for (Tensor(x, y), c2) in dr.terms().iter() {
                        right.add_term(
                            Tensor(l.clone(), Tensor(x.clone(), y.clone())),
                            c * c2,
                        );
                    }
                }
                assert_eq!(left, right, "coassociativity at {pi}");

                // counit laws: project the left / right factor on the unit
                let mut from_left = LinComb::zero();
                let mut from_right = LinComb::zero();
                for (Tensor(l, r), c) in d.terms().iter() {
                    if l.n() == 0 {
                        from_left.add_term(r.clone(), c.clone());
                    }
                    if r.n() == 0 {
                        from_right.add_term(l.clone(), c.clone());
                    }
                }
                assert_eq!(&from_left, e.terms(), "left counit at {pi}");
                assert_eq!(&from_right, e.terms(), "right counit at {pi}");
            }
        }
    }
}

#[test]
fn wsym_cocommutativity() {
    for basis in [WBasis::Phi, WBasis::M] {
        for n in 0..=4 {
            for pi in set_partitions(n) {
                let e = WSymElement::new(basis, LinComb::unit(pi));
                let d = wsym::coproduct(&e);
                assert_eq!(d, d.flip());
            }
        }
    }
}

#[test]
fn wsym_bialgebra_compatibility() {
    for total in 0..=4 {
        for na in 0..=total {
            for pa in set_partitions(na) {
                for pb in set_partitions(total - na) {
                    let a = WSymElement::phi(pa.clone());
                    let b = WSymElement::phi(pb.clone());
                    let lhs = wsym::coproduct(&wsym::product(&a, &b));
                    let rhs = wsym_tensor_mul(
                        wsym::coproduct(&a).terms(),
                        wsym::coproduct(&b).terms(),
                    );
                    assert_eq!(lhs.terms(), &rhs, "Delta({pa} * {pb})");
                }
            }
        }
    }
}

type BWTensor = LinComb<Tensor<ListSetPartition, ListSetPartition>>;

fn bwsym_tensor_mul(a: &BWTensor, b: &BWTensor) -> BWTensor {
    let mut out = LinComb::zero();
    for (Tensor(a1, a2), c1) in a.iter() {
        for (Tensor(b1, b2), c2) in b.iter() {
            out.add_term(
                Tensor(a1.shifted_union(b1), a2.shifted_union(b2)),
                c1 * c2,
            );
        }
    }
    out
}

#[test]
fn bwsym_coassociativity_and_counit() {
    for basis in [BWBasis::Phi, BWBasis::M] {
        for n in 0..=4 {
            for p in list_set_partitions(n) {
                let e = BWSymElement::new(basis, LinComb::unit(p.clone()));
                let d = bwsym::coproduct(&e).unwrap();

                let mut left: LinComb<
                    Tensor<ListSetPartition, Tensor<ListSetPartition, ListSetPartition>>,
                > = LinComb::zero();
                let mut right = LinComb::zero();
                for (Tensor(l, r), c) in d.terms().iter() {
                    let dl =
                        bwsym::coproduct(&BWSymElement::new(basis, LinComb::unit(l.clone())))
                            .unwrap();
                    for (Tensor(x, y), c2) in dl.terms().iter() {
                        left.add_term(Tensor(x.clone(), Tensor(y.clone(), r.clone())), c * c2);
                    }
                    let dr =
                        bwsym::coproduct(&BWSymElement::new(basis, LinComb::unit(r.clone())))
                            .unwrap();
                    for (Tensor(x, y), c2) in dr.terms().iter() {
                        right.add_term(Tensor(l.clone(), Tensor(x.clone(), y.clone())), c * c2);
                    }
                }
                assert_eq!(left, right, "coassociativity at {p}");

                let mut from_left = LinComb::zero();
                for (Tensor(l, r), c) in d.terms().iter() {
                    if l.n() == 0 {
                        from_left.add_term(r.clone(), c.clone());
                    }
                }
                assert_eq!(&from_left, e.terms(), "counit at {p}");
            }
        }
    }
}

#[test]
fn bwsym_bialgebra_compatibility() {
    for total in 0..=4 {
        for na in 0..=total {
            for pa in list_set_partitions(na) {
                for pb in list_set_partitions(total - na) {
                    let a = BWSymElement::phi(pa.clone());
                    let b = BWSymElement::phi(pb.clone());
                    let lhs = bwsym::coproduct(&bwsym::product(&a, &b).unwrap()).unwrap();
                    let rhs = bwsym_tensor_mul(
                        bwsym::coproduct(&a).unwrap().terms(),
                        bwsym::coproduct(&b).unwrap().terms(),
                    );
                    assert_eq!(lhs.terms(), &rhs, "Delta({pa} * {pb})");
                }
            }
        }
    }
}

#[test]
fn bwsym_phi_intertwines_coproducts() {
    for n in 0..=3 {
        for p in list_set_partitions(n) {
            let e = BWSymElement::phi(p);
            let lhs: WTensor = bwsym::coproduct(&e)
                .unwrap()
                .terms()
                .iter()
                .map(|(Tensor(l, r), c)| {
                    (
                        Tensor(l.underlying_partition(), r.underlying_partition()),
                        c.clone(),
                    )
                })
                .collect();
            let rhs = wsym::coproduct(&bwsym::to_wsym(&e).unwrap());
            assert_eq!(&lhs, rhs.terms());
        }
    }
}

#[test]
fn wsym_cmodule_symmetry_axiom() {
    // Pi(v_1,..,v_k) = (Pi sigma)(v_{sigma(1)},..,v_{sigma(k)})
    for n in 1..=4 {
        for p in proper_compositions(n) {
            let k = p.arity();
            let args: Vec<WSymElement> = block_sizes(&p)
                .iter()
                .map(|&s| {
                    // a slightly non-trivial element of the right degree
                    let mut e = WSymElement::phi_power(s);
                    if s >= 2 {
                        e = e.add(&WSymElement::phi(SetPartition::singletons(s)).scale(&rat(2)));
                    }
                    e
                })
                .collect();
            let base = wsym::cmodule_act(&p, &args).unwrap();
            for sigma in Permutation::all(k) {
                let permuted_p = p.permuted(&sigma).unwrap();
                let permuted_args: Vec<WSymElement> = (1..=k as u32)
                    .map(|i| args[sigma.apply(i) as usize - 1].clone())
                    .collect();
                let other = wsym::cmodule_act(&permuted_p, &permuted_args).unwrap();
                assert_eq!(base, other, "symmetry at {p}, sigma={sigma}");
            }
        }
    }
}

#[test]
fn wsym_realization_injective_on_monomials() {
    // realize(M_pi, k) is supported on words of shape exactly pi, so the
    // images of distinct keys are disjoint and nonzero for #blocks <= k
    let k = 4;
    for n in 1..=4 {
        for pi in set_partitions(n) {
            if pi.num_blocks() > k {
                continue;
            }
            let image = wsym::realize(&WSymElement::monomial(pi.clone()), k);
            assert!(!image.is_zero());
            for (w, _) in image.iter() {
                assert_eq!(w.shape().unwrap(), pi);
            }
        }
    }
}

#[test]
fn conversion_round_trips_degree_five() {
    for pi in set_partitions(5) {
        let e = WSymElement::phi(pi.clone());
        assert_eq!(wsym::convert(&wsym::convert(&e, WBasis::M), WBasis::Phi), e);
    }
}

mod randomized {
    use super::*;
    use proptest::prelude::*;

    fn arb_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
        // restricted-growth strings pick set partitions uniformly by shape
        prop::collection::vec(0usize..4, 0..=max_n).prop_map(|rgs| {
            let mut blocks: Vec<Vec<u32>> = Vec::new();
            let mut next = 0usize;
            for (i, &c) in rgs.iter().enumerate() {
                let idx = c.min(next);
                if idx == next {
                    blocks.push(Vec::new());
                    next += 1;
                }
                blocks[idx].push(i as u32 + 1);
            }
            SetPartition::new(rgs.len(), blocks).unwrap()
        })
    }

    proptest! {
        #[test]
        fn product_degrees_add(a in arb_partition(4), b in arb_partition(4)) {
            let p = wsym::product(&WSymElement::phi(a.clone()), &WSymElement::phi(b.clone()));
            for (key, _) in p.terms().iter() {
                prop_assert_eq!(key.n(), a.n() + b.n());
            }
        }

        #[test]
        fn conversion_round_trip_random(pi in arb_partition(5)) {
            let e = WSymElement::phi(pi);
            prop_assert_eq!(wsym::convert(&wsym::convert(&e, WBasis::M), WBasis::Phi), e);
        }

        #[test]
        fn theta_is_multiplicative_random(a in arb_partition(3), b in arb_partition(3)) {
            let x = WSymElement::phi(a);
            let y = WSymElement::phi(b);
            let lhs = wsym::theta(&wsym::product(&x, &y));
            let rhs: LinComb<_> = wsym_core::linear::bilinear_extend(
                |s: &wsym_core::combinat::IntegerPartition,
                 t: &wsym_core::combinat::IntegerPartition| LinComb::unit(s.merge(t)),
                wsym::theta(&x).terms(),
                wsym::theta(&y).terms(),
            );
            prop_assert_eq!(lhs.terms(), &rhs);
        }
    }
}
