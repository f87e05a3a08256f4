//! Word symmetric functions: the Hopf algebra `WSym` in the `Phi` and `M`
//! bases, its polynomial realization, the set-composition module structure
//! and specializations, and the projection onto commutative symmetric
//! functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::combinat::{IntegerPartition, SetComposition, SetPartition, Word};
use crate::error::{Error, Result};
use crate::linear::{Coeff, Key, LinComb, Tensor};
use crate::sym::{SymBasis, SymElement};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WBasis {
    Phi,
    M,
}

impl WBasis {
    pub fn tag(self) -> &'static str {
        match self {
            WBasis::Phi => "WSym.Phi",
            WBasis::M => "WSym.M",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            WBasis::Phi => "Φ^",
            WBasis::M => "M_",
        }
    }
}

/// An element of `WSym`, keyed by set partitions in either basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WSymElement {
    basis: WBasis,
    terms: LinComb<SetPartition>,
}

/// Coproduct output: a linear combination of set-partition pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WSymTensor {
    basis: WBasis,
    terms: LinComb<Tensor<SetPartition, SetPartition>>,
}

impl WSymElement {
    pub fn new(basis: WBasis, terms: LinComb<SetPartition>) -> Self {
        WSymElement { basis, terms }
    }

    /// The degree-0 unit (empty partition) in either basis.
    pub fn one(basis: WBasis) -> Self {
        WSymElement { basis, terms: LinComb::unit(SetPartition::empty()) }
    }

    pub fn zero(basis: WBasis) -> Self {
        WSymElement { basis, terms: LinComb::zero() }
    }

    /// `Phi^pi` for a single set partition.
    pub fn phi(pi: SetPartition) -> Self {
        WSymElement { basis: WBasis::Phi, terms: LinComb::unit(pi) }
    }

    /// `M_pi` for a single set partition.
    pub fn monomial(pi: SetPartition) -> Self {
        WSymElement { basis: WBasis::M, terms: LinComb::unit(pi) }
    }

    /// `Phi^n = Phi^{{1,..,n}}`, the generator of degree n.
    pub fn phi_power(n: usize) -> Self {
        Self::phi(SetPartition::single_block(n))
    }

    pub fn basis(&self) -> WBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<SetPartition> {
        &self.terms
    }

    pub fn coeff(&self, key: &SetPartition) -> Coeff {
        self.terms.coeff(key)
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = convert(other, self.basis);
        WSymElement { basis: self.basis, terms: self.terms.add(&other.terms) }
    }

    pub fn scale(&self, scalar: &Coeff) -> Self {
        WSymElement { basis: self.basis, terms: self.terms.scale(scalar) }
    }

    /// Coefficient of the empty partition.
    pub fn counit(&self) -> Coeff {
        self.terms.coeff(&SetPartition::empty())
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.terms.to_json(self.basis.tag())
    }
}

impl fmt::Display for WSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tagged: LinComb<String> = self
            .terms
            .iter()
            .map(|(k, c)| (format!("{}{}", self.basis.symbol(), k), c.clone()))
            .collect();
        write!(f, "{tagged}")
    }
}

impl WSymTensor {
    pub fn basis(&self) -> WBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Tensor<SetPartition, SetPartition>> {
        &self.terms
    }

    pub fn convert(&self, target: WBasis) -> WSymTensor {
        if self.basis == target {
            return self.clone();
        }
        let terms = self.terms.linear_map(|Tensor(l, r)| {
            let lc = convert(&WSymElement::new(self.basis, LinComb::unit(l.clone())), target);
            let rc = convert(&WSymElement::new(self.basis, LinComb::unit(r.clone())), target);
            crate::linear::bilinear_extend(
                |a: &SetPartition, b: &SetPartition| LinComb::unit(Tensor(a.clone(), b.clone())),
                lc.terms(),
                rc.terms(),
            )
        });
        WSymTensor { basis: target, terms }
    }

    /// Swaps the tensor factors.
    pub fn flip(&self) -> WSymTensor {
        WSymTensor {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(Tensor(l, r), c)| (Tensor(r.clone(), l.clone()), c.clone()))
                .collect(),
        }
    }
}

/// Shifted concatenation product, computed in the `Phi` basis.
pub fn product(a: &WSymElement, b: &WSymElement) -> WSymElement {
    let a = convert(a, WBasis::Phi);
    let b = convert(b, WBasis::Phi);
    let terms = crate::linear::bilinear_extend(
        |pa: &SetPartition, pb: &SetPartition| {
            let mut blocks = pa.blocks().to_vec();
            blocks.extend(pb.shift(pa.n()).blocks().iter().cloned());
            LinComb::unit(
                SetPartition::new(pa.n() + pb.n(), blocks).expect("shifted blocks are disjoint"),
            )
        },
        a.terms(),
        b.terms(),
    );
    WSymElement { basis: WBasis::Phi, terms }
}

/// Change of basis. `Phi -> M` sums over coarsenings; `M -> Phi` inverts
/// the triangular system by subtracting strictly coarser terms.
pub fn convert(e: &WSymElement, target: WBasis) -> WSymElement {
    if e.basis == target {
        return e.clone();
    }
    let terms = match target {
        WBasis::M => e.terms.linear_map(|pi| {
            pi.coarsenings().into_iter().map(|q| (q, Coeff::from_integer(1.into()))).collect()
        }),
        WBasis::Phi => {
            let mut memo: HashMap<SetPartition, LinComb<SetPartition>> = HashMap::new();
            e.terms.linear_map(|pi| monomial_in_phi(pi, &mut memo))
        }
    };
    WSymElement { basis: target, terms }
}

fn monomial_in_phi(
    pi: &SetPartition,
    memo: &mut HashMap<SetPartition, LinComb<SetPartition>>,
) -> LinComb<SetPartition> {
    if let Some(hit) = memo.get(pi) {
        return hit.clone();
    }
    // M_pi = Phi^pi - sum over strictly coarser pi' of M_{pi'}
    let mut out = LinComb::unit(pi.clone());
    for q in pi.coarsenings() {
        if &q != pi {
            let sub = monomial_in_phi(&q, memo);
            out = out.combine(&sub, &-Coeff::from_integer(1.into()));
        }
    }
    memo.insert(pi.clone(), out.clone());
    out
}

/// Coproduct by complementary block splits; diagonal in both bases.
pub fn coproduct(e: &WSymElement) -> WSymTensor {
    let terms = e.terms.linear_map(|pi| {
        pi.complementary_splits()
            .into_iter()
            .map(|(l, r)| (Tensor(l, r), Coeff::from_integer(1.into())))
            .collect()
    });
    WSymTensor { basis: e.basis, terms }
}

/// Polynomial realization over a finite alphabet of `k` letters.
///
/// `Phi^pi` maps to all words constant on the blocks of `pi`; `M_pi`
/// additionally requires distinct letters across blocks.
pub fn realize(e: &WSymElement, k: usize) -> LinComb<Word> {
    let distinct = e.basis == WBasis::M;
    e.terms.linear_map(|pi| {
        let mut out = LinComb::zero();
        let blocks = pi.blocks();
        let mut assignment = vec![0u32; blocks.len()];
        assign_letters(pi, blocks, k, distinct, 0, &mut assignment, &mut out);
        out
    })
}

fn assign_letters(
    pi: &SetPartition,
    blocks: &[Vec<u32>],
    k: usize,
    distinct: bool,
    i: usize,
    assignment: &mut Vec<u32>,
    out: &mut LinComb<Word>,
) {
    if i == blocks.len() {
        let mut letters = vec![0u32; pi.n()];
        for (b, &a) in blocks.iter().zip(assignment.iter()) {
            for &pos in b {
                letters[pos as usize - 1] = a;
            }
        }
        out.add_term(Word::new(letters), Coeff::from_integer(1.into()));
        return;
    }
    for a in 1..=k as u32 {
        if distinct && assignment[..i].contains(&a) {
            continue;
        }
        assignment[i] = a;
        assign_letters(pi, blocks, k, distinct, i + 1, assignment, out);
    }
}

/// Concatenation product on word polynomials (the product the realization
/// must intertwine).
pub fn word_concat_product(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    crate::linear::bilinear_extend(|x: &Word, y: &Word| LinComb::unit(x.concat(y)), a, b)
}

/// A module over the operad of set compositions, described at the level of
/// basis keys; the action extends multilinearly.
pub trait CModuleOps {
    type Key: Key;

    fn degree(&self, key: &Self::Key) -> usize;

    /// Action of a proper composition (given by its ordered blocks) on keys
    /// whose degrees match the block sizes. An empty block list must return
    /// the unit key of the module.
    fn act(&self, blocks: &[Vec<u32>], keys: &[&Self::Key]) -> LinComb<Self::Key>;
}

/// Multilinear extension of a key-level action; degree mismatches
/// contribute zero.
pub fn multilinear_act<M: CModuleOps>(
    module: &M,
    blocks: &[Vec<u32>],
    args: &[LinComb<M::Key>],
) -> LinComb<M::Key> {
    assert_eq!(blocks.len(), args.len());
    let mut out = LinComb::zero();
    let mut combo: Vec<(&M::Key, Coeff)> = Vec::with_capacity(args.len());
    fn rec<'a, M: CModuleOps>(
        module: &M,
        blocks: &[Vec<u32>],
        args: &'a [LinComb<M::Key>],
        i: usize,
        combo: &mut Vec<(&'a M::Key, Coeff)>,
        out: &mut LinComb<M::Key>,
    ) {
        if i == args.len() {
            let keys: Vec<&M::Key> = combo.iter().map(|(k, _)| *k).collect();
            let mut scalar = Coeff::from_integer(1.into());
            for (_, c) in combo.iter() {
                scalar *= c;
            }
            for (k, c) in module.act(blocks, &keys).iter() {
                out.add_term(k.clone(), c * &scalar);
            }
            return;
        }
        for (k, c) in args[i].iter() {
            if module.degree(k) != blocks[i].len() {
                continue;
            }
            combo.push((k, c.clone()));
            rec(module, blocks, args, i + 1, combo, out);
            combo.pop();
        }
    }
    rec(module, blocks, args, 0, &mut combo, &mut out);
    out
}

/// `WSym` acting on itself: blocks of each argument key are relabelled
/// through the corresponding block of the composition.
pub struct WSymModule;

impl CModuleOps for WSymModule {
    type Key = SetPartition;

    fn degree(&self, key: &SetPartition) -> usize {
        key.n()
    }

    fn act(&self, blocks: &[Vec<u32>], keys: &[&SetPartition]) -> LinComb<SetPartition> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut merged = Vec::new();
        for (b, key) in blocks.iter().zip(keys) {
            for kb in key.blocks() {
                merged.push(kb.iter().map(|&j| b[j as usize - 1]).collect());
            }
        }
        LinComb::unit(SetPartition::new(n, merged).expect("relabelled blocks partition the union"))
    }
}

/// Word polynomials with the position-shuffle action.
pub struct WordModule;

impl CModuleOps for WordModule {
    type Key = Word;

    fn degree(&self, key: &Word) -> usize {
        key.len()
    }

    fn act(&self, blocks: &[Vec<u32>], keys: &[&Word]) -> LinComb<Word> {
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut letters = vec![0u32; n];
        for (b, w) in blocks.iter().zip(keys) {
            debug_assert_eq!(b.len(), w.len());
            for (&pos, &a) in b.iter().zip(w.letters()) {
                letters[pos as usize - 1] = a;
            }
        }
        LinComb::unit(Word::new(letters))
    }
}

/// Commutative power sums: the action just multiplies.
pub struct PowerSumModule;

impl CModuleOps for PowerSumModule {
    type Key = IntegerPartition;

    fn degree(&self, key: &IntegerPartition) -> usize {
        key.sum()
    }

    fn act(&self, blocks: &[Vec<u32>], keys: &[&IntegerPartition]) -> LinComb<IntegerPartition> {
        let _ = blocks;
        let mut merged = IntegerPartition::empty();
        for k in keys {
            merged = merged.merge(k);
        }
        LinComb::unit(merged)
    }
}

/// Action of a set composition on a sequence of `WSym` elements.
pub fn cmodule_act(p: &SetComposition, elems: &[WSymElement]) -> Result<WSymElement> {
    match p {
        SetComposition::Unit => {
            if elems.len() != 1 {
                return Err(Error::invalid("the unit acts on a single argument"));
            }
            Ok(elems[0].clone())
        }
        SetComposition::Absorbing(_) => Ok(WSymElement::zero(WBasis::Phi)),
        SetComposition::Proper { blocks, .. } => {
            if elems.len() != blocks.len() {
                return Err(Error::invalid("one argument per block required"));
            }
            let args: Vec<LinComb<SetPartition>> = elems
                .iter()
                .map(|e| convert(e, WBasis::Phi).terms.clone())
                .collect();
            Ok(WSymElement {
                basis: WBasis::Phi,
                terms: multilinear_act(&WSymModule, blocks, &args),
            })
        }
    }
}

/// The module morphism fixed by images of the power sums: sends `Phi^pi`
/// to the action of `pi`'s blocks on the images of its block degrees.
pub fn specialize<M: CModuleOps>(
    e: &WSymElement,
    images: &BTreeMap<usize, LinComb<M::Key>>,
    module: &M,
) -> Result<LinComb<M::Key>> {
    let phi = convert(e, WBasis::Phi);
    let mut out = LinComb::zero();
    for (pi, coeff) in phi.terms.iter() {
        let args: Vec<LinComb<M::Key>> = pi
            .blocks()
            .iter()
            .map(|b| {
                images.get(&b.len()).cloned().ok_or_else(|| {
                    Error::invalid(format!("no image for degree {}", b.len()))
                })
            })
            .collect::<Result<_>>()?;
        let acted = multilinear_act(module, pi.blocks(), &args);
        out = out.combine(&acted, coeff);
    }
    Ok(out)
}

/// The algebra morphism onto commutative symmetric functions sending the
/// degree-n generator to the n-th power sum: `Phi^pi -> p^{shape(pi)}`.
pub fn theta(e: &WSymElement) -> SymElement {
    let phi = convert(e, WBasis::Phi);
    let terms = phi.terms.linear_map(|pi| LinComb::unit(pi.shape()));
    SymElement::new(SymBasis::P, terms)
}

/// Same morphism computed on the monomial side: `M_pi -> shape(pi)^! m_{shape(pi)}`.
/// Must agree with [`theta`]; kept as an independent route for validation.
pub fn theta_via_monomials(e: &WSymElement) -> SymElement {
    let m = convert(e, WBasis::M);
    let terms = m.terms().linear_map(|pi| {
        let (shape, bang) = pi.shape_stats();
        LinComb::term(shape, Coeff::from_integer((bang as i64).into()))
    });
    SymElement::new(SymBasis::M, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::set_partitions;
    use crate::linear::rat;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn ip(parts: &[u32]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn product_examples() {
        let a = WSymElement::phi(sp("{{1}}"));
        let prod = product(&a, &a);
        assert_eq!(prod.terms(), &LinComb::unit(sp("{{1},{2}}")));

        let b = WSymElement::phi(sp("{{1,2}}"));
        let prod = product(&b, &a);
        assert_eq!(prod.terms(), &LinComb::unit(sp("{{1,2},{3}}")));

        // M_{{1}} M_{{1}} through the Phi basis
        let m = WSymElement::monomial(sp("{{1}}"));
        let prod = convert(&product(&m, &m), WBasis::M);
        assert_eq!(prod.coeff(&sp("{{1},{2}}")), rat(1));
        assert_eq!(prod.coeff(&sp("{{1,2}}")), rat(1));
    }

    #[test]
    fn convert_examples() {
        let phi = WSymElement::phi(sp("{{1},{2}}"));
        let m = convert(&phi, WBasis::M);
        assert_eq!(m.coeff(&sp("{{1},{2}}")), rat(1));
        assert_eq!(m.coeff(&sp("{{1,2}}")), rat(1));

        let back = convert(&WSymElement::monomial(sp("{{1},{2}}")), WBasis::Phi);
        assert_eq!(back.coeff(&sp("{{1},{2}}")), rat(1));
        assert_eq!(back.coeff(&sp("{{1,2}}")), rat(-1));
    }

    #[test]
    fn convert_round_trip_small_degrees() {
        for n in 0..=5 {
            for pi in set_partitions(n) {
                let e = WSymElement::phi(pi.clone());
                assert_eq!(convert(&convert(&e, WBasis::M), WBasis::Phi), e);
                let m = WSymElement::monomial(pi);
                assert_eq!(convert(&convert(&m, WBasis::Phi), WBasis::M), m);
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let dm = coproduct(&WSymElement::monomial(sp("{{1,2}}")));
        assert_eq!(dm.terms().len(), 2);
        assert_eq!(
            dm.terms().coeff(&Tensor(SetPartition::empty(), sp("{{1,2}}"))),
            rat(1)
        );

        let dm = coproduct(&WSymElement::monomial(sp("{{1},{2}}")));
        assert_eq!(dm.terms().coeff(&Tensor(sp("{{1}}"), sp("{{1}}"))), rat(2));
        assert_eq!(
            dm.terms().coeff(&Tensor(sp("{{1},{2}}"), SetPartition::empty())),
            rat(1)
        );

        // single-block generators are primitive
        for n in 1..=4 {
            let d = coproduct(&WSymElement::phi_power(n));
            assert_eq!(d.terms().len(), 2);
            let pi = SetPartition::single_block(n);
            assert_eq!(d.terms().coeff(&Tensor(pi.clone(), SetPartition::empty())), rat(1));
            assert_eq!(d.terms().coeff(&Tensor(SetPartition::empty(), pi)), rat(1));
        }
    }

    #[test]
    fn realize_examples() {
        let phi = realize(&WSymElement::phi(sp("{{1,2}}")), 2);
        assert_eq!(phi.coeff(&Word::new(vec![1, 1])), rat(1));
        assert_eq!(phi.coeff(&Word::new(vec![2, 2])), rat(1));
        assert_eq!(phi.len(), 2);

        let m = realize(&WSymElement::monomial(sp("{{1},{2}}")), 2);
        assert_eq!(m.coeff(&Word::new(vec![1, 2])), rat(1));
        assert_eq!(m.coeff(&Word::new(vec![2, 1])), rat(1));
        assert_eq!(m.len(), 2);

        // M over too few letters vanishes
        let m = realize(&WSymElement::monomial(sp("{{1},{2},{3}}")), 2);
        assert!(m.is_zero());
    }

    #[test]
    fn realization_is_multiplicative() {
        let f = WSymElement::phi(sp("{{1,2}}"));
        let g = WSymElement::monomial(sp("{{1},{2}}"));
        let lhs = realize(&product(&f, &g), 4);
        let rhs = word_concat_product(&realize(&f, 4), &realize(&g, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cmodule_act_examples() {
        let p: SetComposition = "[{1,3},{2}]".parse().unwrap();
        let out = cmodule_act(&p, &[WSymElement::phi_power(2), WSymElement::phi_power(1)])
            .unwrap();
        assert_eq!(out.terms(), &LinComb::unit(sp("{{1,3},{2}}")));

        // degree mismatch gives zero
        let q: SetComposition = "[{1,2}]".parse().unwrap();
        let out = cmodule_act(&q, &[WSymElement::phi_power(1)]).unwrap();
        assert!(out.terms().is_zero());

        let unit = SetComposition::Unit;
        let e = WSymElement::phi(sp("{{1,2},{3}}"));
        assert_eq!(cmodule_act(&unit, &[e.clone()]).unwrap(), e);

        let absorb = SetComposition::Absorbing(2);
        assert!(cmodule_act(&absorb, &[e.clone(), e]).unwrap().terms().is_zero());
    }

    #[test]
    fn cmodule_action_compatible_with_realization() {
        let p: SetComposition = "[{1,3},{2}]".parse().unwrap();
        let f = WSymElement::phi_power(2);
        let g = WSymElement::phi_power(1);
        let acted = cmodule_act(&p, &[f.clone(), g.clone()]).unwrap();
        let lhs = realize(&acted, 3);

        // shuffle the realizations into the block positions
        let fw = realize(&f, 3);
        let gw = realize(&g, 3);
        let rhs = crate::linear::bilinear_extend(
            |a: &Word, b: &Word| multilinear_act(
                &WordModule,
                p.blocks().unwrap(),
                &[LinComb::unit(a.clone()), LinComb::unit(b.clone())],
            ),
            &fw,
            &gw,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialize_to_power_sums() {
        let images: BTreeMap<usize, LinComb<IntegerPartition>> =
            (1..=6).map(|n| (n, LinComb::unit(ip(&[n as u32])))).collect();
        let pi = sp("{{2,6},{3,5},{1},{4}}");
        let out = specialize(&WSymElement::phi(pi.clone()), &images, &PowerSumModule).unwrap();
        assert_eq!(out, LinComb::unit(ip(&[2, 2, 1, 1])));
    }

    #[test]
    fn specialize_into_words() {
        let mut images = BTreeMap::new();
        images.insert(
            1usize,
            [(Word::new(vec![1]), rat(1)), (Word::new(vec![2]), rat(1)), (Word::new(vec![3]), rat(1))]
                .into_iter()
                .collect::<LinComb<Word>>(),
        );
        let out = specialize(&WSymElement::phi(sp("{{1}}")), &images, &WordModule).unwrap();
        assert_eq!(out.len(), 3);
        assert_eq!(out.coeff(&Word::new(vec![2])), rat(1));
    }

    #[test]
    fn specialize_missing_degree_errors() {
        let images: BTreeMap<usize, LinComb<IntegerPartition>> = BTreeMap::new();
        assert!(specialize(&WSymElement::phi_power(2), &images, &PowerSumModule).is_err());
    }

    #[test]
    fn theta_examples() {
        let m = WSymElement::monomial(sp("{{1},{2}}"));
        let viam = theta_via_monomials(&m);
        assert_eq!(viam.coeff(&ip(&[1, 1])), rat(2));
        let direct = crate::sym::p_to_m(&theta(&m)).unwrap();
        assert_eq!(direct, viam);

        for n in 1..=4 {
            let t = theta(&WSymElement::phi_power(n));
            assert_eq!(t.terms(), &LinComb::unit(ip(&[n as u32])));
        }
    }

    #[test]
    fn theta_is_an_algebra_morphism() {
        let a = WSymElement::phi(sp("{{1,2},{3}}"));
        let b = WSymElement::monomial(sp("{{1,3},{2}}"));
        let lhs = theta(&product(&a, &b));
        // commutative product of power sums is partition merge
        let rhs_terms = crate::linear::bilinear_extend(
            |x: &IntegerPartition, y: &IntegerPartition| LinComb::unit(x.merge(y)),
            theta(&a).terms(),
            theta(&b).terms(),
        );
        assert_eq!(lhs.terms(), &rhs_terms);
    }
}
