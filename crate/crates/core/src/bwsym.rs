//! The Hopf algebra `BWSym` on set partitions into lists, in the `Phi`,
//! `M` and `M'` bases, with its bi-indexed realization and the projection
//! to `WSym` that forgets list orders.

use std::collections::HashMap;
use std::fmt;

use crate::combinat::{
    lists_from_pair, pair_from_lists, standardize_word, ListSetPartition,
    Permutation, SetPartition, Word,
};
use crate::error::{Error, Result};
use crate::linear::{Coeff, LinComb, Tensor};
use crate::wsym::{WBasis, WSymElement};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BWBasis {
    Phi,
    M,
    Mp,
}

impl BWBasis {
    pub fn tag(self) -> &'static str {
        match self {
            BWBasis::Phi => "BWSym.Phi",
            BWBasis::M => "BWSym.M",
            BWBasis::Mp => "BWSym.Mp",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BWBasis::Phi => "Φ^",
            BWBasis::M => "M_",
            BWBasis::Mp => "M′_",
        }
    }
}

/// An element of `BWSym`, keyed by set partitions into lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BWSymElement {
    basis: BWBasis,
    terms: LinComb<ListSetPartition>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BWSymTensor {
    basis: BWBasis,
    terms: LinComb<Tensor<ListSetPartition, ListSetPartition>>,
}

impl BWSymElement {
    pub fn new(basis: BWBasis, terms: LinComb<ListSetPartition>) -> Self {
        BWSymElement { basis, terms }
    }

    pub fn one(basis: BWBasis) -> Self {
        BWSymElement { basis, terms: LinComb::unit(ListSetPartition::empty()) }
    }

    pub fn phi(key: ListSetPartition) -> Self {
        BWSymElement { basis: BWBasis::Phi, terms: LinComb::unit(key) }
    }

    pub fn monomial(key: ListSetPartition) -> Self {
        BWSymElement { basis: BWBasis::M, terms: LinComb::unit(key) }
    }

    /// `Phi^{(sigma,pi)}` through the pair bijection.
    pub fn phi_pair(sigma: &Permutation, pi: &SetPartition) -> Result<Self> {
        Ok(Self::phi(lists_from_pair(sigma, pi)?))
    }

    pub fn basis(&self) -> BWBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<ListSetPartition> {
        &self.terms
    }

    pub fn coeff(&self, key: &ListSetPartition) -> Coeff {
        self.terms.coeff(key)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.terms.to_json(self.basis.tag())
    }
}

impl fmt::Display for BWSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tagged: LinComb<String> = self
            .terms
            .iter()
            .map(|(k, c)| (format!("{}{}", self.basis.symbol(), k), c.clone()))
            .collect();
        write!(f, "{tagged}")
    }
}

impl BWSymTensor {
    pub fn basis(&self) -> BWBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Tensor<ListSetPartition, ListSetPartition>> {
        &self.terms
    }
}

/// Parses a key given either as lists `{[3,1],[2]}` or as a pair
/// `(321|{{1,3},{2}})`.
pub fn parse_bw_key(s: &str) -> Result<ListSetPartition> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (perm, part) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse("pair key needs 'sigma|pi'".into()))?;
        let sigma: Permutation = perm.trim().parse()?;
        let pi: SetPartition = part.trim().parse()?;
        lists_from_pair(&sigma, &pi)
    } else {
        s.parse()
    }
}

/// Shifted union product, computed in the `Phi` basis.
pub fn product(a: &BWSymElement, b: &BWSymElement) -> Result<BWSymElement> {
    let a = convert(a, BWBasis::Phi)?;
    let b = convert(b, BWBasis::Phi)?;
    let terms = crate::linear::bilinear_extend(
        |pa: &ListSetPartition, pb: &ListSetPartition| LinComb::unit(pa.shifted_union(pb)),
        a.terms(),
        b.terms(),
    );
    Ok(BWSymElement { basis: BWBasis::Phi, terms })
}

/// Coproduct by complementary splits of the list collection; diagonal in
/// the `Phi` and `M` bases.
pub fn coproduct(e: &BWSymElement) -> Result<BWSymTensor> {
    if e.basis == BWBasis::Mp {
        return Err(Error::invalid("coproduct is not available in the M' basis"));
    }
    let terms = e.terms.linear_map(|p| {
        p.complementary_splits()
            .into_iter()
            .map(|(l, r)| (Tensor(l, r), Coeff::from_integer(1.into())))
            .collect()
    });
    Ok(BWSymTensor { basis: e.basis, terms })
}

/// Change of basis between `Phi` and `M`: the permutation component of the
/// pair form is held fixed while the set-partition component is summed
/// over coarsenings, or that sum is triangularly inverted.
pub fn convert(e: &BWSymElement, target: BWBasis) -> Result<BWSymElement> {
    if e.basis == target {
        return Ok(e.clone());
    }
    if e.basis == BWBasis::Mp || target == BWBasis::Mp {
        return Err(Error::invalid("no direct conversion involving the M' basis"));
    }
    let terms = match target {
        BWBasis::M => e.terms.linear_map(|p| {
            phi_key_in_m(p)
                .into_iter()
                .map(|q| (q, Coeff::from_integer(1.into())))
                .collect()
        }),
        BWBasis::Phi => {
            let mut memo: HashMap<ListSetPartition, LinComb<ListSetPartition>> = HashMap::new();
            e.terms.linear_map(|p| monomial_in_phi(p, &mut memo))
        }
        BWBasis::Mp => unreachable!(),
    };
    Ok(BWSymElement { basis: target, terms })
}

/// `Phi^{(sigma,pi)} = sum over coarsenings pi' of pi of M_{(sigma,pi')}`.
fn phi_key_in_m(p: &ListSetPartition) -> Vec<ListSetPartition> {
    let (sigma, pi) = pair_from_lists(p);
    pi.coarsenings()
        .into_iter()
        .map(|q| lists_from_pair(&sigma, &q).expect("coarsening keeps the refinement"))
        .collect()
}

fn monomial_in_phi(
    p: &ListSetPartition,
    memo: &mut HashMap<ListSetPartition, LinComb<ListSetPartition>>,
) -> LinComb<ListSetPartition> {
    if let Some(hit) = memo.get(p) {
        return hit.clone();
    }
    let mut out = LinComb::unit(p.clone());
    for q in phi_key_in_m(p) {
        if &q != p {
            let sub = monomial_in_phi(&q, memo);
            out = out.combine(&sub, &-Coeff::from_integer(1.into()));
        }
    }
    memo.insert(p.clone(), out.clone());
    out
}

/// Expansion of `Phi^Pi` in the `M'` basis by the merge rule: sum over
/// list partitions coarsening the underlying partition of `Pi` whose
/// lists, restricted to the positions of each original block and
/// standardized, reproduce that block's list.
pub fn mprime_expansion(e: &BWSymElement) -> Result<BWSymElement> {
    let phi = convert(e, BWBasis::Phi)?;
    let terms = phi.terms.linear_map(|p| {
        merged_keys(p)
            .into_iter()
            .map(|q| (q, Coeff::from_integer(1.into())))
            .collect()
    });
    Ok(BWSymElement { basis: BWBasis::Mp, terms })
}

fn merged_keys(p: &ListSetPartition) -> Vec<ListSetPartition> {
    let pi = p.underlying_partition();
    let mut out = Vec::new();
    for coarse in pi.coarsenings() {
        // per coarse block, the admissible orderings of its support: the
        // rank word of the ordering, restricted to the sorted-position
        // indices of each original block, must standardize to that block's
        // list pattern
        let mut choices: Vec<Vec<Vec<u32>>> = Vec::new();
        for u in coarse.blocks() {
            let members: Vec<&Vec<u32>> = p
                .lists()
                .iter()
                .filter(|l| l.iter().all(|x| u.contains(x)))
                .collect();
            let mut admissible = Vec::new();
            for q in Permutation::all(u.len()) {
                let rank_word: Vec<u32> = (1..=u.len() as u32).map(|t| q.apply(t)).collect();
                let ok = members.iter().all(|l| {
                    let sub: Vec<u32> = u
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| l.contains(x))
                        .map(|(t, _)| rank_word[t])
                        .collect();
                    standardize_word(&sub) == standardize_word(l)
                });
                if ok {
                    admissible.push(rank_word.iter().map(|&r| u[r as usize - 1]).collect());
                }
            }
            choices.push(admissible);
        }
        for lists in crate::combinat::cartesian(&choices) {
            out.push(
                ListSetPartition::new(p.n(), lists).expect("orderings cover the coarse blocks"),
            );
        }
    }
    out
}

/// A word in bi-indexed letters `a_letter^(group)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiWord(pub Vec<(u32, u32)>);

impl BiWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for BiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &(group, letter) in &self.0 {
            write!(f, "a{letter}^({group})")?;
        }
        Ok(())
    }
}

/// Realization over `groups` families of `letters` bi-indexed variables.
///
/// For `Phi^Pi` the letters within a list-block share a group index and,
/// read in position order, standardize to the block's list; `M'_Pi`
/// additionally forces distinct groups across blocks.
pub fn realize_biindexed(
    e: &BWSymElement,
    groups: usize,
    letters: usize,
) -> Result<LinComb<BiWord>> {
    if groups == 0 || letters == 0 {
        return Err(Error::invalid("need at least one group and one letter"));
    }
    let e = match e.basis {
        BWBasis::M => convert(e, BWBasis::Phi)?,
        _ => e.clone(),
    };
    let distinct = e.basis == BWBasis::Mp;
    Ok(e.terms.linear_map(|p| realize_key(p, groups, letters, distinct)))
}

fn realize_key(
    p: &ListSetPartition,
    groups: usize,
    letters: usize,
    distinct: bool,
) -> LinComb<BiWord> {
    // per block: all (group, letter word) choices matching the block pattern
    let mut per_block: Vec<Vec<(u32, Word)>> = Vec::new();
    for l in p.lists() {
        let pattern = standardize_word(l);
        let words: Vec<Word> = Word::all(letters, l.len())
            .into_iter()
            .filter(|w| standardize_word(w.letters()) == pattern)
            .collect();
        let mut options = Vec::new();
        for g in 1..=groups as u32 {
            for w in &words {
                options.push((g, w.clone()));
            }
        }
        per_block.push(options);
    }
    let mut out = LinComb::zero();
    for combo in crate::combinat::cartesian(&per_block) {
        if distinct {
            let mut gs: Vec<u32> = combo.iter().map(|(g, _)| *g).collect();
            gs.sort_unstable();
            gs.dedup();
            if gs.len() != combo.len() {
                continue;
            }
        }
        let mut placed = vec![(0u32, 0u32); p.n()];
        for (l, (g, w)) in p.lists().iter().zip(&combo) {
            let mut positions: Vec<u32> = l.clone();
            positions.sort_unstable();
            for (&pos, &a) in positions.iter().zip(w.letters()) {
                placed[pos as usize - 1] = (*g, a);
            }
        }
        out.add_term(BiWord(placed), Coeff::from_integer(1.into()));
    }
    out
}

/// The Hopf morphism to `WSym` forgetting list orders.
pub fn to_wsym(e: &BWSymElement) -> Result<WSymElement> {
    let phi = convert(e, BWBasis::Phi)?;
    let terms = phi
        .terms
        .linear_map(|p| LinComb::unit(p.underlying_partition()));
    Ok(WSymElement::new(WBasis::Phi, terms))
}
