//! The three Redfield-Polya-type theorems: the cycle support polynomial in
//! `WSym` and `BWSym`, brute-force orbit censuses, and Harary-Palmer
//! enumeration through virtual alphabets.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bwsym::{BWSymElement, BWBasis};
use crate::combinat::{
    lists_from_pair, set_partitions, IntegerPartition, Permutation, SetPartition, Word,
};
use crate::error::{Error, Result};
use crate::groups::{act, two_sided_stabilizer, PermGroup};
use crate::linear::{Coeff, LinComb};
use crate::wsym::{convert, specialize, WBasis, WSymElement, WordModule};

pub type WordPolynomial = LinComb<Word>;

/// Default cap on the number of words a census may enumerate.
pub const DEFAULT_MAX_WORDS: u64 = 10_000_000;

/// The cycle support polynomial `Z_G = sum over sigma in G of
/// Phi^{cycle_support(sigma)}`, with integer coefficients.
pub fn word_cycle_support_poly(g: &PermGroup) -> WSymElement {
    let mut terms = LinComb::zero();
    for sigma in g.elements() {
        terms.add_term(sigma.cycle_support(), Coeff::one());
    }
    WSymElement::new(WBasis::Phi, terms)
}

/// Deterministic representative word of a shape: letter `i` on the i-th
/// block in block-minimum order.
pub fn shape_representative(p: &SetPartition) -> Word {
    let mut letters = vec![0u32; p.n()];
    for (i, b) in p.blocks().iter().enumerate() {
        for &pos in b {
            letters[pos as usize - 1] = i as u32 + 1;
        }
    }
    Word::new(letters)
}

/// Coefficient of `M_p` in the cycle support polynomial; Theorem 2 says
/// this is the stabilizer size of any word of shape `p`, and both routes
/// are computed and compared.
pub fn wpolya_coefficient(g: &PermGroup, p: &SetPartition) -> Result<u64> {
    if p.n() != g.degree() {
        return Err(Error::invalid(format!(
            "shape size {} does not match group degree {}",
            p.n(),
            g.degree()
        )));
    }
    let m = convert(&word_cycle_support_poly(g), WBasis::M);
    let coeff = m.coeff(p);
    let stab = g.stabilizer(&shape_representative(p))?.len() as u64;
    if coeff != Coeff::from_integer((stab as i64).into()) {
        return Err(Error::Inconsistency(format!(
            "M-coefficient {coeff} of {p} differs from stabilizer size {stab}"
        )));
    }
    Ok(stab)
}

/// The multiplicity-free version: `Z_G = sum over sigma of
/// Phi^{(sigma, cycle_support(sigma))}` in `BWSym`.
pub fn bw_cycle_support_poly(g: &PermGroup) -> BWSymElement {
    let mut terms = LinComb::zero();
    for sigma in g.elements() {
        let key = lists_from_pair(sigma, &sigma.cycle_support())
            .expect("cycle support refines itself");
        terms.add_term(key, Coeff::one());
    }
    BWSymElement::new(BWBasis::Phi, terms)
}

/// Result of a brute-force orbit census of all words over `letters`
/// letters under a permutation group acting on positions.
#[derive(Clone, Debug)]
pub struct OrbitCensus {
    pub degree: usize,
    pub letters: usize,
    pub group_order: usize,
    /// Lexicographically minimal representative of each orbit, with size.
    pub orbit_sizes: BTreeMap<Word, u64>,
    /// Common orbit size for words of each shape with at most `letters` blocks.
    pub shape_orbit_size: BTreeMap<SetPartition, u64>,
    /// `n_lambda`: orbits whose letter-count vector equals `lambda` on
    /// letters `1..=len(lambda)`.
    pub type_counts: BTreeMap<IntegerPartition, u64>,
}

impl OrbitCensus {
    pub fn orbit_count(&self) -> usize {
        self.orbit_sizes.len()
    }
}

fn word_from_index(mut idx: u64, k: usize, n: usize) -> Word {
    let mut letters = vec![0u32; n];
    for slot in (0..n).rev() {
        letters[slot] = (idx % k as u64) as u32 + 1;
        idx /= k as u64;
    }
    Word::new(letters)
}

fn canonical_rep(w: &Word, g: &PermGroup) -> Word {
    g.elements()
        .iter()
        .map(|s| act(w, s))
        .min()
        .expect("groups are nonempty")
}

fn census_fold_seq(total: u64, k: usize, n: usize, g: &PermGroup) -> HashMap<Word, u64> {
    let mut sizes: HashMap<Word, u64> = HashMap::new();
    for idx in 0..total {
        let w = word_from_index(idx, k, n);
        *sizes.entry(canonical_rep(&w, g)).or_insert(0) += 1;
    }
    sizes
}

#[cfg(feature = "parallel")]
fn census_fold(total: u64, k: usize, n: usize, g: &PermGroup) -> HashMap<Word, u64> {
    (0..total)
        .into_par_iter()
        .fold(HashMap::new, |mut sizes: HashMap<Word, u64>, idx| {
            let w = word_from_index(idx, k, n);
            *sizes.entry(canonical_rep(&w, g)).or_insert(0) += 1;
            sizes
        })
        .reduce(HashMap::new, |mut a, b| {
            for (w, c) in b {
                *a.entry(w).or_insert(0) += c;
            }
            a
        })
}

#[cfg(not(feature = "parallel"))]
fn census_fold(total: u64, k: usize, n: usize, g: &PermGroup) -> HashMap<Word, u64> {
    census_fold_seq(total, k, n, g)
}

/// Brute-force census of `letters^degree` words under `g`, validating the
/// orbit-stabilizer relation on every orbit and the type-count identity
/// `n_lambda = sum over shapes of lambda^!/orbit_size` for every type.
pub fn orbit_census(g: &PermGroup, letters: usize, max_words: Option<u64>) -> Result<OrbitCensus> {
    census_impl(g, letters, max_words, census_fold)
}

/// Sequential variant of [`orbit_census`], kept callable for benchmarks.
pub fn orbit_census_seq(
    g: &PermGroup,
    letters: usize,
    max_words: Option<u64>,
) -> Result<OrbitCensus> {
    census_impl(g, letters, max_words, census_fold_seq)
}

fn census_impl(
    g: &PermGroup,
    letters: usize,
    max_words: Option<u64>,
    fold: impl Fn(u64, usize, usize, &PermGroup) -> HashMap<Word, u64>,
) -> Result<OrbitCensus> {
    if letters == 0 {
        return Err(Error::invalid("need at least one letter"));
    }
    let n = g.degree();
    let budget = max_words.unwrap_or(DEFAULT_MAX_WORDS);
    let total = (letters as u64).checked_pow(n as u32).filter(|&t| t <= budget);
    let total = total.ok_or_else(|| {
        Error::Resource(format!("{letters}^{n} words exceed the budget of {budget}"))
    })?;

    let sizes = fold(total, letters, n, g);
    let orbit_sizes: BTreeMap<Word, u64> = sizes.into_iter().collect();

    // Eq. (2): orbit-stabilizer on every orbit
    for (rep, &size) in &orbit_sizes {
        let stab = g.stabilizer(rep)?.len() as u64;
        if size * stab != g.order() as u64 {
            return Err(Error::Inconsistency(format!(
                "orbit of {rep} has size {size} but stabilizer size {stab} in a group of order {}",
                g.order()
            )));
        }
    }

    // per-orbit letter contents give the type counts
    let mut type_counts: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
    for rep in orbit_sizes.keys() {
        let mut content = vec![0u32; letters];
        for &a in rep.letters() {
            content[a as usize - 1] += 1;
        }
        let nonzero = content.iter().take_while(|&&c| c > 0).count();
        if content[nonzero..].iter().any(|&c| c > 0) {
            continue; // letters used are not an initial segment
        }
        let prefix = &content[..nonzero];
        if prefix.windows(2).all(|p| p[0] >= p[1]) {
            let lambda = IntegerPartition::new(prefix.to_vec())?;
            *type_counts.entry(lambda).or_insert(0) += 1;
        }
    }

    // common orbit size per shape, via the canonical representative
    let mut shape_orbit_size = BTreeMap::new();
    for pi in set_partitions(n) {
        if pi.num_blocks() > letters {
            continue;
        }
        let rep = canonical_rep(&shape_representative(&pi), g);
        shape_orbit_size.insert(pi, orbit_sizes[&rep]);
    }

    // Eq. (3): n_lambda = sum over shapes of that type of lambda^!/orbit size
    for (lambda, &count) in &type_counts {
        let mut acc = Coeff::zero();
        for (pi, &size) in &shape_orbit_size {
            let (shape, bang) = pi.shape_stats();
            if &shape == lambda {
                acc += Coeff::new((bang as i64).into(), (size as i64).into());
            }
        }
        if acc != Coeff::from_integer((count as i64).into()) {
            return Err(Error::Inconsistency(format!(
                "type {lambda}: census found {count} orbits but the shape sum gives {acc}"
            )));
        }
    }

    Ok(OrbitCensus {
        degree: n,
        letters,
        group_order: g.order(),
        orbit_sizes,
        shape_orbit_size,
        type_counts,
    })
}

/// A virtual alphabet `A_tau`, carried by the cycles of a base permutation
/// of the letter names.
#[derive(Clone, Debug)]
pub struct VirtualAlphabet {
    cycles: Vec<Vec<u32>>,
    letters: usize,
}

impl VirtualAlphabet {
    pub fn from_permutation(tau: &Permutation) -> Self {
        VirtualAlphabet { cycles: tau.cycles(), letters: tau.size() }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }
}

/// `Phi^n[A_tau]`: each cycle of length `k` dividing `n` contributes its
/// `k` cyclic rotations raised to the power `n/k`; other cycles give 0.
pub fn specialize_power_sum(t: &VirtualAlphabet, n: usize) -> WordPolynomial {
    let mut out = LinComb::zero();
    for c in &t.cycles {
        let k = c.len();
        if n % k != 0 {
            continue;
        }
        for r in 0..k {
            let mut letters = Vec::with_capacity(n);
            for i in 0..n {
                letters.push(c[(r + i) % k]);
            }
            out.add_term(Word::new(letters), Coeff::one());
        }
    }
    out
}

/// `Phi^pi[A_tau]` through the word-polynomial module: the blocks of `pi`
/// shuffle the power-sum specializations into position.
pub fn specialized_phi(p: &SetPartition, t: &VirtualAlphabet) -> Result<WordPolynomial> {
    let images: BTreeMap<usize, WordPolynomial> = p
        .blocks()
        .iter()
        .map(|b| b.len())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(|n| (n, specialize_power_sum(t, n)))
        .collect();
    specialize(&WSymElement::phi(p.clone()), &images, &WordModule)
}

fn zhg_terms(h: &PermGroup, g: &PermGroup) -> Vec<(Permutation, SetPartition)> {
    let mut pairs = Vec::with_capacity(h.order() * g.order());
    for tau in h.elements() {
        for sigma in g.elements() {
            pairs.push((tau.clone(), sigma.cycle_support()));
        }
    }
    pairs
}

/// The Harary-Palmer cycle support polynomial
/// `Z(H;G) = sum over tau in H, sigma in G of Phi^{cycle_support(sigma)}[A_tau]`.
pub fn zhg(h: &PermGroup, g: &PermGroup) -> Result<WordPolynomial> {
    let pairs = zhg_terms(h, g);
    #[cfg(feature = "parallel")]
    {
        let parts: Vec<Result<WordPolynomial>> = pairs
            .par_iter()
            .map(|(tau, support)| {
                specialized_phi(support, &VirtualAlphabet::from_permutation(tau))
            })
            .collect();
        let mut out = LinComb::zero();
        for p in parts {
            out = out.add(&p?);
        }
        Ok(out)
    }
    #[cfg(not(feature = "parallel"))]
    {
        zhg_from_pairs(&pairs)
    }
}

/// Sequential variant of [`zhg`], kept callable for benchmarks.
pub fn zhg_seq(h: &PermGroup, g: &PermGroup) -> Result<WordPolynomial> {
    zhg_from_pairs(&zhg_terms(h, g))
}

fn zhg_from_pairs(pairs: &[(Permutation, SetPartition)]) -> Result<WordPolynomial> {
    let mut out = LinComb::zero();
    for (tau, support) in pairs {
        out = out.add(&specialized_phi(support, &VirtualAlphabet::from_permutation(tau))?);
    }
    Ok(out)
}

/// Brute-force validator for [`zhg`]: `sum over all words w of
/// |Stab_{H,G}(w)| w`, straight from the two-sided stabilizer oracle.
pub fn zhg_oracle(h: &PermGroup, g: &PermGroup) -> Result<WordPolynomial> {
    let m = h.degree();
    let n = g.degree();
    let total = (m as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= DEFAULT_MAX_WORDS)
        .ok_or_else(|| Error::Resource(format!("{m}^{n} words exceed the oracle budget")))?;
    let mut out = LinComb::zero();
    for idx in 0..total {
        let w = word_from_index(idx, m, n);
        let stab = two_sided_stabilizer(h, g, &w)?.len() as i64;
        out.add_term(w, Coeff::from_integer(stab.into()));
    }
    Ok(out)
}

/// Sends every variable to 1: the sum of coefficients.
pub fn evaluate_at_ones(p: &WordPolynomial) -> Coeff {
    p.sum_of_coeffs()
}
