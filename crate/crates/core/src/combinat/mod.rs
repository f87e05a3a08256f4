//! Canonical combinatorial objects: set partitions, set compositions,
//! set partitions into lists, integer partitions, permutations and words.
//!
//! All values are immutable after construction and canonicalized, so they
//! can be used directly as basis keys.

mod text;

pub use text::split_top;

use crate::error::{Error, Result};

/// An unordered partition of `{1,..,n}` into nonempty blocks.
///
/// Canonical form: each block sorted increasingly, blocks ordered by their
/// minimum element. Equality and ordering are decided on this form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::invalid("set partition with an empty block"));
            }
            for &x in b {
                if x == 0 || x as usize > n {
                    return Err(Error::invalid(format!("element {x} outside 1..={n}")));
                }
                if seen[x as usize - 1] {
                    return Err(Error::invalid(format!("element {x} repeated")));
                }
                seen[x as usize - 1] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::invalid("blocks do not cover 1..=n"));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Ok(SetPartition { n, blocks })
    }

    pub fn empty() -> Self {
        SetPartition { n: 0, blocks: vec![] }
    }

    /// `{{1},{2},...,{n}}`, the finest partition.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n as u32).map(|i| vec![i]).collect(),
        }
    }

    /// `{{1,..,n}}` (empty for n = 0).
    pub fn single_block(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        SetPartition { n, blocks: vec![(1..=n as u32).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// True iff every block of `coarser` is a union of blocks of `self`.
    pub fn refines(&self, coarser: &SetPartition) -> Result<bool> {
        if self.n != coarser.n {
            return Err(Error::invalid("refinement check on different sizes"));
        }
        // block index of each element in `coarser`
        let mut idx = vec![0usize; self.n];
        for (i, b) in coarser.blocks.iter().enumerate() {
            for &x in b {
                idx[x as usize - 1] = i;
            }
        }
        Ok(self
            .blocks
            .iter()
            .all(|b| b.iter().all(|&x| idx[x as usize - 1] == idx[b[0] as usize - 1])))
    }

    /// All partitions `q` with `self.refines(q)`, including `self`.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        let k = self.blocks.len();
        set_partitions(k)
            .into_iter()
            .map(|grouping| {
                let blocks = grouping
                    .blocks
                    .iter()
                    .map(|g| {
                        let mut merged: Vec<u32> = g
                            .iter()
                            .flat_map(|&bi| self.blocks[bi as usize - 1].iter().copied())
                            .collect();
                        merged.sort_unstable();
                        merged
                    })
                    .collect();
                SetPartition::new(self.n, blocks).expect("merging blocks keeps a valid partition")
            })
            .collect()
    }

    /// Adds `s` to every element.
    pub fn shift(&self, s: usize) -> SetPartition {
        SetPartition {
            n: self.n + s,
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|&x| x + s as u32).collect())
                .collect(),
        }
        .recanonicalized()
    }

    fn recanonicalized(mut self) -> Self {
        for b in &mut self.blocks {
            b.sort_unstable();
        }
        self.blocks.sort();
        self
    }

    /// All `2^k` ordered pairs of complementary block sub-collections,
    /// both sides standardized.
    pub fn complementary_splits(&self) -> Vec<(SetPartition, SetPartition)> {
        let k = self.blocks.len();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..(1u64 << k) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, b) in self.blocks.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(b.clone());
                } else {
                    right.push(b.clone());
                }
            }
            out.push((standardize_blocks(&left), standardize_blocks(&right)));
        }
        out
    }

    /// Block sizes sorted decreasingly, with the product of factorials of the
    /// part multiplicities.
    pub fn shape_stats(&self) -> (IntegerPartition, u64) {
        let shape = IntegerPartition::from_unsorted(
            self.blocks.iter().map(|b| b.len() as u32).collect(),
        );
        let bang = shape.multiplicity_factorial();
        (shape, bang)
    }

    /// Integer partition of block sizes.
    pub fn shape(&self) -> IntegerPartition {
        self.shape_stats().0
    }
}

/// Standardizes an arbitrary disjoint block collection into a set partition
/// of its support size.
pub fn standardize_blocks(blocks: &[Vec<u32>]) -> SetPartition {
    let relabel = relabel_map(blocks.iter().flatten().copied());
    let n = relabel.len();
    let blocks = blocks
        .iter()
        .map(|b| b.iter().map(|x| relabel[x]).collect())
        .collect();
    SetPartition::new(n, blocks).expect("standardization preserves validity")
}

fn relabel_map(values: impl Iterator<Item = u32>) -> std::collections::BTreeMap<u32, u32> {
    let sorted: std::collections::BTreeSet<u32> = values.collect();
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i as u32 + 1))
        .collect()
}

/// A partition of `{1,..,n}` into nonempty ordered lists.
///
/// Canonical form: lists ordered by the minimum of their supports.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ListSetPartition {
    n: usize,
    lists: Vec<Vec<u32>>,
}

impl ListSetPartition {
    pub fn new(n: usize, lists: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for l in &lists {
            if l.is_empty() {
                return Err(Error::invalid("set partition into lists with an empty list"));
            }
            for &x in l {
                if x == 0 || x as usize > n {
                    return Err(Error::invalid(format!("element {x} outside 1..={n}")));
                }
                if seen[x as usize - 1] {
                    return Err(Error::invalid(format!("element {x} repeated")));
                }
                seen[x as usize - 1] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::invalid("lists do not cover 1..=n"));
        }
        let mut lists = lists;
        lists.sort_by_key(|l| *l.iter().min().unwrap());
        Ok(ListSetPartition { n, lists })
    }

    pub fn empty() -> Self {
        ListSetPartition { n: 0, lists: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn num_lists(&self) -> usize {
        self.lists.len()
    }

    /// Forgets the internal orders.
    pub fn underlying_partition(&self) -> SetPartition {
        SetPartition::new(self.n, self.lists.clone())
            .expect("support of a list partition is a partition")
    }

    pub fn shift(&self, s: usize) -> ListSetPartition {
        let lists = self
            .lists
            .iter()
            .map(|l| l.iter().map(|&x| x + s as u32).collect())
            .collect();
        // supports move above s, so skip the covering check
        ListSetPartition { n: self.n + s, lists }
    }

    /// Shifted union: `self` on `{1..n}`, `other` shifted onto `{n+1..n+m}`.
    pub fn shifted_union(&self, other: &ListSetPartition) -> ListSetPartition {
        let mut lists = self.lists.clone();
        lists.extend(other.shift(self.n).lists.iter().cloned());
        ListSetPartition::new(self.n + other.n, lists).expect("shifted union is disjoint")
    }

    pub fn complementary_splits(&self) -> Vec<(ListSetPartition, ListSetPartition)> {
        let k = self.lists.len();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u64..(1u64 << k) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, l) in self.lists.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(l.clone());
                } else {
                    right.push(l.clone());
                }
            }
            out.push((standardize_lists(&left), standardize_lists(&right)));
        }
        out
    }
}

/// Replaces the i-th smallest integer by i. Errors on duplicates.
pub fn standardize_ints(values: &[u32]) -> Result<Vec<u32>> {
    let set: std::collections::BTreeSet<u32> = values.iter().copied().collect();
    if set.len() != values.len() {
        return Err(Error::invalid("standardize on duplicate integers"));
    }
    let map = relabel_map(values.iter().copied());
    Ok(values.iter().map(|x| map[x]).collect())
}

/// Standardizes a disjoint collection of lists into a canonical
/// `ListSetPartition` of its support size.
pub fn standardize_lists(lists: &[Vec<u32>]) -> ListSetPartition {
    let relabel = relabel_map(lists.iter().flatten().copied());
    let n = relabel.len();
    let lists = lists
        .iter()
        .map(|l| l.iter().map(|x| relabel[x]).collect())
        .collect();
    ListSetPartition::new(n, lists).expect("standardization preserves validity")
}

/// A set composition: an ordered sequence of disjoint blocks covering
/// `{1,..,n}`, or an absorbing element of some arity, or the operadic unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SetComposition {
    Unit,
    Absorbing(usize),
    Proper { n: usize, blocks: Vec<Vec<u32>> },
}

impl SetComposition {
    /// Builds a proper composition; the empty composition is identified with
    /// the absorbing element of arity 0.
    pub fn proper(n: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        if blocks.is_empty() {
            if n != 0 {
                return Err(Error::invalid("empty composition must have size 0"));
            }
            return Ok(SetComposition::Absorbing(0));
        }
        // reuse the partition validation, then keep the given block order
        SetPartition::new(n, blocks.clone())?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(SetComposition::Proper { n, blocks })
    }

    pub fn from_partition(p: &SetPartition) -> Self {
        if p.n() == 0 {
            return SetComposition::Absorbing(0);
        }
        SetComposition::Proper { n: p.n(), blocks: p.blocks().to_vec() }
    }

    pub fn arity(&self) -> usize {
        match self {
            SetComposition::Unit => 1,
            SetComposition::Absorbing(m) => *m,
            SetComposition::Proper { blocks, .. } => blocks.len(),
        }
    }

    /// Size of the underlying ground set, when proper.
    pub fn size(&self) -> Option<usize> {
        match self {
            SetComposition::Proper { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn blocks(&self) -> Option<&[Vec<u32>]> {
        match self {
            SetComposition::Proper { blocks, .. } => Some(blocks),
            _ => None,
        }
    }

    pub fn shift(&self, s: usize) -> SetComposition {
        match self {
            SetComposition::Proper { n, blocks } => SetComposition::Proper {
                n: n + s,
                blocks: blocks
                    .iter()
                    .map(|b| b.iter().map(|&x| x + s as u32).collect())
                    .collect(),
            },
            other => other.clone(),
        }
    }

    /// Right action of a permutation of the arity on the block sequence;
    /// absorbing elements and the unit are invariant.
    pub fn permuted(&self, sigma: &Permutation) -> Result<SetComposition> {
        match self {
            SetComposition::Proper { n, blocks } => {
                if sigma.size() != blocks.len() {
                    return Err(Error::invalid("permutation arity mismatch"));
                }
                let permuted = (1..=blocks.len() as u32)
                    .map(|j| blocks[sigma.apply(j) as usize - 1].clone())
                    .collect();
                Ok(SetComposition::Proper { n: *n, blocks: permuted })
            }
            other => Ok(other.clone()),
        }
    }
}

/// Operadic partial composition on set compositions.
pub fn partial_compose(
    p: &SetComposition,
    i: usize,
    q: &SetComposition,
) -> Result<SetComposition> {
    if i == 0 || i > p.arity() {
        return Err(Error::invalid(format!(
            "composition index {i} out of range 1..={}",
            p.arity()
        )));
    }
    use SetComposition::*;
    match (p, q) {
        (Unit, _) => Ok(q.clone()),
        (_, Unit) => Ok(p.clone()),
        (Absorbing(k), _) => Ok(Absorbing(k + q.arity() - 1)),
        (Proper { blocks, .. }, Absorbing(kq)) => Ok(Absorbing(blocks.len() + kq - 1)),
        (Proper { n, blocks }, Proper { n: nq, blocks: qblocks }) => {
            let target = &blocks[i - 1];
            if *nq != target.len() {
                return Ok(Absorbing(blocks.len() + qblocks.len() - 1));
            }
            // relabel each block of q through the sorted elements of the
            // i-th block of p
            let mut new_blocks = Vec::with_capacity(blocks.len() + qblocks.len() - 1);
            new_blocks.extend(blocks[..i - 1].iter().cloned());
            for qb in qblocks {
                new_blocks.push(qb.iter().map(|&j| target[j as usize - 1]).collect());
            }
            new_blocks.extend(blocks[i..].iter().cloned());
            SetComposition::proper(*n, new_blocks)
        }
    }
}

/// Operadic insertion for permutations: blows up the i-th slot of `tau`
/// into `sigma`.
pub fn perm_partial_compose(tau: &Permutation, i: usize, sigma: &Permutation) -> Permutation {
    let m = tau.size();
    let n = sigma.size();
    assert!(i >= 1 && i <= m, "insertion index out of range");
    let len = |q: usize| if q == i { n } else { 1 };
    let start_dom = |p: usize| -> usize { (1..p).map(len).sum::<usize>() + 1 };
    let start_im = |p: usize| -> usize {
        (1..=m)
            .filter(|&q| tau.apply(q as u32) < tau.apply(p as u32))
            .map(len)
            .sum::<usize>()
            + 1
    };
    let mut word = vec![0u32; m + n - 1];
    for p in 1..=m {
        if p == i {
            for t in 0..n {
                word[start_dom(p) + t - 1] =
                    (start_im(p) + sigma.apply(t as u32 + 1) as usize - 1) as u32;
            }
        } else {
            word[start_dom(p) - 1] = start_im(p) as u32;
        }
    }
    Permutation::new(word).expect("operadic insertion yields a permutation")
}

/// The unique word placing `words[i]`'s letters at the positions of the
/// i-th block, in order. `None` is the zero indicator (length mismatch).
pub fn shuffle_into_positions(p: &SetComposition, words: &[Word]) -> Result<Option<Word>> {
    let blocks = p
        .blocks()
        .ok_or_else(|| Error::invalid("shuffle requires a proper composition"))?;
    if blocks.len() != words.len() {
        return Err(Error::invalid("one word per block required"));
    }
    let n = p.size().unwrap();
    let mut letters = vec![0u32; n];
    for (b, w) in blocks.iter().zip(words) {
        if b.len() != w.len() {
            return Ok(None);
        }
        for (&pos, &a) in b.iter().zip(w.letters()) {
            letters[pos as usize - 1] = a;
        }
    }
    Ok(Some(Word::new(letters)))
}

/// All interleavings of two lists preserving their internal orders.
pub fn list_shuffle<T: Clone>(l: &[T], m: &[T]) -> Vec<Vec<T>> {
    if l.is_empty() {
        return vec![m.to_vec()];
    }
    if m.is_empty() {
        return vec![l.to_vec()];
    }
    let mut out = Vec::new();
    for mut v in list_shuffle(&l[1..], m) {
        v.insert(0, l[0].clone());
        out.push(v);
    }
    for mut v in list_shuffle(l, &m[1..]) {
        v.insert(0, m[0].clone());
        out.push(v);
    }
    out
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition part must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// `lambda^!`: the product of factorials of part multiplicities.
    pub fn multiplicity_factorial(&self) -> u64 {
        let mut prod = 1u64;
        let mut run = 1u64;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                prod *= run;
            } else {
                run = 1;
            }
        }
        prod
    }

    /// Concatenation, re-sorted.
    pub fn merge(&self, other: &IntegerPartition) -> IntegerPartition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        IntegerPartition::from_unsorted(parts)
    }

    /// All partitions of `n`.
    pub fn all(n: usize) -> Vec<IntegerPartition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
            if n == 0 {
                out.push(IntegerPartition { parts: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n as u32, n.max(1) as u32, &mut Vec::new(), &mut out);
        out
    }
}

/// A permutation of `{1,..,n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &x in &word {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return Err(Error::invalid("not a permutation in one-line notation"));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn one_line(&self) -> &[u32] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// 1-based application.
    pub fn apply(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    /// `(self o other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "composition size mismatch");
        Permutation {
            word: (1..=self.size() as u32).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u32; self.size()];
        for (i, &x) in self.word.iter().enumerate() {
            word[x as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// Cycles written from their minimal element, ordered by minima.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The set partition formed by the cycles.
    pub fn cycle_support(&self) -> SetPartition {
        SetPartition::new(self.size(), self.cycles())
            .expect("cycles partition the ground set")
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        IntegerPartition::from_unsorted(
            self.cycles().iter().map(|c| c.len() as u32).collect(),
        )
    }

    /// `(cycle_support, cycle_type)`.
    pub fn cycle_data(&self) -> (SetPartition, IntegerPartition) {
        (self.cycle_support(), self.cycle_type())
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut word: Vec<u32> = (1..=n as u32).collect();
        let mut out = vec![Permutation { word: word.clone() }];
        while next_lex(&mut word) {
            out.push(Permutation { word: word.clone() });
        }
        out
    }
}

fn next_lex(word: &mut [u32]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// A finite sequence of letter indices naming `a_1, a_2, ...`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Positions grouped by equal letters.
    pub fn shape(&self) -> Result<SetPartition> {
        if self.is_empty() {
            return Err(Error::invalid("shape of the empty word"));
        }
        let mut groups: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for (i, &a) in self.letters.iter().enumerate() {
            groups.entry(a).or_default().push(i as u32 + 1);
        }
        SetPartition::new(self.len(), groups.into_values().collect())
    }

    /// All words of length `n` over letters `1..=k`.
    pub fn all(k: usize, n: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(k.pow(n as u32));
        let mut cur = vec![1u32; n];
        loop {
            out.push(Word::new(cur.clone()));
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                if cur[i - 1] < k as u32 {
                    cur[i - 1] += 1;
                    for x in cur[i..].iter_mut() {
                        *x = 1;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }
}

/// Standardization of a word with possible repeats: ties break by position.
pub fn standardize_word(letters: &[u32]) -> Permutation {
    let mut idx: Vec<usize> = (0..letters.len()).collect();
    idx.sort_by_key(|&i| (letters[i], i));
    let mut word = vec![0u32; letters.len()];
    for (rank, &i) in idx.iter().enumerate() {
        word[i] = rank as u32 + 1;
    }
    Permutation { word }
}

/// Orders each block of `pi` by the one-line word of `sigma`: the list for a
/// block with positions `i_1 < ... < i_b` is `[sigma(i_1),...,sigma(i_b)]`.
/// Requires the cycle support of `sigma` to refine `pi`.
pub fn lists_from_pair(sigma: &Permutation, pi: &SetPartition) -> Result<ListSetPartition> {
    if sigma.size() != pi.n() {
        return Err(Error::invalid("pair size mismatch"));
    }
    if !sigma.cycle_support().refines(pi)? {
        return Err(Error::invalid(
            "cycle support does not refine the partition",
        ));
    }
    let lists = pi
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&i| sigma.apply(i)).collect())
        .collect();
    ListSetPartition::new(pi.n(), lists)
}

/// Inverse of [`lists_from_pair`].
pub fn pair_from_lists(p: &ListSetPartition) -> (Permutation, SetPartition) {
    let mut word = vec![0u32; p.n()];
    for l in p.lists() {
        let mut support: Vec<u32> = l.clone();
        support.sort_unstable();
        for (&pos, &val) in support.iter().zip(l) {
            word[pos as usize - 1] = val;
        }
    }
    let sigma = Permutation::new(word).expect("lists define a permutation blockwise");
    (sigma, p.underlying_partition())
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Bell numbers by the triangle recurrence.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// All set partitions of `{1,..,n}`.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    let mut acc: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for x in 1..=n as u32 {
        let mut next = Vec::new();
        for blocks in &acc {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i].push(x);
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(vec![x]);
            next.push(b);
        }
        acc = next;
    }
    acc.into_iter()
        .map(|blocks| SetPartition::new(n, blocks).unwrap())
        .collect()
}

/// All set partitions into lists of `{1,..,n}`.
pub fn list_set_partitions(n: usize) -> Vec<ListSetPartition> {
    let mut out = Vec::new();
    for p in set_partitions(n) {
        let per_block: Vec<Vec<Vec<u32>>> = p
            .blocks()
            .iter()
            .map(|b| all_orderings(b))
            .collect();
        for combo in cartesian(&per_block) {
            out.push(ListSetPartition::new(n, combo).unwrap());
        }
    }
    out
}

/// All proper set compositions of `{1,..,n}` (ordered set partitions).
pub fn set_compositions(n: usize) -> Vec<SetComposition> {
    let mut out = Vec::new();
    for p in set_partitions(n) {
        let k = p.num_blocks();
        for sigma in Permutation::all(k) {
            let blocks = (1..=k as u32)
                .map(|j| p.blocks()[sigma.apply(j) as usize - 1].clone())
                .collect();
            out.push(SetComposition::proper(n, blocks).unwrap());
        }
    }
    if n == 0 {
        // the empty composition, identified with the arity-0 absorbing element
        out.push(SetComposition::Absorbing(0));
    }
    out.sort();
    out.dedup();
    out
}

/// All orderings of the entries of a block.
pub fn all_orderings(b: &[u32]) -> Vec<Vec<u32>> {
    Permutation::all(b.len())
        .into_iter()
        .map(|s| (1..=b.len() as u32).map(|j| b[s.apply(j) as usize - 1]).collect())
        .collect()
}

/// Cartesian product of the choice lists, in lexicographic order of indices.
pub fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for x in c {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}
