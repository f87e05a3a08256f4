//! Finite permutation groups stored by exhaustive element lists, with
//! orbits and stabilizers of words under one-sided and two-sided actions.

use std::collections::{BTreeSet, HashSet};

use crate::combinat::{Permutation, Word};
use crate::error::{Error, Result};

/// Default cap on group orders produced by [`PermGroup::closure`].
pub const DEFAULT_MAX_ORDER: usize = 10_080;

/// A finite permutation group of fixed degree, stored by its element list
/// in lexicographic one-line order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, elements: vec![Permutation::identity(degree)] }
    }

    pub fn symmetric(degree: usize) -> Self {
        PermGroup { degree, elements: Permutation::all(degree) }
    }

    /// Breadth-first closure of a generating set under composition.
    pub fn closure(generators: &[Permutation], max_order: usize) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.size(),
            None => return Err(Error::invalid("closure of an empty generator set")),
        };
        if generators.iter().any(|g| g.size() != degree) {
            return Err(Error::invalid("generators of mixed sizes"));
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = vec![Permutation::identity(degree)];
        seen.insert(Permutation::identity(degree));
        while let Some(g) = queue.pop() {
            for gen in generators {
                let h = gen.compose(&g);
                if seen.insert(h.clone()) {
                    if seen.len() > max_order {
                        return Err(Error::Resource(format!(
                            "group order exceeds cap {max_order}"
                        )));
                    }
                    queue.push(h);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup { degree, elements })
    }

    /// Builds a group from an explicit element list, verifying closure.
    pub fn from_elements(elements: Vec<Permutation>) -> Result<Self> {
        let degree = match elements.first() {
            Some(g) => g.size(),
            None => return Err(Error::invalid("empty element list")),
        };
        if elements.iter().any(|g| g.size() != degree) {
            return Err(Error::invalid("elements of mixed sizes"));
        }
        let set: HashSet<&Permutation> = elements.iter().collect();
        if set.len() != elements.len() {
            return Err(Error::invalid("repeated elements"));
        }
        if !set.contains(&Permutation::identity(degree)) {
            return Err(Error::invalid("element list is missing the identity"));
        }
        for a in &elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::invalid(format!("missing inverse of {a}")));
            }
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::invalid(format!("not closed: {a} * {b}")));
                }
            }
        }
        let mut elements = elements;
        elements.sort();
        Ok(PermGroup { degree, elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Orbit of `w` under the right action on positions, sorted.
    pub fn orbit(&self, w: &Word) -> Result<Vec<Word>> {
        self.check_word(w)?;
        let set: BTreeSet<Word> = self.elements.iter().map(|g| act(w, g)).collect();
        Ok(set.into_iter().collect())
    }

    /// Stabilizer subgroup of `w`.
    pub fn stabilizer(&self, w: &Word) -> Result<Vec<Permutation>> {
        self.check_word(w)?;
        Ok(self
            .elements
            .iter()
            .filter(|g| &act(w, g) == w)
            .cloned()
            .collect())
    }

    /// `(orbit, stabilizer)`; sizes multiply to the group order.
    pub fn orbit_and_stabilizer(&self, w: &Word) -> Result<(Vec<Word>, Vec<Permutation>)> {
        Ok((self.orbit(w)?, self.stabilizer(w)?))
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.degree {
            return Err(Error::invalid(format!(
                "word length {} does not match degree {}",
                w.len(),
                self.degree
            )));
        }
        Ok(())
    }

    /// Parses the group file format: a `generators` or `elements` header
    /// line followed by one permutation per line.
    pub fn parse_group_file(text: &str, max_order: usize) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty group file".into()))?;
        let perms: Vec<Permutation> = lines
            .map(|l| l.parse::<Permutation>())
            .collect::<Result<_>>()?;
        match header {
            "generators" => PermGroup::closure(&perms, max_order),
            "elements" => PermGroup::from_elements(perms),
            other => Err(Error::Parse(format!(
                "expected 'generators' or 'elements' header, found {other:?}"
            ))),
        }
    }

    /// Serializes as an `elements` group file.
    pub fn to_group_file(&self) -> String {
        let mut out = String::from("elements\n");
        for g in &self.elements {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }
}

/// Right action on positions: `(w . s)_i = w_{s(i)}`.
pub fn act(w: &Word, s: &Permutation) -> Word {
    debug_assert_eq!(w.len(), s.size());
    Word::new(
        (1..=w.len() as u32)
            .map(|i| w.letters()[s.apply(i) as usize - 1])
            .collect(),
    )
}

/// Two-sided action used by Harary-Palmer enumeration: `tau` renames
/// letters, `sigma` permutes positions.
pub fn two_sided_act(w: &Word, tau: &Permutation, sigma: &Permutation) -> Word {
    Word::new(
        (1..=w.len() as u32)
            .map(|j| tau.apply(w.letters()[sigma.apply(j) as usize - 1]))
            .collect(),
    )
}

/// All pairs `(tau, sigma)` in `H x G` fixing `w`.
pub fn two_sided_stabilizer(
    h: &PermGroup,
    g: &PermGroup,
    w: &Word,
) -> Result<Vec<(Permutation, Permutation)>> {
    if w.len() != g.degree() {
        return Err(Error::invalid("word length does not match position group degree"));
    }
    if w.letters().iter().any(|&a| a == 0 || a as usize > h.degree()) {
        return Err(Error::invalid("letters outside the letter group degree"));
    }
    let mut out = Vec::new();
    for tau in h.elements() {
        for sigma in g.elements() {
            if &two_sided_act(w, tau, sigma) == w {
                out.push((tau.clone(), sigma.clone()));
            }
        }
    }
    Ok(out)
}

/// Image of the symmetric group on `n` vertices acting on the
/// `n(n+1)/2` edges-with-loops of the complete graph.
///
/// The labelling maps edge labels `1..=n(n+1)/2` to vertex pairs `(i, j)`,
/// `i <= j`; loops are `(i, i)`. For `n = 3` the default labelling is
/// 1=(1,1), 2=(1,2), 3=(2,2), 4=(2,3), 5=(3,3), 6=(1,3); otherwise edges
/// are labelled in lexicographic pair order.
pub fn induced_edge_group(n: usize, labelling: Option<Vec<(u32, u32)>>) -> Result<PermGroup> {
    if n < 1 {
        return Err(Error::invalid("need at least one vertex"));
    }
    let m = n * (n + 1) / 2;
    let labelling = match labelling {
        Some(l) => l,
        None if n == 3 => vec![(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (1, 3)],
        None => {
            let mut l = Vec::with_capacity(m);
            for i in 1..=n as u32 {
                for j in i..=n as u32 {
                    l.push((i, j));
                }
            }
            l
        }
    };
    if labelling.len() != m {
        return Err(Error::invalid(format!("labelling must list {m} edges")));
    }
    let mut index = std::collections::HashMap::new();
    for (e, &(i, j)) in labelling.iter().enumerate() {
        if i == 0 || j == 0 || i as usize > n || j as usize > n || i > j {
            return Err(Error::invalid(format!("bad edge ({i},{j})")));
        }
        if index.insert((i, j), e as u32 + 1).is_some() {
            return Err(Error::invalid(format!("edge ({i},{j}) repeated")));
        }
    }
    let mut elements = BTreeSet::new();
    for rho in Permutation::all(n) {
        let word: Vec<u32> = labelling
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (rho.apply(i), rho.apply(j));
                index[&(a.min(b), a.max(b))]
            })
            .collect();
        elements.insert(Permutation::new(word).expect("induced map is a permutation"));
    }
    PermGroup::from_elements(elements.into_iter().collect())
}
