use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::{Colour, Permutation};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Symmetric,
    Alternating,
    Dihedral,
    Cyclic,
    Custom,
}

impl GroupKind {
    fn min_degree(self) -> usize {
        match self {
            GroupKind::Symmetric | GroupKind::Cyclic => 2,
            GroupKind::Alternating | GroupKind::Dihedral => 3,
            GroupKind::Custom => 1,
        }
    }
}

/// A subgroup of `S_m`, stored with every element enumerated.
///
/// Elements are kept sorted lexicographically by image sequence, which is the
/// order used by every deterministic search over the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    kind: GroupKind,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Witness for property T_{i,j}: `alpha(i) = j`, `alpha(k) = k`, `beta(j) = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyTWitness {
    pub i: Colour,
    pub j: Colour,
    pub k: Colour,
    pub alpha: Permutation,
    pub beta: Permutation,
}

impl PermGroup {
    /// `10!`, enough for the full symmetric group on ten colours.
    pub const DEFAULT_CLOSURE_CAP: usize = 3_628_800;

    /// The subgroup of `S_m` generated by `generators`.
    pub fn generate(m: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_cap(m, generators, Self::DEFAULT_CLOSURE_CAP)
    }

    /// Breadth-first closure under right multiplication by the generators.
    pub fn generate_with_cap(m: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        if m == 0 || m > usize::from(Colour::MAX) {
            return Err(Error::DegreeTooSmall { kind: GroupKind::Custom, m, min: 1 });
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != m) {
            return Err(Error::DegreeMismatch { expected: m, found: bad.degree() });
        }
        let identity = Permutation::identity(m);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = x.compose_unchecked(s);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(PermGroup { degree: m, kind: GroupKind::Custom, generators, elements })
    }

    /// One of the named families with its canonical generators.
    ///
    /// The dihedral group acts on the vertices `1..m` of a regular m-gon in
    /// cyclic order and is generated by `(1 2 ... m)` and the reflection fixing 1.
    pub fn named(kind: GroupKind, m: usize) -> Result<Self> {
        let min = kind.min_degree();
        if m < min {
            return Err(Error::DegreeTooSmall { kind, m, min });
        }
        let generators = match kind {
            GroupKind::Symmetric => {
                let mut gens = alloc::vec![Permutation::transposition(m, 1, 2)?];
                if m > 2 {
                    gens.push(Permutation::rotation(m));
                }
                gens
            }
            GroupKind::Alternating => (3..=m)
                .map(|k| Permutation::from_cycles(m, &[[1, 2, k as Colour]]))
                .collect::<Result<Vec<_>>>()?,
            GroupKind::Cyclic => alloc::vec![Permutation::rotation(m)],
            GroupKind::Dihedral => alloc::vec![Permutation::rotation(m), reflection_fixing_one(m)],
            GroupKind::Custom => Vec::new(),
        };
        let mut group = Self::generate(m, generators)?;
        group.kind = kind;
        Ok(group)
    }

    pub fn symmetric(m: usize) -> Result<Self> {
        Self::named(GroupKind::Symmetric, m)
    }

    pub fn alternating(m: usize) -> Result<Self> {
        Self::named(GroupKind::Alternating, m)
    }

    pub fn dihedral(m: usize) -> Result<Self> {
        Self::named(GroupKind::Dihedral, m)
    }

    pub fn cyclic(m: usize) -> Result<Self> {
        Self::named(GroupKind::Cyclic, m)
    }

    /// The subgroup consisting of the given elements, which must already be closed.
    pub(crate) fn from_closed_elements(m: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        PermGroup { degree: m, kind: GroupKind::Custom, generators: elements.clone(), elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted lexicographically by image sequence.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Same degree and same element set, regardless of generators or kind tag.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    /// True when the group is `D_m` for even `m ≥ 4`, or `S_2` (taken as `D_2`).
    pub fn is_even_dihedral(&self) -> bool {
        match self.degree {
            2 => self.order() == 2,
            m if m % 2 == 0 => {
                self.order() == 2 * m && PermGroup::dihedral(m).is_ok_and(|d| d.same_elements(self))
            }
            _ => false,
        }
    }

    /// First property T_{i,j} witness in lexicographic order of `(alpha, k, beta)`.
    pub fn t_witness(&self, i: Colour, j: Colour) -> Option<PropertyTWitness> {
        let m = self.degree;
        if i == 0 || j == 0 || usize::from(i) > m || usize::from(j) > m {
            return None;
        }
        for alpha in self.elements.iter().filter(|a| a.apply(i) == j) {
            for k in alpha.fixed_points() {
                if let Some(beta) = self.elements.iter().find(|b| b.apply(j) == k) {
                    return Some(PropertyTWitness { i, j, k, alpha: alpha.clone(), beta: beta.clone() });
                }
            }
        }
        None
    }

    /// First colour `i` with no T_{i,j} witness, if any.
    pub fn property_t_failure(&self, j: Colour) -> Option<Colour> {
        (1..=self.degree as Colour).find(|&i| self.t_witness(i, j).is_none())
    }

    /// Property T_j: a T_{i,j} witness exists for every colour `i`.
    pub fn has_property_t(&self, j: Colour) -> bool {
        j >= 1 && usize::from(j) <= self.degree && self.property_t_failure(j).is_none()
    }

    /// Least `j` for which the group has property T_j.
    pub fn property_t_colour(&self) -> Option<Colour> {
        (1..=self.degree as Colour).find(|&j| self.has_property_t(j))
    }
}

fn reflection_fixing_one(m: usize) -> Permutation {
    let images = (1..=m).map(|i| ((m + 1 - i) % m + 1) as Colour).collect();
    Permutation::from_images(images).expect("reflection is a bijection")
}
