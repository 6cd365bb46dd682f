//! The symmetric group action on monomial sets: canonical forms,
//! stabilizers, orbit extension, and cone decompositions.
//!
//! Two sets are isomorphic exactly when some relabelling of the variables
//! carries one onto the other; member order never matters. The canonical
//! form of a square-free set is the lexicographically minimal sorted tuple
//! of support masks over all n! relabellings, found by a complete
//! branch-and-bound over the relabelling rather than partition refinement:
//! simple enough to audit against the plain exhaustive scan, which the
//! tests do, and capped at n <= 10 where the worst case stays tractable.
//! Stabilizers, orbit sizes, and isomorphism witnesses scan all of S_n
//! directly.

use std::collections::BTreeSet;
use std::fmt;

use crate::clutter::Clutter;
use crate::mask::{self, Mask};
use crate::monomial::{Monomial, MonomialSet};

/// A bijection of the variable indices 1..n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    /// 0-based images: `images[i]` is the image of index `i`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, crate::Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(crate::Error::IllFormed(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles of 1-based indices, e.g.
    /// `from_cycles(6, &[vec![1, 2], vec![3, 4]])` for (1,2)(3,4).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, crate::Error> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                let w = cycle[(k + 1) % cycle.len()];
                if v < 1 || v > n || w < 1 || w > n {
                    return Err(crate::Error::IllFormed(format!(
                        "cycle entry out of range 1..={n}"
                    )));
                }
                images[v - 1] = w - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based index.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// self after other: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: (0..self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Visits every permutation of n indices exactly once (Heap's algorithm).
    pub fn for_each<F: FnMut(&[usize])>(n: usize, mut f: F) {
        let mut a: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        f(&a);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                f(&a);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        Permutation::for_each(n, |images| {
            out.push(Permutation {
                images: images.to_vec(),
            })
        });
        out
    }

    /// Relabels the variables of a monomial: the exponent of the image of
    /// x_i equals the exponent of x_i.
    pub fn act_monomial(&self, m: &Monomial) -> Monomial {
        assert_eq!(self.n(), m.vars());
        let mut exponents = vec![0u8; self.n()];
        for (i, &e) in m.exponents().iter().enumerate() {
            exponents[self.apply(i)] = e;
        }
        Monomial::new(exponents)
    }

    /// Relabels every member; the result is re-sorted into canonical member
    /// order.
    pub fn act(&self, f: &MonomialSet) -> MonomialSet {
        assert_eq!(self.n(), f.n());
        let members = f.members().iter().map(|m| self.act_monomial(m)).collect();
        MonomialSet::new(f.n(), members).expect("relabelling preserves well-formedness")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based labels, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A complete orbit invariant for square-free sets: the minimal sorted tuple
/// of support masks over all variable relabellings. Masks compare as
/// integers with variable 1 most significant, tuples lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    key: Vec<Mask>,
}

impl CanonicalForm {
    /// Canonical form of an arbitrary set of distinct masks; the key length
    /// is the subset size.
    pub fn of_masks(n: usize, masks: &[Mask]) -> Self {
        CanonicalForm {
            n,
            key: canonical_key(n, masks),
        }
    }

    /// The empty subset; the seed for orbit extension.
    pub fn empty(n: usize) -> Self {
        CanonicalForm { n, key: Vec::new() }
    }

    pub(crate) fn from_key_unchecked(n: usize, key: Vec<Mask>) -> Self {
        CanonicalForm { n, key }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn key(&self) -> &[Mask] {
        &self.key
    }

    pub fn len(&self) -> usize {
        self.key.len()
    }

    pub fn is_empty(&self) -> bool {
        self.key.is_empty()
    }

    /// Materializes the representative set; requires a full key (n masks).
    pub fn to_monomial_set(&self) -> MonomialSet {
        assert_eq!(
            self.key.len(),
            self.n,
            "only full sets have representatives"
        );
        MonomialSet::from_masks(self.n, &self.key).expect("canonical keys are well-formed")
    }
}

/// Lexicographically minimal sorted mask tuple over all n! relabellings.
///
/// Complete branch-and-bound over the relabelling, one target position at a
/// time. Assigning the variables that land in positions 1..k fixes the top
/// k bits of every image mask; padding the unknown bits with zeros gives a
/// sorted tuple no completion can beat, so a branch whose padded tuple
/// already exceeds the best is cut, and trying the candidates in padded
/// order lets a whole node stop at the first cut. The worst case (a fully
/// symmetric set) still visits every relabelling, matching the plain
/// exhaustive scan.
pub(crate) fn canonical_key(n: usize, masks: &[Mask]) -> Vec<Mask> {
    assert!(n <= 10, "exhaustive canonicalization is limited to n <= 10");
    if masks.is_empty() {
        return Vec::new();
    }
    Search::new(n, masks).run()
}

struct Search {
    n: usize,
    count: usize,
    /// weight of each member, preserved by relabelling
    weights: Vec<u32>,
    /// membership of old variable v (0-based) in member i: `v * count + i`
    contains: Vec<bool>,
    used: Vec<bool>,
    /// image prefix of each member at every depth: `depth * count + i`
    prefix: Vec<Mask>,
    /// per (depth, candidate slot): raw prefixes and sorted lower bounds
    cand_prefix: Vec<Mask>,
    cand_bound: Vec<Mask>,
    best: Vec<Mask>,
}

impl Search {
    fn new(n: usize, masks: &[Mask]) -> Self {
        let count = masks.len();
        let mut contains = vec![false; n * count];
        for v in 0..n {
            for (i, &m) in masks.iter().enumerate() {
                contains[v * count + i] = m & mask::var_bit(n, v + 1) != 0;
            }
        }
        let mut best: Vec<Mask> = masks.to_vec();
        best.sort_unstable();
        Search {
            n,
            count,
            weights: masks.iter().map(|m| m.count_ones()).collect(),
            contains,
            used: vec![false; n],
            prefix: vec![0; (n + 1) * count],
            cand_prefix: vec![0; n * n * count],
            cand_bound: vec![0; n * n * count],
            best,
        }
    }

    fn run(mut self) -> Vec<Mask> {
        self.descend(0);
        self.best
    }

    fn slot_range(&self, depth: usize, slot: usize) -> std::ops::Range<usize> {
        let start = (depth * self.n + slot) * self.count;
        start..start + self.count
    }

    fn descend(&mut self, depth: usize) {
        let bit: Mask = 1 << (self.n - 1 - depth);
        let mut order = [0usize; 16];
        let mut slots = 0;
        for old in 0..self.n {
            if self.used[old] {
                continue;
            }
            let range = self.slot_range(depth, slots);
            for i in 0..self.count {
                let extended = self.prefix[depth * self.count + i]
                    | if self.contains[old * self.count + i] {
                        bit
                    } else {
                        0
                    };
                self.cand_prefix[range.start + i] = extended;
                // no image can be smaller than the prefix with its missing
                // weight packed into the lowest positions
                let missing = self.weights[i] - extended.count_ones();
                self.cand_bound[range.start + i] = extended | ((1 << missing) - 1);
            }
            self.cand_bound[range.clone()].sort_unstable();
            order[slots] = (slots << 4) | old;
            slots += 1;
        }
        // ascending by lower bound, so the first cut ends the node
        order[..slots].sort_unstable_by(|&a, &b| {
            let ra = self.slot_range(depth, a >> 4);
            let rb = self.slot_range(depth, b >> 4);
            self.cand_bound[ra].cmp(&self.cand_bound[rb])
        });
        for &packed in &order[..slots] {
            let (slot, old) = (packed >> 4, packed & 0xf);
            let range = self.slot_range(depth, slot);
            if self.cand_bound[range.clone()] > self.best[..] {
                break;
            }
            if depth + 1 == self.n {
                // at full depth the bound is the image itself
                if self.cand_bound[range.clone()] < self.best[..] {
                    let (src, dst) = (range.start, range.end);
                    self.best.copy_from_slice(&self.cand_bound[src..dst]);
                }
                continue;
            }
            let next = (depth + 1) * self.count;
            for i in 0..self.count {
                self.prefix[next + i] = self.cand_prefix[range.start + i];
            }
            self.used[old] = true;
            self.descend(depth + 1);
            self.used[old] = false;
        }
    }
}

/// Canonical form of a square-free set.
pub fn canonical_form(f: &MonomialSet) -> CanonicalForm {
    assert!(
        f.is_square_free(),
        "canonical forms require square-free sets"
    );
    CanonicalForm::of_masks(f.n(), &f.support_masks())
}

/// The permutations fixing a set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilizer {
    elements: Vec<Permutation>,
}

impl Stabilizer {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// The subgroup generated by `generators` inside S_n, as a sorted list.
    pub fn generated_by(n: usize, generators: &[Permutation]) -> Vec<Permutation> {
        let mut group: BTreeSet<Permutation> = BTreeSet::new();
        group.insert(Permutation::identity(n));
        loop {
            let mut grew = false;
            let snapshot: Vec<Permutation> = group.iter().cloned().collect();
            for g in &snapshot {
                for h in generators {
                    if group.insert(h.compose(g)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return group.into_iter().collect();
            }
        }
    }
}

/// All permutations fixing `f` as a set. Exhaustive over S_n, so n <= 10.
pub fn stabilizer(f: &MonomialSet) -> Stabilizer {
    assert!(f.n() <= 10, "exhaustive stabilizers are limited to n <= 10");
    let elements = Permutation::all(f.n())
        .into_iter()
        .filter(|p| p.act(f) == *f)
        .collect();
    Stabilizer { elements }
}

/// Number of distinct images of `f` under all variable relabellings,
/// counted directly.
pub fn orbit_size(f: &MonomialSet) -> usize {
    assert!(f.n() <= 10, "exhaustive orbits are limited to n <= 10");
    let mut seen: BTreeSet<MonomialSet> = BTreeSet::new();
    for p in Permutation::all(f.n()) {
        seen.insert(p.act(f));
    }
    seen.len()
}

/// A permutation carrying `a` onto `b`, if the two sets are isomorphic.
pub fn find_isomorphism(a: &MonomialSet, b: &MonomialSet) -> Option<Permutation> {
    if a.n() != b.n() || a.d() != b.d() {
        return None;
    }
    assert!(
        a.n() <= 10,
        "exhaustive isomorphism search is limited to n <= 10"
    );
    Permutation::all(a.n()).into_iter().find(|p| &p.act(a) == b)
}

/// Extends orbit representatives of k-subsets of the degree-d square-free
/// monomials to representatives of (k+1)-subsets: every (k+1)-orbit contains
/// some representative extended by one monomial, and canonical forms remove
/// the duplicates.
pub fn extend_orbits(n: usize, d: usize, reps: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let universe = mask::masks_of_weight(n, d);
    let mut out: BTreeSet<CanonicalForm> = BTreeSet::new();
    for rep in reps {
        assert_eq!(rep.n(), n);
        for &f in &universe {
            if rep.key().contains(&f) {
                continue;
            }
            let mut masks = rep.key().to_vec();
            masks.push(f);
            out.insert(CanonicalForm::of_masks(n, &masks));
        }
    }
    out.into_iter().collect()
}

/// The members divisible by one apex variable, together with the base left
/// after deleting the apex from each of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    /// 1-based apex variable.
    pub apex: usize,
    /// Indices into the canonical member order.
    pub member_indices: Vec<usize>,
    /// Clutter on the remaining variables.
    pub base: Clutter,
    /// Whether this cone has maximum cardinality among all cones.
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecomposition {
    pub cones: Vec<Cone>,
}

impl ConeDecomposition {
    pub fn maximal(&self) -> impl Iterator<Item = &Cone> {
        self.cones.iter().filter(|c| c.maximal)
    }

    /// Canonical forms of the maximal cones' member sets, as a sorted
    /// multiset. Orbit-equivalent sets have equal summaries.
    pub fn maximal_cone_keys(&self, f: &MonomialSet) -> Vec<CanonicalForm> {
        let masks = f.support_masks();
        let mut keys: Vec<CanonicalForm> = self
            .maximal()
            .map(|c| {
                let cone_masks: Vec<Mask> = c.member_indices.iter().map(|&i| masks[i]).collect();
                CanonicalForm::of_masks(f.n(), &cone_masks)
            })
            .collect();
        keys.sort();
        keys
    }
}

/// For each variable of positive incidence, the cone of members it divides;
/// cones of maximum cardinality are flagged.
pub fn maximal_cones(f: &MonomialSet) -> ConeDecomposition {
    assert!(
        f.is_square_free(),
        "cone decompositions require square-free sets"
    );
    let mut cones = Vec::new();
    for apex in 1..=f.n() {
        let member_indices: Vec<usize> = f
            .members()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.exponent(apex) > 0)
            .map(|(i, _)| i)
            .collect();
        if member_indices.is_empty() {
            continue;
        }
        let vertices: Vec<usize> = (1..=f.n()).filter(|&v| v != apex).collect();
        let edges: Vec<Vec<usize>> = member_indices
            .iter()
            .map(|&i| {
                f.members()[i]
                    .support()
                    .into_iter()
                    .filter(|&v| v != apex)
                    .collect()
            })
            .collect();
        let base = Clutter::new(vertices, edges).expect("cone bases are uniform");
        cones.push(Cone {
            apex,
            member_indices,
            base,
            maximal: false,
        });
    }
    let max_size = cones
        .iter()
        .map(|c| c.member_indices.len())
        .max()
        .unwrap_or(0);
    for c in &mut cones {
        c.maximal = c.member_indices.len() == max_size;
    }
    ConeDecomposition { cones }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birational::standard_involution;

    fn set(input: &str) -> MonomialSet {
        MonomialSet::parse(input).unwrap()
    }

    #[test]
    fn identity_action_fixes_everything() {
        let f = set("x1x2, x2x3, x1x3, x3x4");
        assert_eq!(Permutation::identity(4).act(&f), f);
    }

    #[test]
    fn swapping_symmetric_variables_fixes_the_set() {
        // x1x3 and x2x3 trade places under (1,2); the set is unchanged
        let f = set("x1x3, x2x3, x1x2");
        let swap = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(swap.act(&f), f);
        assert_eq!(
            swap.act_monomial(&Monomial::square_free(3, &[1, 3])),
            Monomial::square_free(3, &[2, 3])
        );
    }

    #[test]
    fn group_action_laws_hold() {
        let f = set("x1x2x3, x1x2x4, x1x2x5, x1x3x4, x2x3x4");
        for sigma in Permutation::all(5).iter().step_by(7) {
            for tau in Permutation::all(5).iter().step_by(11) {
                assert_eq!(
                    sigma.compose(tau).act(&f),
                    sigma.act(&tau.act(&f)),
                    "compatibility for {sigma} after {tau}"
                );
            }
        }
    }

    #[test]
    fn cycle_construction_and_display() {
        let p = Permutation::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1,2)(3,4)");
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert_eq!(p.compose(&p), Permutation::identity(6));
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let f = set("x1x2, x2x3, x1x3, x1x4, x4x5, x5x6");
        let key = canonical_form(&f);
        for p in Permutation::all(6).iter().step_by(13) {
            assert_eq!(canonical_form(&p.act(&f)), key);
        }
    }

    #[test]
    fn pruned_minimization_matches_the_plain_scan() {
        // plain reference: minimize over every permutation, no pruning
        fn plain(n: usize, masks: &[Mask]) -> Vec<Mask> {
            let mut best: Vec<Mask> = masks.to_vec();
            best.sort_unstable();
            let mut buf = vec![0; masks.len()];
            Permutation::for_each(n, |images| {
                for (slot, &m) in buf.iter_mut().zip(masks) {
                    *slot = mask::permute(n, images, m);
                }
                buf.sort_unstable();
                if buf < best {
                    best.copy_from_slice(&buf);
                }
            });
            best
        }

        let mut state = 0x2545f491u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize
        };
        for n in 4..=7 {
            for d in 1..n {
                let universe = mask::masks_of_weight(n, d);
                for _ in 0..20 {
                    let mut picked: Vec<Mask> = Vec::new();
                    while picked.len() < n {
                        let c = universe[next() % universe.len()];
                        if !picked.contains(&c) {
                            picked.push(c);
                        }
                    }
                    assert_eq!(canonical_key(n, &picked), plain(n, &picked));
                }
            }
        }
        // fully symmetric inputs exercise the unprunable worst case
        let inv = crate::birational::standard_involution(6);
        assert_eq!(
            canonical_key(6, &inv.support_masks()),
            plain(6, &inv.support_masks())
        );
    }

    #[test]
    fn same_incidence_profile_different_orbits() {
        let f = set("x1x2, x2x3, x1x3, x1x4, x4x5, x5x6");
        let g = set("x1x2, x2x3, x3x4, x4x5, x1x5, x1x6");
        assert_eq!(f.incidence_profile(), g.incidence_profile());
        assert_ne!(canonical_form(&f), canonical_form(&g));
        assert!(find_isomorphism(&f, &g).is_none());
    }

    #[test]
    fn singleton_key_is_its_own_mask() {
        let key = CanonicalForm::of_masks(3, &[crate::mask::full(3)]);
        assert_eq!(key.key(), &[crate::mask::full(3)]);
    }

    #[test]
    fn involution_has_full_stabilizer() {
        let s = stabilizer(&standard_involution(4));
        assert_eq!(s.order(), 24);
        assert_eq!(orbit_size(&standard_involution(4)), 1);
    }

    #[test]
    fn pendant_pair_stabilizer_is_the_klein_four_group() {
        // triangle {1,2,5} with pendants 3 and 4 attached to 5
        let f = set("x1x2, x1x5, x2x5, x3x5, x4x5");
        let s = stabilizer(&f);
        let gens = vec![
            Permutation::from_cycles(5, &[vec![1, 2]]).unwrap(),
            Permutation::from_cycles(5, &[vec![3, 4]]).unwrap(),
        ];
        let generated = Stabilizer::generated_by(5, &gens);
        assert_eq!(s.order(), 4);
        let mut elements = s.elements().to_vec();
        elements.sort();
        assert_eq!(elements, generated);
        // subgroup laws
        assert!(s.contains(&Permutation::identity(5)));
        for a in s.elements() {
            assert!(s.contains(&a.inverse()));
            for b in s.elements() {
                assert!(s.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn five_cycle_stabilizer_contains_the_rotation() {
        let f = set("x1x2, x2x3, x3x4, x4x5, x1x5");
        let s = stabilizer(&f);
        let rotation = Permutation::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap();
        assert!(s.contains(&rotation));
        assert_eq!(s.order(), 10);
    }

    #[test]
    fn orbit_stabilizer_product_is_the_group_order() {
        for input in [
            "x1x2, x2x3, x1x3, x3x4",
            "x2x3x4, x1x3x4, x1x2x4, x1x2x3",
            "x1x2, x2x3, x3x4, x4x1",
        ] {
            let f = set(input);
            let factorial: usize = (1..=f.n()).product();
            assert_eq!(orbit_size(&f) * stabilizer(&f).order(), factorial);
        }
    }

    #[test]
    fn extension_from_the_empty_set_finds_one_orbit() {
        let reps = extend_orbits(4, 2, &[CanonicalForm::empty(4)]);
        assert_eq!(reps.len(), 1);
    }

    #[test]
    fn named_isomorphism_between_cubic_census_members() {
        let h2 = set("x1x2x3, x1x2x4, x1x2x5, x1x3x6, x2x4x6, x3x5x6");
        let h3 = set("x1x2x3, x1x2x4, x1x2x5, x1x3x6, x2x4x6, x4x5x6");
        let p = Permutation::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.act(&h2), h3);
        assert_eq!(canonical_form(&h2), canonical_form(&h3));
    }

    #[test]
    fn involution_cones_are_all_maximal() {
        let cones = maximal_cones(&standard_involution(4));
        assert_eq!(cones.cones.len(), 4);
        assert!(cones
            .cones
            .iter()
            .all(|c| c.maximal && c.member_indices.len() == 3));
        let apex1 = &cones.cones[0];
        assert_eq!(apex1.base.edge_size(), 2);
        assert_eq!(apex1.base.edges().len(), 3);
    }

    #[test]
    fn cone_summaries_are_orbit_invariant() {
        let f = set("x1x2x3, x1x2x4, x1x2x5, x1x3x6, x2x4x6, x3x5x6");
        let keys = maximal_cones(&f).maximal_cone_keys(&f);
        for p in Permutation::all(6).iter().step_by(101) {
            let g = p.act(&f);
            assert_eq!(maximal_cones(&g).maximal_cone_keys(&g), keys);
        }
    }
}
