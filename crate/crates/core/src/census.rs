//! The census: exhaustive, isomorph-free generation of all square-free
//! monomial Cremona sets for given (n, d), with the structural cross-checks
//! the classification supports.
//!
//! Candidates are n-subsets of the degree-d square-free monomials, walked in
//! colexicographic order and sharded by leading monomial for work stealing.
//! The pre-filters (canonical restrictions, cohesiveness) are redundant with
//! the determinant test and individually toggleable, so the oracle
//! equivalence test can isolate a faulty layer.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::birational::is_cremona;
use crate::duality::{dual_complement, reduce_to_base, ReductionCertificate};
use crate::error::Error;
use crate::mask::{self, Mask};
use crate::matrix::exact_determinant;
use crate::monomial::{IncidenceProfile, MonomialSet};
use crate::symmetry::{canonical_form, maximal_cones, CanonicalForm, ConeDecomposition};

/// Census request. `d = None` asks for every degree `1..=n-1`.
#[derive(Clone, Debug)]
pub struct CensusQuery {
    pub n: usize,
    pub d: Option<usize>,
    /// Check that dualization pairs the counts at d and n-d.
    pub verify_duality: bool,
    /// Check the degree-2 gcd condition on every cubic representative at n=6.
    pub verify_mdc: bool,
    /// Attach the leaf/root/core trichotomy tag at n=6, d=3.
    pub classify_types: bool,
    /// Allow search spaces beyond [`LARGE_SPACE_THRESHOLD`] subsets.
    pub allow_large: bool,
}

impl CensusQuery {
    pub fn all_degrees(n: usize) -> Self {
        CensusQuery {
            n,
            d: None,
            verify_duality: true,
            verify_mdc: true,
            classify_types: true,
            allow_large: false,
        }
    }

    pub fn single_degree(n: usize, d: usize) -> Self {
        CensusQuery {
            d: Some(d),
            ..CensusQuery::all_degrees(n)
        }
    }
}

/// Subset counts above this require [`CensusQuery::allow_large`].
pub const LARGE_SPACE_THRESHOLD: u128 = 200_000_000;

/// Which redundant pre-filters to run ahead of the determinant test.
#[derive(Clone, Copy, Debug)]
pub struct PruneOptions {
    pub canonical_restrictions: bool,
    pub cohesiveness: bool,
}

impl Default for PruneOptions {
    fn default() -> Self {
        PruneOptions {
            canonical_restrictions: true,
            cohesiveness: true,
        }
    }
}

/// The leaf/root/core trichotomy for cubic sets in six variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CubicType {
    /// A leaf but no root.
    Type1,
    /// A root.
    Type2,
    /// Leafless and rootless.
    Type3,
}

impl CubicType {
    pub fn as_str(&self) -> &'static str {
        match self {
            CubicType::Type1 => "TYPE1",
            CubicType::Type2 => "TYPE2",
            CubicType::Type3 => "TYPE3",
        }
    }
}

/// One orbit of Cremona sets, carried by its canonical representative.
#[derive(Clone, Debug)]
pub struct Representative {
    pub set: MonomialSet,
    pub canonical: CanonicalForm,
    pub determinant: i128,
    pub incidence: IncidenceProfile,
    pub cubic_type: Option<CubicType>,
    pub cones: ConeDecomposition,
    pub certificate: ReductionCertificate,
}

/// Census outcome for a single degree.
#[derive(Clone, Debug)]
pub struct DegreeCensus {
    pub n: usize,
    pub d: usize,
    pub representatives: Vec<Representative>,
    /// Subsets examined before pruning.
    pub examined: u64,
}

impl DegreeCensus {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub degrees: Vec<DegreeCensus>,
}

impl CensusReport {
    pub fn total(&self) -> usize {
        self.degrees.iter().map(DegreeCensus::count).sum()
    }

    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.degrees.iter().map(|dc| (dc.d, dc.count())).collect()
    }

    pub fn degree(&self, d: usize) -> Option<&DegreeCensus> {
        self.degrees.iter().find(|dc| dc.d == d)
    }
}

pub fn census(query: &CensusQuery) -> Result<CensusReport, Error> {
    census_with_pruning(query, &PruneOptions::default())
}

pub fn census_with_pruning(
    query: &CensusQuery,
    prune: &PruneOptions,
) -> Result<CensusReport, Error> {
    let n = query.n;
    if !(3..=8).contains(&n) {
        return Err(Error::QueryOutOfRange(format!(
            "variable count must be between 3 and 8, got {n}"
        )));
    }
    let degrees: Vec<usize> = match query.d {
        Some(d) => {
            if d < 1 || d > n - 1 {
                return Err(Error::QueryOutOfRange(format!(
                    "degree must satisfy 1 <= d <= {}, got {d}",
                    n - 1
                )));
            }
            vec![d]
        }
        None => (1..n).collect(),
    };
    if !query.allow_large {
        for &d in &degrees {
            let subsets = binomial(binomial(n as u128, d as u128), n as u128);
            if subsets > LARGE_SPACE_THRESHOLD {
                return Err(Error::QueryOutOfRange(format!(
                    "n={n}, d={d} spans {subsets} subsets; set allow_large to proceed"
                )));
            }
        }
    }

    let mut report = CensusReport {
        n,
        degrees: Vec::new(),
    };
    for &d in &degrees {
        report.degrees.push(census_degree(n, d, prune, query)?);
    }

    if query.verify_duality {
        cross_check_duality(&report)?;
    }
    Ok(report)
}

fn census_degree(
    n: usize,
    d: usize,
    prune: &PruneOptions,
    query: &CensusQuery,
) -> Result<DegreeCensus, Error> {
    let universe = mask::masks_of_weight(n, d);
    let m = universe.len();

    let (keys, examined) = if m < n {
        (BTreeSet::new(), 0)
    } else {
        // shard by the leading monomial; each shard walks its completions in
        // colexicographic order and dedups locally before the merge
        (0..=m - n)
            .into_par_iter()
            .map(|first| {
                let mut keys: BTreeSet<Vec<Mask>> = BTreeSet::new();
                let mut examined = 0u64;
                let mut candidate: Vec<Mask> = vec![0; n];
                let mut scratch = vec![0i128; n * n];
                candidate[0] = universe[first];
                for tail in Combinations::new(m - first - 1, n - 1) {
                    for (slot, &t) in candidate[1..].iter_mut().zip(&tail) {
                        *slot = universe[first + 1 + t];
                    }
                    examined += 1;
                    if survives(n, d, &candidate, prune, &mut scratch) {
                        keys.insert(crate::symmetry::canonical_key(n, &candidate));
                    }
                }
                (keys, examined)
            })
            .reduce(
                || (BTreeSet::new(), 0),
                |(mut a, ae), (b, be)| {
                    a.extend(b);
                    (a, ae + be)
                },
            )
    };

    let mut representatives = Vec::with_capacity(keys.len());
    for key in keys {
        let set = MonomialSet::from_masks(n, &key)?;
        let canonical = CanonicalForm::from_key_unchecked(n, key);
        let determinant = exact_determinant(&set.log_matrix());
        let cubic_type = if query.classify_types && n == 6 && d == 3 {
            Some(classify_type_n6_d3(&set)?)
        } else {
            None
        };
        if query.verify_mdc && n == 6 && d == 3 && !verify_gcd_lemma(&set) {
            return Err(Error::Precondition(format!(
                "census self-check failed: {set} violates the degree-2 gcd condition"
            )));
        }
        representatives.push(Representative {
            incidence: set.incidence_profile(),
            cones: maximal_cones(&set),
            certificate: reduce_to_base(&set)?,
            canonical,
            determinant,
            cubic_type,
            set,
        });
    }

    Ok(DegreeCensus {
        n,
        d,
        representatives,
        examined,
    })
}

fn survives(
    n: usize,
    d: usize,
    masks: &[Mask],
    prune: &PruneOptions,
    scratch: &mut [i128],
) -> bool {
    if prune.canonical_restrictions {
        let union = masks.iter().fold(0, |a, &b| a | b);
        let intersection = masks.iter().fold(Mask::MAX, |a, &b| a & b);
        if union != mask::full(n) || intersection != 0 {
            return false;
        }
    }
    if prune.cohesiveness && d >= 2 && !masks_cohesive(n, masks) {
        return false;
    }
    fill_log_entries(n, masks, scratch);
    crate::matrix::bareiss(n, scratch).unsigned_abs() == d as u128
}

fn fill_log_entries(n: usize, masks: &[Mask], out: &mut [i128]) {
    for (j, &m) in masks.iter().enumerate() {
        for i in 0..n {
            out[i * n + j] = ((m >> (n - 1 - i)) & 1) as i128;
        }
    }
}

fn masks_cohesive(n: usize, masks: &[Mask]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &m in masks {
        let mut bits = (1..=n).filter(|&v| m & mask::var_bit(n, v) != 0);
        if let Some(anchor) = bits.next() {
            let a = find(&mut parent, anchor - 1);
            for v in bits {
                let b = find(&mut parent, v - 1);
                parent[b] = a;
            }
        }
    }
    let occurring = masks.iter().fold(0, |a, &b| a | b);
    let mut root = None;
    for v in 1..=n {
        if occurring & mask::var_bit(n, v) != 0 {
            let r = find(&mut parent, v - 1);
            if *root.get_or_insert(r) != r {
                return false;
            }
        }
    }
    true
}

fn determinant_of_masks(n: usize, masks: &[Mask]) -> i128 {
    let mut entries = vec![0i128; n * n];
    fill_log_entries(n, masks, &mut entries);
    crate::matrix::bareiss(n, &mut entries)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// k-subsets of 0..m as sorted index vectors, in colexicographic order.
struct Combinations {
    m: usize,
    indices: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(m: usize, k: usize) -> Self {
        Combinations {
            m,
            indices: (0..k).collect(),
            done: k > m,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.indices.clone();
        let k = self.indices.len();
        let mut bumped = false;
        for j in 0..k {
            let limit = if j + 1 == k {
                self.m
            } else {
                self.indices[j + 1]
            };
            if self.indices[j] + 1 < limit {
                self.indices[j] += 1;
                for (i, slot) in self.indices[..j].iter_mut().enumerate() {
                    *slot = i;
                }
                bumped = true;
                break;
            }
        }
        if !bumped {
            self.done = true;
        }
        Some(current)
    }
}

/// Leaf/root/core trichotomy for a cubic Cremona set in six variables. Some
/// row of the log matrix always has at least four ones, so the three cases
/// are exhaustive.
pub fn classify_type_n6_d3(f: &MonomialSet) -> Result<CubicType, Error> {
    if f.n() != 6 || f.d() != 3 {
        return Err(Error::Precondition(format!(
            "type classification is for n=6, d=3, got n={}, d={}",
            f.n(),
            f.d()
        )));
    }
    if !is_cremona(f).is_cremona {
        return Err(Error::Precondition(format!("{f} is not a Cremona set")));
    }
    let incidences: Vec<usize> = (1..=6).map(|v| f.incidence_degree(v)).collect();
    if incidences.contains(&5) {
        Ok(CubicType::Type2)
    } else if incidences.contains(&1) {
        Ok(CubicType::Type1)
    } else {
        Ok(CubicType::Type3)
    }
}

/// True iff every choice of 4 members contains 2 whose gcd has degree 2.
pub fn verify_gcd_lemma(f: &MonomialSet) -> bool {
    assert_eq!(
        (f.n(), f.d()),
        (6, 3),
        "the gcd condition is stated for n=6, d=3"
    );
    let members = f.members();
    let mut quads = Combinations::new(6, 4);
    quads.all(|quad| {
        quad.iter().enumerate().any(|(a, &i)| {
            quad[a + 1..]
                .iter()
                .any(|&j| members[i].gcd_degree(&members[j]) >= 2)
        })
    })
}

/// Checks that the dual complement induces a bijection between the orbits at
/// degree d and at degree n-d, for every such pair the report covers.
pub fn cross_check_duality(report: &CensusReport) -> Result<(), Error> {
    let n = report.n;
    for dc in &report.degrees {
        let co = n - dc.d;
        let Some(partner) = report.degree(co) else {
            continue;
        };
        let duals: BTreeSet<CanonicalForm> = dc
            .representatives
            .iter()
            .map(|r| Ok(canonical_form(&dual_complement(&r.set)?)))
            .collect::<Result<_, Error>>()?;
        let target: BTreeSet<CanonicalForm> = partner
            .representatives
            .iter()
            .map(|r| r.canonical.clone())
            .collect();
        if duals != target {
            let missing: Vec<String> = target
                .difference(&duals)
                .map(|c| c.to_monomial_set().to_string())
                .collect();
            let unexpected: Vec<String> = duals
                .difference(&target)
                .map(|c| c.to_monomial_set().to_string())
                .collect();
            return Err(Error::DualityMismatch(format!(
                "degree {} -> {}: unmatched at target {missing:?}, extraneous {unexpected:?}",
                dc.d, co
            )));
        }
    }
    Ok(())
}

/// The census computed the way the counting lemmas build it: orbit
/// representatives of k-subsets extended one monomial at a time up to
/// k = n, then filtered by the determinant test.
pub fn census_by_orbit_extension(n: usize, d: usize) -> Vec<CanonicalForm> {
    assert!(
        n <= 6,
        "orbit extension is exercised at classification scale"
    );
    let mut reps = vec![CanonicalForm::empty(n)];
    for _ in 0..n {
        reps = crate::symmetry::extend_orbits(n, d, &reps);
    }
    reps.retain(|c| determinant_of_masks(n, c.key()).unsigned_abs() == d as u128);
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_combinations_cover_the_space_in_order() {
        let all: Vec<Vec<usize>> = Combinations::new(5, 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[1], vec![0, 1, 3]);
        assert_eq!(all[9], vec![2, 3, 4]);
        // colex order: compare reversed index tuples
        for pair in all.windows(2) {
            let rev = |v: &[usize]| -> Vec<usize> { v.iter().rev().copied().collect() };
            assert!(rev(&pair[0]) < rev(&pair[1]));
        }
    }

    #[test]
    fn small_census_totals() {
        let r4 = census(&CensusQuery::all_degrees(4)).unwrap();
        assert_eq!(r4.total(), 3);
        assert_eq!(r4.counts(), vec![(1, 1), (2, 1), (3, 1)]);

        let r5 = census(&CensusQuery::all_degrees(5)).unwrap();
        assert_eq!(r5.total(), 10);
        assert_eq!(r5.counts(), vec![(1, 1), (2, 4), (3, 4), (4, 1)]);
    }

    #[test]
    fn pruning_layers_do_not_change_the_result() {
        for (cr, co) in [(false, false), (true, false), (false, true), (true, true)] {
            let prune = PruneOptions {
                canonical_restrictions: cr,
                cohesiveness: co,
            };
            let r = census_with_pruning(&CensusQuery::all_degrees(5), &prune).unwrap();
            assert_eq!(r.total(), 10, "prune options {prune:?}");
        }
    }

    #[test]
    fn query_validation() {
        assert!(census(&CensusQuery::all_degrees(2)).is_err());
        assert!(census(&CensusQuery::single_degree(5, 5)).is_err());
        assert!(census(&CensusQuery::single_degree(8, 4)).is_err());
    }

    #[test]
    fn degree_two_representatives_have_unique_odd_cycles() {
        let report = census(&CensusQuery::single_degree(6, 2)).unwrap();
        for rep in &report.degrees[0].representatives {
            let shape = crate::birational::classify_degree_two(&rep.set).unwrap();
            assert!(matches!(
                shape,
                crate::birational::DegreeTwoShape::UniqueOddCycle { .. }
            ));
        }
    }

    #[test]
    fn type_examples_classify_as_stated() {
        // root row of five ones
        let t2 = MonomialSet::parse("x1x2x3, x1x3x4, x1x4x5, x1x5x6, x1x2x6, x2x3x4").unwrap();
        assert_eq!(classify_type_n6_d3(&t2).unwrap(), CubicType::Type2);
        // leaf x6, no row of five
        let t1 = MonomialSet::parse("x1x2x3, x1x2x4, x1x2x5, x1x3x4, x2x3x4, x3x4x6").unwrap();
        assert_eq!(classify_type_n6_d3(&t1).unwrap(), CubicType::Type1);
        // the reconstructed chair-cone family member is leafless and rootless
        let t3 = MonomialSet::parse("x1x2x3, x1x2x4, x1x2x5, x1x3x6, x2x4x6, x3x5x6").unwrap();
        assert_eq!(classify_type_n6_d3(&t3).unwrap(), CubicType::Type3);
        assert!(classify_type_n6_d3(&MonomialSet::parse("x1x2, x2x3, x1x3").unwrap()).is_err());
    }

    #[test]
    fn gcd_condition_fails_exactly_on_the_forbidden_block() {
        let bad = MonomialSet::parse("x1x2x3, x1x4x5, x2x4x6, x3x5x6, x1x2x4, x1x3x5").unwrap();
        assert!(!verify_gcd_lemma(&bad));
        let good = MonomialSet::parse("x1x2x3, x1x2x4, x1x2x5, x1x3x6, x2x4x6, x3x5x6").unwrap();
        assert!(verify_gcd_lemma(&good));
    }

    #[test]
    fn orbit_extension_matches_the_filtered_census() {
        for (n, d) in [(4, 1), (4, 2), (4, 3), (5, 2), (5, 3)] {
            let by_extension: BTreeSet<CanonicalForm> =
                census_by_orbit_extension(n, d).into_iter().collect();
            let by_filter: BTreeSet<CanonicalForm> =
                census(&CensusQuery::single_degree(n, d)).unwrap().degrees[0]
                    .representatives
                    .iter()
                    .map(|r| r.canonical.clone())
                    .collect();
            assert_eq!(by_extension, by_filter, "n={n}, d={d}");
        }
    }

    #[test]
    fn extension_census_examples() {
        assert_eq!(census_by_orbit_extension(4, 2).len(), 1);
        assert_eq!(census_by_orbit_extension(5, 2).len(), 4);
    }
}
