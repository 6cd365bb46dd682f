//! Monomials, monomial sets, and their structural predicates.
//!
//! A [`MonomialSet`] is an unordered set of `n` distinct monomials of a
//! common degree `d` in `n` variables. Members are stored sorted by their
//! exponent vectors in lexicographic order, which removes order sensitivity
//! from equality, hashing, and determinant sign reporting.

use std::fmt;

use crate::error::Error;
use crate::mask::{self, Mask, MAX_VARS};
use crate::matrix::LogMatrix;

/// A monomial, held as its exponent vector (the log vector).
///
/// The derived `Ord` is lexicographic on exponent vectors; this is the
/// canonical member order used throughout the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u8>,
}

impl Monomial {
    pub fn new(exponents: Vec<u8>) -> Self {
        Monomial { exponents }
    }

    /// Square-free monomial from 1-based variable indices.
    pub fn square_free(n: usize, vars: &[usize]) -> Self {
        let mut exponents = vec![0; n];
        for &v in vars {
            assert!(v >= 1 && v <= n, "variable x{v} out of range for n={n}");
            exponents[v - 1] = 1;
        }
        Monomial { exponents }
    }

    pub fn from_mask(n: usize, m: Mask) -> Self {
        Monomial::square_free(n, &mask::vars(n, m))
    }

    /// Number of ambient variables (the exponent vector length).
    pub fn vars(&self) -> usize {
        self.exponents.len()
    }

    /// Total degree: the sum of the exponents.
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&e| e as usize).sum()
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Exponent of variable `var` (1-based).
    pub fn exponent(&self, var: usize) -> u8 {
        self.exponents[var - 1]
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    /// 1-based indices of the variables that divide this monomial.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.vars())
            .filter(|&v| self.exponent(v) > 0)
            .collect()
    }

    /// Support as a bitmask. For square-free monomials this determines the
    /// monomial completely.
    pub fn support_mask(&self) -> Mask {
        mask::from_vars(self.vars(), &self.support())
    }

    /// Degree of gcd(self, other): sum of entrywise minimum exponents.
    pub fn gcd_degree(&self, other: &Monomial) -> usize {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a.min(b) as usize)
            .sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for v in 1..=self.vars() {
            match self.exponent(v) {
                0 => {}
                1 => write!(f, "x{v}")?,
                e => write!(f, "x{v}^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted per-variable incidence degrees. The sum always equals `n * d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceProfile(Vec<usize>);

impl IncidenceProfile {
    /// Non-increasing sequence of incidence degrees.
    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// An unordered set of `n` distinct degree-`d` monomials in `n` variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialSet {
    n: usize,
    d: usize,
    members: Vec<Monomial>,
}

impl MonomialSet {
    /// Validates and canonically sorts the members. Duplicates make a
    /// candidate ill-formed (the determinant would be 0 anyway).
    pub fn new(n: usize, mut members: Vec<Monomial>) -> Result<Self, Error> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::IllFormed(format!(
                "variable count must be between 1 and {MAX_VARS}, got {n}"
            )));
        }
        if members.len() != n {
            return Err(Error::IllFormed(format!(
                "expected exactly {n} monomials, got {}",
                members.len()
            )));
        }
        for m in &members {
            if m.vars() != n {
                return Err(Error::IllFormed(format!(
                    "monomial {m} lives in {} variables, expected {n}",
                    m.vars()
                )));
            }
        }
        let d = members[0].degree();
        if d == 0 {
            return Err(Error::IllFormed(
                "monomials must have degree at least 1".into(),
            ));
        }
        if d > MAX_VARS {
            return Err(Error::IllFormed(format!(
                "degree {d} exceeds the supported maximum {MAX_VARS}"
            )));
        }
        for m in &members {
            if m.degree() != d {
                return Err(Error::IllFormed(format!(
                    "monomial {m} has degree {}, expected common degree {d}",
                    m.degree()
                )));
            }
        }
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IllFormed("duplicate monomial in set".into()));
        }
        Ok(MonomialSet { n, d, members })
    }

    /// Builds a square-free set from support masks.
    pub fn from_masks(n: usize, masks: &[Mask]) -> Result<Self, Error> {
        let members = masks.iter().map(|&m| Monomial::from_mask(n, m)).collect();
        MonomialSet::new(n, members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Members in canonical (lexicographic) order.
    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn is_square_free(&self) -> bool {
        self.members.iter().all(Monomial::is_square_free)
    }

    /// Support masks of the members, in canonical member order.
    pub fn support_masks(&self) -> Vec<Mask> {
        self.members.iter().map(Monomial::support_mask).collect()
    }

    /// The n-by-n matrix whose column `j` is the log vector of member `j`
    /// under the canonical member order.
    pub fn log_matrix(&self) -> LogMatrix {
        let mut entries = vec![0u8; self.n * self.n];
        for (j, m) in self.members.iter().enumerate() {
            for i in 0..self.n {
                entries[i * self.n + j] = m.exponents()[i];
            }
        }
        LogMatrix::new(self.n, entries).expect("log matrix of a well-formed set is d-stochastic")
    }

    /// Number of members divisible by `var` (1-based).
    pub fn incidence_degree(&self, var: usize) -> usize {
        self.members.iter().filter(|m| m.exponent(var) > 0).count()
    }

    /// Incidence degrees of all variables, sorted non-increasing.
    pub fn incidence_profile(&self) -> IncidenceProfile {
        let mut degrees: Vec<usize> = (1..=self.n).map(|v| self.incidence_degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        IncidenceProfile(degrees)
    }

    /// True iff every variable divides at least one member and fails to
    /// divide at least one member.
    pub fn satisfies_canonical_restrictions(&self) -> bool {
        (1..=self.n).all(|v| {
            let inc = self.incidence_degree(v);
            inc >= 1 && inc < self.n
        })
    }

    /// True iff the bipartite incidence graph between occurring variables and
    /// members is connected. A `false` answer exhibits a split of the
    /// variables into two groups, each owning a nonempty subset of the
    /// members.
    pub fn is_cohesive(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for m in &self.members {
            let support = m.support();
            for pair in support.windows(2) {
                let a = find(&mut parent, pair[0] - 1);
                let b = find(&mut parent, pair[1] - 1);
                parent[a] = b;
            }
        }
        let occurring: Vec<usize> = (1..=self.n)
            .filter(|&v| self.incidence_degree(v) > 0)
            .collect();
        let mut roots: Vec<usize> = occurring
            .iter()
            .map(|&v| find(&mut parent, v - 1))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len() <= 1
    }

    /// Parses the text grammar: monomials separated by whitespace or commas,
    /// variables written `x<i>` with `i >= 1`, juxtaposition for products and
    /// `^` for exponents (`x1x2x3`, `x1^2`). The variable count is the number
    /// of monomials.
    pub fn parse(input: &str) -> Result<Self, Error> {
        let tokens = tokenize(input);
        if tokens.is_empty() {
            return Err(Error::Parse {
                position: 0,
                token: String::new(),
                message: "empty input: expected at least one monomial".into(),
            });
        }
        let parsed: Vec<ParsedToken> = tokens
            .into_iter()
            .map(|(pos, tok)| parse_token(pos, tok).map(|f| (pos, tok.to_string(), f)))
            .collect::<Result<_, _>>()?;
        let n = parsed.len();
        if n > MAX_VARS {
            return Err(Error::IllFormed(format!(
                "{n} monomials given, but at most {MAX_VARS} variables are supported"
            )));
        }
        let mut members = Vec::with_capacity(n);
        for (pos, tok, factors) in parsed {
            let mut exponents = vec![0u8; n];
            for (var, exp) in factors {
                if var > n {
                    return Err(Error::Parse {
                        position: pos,
                        token: tok,
                        message: format!(
                            "variable x{var} out of range: a set of {n} monomials uses x1..x{n}"
                        ),
                    });
                }
                exponents[var - 1] = exponents[var - 1].saturating_add(exp);
            }
            members.push(Monomial::new(exponents));
        }
        MonomialSet::new(n, members)
    }
}

impl fmt::Display for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Byte offset, raw text, and (variable, exponent) factors of one token.
type ParsedToken = (usize, String, Vec<(usize, u8)>);

fn tokenize(input: &str) -> Vec<(usize, &str)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in input.char_indices() {
        if c.is_whitespace() || c == ',' {
            if let Some(s) = start.take() {
                tokens.push((s, &input[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, &input[s..]));
    }
    tokens
}

/// Parses one monomial token into (variable, exponent) factors.
fn parse_token(pos: usize, token: &str) -> Result<Vec<(usize, u8)>, Error> {
    let err = |offset: usize, message: String| Error::Parse {
        position: pos + offset,
        token: token.to_string(),
        message,
    };
    let bytes = token.as_bytes();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'x' {
            return Err(err(
                i,
                format!(
                    "expected 'x', found {:?}",
                    token[i..].chars().next().unwrap()
                ),
            ));
        }
        i += 1;
        let var_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == var_start {
            return Err(err(i, "expected a variable index after 'x'".into()));
        }
        let var: usize = token[var_start..i]
            .parse()
            .map_err(|_| err(var_start, "variable index too large".into()))?;
        if var == 0 {
            return Err(err(var_start, "variable indices start at 1".into()));
        }
        let mut exp = 1u8;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let exp_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == exp_start {
                return Err(err(i, "expected an exponent after '^'".into()));
            }
            let e: u32 = token[exp_start..i]
                .parse()
                .map_err(|_| err(exp_start, "exponent too large".into()))?;
            if e == 0 || e > 16 {
                return Err(err(exp_start, "exponent must be between 1 and 16".into()));
            }
            exp = e as u8;
        }
        factors.push((var, exp));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(input: &str) -> MonomialSet {
        MonomialSet::parse(input).unwrap()
    }

    #[test]
    fn members_are_sorted_lexicographically() {
        let f = set("x1x2, x2x3, x1x3");
        let names: Vec<String> = f.members().iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x2x3", "x1x3", "x1x2"]);
        assert_eq!((f.n(), f.d()), (3, 2));
    }

    #[test]
    fn duplicates_are_rejected() {
        let m = Monomial::square_free(3, &[1, 2]);
        let err = MonomialSet::new(
            3,
            vec![m.clone(), m.clone(), Monomial::square_free(3, &[1, 3])],
        );
        assert!(matches!(err, Err(Error::IllFormed(_))));
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        let err = MonomialSet::new(
            2,
            vec![
                Monomial::square_free(2, &[1]),
                Monomial::square_free(2, &[1, 2]),
            ],
        );
        assert!(matches!(err, Err(Error::IllFormed(_))));
    }

    #[test]
    fn incidence_profile_example() {
        let f = set("x1x2, x2x3, x1x3, x1x4, x4x5, x5x6");
        assert_eq!(f.incidence_profile().degrees(), &[3, 2, 2, 2, 2, 1]);
        assert_eq!(f.incidence_profile().sum(), 6 * 2);
    }

    #[test]
    fn canonical_restrictions_hold_for_the_involution() {
        let f = set("x2x3x4, x1x3x4, x1x2x4, x1x2x3");
        assert!(f.satisfies_canonical_restrictions());
    }

    #[test]
    fn canonical_restrictions_fail_for_a_missing_variable() {
        // all members live in x1..x4, so the x5 and x6 rows are zero
        let f = set("x1x2, x1x3, x2x3, x1x4, x2x4, x3x4");
        assert!(!f.satisfies_canonical_restrictions());
    }

    #[test]
    fn canonical_restrictions_fail_when_a_variable_divides_everything() {
        let f = set("x1x2x3, x1x2x4, x1x2x5, x1x2x6, x1x3x4, x1x3x5");
        assert!(!f.satisfies_canonical_restrictions());
    }

    #[test]
    fn cohesiveness_detects_a_variable_split() {
        let f = set("x1x2, x2x3, x1x3, x4x5, x5x6, x4x6");
        assert!(!f.is_cohesive());
    }

    #[test]
    fn involution_and_cycles_are_cohesive() {
        assert!(set("x2x3x4x5, x1x3x4x5, x1x2x4x5, x1x2x3x5, x1x2x3x4").is_cohesive());
        assert!(set("x1x2, x2x3, x3x4, x4x1").is_cohesive());
    }

    #[test]
    fn row_sum_characterization_of_canonical_restrictions() {
        // for square-free sets the predicate says every row sum r of the log
        // matrix obeys 1 <= r <= n-1
        for input in [
            "x1x2, x2x3, x1x3",
            "x1x2, x1x3, x2x3, x1x4, x2x4, x3x4",
            "x2x3x4, x1x3x4, x1x2x4, x1x2x3",
        ] {
            let f = set(input);
            let a = f.log_matrix();
            let by_rows = (0..f.n()).all(|i| {
                let r: usize = (0..f.n()).map(|j| a.get(i, j) as usize).sum();
                r >= 1 && r < f.n()
            });
            assert_eq!(f.satisfies_canonical_restrictions(), by_rows);
        }
    }

    #[test]
    fn parse_reports_token_and_position() {
        match MonomialSet::parse("x1x2, y3") {
            Err(Error::Parse {
                position, token, ..
            }) => {
                assert_eq!(position, 6);
                assert_eq!(token, "y3");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match MonomialSet::parse("x1x2, x9") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x9"),
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn parse_accepts_exponents_and_repeats() {
        let f = set("x1^2, x1x2, x2x3");
        assert_eq!(f.d(), 2);
        assert!(!f.is_square_free());
        let squared = f.members().iter().find(|m| !m.is_square_free()).unwrap();
        assert_eq!(squared.exponent(1), 2);
        // juxtaposed repeats accumulate
        assert_eq!(set("x1x1, x1x2, x2x3").members(), f.members());
    }

    #[test]
    fn display_round_trips() {
        for input in [
            "x1x2, x2x3, x1x3",
            "x1^2, x1x2, x2x3",
            "x2x3x4, x1x3x4, x1x2x4, x1x2x3",
        ] {
            let f = set(input);
            assert_eq!(MonomialSet::parse(&f.to_string()).unwrap(), f);
        }
    }
}
