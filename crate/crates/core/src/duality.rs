//! The dual-complement involution and the two extremal reduction principles,
//! packaged as replayable certificates.
//!
//! Deleting a leaf (a variable of incidence degree 1) removes its unique
//! member and the variable itself; plucking a root (incidence degree n-1)
//! drops the one member the root misses and divides the rest by it. Both
//! preserve the Cremona property whenever the reduced set still satisfies
//! the canonical restrictions, and refute it otherwise. Plucking is carried
//! out through the duality identity S/v = (S-dual minus v)-dual, so one
//! audited code path serves both principles.

use serde::Serialize;

use crate::error::Error;
use crate::mask;
use crate::matrix::exact_determinant;
use crate::monomial::{Monomial, MonomialSet};

/// Entrywise complement of the log matrix: degree d becomes n-d, and edges
/// of the associated clutter become vertex-set complements. An involution.
pub fn dual_complement(f: &MonomialSet) -> Result<MonomialSet, Error> {
    let n = f.n();
    for m in f.members() {
        for v in 1..=n {
            let e = m.exponent(v);
            if e > 1 {
                return Err(Error::NotSquareFree {
                    variable: v,
                    monomial: m.to_string(),
                    exponent: e,
                });
            }
        }
    }
    if f.d() + 1 > n {
        return Err(Error::Precondition(format!(
            "dual complement needs d <= n-1, got d={} with n={n}",
            f.d()
        )));
    }
    let full = mask::full(n);
    let masks: Vec<mask::Mask> = f.support_masks().iter().map(|&m| full & !m).collect();
    MonomialSet::from_masks(n, &masks)
}

/// Removes leaf `var` (1-based) and its unique member; the surviving
/// variables are compacted order-preservingly to 1..n-1.
pub fn delete_leaf(f: &MonomialSet, var: usize) -> Result<MonomialSet, Error> {
    let n = f.n();
    if var < 1 || var > n {
        return Err(Error::NotALeaf(var));
    }
    let holders: Vec<usize> = (0..n)
        .filter(|&j| f.members()[j].exponent(var) > 0)
        .collect();
    if holders.len() != 1 || f.members()[holders[0]].exponent(var) != 1 {
        return Err(Error::NotALeaf(var));
    }
    if n < 2 {
        return Err(Error::Precondition(
            "cannot delete the last variable".into(),
        ));
    }
    let members: Vec<Monomial> = f
        .members()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != holders[0])
        .map(|(_, m)| {
            let mut exponents = m.exponents().to_vec();
            exponents.remove(var - 1);
            Monomial::new(exponents)
        })
        .collect();
    MonomialSet::new(n - 1, members)
}

/// Plucks root `var`: drops the unique member not divisible by it and
/// divides the rest by it, lowering the degree by one. Implemented through
/// the dual complement; a direct evaluation cross-checks it in debug builds.
pub fn pluck_root(f: &MonomialSet, var: usize) -> Result<MonomialSet, Error> {
    let n = f.n();
    if var < 1 || var > n || f.incidence_degree(var) != n - 1 {
        return Err(Error::NotARoot(var));
    }
    let dual = dual_complement(f)?;
    let deleted = delete_leaf(&dual, var)?;
    let result = dual_complement(&deleted)?;
    debug_assert_eq!(result, pluck_root_direct(f, var)?);
    Ok(result)
}

fn pluck_root_direct(f: &MonomialSet, var: usize) -> Result<MonomialSet, Error> {
    let members: Vec<Monomial> = f
        .members()
        .iter()
        .filter(|m| m.exponent(var) > 0)
        .map(|m| {
            let mut exponents = m.exponents().to_vec();
            exponents[var - 1] -= 1;
            exponents.remove(var - 1);
            Monomial::new(exponents)
        })
        .collect();
    MonomialSet::new(f.n() - 1, members)
}

/// One rewrite in a reduction chain. `variable` is the index in the
/// *original* variable numbering; it is absent for dualization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub variable: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    DeleteLeaf,
    PluckRoot,
    Dualize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Terminal {
    BaseIdentity,
    BaseInvolution,
    BaseOddCycle,
    DeterminantVerdict,
}

/// A replayable chain of reductions ending at a recognized base case or at
/// an explicit determinant verdict. `terminal_det` is always the exact
/// determinant of the terminal set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
    pub terminal_det: i128,
    terminal_set: MonomialSet,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    steps: &'a [ReductionStep],
    terminal: Terminal,
    terminal_det: i64,
}

impl ReductionCertificate {
    pub fn terminal_set(&self) -> &MonomialSet {
        &self.terminal_set
    }

    /// Verdict carried by the certificate: base cases are Cremona, and a
    /// determinant verdict holds exactly when |det| equals the terminal
    /// degree.
    pub fn is_cremona(&self) -> bool {
        match self.terminal {
            Terminal::BaseIdentity | Terminal::BaseInvolution | Terminal::BaseOddCycle => true,
            Terminal::DeterminantVerdict => {
                self.terminal_det.unsigned_abs() == self.terminal_set.d() as u128
            }
        }
    }

    /// Re-applies the recorded steps to `original` and returns the terminal
    /// set reached.
    pub fn replay(&self, original: &MonomialSet) -> Result<MonomialSet, Error> {
        let mut current = original.clone();
        let mut original_vars: Vec<usize> = (1..=original.n()).collect();
        for step in &self.steps {
            match step.kind {
                StepKind::Dualize => {
                    current = dual_complement(&current)?;
                }
                StepKind::DeleteLeaf | StepKind::PluckRoot => {
                    let target = step.variable.ok_or_else(|| {
                        Error::Precondition("step is missing its variable".into())
                    })?;
                    let pos = original_vars
                        .iter()
                        .position(|&v| v == target)
                        .ok_or_else(|| {
                            Error::Precondition(format!("variable x{target} was already removed"))
                        })?;
                    current = match step.kind {
                        StepKind::DeleteLeaf => delete_leaf(&current, pos + 1)?,
                        _ => pluck_root(&current, pos + 1)?,
                    };
                    original_vars.remove(pos);
                }
            }
        }
        Ok(current)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(CertificateJson {
            steps: &self.steps,
            terminal: self.terminal,
            terminal_det: i64::try_from(self.terminal_det)
                .expect("terminal determinants fit in 64 bits"),
        })
        .expect("certificate serialization cannot fail")
    }

    pub fn to_json_string(&self) -> String {
        self.to_json_value().to_string()
    }
}

/// Greedily reduces a square-free set satisfying the canonical restrictions:
/// leaves are deleted before roots are plucked, lowest variable index first,
/// until a base case or a leafless rootless core remains. A reduction step
/// whose result breaks the canonical restrictions ends the chain at once
/// with a determinant verdict (the determinant is then zero), and a
/// disconnected set is refuted before any step is taken.
pub fn reduce_to_base(f: &MonomialSet) -> Result<ReductionCertificate, Error> {
    if !f.is_square_free() {
        return Err(Error::Precondition(
            "reduce_to_base requires a square-free set".into(),
        ));
    }
    if !f.satisfies_canonical_restrictions() {
        return Err(Error::Precondition(
            "reduce_to_base requires the canonical restrictions".into(),
        ));
    }

    let mut steps = Vec::new();
    let mut current = f.clone();
    let mut original_vars: Vec<usize> = (1..=f.n()).collect();

    let terminal = loop {
        let n = current.n();
        if current.d() == 1 {
            break Terminal::BaseIdentity;
        }
        if !current.is_cohesive() {
            break Terminal::DeterminantVerdict;
        }
        if current.d() == 2 && (1..=n).all(|v| current.incidence_degree(v) == 2) {
            break if n % 2 == 1 {
                Terminal::BaseOddCycle
            } else {
                Terminal::DeterminantVerdict
            };
        }
        if current.d() == n - 1 {
            break Terminal::BaseInvolution;
        }

        let leaf = (1..=n).find(|&v| current.incidence_degree(v) == 1);
        let root = (1..=n).find(|&v| current.incidence_degree(v) == n - 1);
        let (kind, pos) = match (leaf, root) {
            (Some(v), _) => (StepKind::DeleteLeaf, v),
            (None, Some(v)) => (StepKind::PluckRoot, v),
            (None, None) => break Terminal::DeterminantVerdict,
        };
        current = match kind {
            StepKind::DeleteLeaf => delete_leaf(&current, pos)?,
            _ => pluck_root(&current, pos)?,
        };
        steps.push(ReductionStep {
            kind,
            variable: Some(original_vars.remove(pos - 1)),
        });
        if !current.satisfies_canonical_restrictions() {
            break Terminal::DeterminantVerdict;
        }
    };

    let terminal_det = exact_determinant(&current.log_matrix());
    Ok(ReductionCertificate {
        steps,
        terminal,
        terminal_det,
        terminal_set: current,
    })
}
