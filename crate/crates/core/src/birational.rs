//! The determinant criterion for birationality and the closed-form
//! classifications it yields.
//!
//! A set of n degree-d monomials in n variables defines a Cremona
//! transformation exactly when its log matrix has determinant plus or minus
//! d. Degree two has a complete structural description: the associated graph
//! must be either a unique-odd-cycle graph or a tree with exactly one loop.

use crate::error::Error;
use crate::matrix::exact_determinant;
use crate::monomial::MonomialSet;

/// Outcome of the determinant test. `is_cremona` holds exactly when
/// `|determinant| == degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CremonaVerdict {
    pub is_cremona: bool,
    pub determinant: i128,
    pub degree: usize,
}

/// Applies the determinant criterion. The sign of the reported determinant
/// is taken relative to the canonical sorted member order.
pub fn is_cremona(f: &MonomialSet) -> CremonaVerdict {
    let determinant = exact_determinant(&f.log_matrix());
    CremonaVerdict {
        is_cremona: determinant.unsigned_abs() == f.d() as u128,
        determinant,
        degree: f.d(),
    }
}

/// Structure of a cohesive degree-two set, viewed as a graph with loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeTwoShape {
    /// Loopless, with exactly one cycle, of odd length. The witness lists the
    /// cycle vertices in traversal order.
    UniqueOddCycle {
        cycle: Vec<usize>,
    },
    /// A tree plus exactly one loop; the witness names the looped variable.
    TreeWithOneLoop {
        loop_var: usize,
    },
    NotCremona,
}

impl DegreeTwoShape {
    pub fn is_cremona(&self) -> bool {
        !matches!(self, DegreeTwoShape::NotCremona)
    }
}

/// Classifies a cohesive degree-two set satisfying the canonical
/// restrictions. Loops (squared variables) are permitted. A connected graph
/// with n vertices and n edges has exactly one independent cycle, counting a
/// loop as a cycle of length 1; the set is Cremona exactly when that cycle
/// has odd length.
pub fn classify_degree_two(f: &MonomialSet) -> Result<DegreeTwoShape, Error> {
    if f.d() != 2 {
        return Err(Error::Precondition(format!(
            "classify_degree_two needs degree 2, got {}",
            f.d()
        )));
    }
    for m in f.members() {
        if m.exponents().iter().any(|&e| e > 2) {
            return Err(Error::Precondition(format!(
                "monomial {m} is not an edge or a loop"
            )));
        }
    }
    if !f.satisfies_canonical_restrictions() {
        return Err(Error::Precondition(
            "classify_degree_two needs the canonical restrictions".into(),
        ));
    }
    if !f.is_cohesive() {
        return Err(Error::Precondition(
            "classify_degree_two needs a cohesive set".into(),
        ));
    }

    let n = f.n();
    let loops: Vec<usize> = f
        .members()
        .iter()
        .filter_map(|m| (1..=n).find(|&v| m.exponent(v) == 2))
        .collect();
    match loops.len() {
        1 => Ok(DegreeTwoShape::TreeWithOneLoop { loop_var: loops[0] }),
        0 => {
            let cycle = unique_cycle(f);
            if cycle.len() % 2 == 1 {
                Ok(DegreeTwoShape::UniqueOddCycle { cycle })
            } else {
                Ok(DegreeTwoShape::NotCremona)
            }
        }
        // two loops would give cycle rank at least 2, impossible for a
        // connected graph with n vertices and n edges
        _ => Ok(DegreeTwoShape::NotCremona),
    }
}

/// Peels degree-one vertices off a loopless connected graph with n vertices
/// and n edges; what remains is its unique cycle, returned in traversal
/// order.
fn unique_cycle(f: &MonomialSet) -> Vec<usize> {
    let n = f.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for m in f.members() {
        let s = m.support();
        adj[s[0]].push(s[1]);
        adj[s[1]].push(s[0]);
    }
    let mut alive = vec![true; n + 1];
    let mut degree: Vec<usize> = (0..=n).map(|v| adj[v].len()).collect();
    let mut queue: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = queue.pop() {
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    let start = (1..=n).find(|&v| alive[v]).expect("a cycle remains");
    let mut cycle = vec![start];
    let mut prev = 0;
    let mut cur = start;
    loop {
        let next = *adj[cur]
            .iter()
            .find(|&&w| alive[w] && w != prev)
            .expect("cycle vertices have two live neighbours");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

/// The unique square-free Cremona set of degree n-1: log matrix 1 - delta.
pub fn standard_involution(n: usize) -> MonomialSet {
    assert!(n >= 3, "the standard involution needs n >= 3");
    let members = (1..=n)
        .map(|skip| {
            let vars: Vec<usize> = (1..=n).filter(|&v| v != skip).collect();
            crate::monomial::Monomial::square_free(n, &vars)
        })
        .collect();
    MonomialSet::new(n, members).expect("involution members are distinct")
}

/// Determinant of the n-cycle incidence matrix: `1 - (-1)^n`.
pub fn cycle_determinant(n: usize) -> i128 {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    if n.is_multiple_of(2) {
        0
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(input: &str) -> MonomialSet {
        MonomialSet::parse(input).unwrap()
    }

    #[test]
    fn involution_is_cremona_up_to_twelve_variables() {
        for n in 3..=12 {
            let v = is_cremona(&standard_involution(n));
            assert!(v.is_cremona, "n={n}");
            assert_eq!(v.determinant.unsigned_abs(), (n - 1) as u128);
        }
    }

    #[test]
    fn involution_members_for_small_n() {
        assert_eq!(standard_involution(3).to_string(), "x2x3, x1x3, x1x2");
        assert_eq!(
            standard_involution(4).to_string(),
            "x2x3x4, x1x3x4, x1x2x4, x1x2x3"
        );
    }

    #[test]
    fn odd_triangle_is_cremona() {
        let v = is_cremona(&set("x1x2, x2x3, x1x3"));
        assert!(v.is_cremona);
        assert_eq!(v.determinant.unsigned_abs(), 2);
    }

    #[test]
    fn gcd_block_forces_even_determinants() {
        let universe = crate::mask::masks_of_weight(6, 3);
        let base = [
            crate::mask::from_vars(6, &[1, 2, 3]),
            crate::mask::from_vars(6, &[1, 4, 5]),
            crate::mask::from_vars(6, &[2, 4, 6]),
            crate::mask::from_vars(6, &[3, 5, 6]),
        ];
        let rest: Vec<u16> = universe
            .iter()
            .copied()
            .filter(|m| !base.contains(m))
            .collect();
        let mut checked = 0;
        for (i, &f5) in rest.iter().enumerate() {
            for &f6 in &rest[i + 1..] {
                let mut masks = base.to_vec();
                masks.push(f5);
                masks.push(f6);
                let f = MonomialSet::from_masks(6, &masks).unwrap();
                let det = exact_determinant(&f.log_matrix());
                assert_eq!(det.rem_euclid(2), 0, "completion {f}");
                assert!(!is_cremona(&f).is_cremona);
                checked += 1;
            }
        }
        assert_eq!(checked, 16 * 15 / 2);
    }

    #[test]
    fn triangle_with_pendant_has_a_unique_odd_cycle() {
        let shape = classify_degree_two(&set("x1x2, x2x3, x1x3, x3x4")).unwrap();
        match shape {
            DegreeTwoShape::UniqueOddCycle { mut cycle } => {
                cycle.sort_unstable();
                assert_eq!(cycle, vec![1, 2, 3]);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn path_with_loop_is_a_looped_tree() {
        let shape = classify_degree_two(&set("x1^2, x1x2, x2x3")).unwrap();
        assert_eq!(shape, DegreeTwoShape::TreeWithOneLoop { loop_var: 1 });
    }

    #[test]
    fn even_cycles_are_not_cremona() {
        let shape = classify_degree_two(&set("x1x2, x2x3, x3x4, x4x1")).unwrap();
        assert_eq!(shape, DegreeTwoShape::NotCremona);
    }

    #[test]
    fn classification_preconditions_are_checked() {
        assert!(classify_degree_two(&set("x1x2x3, x1x2x4, x1x3x4, x2x3x4")).is_err());
        assert!(classify_degree_two(&set("x1x2, x2x3, x1x3, x4x5, x5x6, x4x6")).is_err());
    }

    #[test]
    fn cycle_determinant_matches_the_incidence_matrix() {
        for n in 3..=12 {
            assert_eq!(
                cycle_determinant(n),
                exact_determinant(&crate::matrix::cycle_incidence_matrix(n))
            );
        }
    }
}
