//! Relation suites and their reports: type-D Cartan matrices, the Serre
//! presentation satisfied by the Chevalley generators, and the Clifford
//! algebra closed by creation and twisted annihilation operators.
//!
//! Every suite materializes its relation instances as pairs of operators,
//! compares them column by column over the monomial basis, and returns a
//! deterministic report: counterexamples are sorted by relation name and
//! witness, so the output is independent of the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::operators::{chevalley_generators, lower, raise, twisted_lower, GradedOperator};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationsError {
    #[error("type-D Cartan matrix needs at least 3 nodes, got {0}")]
    CartanTooSmall(usize),
    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },
    #[error("generator E_{0} acts by zero; no eigenvalue to read")]
    ZeroGenerator(usize),
    #[error("[H_{i},E_{j}] is not a scalar multiple of E_{j}")]
    NonEigenRelation { i: usize, j: usize },
    #[error("eigenvalue {value} of [H_{i},E_{j}] is not an integer")]
    NonIntegerEigenvalue { i: usize, j: usize, value: String },
}

/// pass: relations were checked and none failed. vacuous: nothing to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One failed relation instance: the basis monomial where the two sides
/// first differ, with both images rendered as element text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub relation: String,
    pub witness: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub relations_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// Builds a report, deriving the status and sorting counterexamples into
    /// their canonical order.
    pub fn from_outcome(
        check: impl Into<String>,
        params: BTreeMap<String, String>,
        relations_checked: usize,
        mut counterexamples: Vec<Counterexample>,
        elapsed: Duration,
    ) -> Self {
        counterexamples.sort_by(|a, b| {
            (&a.relation, &a.witness).cmp(&(&b.relation, &b.witness))
        });
        let status = if !counterexamples.is_empty() {
            Status::Fail
        } else if relations_checked > 0 {
            Status::Pass
        } else {
            Status::Vacuous
        };
        VerificationReport {
            check: check.into(),
            params,
            status,
            relations_checked,
            counterexamples,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "check={} status={} relations={}",
            self.check, self.status, self.relations_checked
        )?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " elapsed_ms={}", self.elapsed.as_millis())?;
        for ce in &self.counterexamples {
            write!(
                f,
                "\n  FAIL {} at {:?}: lhs={} rhs={}",
                ce.relation, ce.witness, ce.lhs, ce.rhs
            )?;
        }
        Ok(())
    }
}

/// Integer Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let m = entries.len();
        assert!(entries.iter().all(|row| row.len() == m), "matrix must be square");
        CartanMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e:>2}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Cartan matrix of type D with m nodes, in the labeling where node 2 is the
/// fork: nodes 0 and 1 both attach to node 2, and nodes 2,3,...,m-1 form a
/// chain. Nodes 0 and 1 are not adjacent to each other.
pub fn cartan_d(m: usize) -> Result<CartanMatrix, RelationsError> {
    if m < 3 {
        return Err(RelationsError::CartanTooSmall(m));
    }
    let adjacent = |i: usize, j: usize| -> bool {
        let (a, b) = (i.min(j), i.max(j));
        (a, b) == (0, 2) || (a, b) == (1, 2) || (a >= 2 && b == a + 1)
    };
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        2
                    } else if adjacent(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    Ok(CartanMatrix::new(entries))
}

/// The rank-two degeneration used when only nodes 0 and 1 exist: two
/// disconnected nodes, matching the convention that 0 and 1 never touch.
pub fn cartan_disconnected_pair() -> CartanMatrix {
    CartanMatrix::new(vec![vec![2, 0], vec![0, 2]])
}

/// First basis monomial where the two operators differ.
fn operator_counterexample(
    relation: &str,
    lhs: &GradedOperator,
    rhs: &GradedOperator,
) -> Option<Counterexample> {
    let (k, a, b) = lhs.first_difference(rhs)?;
    Some(Counterexample {
        relation: relation.to_string(),
        witness: k.indices().to_vec(),
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

fn run_relation_suite(
    check: &str,
    params: BTreeMap<String, String>,
    rels: Vec<(String, GradedOperator, GradedOperator)>,
    started: Instant,
) -> VerificationReport {
    let counterexamples: Vec<Counterexample> = rels
        .par_iter()
        .filter_map(|(name, lhs, rhs)| operator_counterexample(name, lhs, rhs))
        .collect();
    VerificationReport::from_outcome(check, params, rels.len(), counterexamples, started.elapsed())
}

/// Checks the five Serre-relation families of the Chevalley generators
/// against the type-D Cartan matrix with n+1 nodes. For n = 1 the matrix
/// degenerates to two disconnected nodes and only the surviving relations
/// run; the report flags that case.
pub fn check_serre(n: usize) -> VerificationReport {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    if n == 0 {
        return VerificationReport::from_outcome(
            "serre",
            params,
            0,
            Vec::new(),
            started.elapsed(),
        );
    }
    let m = n + 1;
    params.insert("nodes".to_string(), m.to_string());
    let cartan = if n == 1 {
        params.insert("degenerate_rank_two".to_string(), "true".to_string());
        cartan_disconnected_pair()
    } else {
        cartan_d(m).expect("m >= 3 here")
    };
    let gens = chevalley_generators(n);
    let zero = GradedOperator::zero(n);
    let mut rels = Vec::new();
    for i in 0..m {
        for j in 0..m {
            rels.push((
                format!("[H_{i},H_{j}]=0"),
                gens.h[i].commutator(&gens.h[j]),
                zero.clone(),
            ));
            let ef_rhs = if i == j { gens.h[i].clone() } else { zero.clone() };
            rels.push((
                format!("[E_{i},F_{j}]={}", if i == j { format!("H_{i}") } else { "0".into() }),
                gens.e[i].commutator(&gens.f[j]),
                ef_rhs,
            ));
            let a_ji = cartan.entry(j, i);
            rels.push((
                format!("[H_{i},E_{j}]=({a_ji})E_{j}"),
                gens.h[i].commutator(&gens.e[j]),
                gens.e[j].scale_int(a_ji),
            ));
            rels.push((
                format!("[H_{i},F_{j}]=({})F_{j}", -a_ji),
                gens.h[i].commutator(&gens.f[j]),
                gens.f[j].scale_int(-a_ji),
            ));
            if i != j {
                let power = (1 - a_ji) as usize;
                rels.push((
                    format!("(ad E_{i})^{power}(E_{j})=0"),
                    gens.e[i].ad_pow(power, &gens.e[j]),
                    zero.clone(),
                ));
                rels.push((
                    format!("(ad F_{i})^{power}(F_{j})=0"),
                    gens.f[i].ad_pow(power, &gens.f[j]),
                    zero.clone(),
                ));
            }
        }
    }
    run_relation_suite("serre", params, rels, started)
}

/// Reads the Cartan matrix back out of the commutators: the eigenvalue of
/// `E_j` under `ad H_i` is the entry at row j, column i.
pub fn extract_cartan(n: usize) -> Result<CartanMatrix, RelationsError> {
    if n < 2 {
        return Err(RelationsError::RankTooSmall { min: 2, got: n });
    }
    let m = n + 1;
    let gens = chevalley_generators(n);
    for (j, e) in gens.e.iter().enumerate() {
        if e.is_zero() {
            return Err(RelationsError::ZeroGenerator(j));
        }
    }
    let mut entries = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            let c = gens.h[i].commutator(&gens.e[j]);
            let scalar = c
                .scalar_ratio_to(&gens.e[j])
                .ok_or(RelationsError::NonEigenRelation { i, j })?;
            if !scalar.is_integer() {
                return Err(RelationsError::NonIntegerEigenvalue {
                    i,
                    j,
                    value: scalar.to_string(),
                });
            }
            let as_int: i64 = scalar
                .to_integer()
                .try_into()
                .map_err(|_| RelationsError::NonIntegerEigenvalue {
                    i,
                    j,
                    value: scalar.to_string(),
                })?;
            entries[j][i] = as_int;
        }
    }
    Ok(CartanMatrix::new(entries))
}

/// Checks the Clifford relations of creation against twisted annihilation:
/// both families anticommute among themselves, and the mixed anticommutator
/// is the identity exactly on matching indices.
pub fn check_clifford(n: usize) -> VerificationReport {
    clifford_suite(n, "clifford", false)
}

/// The same relations with the untwisted annihilation operators. This is a
/// negative control: for n >= 2 the mixed family genuinely fails, which is
/// why the twist exists.
pub fn check_clifford_untwisted(n: usize) -> VerificationReport {
    clifford_suite(n, "clifford-untwisted", true)
}

fn clifford_suite(n: usize, check: &str, untwisted: bool) -> VerificationReport {
    let started = Instant::now();
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n.to_string());
    if untwisted {
        params.insert("annihilation".to_string(), "untwisted".to_string());
    }
    if n == 0 {
        return VerificationReport::from_outcome(check, params, 0, Vec::new(), started.elapsed());
    }
    let creation: Vec<GradedOperator> = (0..n as u32).map(|i| raise(i, n)).collect();
    let annihilation: Vec<GradedOperator> = (0..n as u32)
        .map(|i| {
            if untwisted {
                lower(i, n).expect("i < n")
            } else {
                twisted_lower(i, n).expect("i < n")
            }
        })
        .collect();
    let low_name = if untwisted { "lower" } else { "tlower" };
    let zero = GradedOperator::zero(n);
    let identity = GradedOperator::identity(n);
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            rels.push((
                format!("{{raise:{i},raise:{j}}}=0"),
                creation[i].anticommutator(&creation[j]),
                zero.clone(),
            ));
            rels.push((
                format!("{{{low_name}:{i},{low_name}:{j}}}=0"),
                annihilation[i].anticommutator(&annihilation[j]),
                zero.clone(),
            ));
            let mixed_rhs = if i == j { identity.clone() } else { zero.clone() };
            rels.push((
                format!(
                    "{{raise:{i},{low_name}:{j}}}={}",
                    if i == j { "Id" } else { "0" }
                ),
                creation[i].anticommutator(&annihilation[j]),
                mixed_rhs,
            ));
        }
    }
    run_relation_suite(check, params, rels, started)
}
