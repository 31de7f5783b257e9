//! First Ext-group dimensions between the simple modules labeled by
//! partitions, by several independent routes:
//!
//! - [`ext1_closed`]: the closed Littlewood–Richardson formulas,
//! - [`ext1_oracle_catlie`]: bimodule multiplicity in the Lie PROP hom-space
//!   by double character inner product,
//! - [`ext1_oracle_ub_character`]: the same for the upward Brauer hom-space,
//! - [`ext1_oracle_ub_symmetrizer`]: an exact Young-symmetrizer rank in the
//!   group algebra,
//!
//! and [`verify_range`] cross-checks all of them over a size range.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::brauer::ub_bimodule_trace;
use crate::lie::CatLieSpace;
use crate::linalg::Rational;
use crate::parallel;
use crate::partitions::{
    character_value, enumerate_partitions, partitions_up_to, CycleType, Partition,
};
use crate::symgroup::{
    class_representative, right_ideal_with_embedded_symmetrizer, symmetrizer_multiplicity,
};

/// Largest ambient symmetric group degree for which the symmetrizer-rank
/// oracle runs (|mu| at most 6, i.e. exact ranks in a 720-dimensional group
/// algebra).
pub const SYMMETRIZER_DEGREE_CAP: usize = 6;

/// Report-layer size guards for the character oracles: beyond these the
/// hom-space bases get out of desk range and the methods are reported as
/// unavailable rather than attempted.
pub const CATLIE_SIZE_CAP: usize = 7;
pub const UB_CHAR_SIZE_CAP: usize = 8;

/// One Ext query: the pair of partitions labeling source and target.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ExtQuery {
    pub lambda: Partition,
    pub mu: Partition,
}

impl ExtQuery {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        ExtQuery { lambda, mu }
    }
}

/// Computation methods exposed by the engine.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Method {
    Closed,
    CatLie,
    UbChar,
    UbSymmetrizer,
    Solver,
}

impl Method {
    /// The four standard cross-check methods used by `verify_range`.
    pub const STANDARD: [Method; 4] = [
        Method::Closed,
        Method::CatLie,
        Method::UbChar,
        Method::UbSymmetrizer,
    ];

    /// CLI flag spelling.
    pub fn flag_name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::CatLie => "catlie",
            Method::UbChar => "ub-char",
            Method::UbSymmetrizer => "ub-symmetrizer",
            Method::Solver => "solver",
        }
    }

    /// Key used in reports (JSON object keys and CSV columns).
    pub fn report_key(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::CatLie => "catlie",
            Method::UbChar => "ub_char",
            Method::UbSymmetrizer => "ub_symmetrizer",
            Method::Solver => "solver",
        }
    }

    pub fn from_flag(s: &str) -> Option<Method> {
        match s {
            "closed" => Some(Method::Closed),
            "catlie" => Some(Method::CatLie),
            "ub-char" => Some(Method::UbChar),
            "ub-symmetrizer" => Some(Method::UbSymmetrizer),
            "solver" => Some(Method::Solver),
            _ => None,
        }
    }
}

/// Value of one oracle inside a report.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleValue {
    Available(u64),
    Unavailable,
}

impl Serialize for OracleValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OracleValue::Available(v) => s.serialize_u64(*v),
            OracleValue::Unavailable => s.serialize_str("unavailable"),
        }
    }
}

impl<'de> Deserialize<'de> for OracleValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Count(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Count(v) => Ok(OracleValue::Available(v)),
            Raw::Text(t) if t == "unavailable" => Ok(OracleValue::Unavailable),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "unknown oracle value {t:?}"
            ))),
        }
    }
}

/// Why a method could not produce a value for a query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MethodUnavailable {
    /// The size relation between the partitions is outside the method's
    /// domain.
    SizeRelation,
    /// The exact-rank oracle is capped at ambient degree
    /// [`SYMMETRIZER_DEGREE_CAP`].
    DegreeCapExceeded { degree: usize },
}

impl fmt::Display for MethodUnavailable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodUnavailable::SizeRelation => {
                write!(f, "method does not apply to this size relation")
            }
            MethodUnavailable::DegreeCapExceeded { degree } => write!(
                f,
                "method unavailable at this size: ambient degree {degree} exceeds cap {SYMMETRIZER_DEGREE_CAP}"
            ),
        }
    }
}

/// Result of one query: the closed value, every requested oracle, and the
/// agreement flag. `timing` is informational and never serialized.
#[derive(Clone, Debug)]
pub struct ExtReport {
    pub query: ExtQuery,
    pub closed: u64,
    pub oracles: BTreeMap<Method, OracleValue>,
    pub agree: bool,
    pub timing: Duration,
}

/// Serializable form of a report; field order is the wire schema. Unknown
/// oracle names are rejected on deserialization.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportRecord {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
    pub closed: u64,
    #[serde(deserialize_with = "known_oracles")]
    pub oracles: BTreeMap<String, OracleValue>,
    pub agree: bool,
}

fn known_oracles<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> Result<BTreeMap<String, OracleValue>, D::Error> {
    let map = BTreeMap::<String, OracleValue>::deserialize(d)?;
    for key in map.keys() {
        let known = [
            Method::CatLie,
            Method::UbChar,
            Method::UbSymmetrizer,
            Method::Solver,
        ]
        .iter()
        .any(|m| m.report_key() == key);
        if !known {
            return Err(serde::de::Error::custom(format!(
                "unknown oracle name {key:?}"
            )));
        }
    }
    Ok(map)
}

impl ExtReport {
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            lambda: self.query.lambda.parts().to_vec(),
            mu: self.query.mu.parts().to_vec(),
            closed: self.closed,
            oracles: self
                .oracles
                .iter()
                .map(|(m, v)| (m.report_key().to_string(), *v))
                .collect(),
            agree: self.agree,
        }
    }
}

/// dim Ext^0: 1 exactly when the labels agree (Schur's lemma).
pub fn ext0_closed(q: &ExtQuery) -> u64 {
    u64::from(q.lambda == q.mu)
}

/// dim Ext^1 by the closed formulas: with n = |lambda| and m = |mu|,
/// sum_{rho |- n-2} LR^lambda_{rho,(1,1)} LR^mu_{rho,(1)} when m = n - 1,
/// LR^mu_{lambda,(2)} when m = n + 2, and 0 otherwise.
pub fn ext1_closed(q: &ExtQuery) -> u64 {
    let n = q.lambda.size();
    let m = q.mu.size();
    if m + 1 == n {
        if n < 2 {
            return 0;
        }
        enumerate_partitions(n - 2)
            .iter()
            .map(|rho| {
                crate::partitions::lr_coefficient(&q.lambda, rho, &Partition::one_column(2))
                    * crate::partitions::lr_coefficient(&q.mu, rho, &Partition::one_row(1))
            })
            .sum()
    } else if m == n + 2 {
        crate::partitions::lr_coefficient(&q.mu, &q.lambda, &Partition::one_row(2))
    } else {
        0
    }
}

/// The degree-zero part of the closed formula: only the m = n - 1 branch
/// survives.
pub fn ext1_grop_closed(q: &ExtQuery) -> u64 {
    if q.mu.size() + 1 == q.lambda.size() {
        ext1_closed(q)
    } else {
        0
    }
}

fn integral_multiplicity(acc: Rational) -> u64 {
    assert!(
        acc.is_integer(),
        "character inner product must be integral, got {acc}"
    );
    acc.to_integer()
        .to_u64()
        .expect("multiplicity must be a nonnegative integer")
}

/// Multiplicity of the pair (mu, lambda) in the Lie-PROP hom-space from n
/// inputs to n - 1 outputs, by summing traces against both characters over
/// conjugacy-class pairs. Requires |mu| = |lambda| - 1.
pub fn ext1_oracle_catlie(q: &ExtQuery) -> u64 {
    let n = q.lambda.size();
    let m = q.mu.size();
    assert_eq!(m + 1, n, "catlie oracle requires |mu| = |lambda| - 1");
    let space = CatLieSpace::new(n, m);
    let mut acc = Rational::zero();
    for alpha in enumerate_partitions(m) {
        let ca = CycleType(alpha);
        let sigma = class_representative(&ca);
        let chi_mu = character_value(&q.mu, &ca);
        if chi_mu == 0 {
            continue;
        }
        for beta in enumerate_partitions(n) {
            let cb = CycleType(beta);
            let tau = class_representative(&cb);
            let chi_lambda = character_value(&q.lambda, &cb);
            if chi_lambda == 0 {
                continue;
            }
            let tr = space.trace(&sigma, &tau);
            if tr.is_zero() {
                continue;
            }
            let z = (ca.centralizer_order() * cb.centralizer_order()) as i64;
            acc += tr * crate::linalg::ratio(chi_mu * chi_lambda, z);
        }
    }
    integral_multiplicity(acc)
}

/// Multiplicity of the pair (mu, lambda) in the upward Brauer hom-space from
/// n positives to n + 2 negatives, via fixed-point counts and characters.
/// Requires |mu| = |lambda| + 2.
pub fn ext1_oracle_ub_character(q: &ExtQuery) -> u64 {
    let n = q.lambda.size();
    let m = q.mu.size();
    assert_eq!(m, n + 2, "ub oracle requires |mu| = |lambda| + 2");
    let mut acc = Rational::zero();
    for alpha in enumerate_partitions(m) {
        let ca = CycleType(alpha);
        let sigma = class_representative(&ca);
        let chi_mu = character_value(&q.mu, &ca);
        if chi_mu == 0 {
            continue;
        }
        for beta in enumerate_partitions(n) {
            let cb = CycleType(beta);
            let tau = class_representative(&cb);
            let chi_lambda = character_value(&q.lambda, &cb);
            if chi_lambda == 0 {
                continue;
            }
            let fixed = ub_bimodule_trace(n, m, &sigma, &tau) as i64;
            if fixed == 0 {
                continue;
            }
            let z = (ca.centralizer_order() * cb.centralizer_order()) as i64;
            acc += crate::linalg::ratio(chi_mu * chi_lambda * fixed, z);
        }
    }
    integral_multiplicity(acc)
}

/// The slow, independent second oracle for the |mu| = |lambda| + 2 branch:
/// the exact rank of c_mu applied to the spanning set of the embedded-
/// symmetrizer ideal in the group algebra. Errors (rather than panicking)
/// past the degree cap.
pub fn ext1_oracle_ub_symmetrizer(q: &ExtQuery) -> Result<u64, MethodUnavailable> {
    let n = q.lambda.size();
    let m = q.mu.size();
    assert_eq!(m, n + 2, "symmetrizer oracle requires |mu| = |lambda| + 2");
    if m > SYMMETRIZER_DEGREE_CAP {
        return Err(MethodUnavailable::DegreeCapExceeded { degree: m });
    }
    let span = right_ideal_with_embedded_symmetrizer(&q.lambda, m);
    Ok(symmetrizer_multiplicity(&q.mu, &span) as u64)
}

/// Kernel dimension of the Casimir constraint system when both partitions
/// are one-row (symmetric powers) or both one-column (exterior powers) and
/// |mu| = |lambda| + 2; that is the solver's domain.
fn solver_value(q: &ExtQuery) -> Result<u64, MethodUnavailable> {
    use crate::polyfun::{casimir_kernel_dim, Family, FunctorKind};
    if q.mu.size() != q.lambda.size() + 2 {
        return Err(MethodUnavailable::SizeRelation);
    }
    let family = if q.lambda.is_one_row() && q.mu.is_one_row() {
        Family::Symmetric
    } else if q.lambda.is_one_column() && q.mu.is_one_column() {
        Family::Exterior
    } else {
        return Err(MethodUnavailable::SizeRelation);
    };
    Ok(casimir_kernel_dim(
        FunctorKind::new(family, q.lambda.size()),
        FunctorKind::new(family, q.mu.size()),
    ) as u64)
}

/// Evaluate one query with the given methods. The closed value is always
/// computed; inapplicable oracles are reported as unavailable.
pub fn evaluate_query(q: &ExtQuery, methods: &[Method]) -> ExtReport {
    let start = Instant::now();
    let n = q.lambda.size();
    let m = q.mu.size();
    let closed = ext1_closed(q);
    let mut oracles = BTreeMap::new();
    for &method in methods {
        let value = match method {
            Method::Closed => continue,
            Method::CatLie => {
                if m + 1 == n && n <= CATLIE_SIZE_CAP {
                    OracleValue::Available(ext1_oracle_catlie(q))
                } else {
                    OracleValue::Unavailable
                }
            }
            Method::UbChar => {
                if m == n + 2 && m <= UB_CHAR_SIZE_CAP {
                    OracleValue::Available(ext1_oracle_ub_character(q))
                } else {
                    OracleValue::Unavailable
                }
            }
            Method::UbSymmetrizer => {
                if m == n + 2 {
                    match ext1_oracle_ub_symmetrizer(q) {
                        Ok(v) => OracleValue::Available(v),
                        Err(_) => OracleValue::Unavailable,
                    }
                } else {
                    OracleValue::Unavailable
                }
            }
            Method::Solver => match solver_value(q) {
                Ok(v) => OracleValue::Available(v),
                Err(_) => OracleValue::Unavailable,
            },
        };
        oracles.insert(method, value);
    }
    let agree = oracles.values().all(|v| match v {
        OracleValue::Available(x) => *x == closed,
        OracleValue::Unavailable => true,
    });
    ExtReport {
        query: q.clone(),
        closed,
        oracles,
        agree,
        timing: start.elapsed(),
    }
}

fn all_queries(max_size: usize) -> Vec<ExtQuery> {
    let parts = partitions_up_to(max_size);
    let mut queries = Vec::with_capacity(parts.len() * parts.len());
    for lambda in &parts {
        for mu in &parts {
            queries.push(ExtQuery::new(lambda.clone(), mu.clone()));
        }
    }
    queries.sort();
    queries
}

/// Evaluate every pair (lambda, mu) with |lambda|, |mu| <= max_size against
/// the standard methods, in a deterministic order. Runs in parallel when the
/// `parallel` feature is enabled; the output is identical either way.
pub fn verify_range(max_size: usize) -> Vec<ExtReport> {
    parallel::map_collect(&all_queries(max_size), |q| {
        evaluate_query(q, &Method::STANDARD)
    })
}

/// Sequential twin of [`verify_range`] for benchmarking.
pub fn verify_range_seq(max_size: usize) -> Vec<ExtReport> {
    parallel::map_collect_seq(&all_queries(max_size), |q| {
        evaluate_query(q, &Method::STANDARD)
    })
}
