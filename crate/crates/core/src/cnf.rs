//! Clause sets, DIMACS ingestion and classical truth semantics.
//!
//! Everything here is pure. The exhaustive oracle [`enumerate_satisfying`] is
//! the ground truth the compiled circuits are checked against.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

/// Largest variable count the exhaustive sweep accepts.
pub const MAX_ENUMERATION_VARS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: clause data before `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: invalid literal `{token}`")]
    InvalidLiteral { line: usize, token: String },
    #[error("variable {var} out of range 1..={n}")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("empty clause")]
    EmptyClause,
    #[error("clause set has no clauses")]
    NoClauses,
    #[error("variable {var} appears more than once in a clause")]
    DuplicateVariable { var: usize },
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("last clause is not terminated by 0")]
    UnterminatedClause,
    #[error("{n} variables exceeds the exhaustive sweep limit of {limit}")]
    TooManyVariables { n: usize, limit: usize },
}

/// A variable `x_i` or its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    /// `var` is 1-based. Panics on 0.
    pub fn new(var: usize, negated: bool) -> Self {
        assert!(var >= 1, "variable indices are 1-based");
        Literal { var, negated }
    }

    pub fn pos(var: usize) -> Self {
        Literal::new(var, false)
    }

    pub fn neg(var: usize) -> Self {
        Literal::new(var, true)
    }

    /// Signed DIMACS form, e.g. `-3` for the negation of `x_3`.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        if value == 0 {
            return None;
        }
        let var = usize::try_from(value.unsigned_abs()).ok()?;
        Some(Literal::new(var, value < 0))
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn eval(self, value: bool) -> bool {
        value != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

/// A disjunction of literals over pairwise distinct variables.
///
/// Literal order is kept as given; the compiled circuit depends on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Result<Self, CnfError> {
        if literals.is_empty() {
            return Err(CnfError::EmptyClause);
        }
        for (i, lit) in literals.iter().enumerate() {
            if literals[..i].iter().any(|l| l.var == lit.var) {
                return Err(CnfError::DuplicateVariable { var: lit.var });
            }
        }
        Ok(Clause { literals })
    }

    /// Builds a clause from signed DIMACS integers.
    pub fn from_dimacs(values: &[i64]) -> Result<Self, CnfError> {
        let literals = values
            .iter()
            .map(|&v| {
                Literal::from_dimacs(v).ok_or_else(|| CnfError::InvalidLiteral {
                    line: 0,
                    token: v.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Clause::new(literals)
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    /// Always false; clauses are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn negated_count(&self) -> usize {
        self.literals.iter().filter(|l| l.negated).count()
    }

    fn max_var(&self) -> usize {
        self.literals.iter().map(|l| l.var).max().unwrap_or(0)
    }

    /// Truth value of the clause: OR over its literals.
    pub fn eval(&self, assignment: &Assignment) -> bool {
        self.literals
            .iter()
            .any(|l| l.eval(assignment.value(l.var)))
    }
}

/// An ordered conjunction of `m >= 1` clauses over `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClauseSet {
    n: usize,
    clauses: Vec<Clause>,
}

impl ClauseSet {
    pub fn new(n: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        if clauses.is_empty() {
            return Err(CnfError::NoClauses);
        }
        for clause in &clauses {
            let var = clause.max_var();
            if var > n {
                return Err(CnfError::VariableOutOfRange { var, n });
            }
        }
        Ok(ClauseSet { n, clauses })
    }

    /// Convenience constructor from DIMACS-style signed literals.
    pub fn from_dimacs_clauses(n: usize, clauses: &[&[i64]]) -> Result<Self, CnfError> {
        let clauses = clauses
            .iter()
            .map(|c| Clause::from_dimacs(c))
            .collect::<Result<Vec<_>, _>>()?;
        ClauseSet::new(n, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn clause_sizes(&self) -> Vec<usize> {
        self.clauses.iter().map(Clause::len).collect()
    }

    /// Truth value of the set: AND over clauses, in order.
    pub fn eval(&self, assignment: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.eval(assignment))
    }

    /// Evaluates the set on a packed assignment where bit `i - 1` holds `x_i`.
    pub fn eval_packed(&self, bits: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.literals
                .iter()
                .any(|l| l.eval(bits >> (l.var - 1) & 1 == 1))
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for clause in &self.clauses {
            for lit in &clause.literals {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

impl FromStr for ClauseSet {
    type Err = CnfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_dimacs(s)
    }
}

/// A full assignment `(ε_1, …, ε_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    pub fn zeros(n: usize) -> Self {
        Assignment {
            bits: vec![false; n],
        }
    }

    /// The `index`-th assignment in lexicographic order, so `ε_1` is the most
    /// significant bit of `index`.
    pub fn from_lex_index(index: u64, n: usize) -> Self {
        let bits = (1..=n).map(|i| index >> (n - i) & 1 == 1).collect();
        Assignment { bits }
    }

    /// Packs into a word with bit `i - 1` holding `x_i` (basis-state order).
    pub fn to_packed(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (u64::from(b) << i))
    }

    pub fn from_packed(bits: u64, n: usize) -> Self {
        Assignment {
            bits: (0..n).map(|i| bits >> i & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Value of the 1-based variable `var`.
    pub fn value(&self, var: usize) -> bool {
        self.bits[var - 1]
    }
}

impl From<&[u8]> for Assignment {
    fn from(bits: &[u8]) -> Self {
        Assignment::new(bits.iter().map(|&b| b != 0).collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.bits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if *b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// Parses DIMACS CNF text.
///
/// Comment lines start with `c`; a single `p cnf <n> <m>` header precedes the
/// clauses; each clause is a run of signed integers terminated by `0` and may
/// span lines. A `%` line (SATLIB trailer) ends the clause section.
pub fn parse_dimacs(text: &str) -> Result<ClauseSet, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(CnfError::MalformedHeader {
                    line: line_no,
                    reason: "duplicate header".into(),
                });
            }
            header = Some(parse_header(line, line_no)?);
            continue;
        }
        let (n, _) = header.ok_or(CnfError::MissingHeader { line: line_no })?;
        for token in line.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| CnfError::InvalidLiteral {
                line: line_no,
                token: token.to_string(),
            })?;
            if value == 0 {
                clauses.push(Clause::new(std::mem::take(&mut current))?);
                continue;
            }
            let lit = Literal::from_dimacs(value).ok_or_else(|| CnfError::InvalidLiteral {
                line: line_no,
                token: token.to_string(),
            })?;
            if lit.var > n {
                return Err(CnfError::VariableOutOfRange { var: lit.var, n });
            }
            current.push(lit);
        }
    }

    let (n, declared) = header.ok_or(CnfError::MalformedHeader {
        line: 0,
        reason: "missing `p cnf` header".into(),
    })?;
    if !current.is_empty() {
        return Err(CnfError::UnterminatedClause);
    }
    if clauses.len() != declared {
        return Err(CnfError::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    ClauseSet::new(n, clauses)
}

fn parse_header(line: &str, line_no: usize) -> Result<(usize, usize), CnfError> {
    let bad = |reason: &str| CnfError::MalformedHeader {
        line: line_no,
        reason: reason.to_string(),
    };
    let fields: Vec<&str> = line.split_whitespace().collect();
    match fields.as_slice() {
        ["p", "cnf", n, m] => {
            let n = n.parse().map_err(|_| bad("variable count is not an integer"))?;
            let m = m.parse().map_err(|_| bad("clause count is not an integer"))?;
            Ok((n, m))
        }
        _ => Err(bad("expected `p cnf <vars> <clauses>`")),
    }
}

pub fn eval_clause(assignment: &Assignment, clause: &Clause) -> bool {
    clause.eval(assignment)
}

pub fn eval_clause_set(assignment: &Assignment, cs: &ClauseSet) -> bool {
    cs.eval(assignment)
}

/// Result of the exhaustive sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatisfyingSet {
    pub count: u64,
    /// Lexicographic order.
    pub witnesses: Vec<Assignment>,
}

impl SatisfyingSet {
    pub fn is_sat(&self) -> bool {
        self.count > 0
    }
}

fn check_sweep_limit(cs: &ClauseSet) -> Result<(), CnfError> {
    if cs.n > MAX_ENUMERATION_VARS {
        return Err(CnfError::TooManyVariables {
            n: cs.n,
            limit: MAX_ENUMERATION_VARS,
        });
    }
    Ok(())
}

/// Counts satisfying assignments without materializing them.
pub fn count_satisfying(cs: &ClauseSet) -> Result<u64, CnfError> {
    check_sweep_limit(cs)?;
    let total = 1u64 << cs.n;
    Ok((0..total)
        .into_par_iter()
        .filter(|&bits| cs.eval_packed(bits))
        .count() as u64)
}

/// Exhaustively lists every satisfying assignment.
pub fn enumerate_satisfying(cs: &ClauseSet) -> Result<SatisfyingSet, CnfError> {
    check_sweep_limit(cs)?;
    let n = cs.n;
    let total = 1u64 << n;
    let witnesses: Vec<Assignment> = (0..total)
        .into_par_iter()
        .filter_map(|lex| {
            let a = Assignment::from_lex_index(lex, n);
            cs.eval(&a).then_some(a)
        })
        .collect();
    Ok(SatisfyingSet {
        count: witnesses.len() as u64,
        witnesses,
    })
}
