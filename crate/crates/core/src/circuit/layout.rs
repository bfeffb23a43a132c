use serde::Serialize;

use crate::cnf::ClauseSet;

use super::Qubit;

/// Placement of every clause's work region on the register.
///
/// Clause `k` (1-based) owns lines starting at `s[k-1]`. A clause of size
/// `c` uses `c + δ - 1` lines for its OR chain (a unit clause needs one copy
/// line, hence the Kronecker `δ = [c == 1]`) and, from the second clause on,
/// one more line holding the running conjunction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegisterLayout {
    pub n: usize,
    pub m: usize,
    pub clause_sizes: Vec<usize>,
    /// Per-clause Kronecker delta, 1 for unit clauses.
    pub deltas: Vec<usize>,
    /// `s_1..s_m`.
    pub s: Vec<Qubit>,
    pub s_f: usize,
    /// Dust-qubit count.
    pub mu: usize,
    /// Total register width `n + mu + 1`.
    pub width: usize,
    /// Line holding the truth value of each clause.
    pub clause_out: Vec<Qubit>,
}

impl RegisterLayout {
    /// Target line of the `k`-th conjunction gate, `k` in `1..m` (1-based).
    ///
    /// The last one is the result line `N`. For `m = 1` there is a single
    /// copy onto `N` instead, reported as `k = 1`.
    pub fn and_target(&self, k: usize) -> Qubit {
        assert!(k >= 1 && k < self.m.max(2));
        if k + 1 >= self.m {
            self.width
        } else {
            self.s[k + 1] - 1
        }
    }

    /// The result line `N`.
    pub fn result_qubit(&self) -> Qubit {
        self.width
    }
}

pub fn compute_layout(cs: &ClauseSet) -> RegisterLayout {
    let n = cs.num_vars();
    let clause_sizes = cs.clause_sizes();
    let m = clause_sizes.len();
    let deltas: Vec<usize> = clause_sizes.iter().map(|&c| usize::from(c == 1)).collect();
    let span = |k: usize| clause_sizes[k] + deltas[k];

    let mut s = Vec::with_capacity(m);
    s.push(n + 1);
    if m >= 2 {
        s.push(s[0] + span(0) - 1);
    }
    for i in 2..m {
        s.push(s[i - 1] + span(i - 1));
    }
    let s_last = s[m - 1];
    let s_f = s_last - 1 + span(m - 1);

    // For m = 1 the first clause's "span - 1" already counts the result line,
    // so s_f - 1 - n is also the right dust count there.
    let mu = s_f - 1 - n;
    let width = n + mu + 1;

    let clause_out = (0..m)
        .map(|k| {
            if k == 0 {
                s[0] + span(0) - 2
            } else if k + 1 < m {
                s[k + 1] - 2
            } else {
                s[k] + span(k) - 2
            }
        })
        .collect();

    RegisterLayout {
        n,
        m,
        clause_sizes,
        deltas,
        s,
        s_f,
        mu,
        width,
        clause_out,
    }
}
