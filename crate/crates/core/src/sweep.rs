//! Grid sweeps over `(s, m, r, k)`.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::conjectures::{
    check_conjecture3, check_recover_big_u, check_recover_u, check_s2_closed_form, DEFAULT_BUDGET,
};
use crate::hankel::{
    check_condensation, check_polynomiality, check_proof_ratios, check_theorem1, determinant_degree,
};
use crate::narayana::{check_narayana_row, check_theorem2, DEFAULT_MARGIN};
use crate::report::{CheckId, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub s: RangeInclusive<u64>,
    pub m: RangeInclusive<u64>,
    pub r: RangeInclusive<u64>,
    pub k: RangeInclusive<u64>,
    pub checks: Vec<CheckId>,
    pub margin: usize,
    /// Cap on the determinant degree `r(ms-r+1)` for the conjecture and
    /// polynomiality checks.
    pub budget: u64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            s: 1..=1,
            m: 0..=8,
            r: 1..=3,
            k: 0..=12,
            checks: CheckId::ALL.to_vec(),
            margin: DEFAULT_MARGIN,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// One unit of work; ordering of the task list is the output ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Task {
    pub check: CheckId,
    pub s: u64,
    pub r: u64,
    pub m: u64,
    pub k: u64,
}

impl GridSpec {
    fn within_budget(&self, s: u64, m: u64, r: u64) -> bool {
        determinant_degree(s, m, r).is_some_and(|d| d <= self.budget)
    }

    /// All tasks in canonical order: check, then s, r, m, k ascending.
    pub fn tasks(&self) -> Vec<Task> {
        let mut checks = self.checks.clone();
        checks.sort();
        checks.dedup();
        let mut out = Vec::new();
        for check in checks {
            for s in self.s.clone() {
                for r in self.r.clone() {
                    for m in self.m.clone() {
                        if !self.point_applies(check, s, m, r) {
                            continue;
                        }
                        if uses_k(check) {
                            out.extend(self.k.clone().map(|k| Task { check, s, r, m, k }));
                        } else {
                            out.push(Task {
                                check,
                                s,
                                r,
                                m,
                                k: 0,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    fn point_applies(&self, check: CheckId, s: u64, m: u64, r: u64) -> bool {
        let m_ok = r >= 1 && m + 1 >= r;
        match check {
            CheckId::Theorem1 | CheckId::Theorem2 => s == 1 && m_ok,
            CheckId::ProofRatios => s == 1 && r >= 2 && m_ok,
            CheckId::Condensation => s >= 1 && r >= 2 && m_ok,
            CheckId::Narayana => s == 1 && r >= 1 && m >= 1,
            CheckId::Polynomiality => s >= 1 && r >= 1 && self.within_budget(s, m, r),
            CheckId::Conjecture3 => {
                s >= 1 && m_ok && (s > 1 || m >= r) && self.within_budget(s, m, r)
            }
            CheckId::Conjecture4U => s >= 1 && s <= r && m_ok && self.within_budget(s, m, r),
            CheckId::Conjecture4BigU => {
                s >= 1 && s <= r && m + 1 >= s && self.within_budget(r, m, s)
            }
            CheckId::S2ClosedForm => s == 2 && r >= 2 && m >= r,
        }
    }
}

fn uses_k(check: CheckId) -> bool {
    matches!(
        check,
        CheckId::Theorem1 | CheckId::ProofRatios | CheckId::Condensation | CheckId::S2ClosedForm
    )
}

pub fn run_task(t: Task, margin: usize) -> VerificationReport {
    let Task { check, s, r, m, k } = t;
    match check {
        CheckId::Theorem1 => check_theorem1(k, m, r as usize),
        CheckId::Condensation => check_condensation(k, m, r as usize, s),
        CheckId::ProofRatios => check_proof_ratios(k as i64, m as i64, r as i64),
        CheckId::Theorem2 => check_theorem2(m, r, margin),
        CheckId::Narayana => check_narayana_row(r, m, margin),
        CheckId::Polynomiality => check_polynomiality(s, m, r as usize, 5),
        CheckId::Conjecture3 => check_conjecture3(s, m, r, margin),
        CheckId::Conjecture4U => check_recover_u(s, m, r),
        CheckId::Conjecture4BigU => check_recover_big_u(s, m, r),
        CheckId::S2ClosedForm => check_s2_closed_form(r, m, k),
    }
}

/// Run every enabled check over the grid. Work is spread over the current
/// rayon pool; the output order is the task order regardless.
pub fn sweep(grid: &GridSpec) -> Vec<VerificationReport> {
    grid.tasks()
        .into_par_iter()
        .map(|t| run_task(t, grid.margin))
        .collect()
}
