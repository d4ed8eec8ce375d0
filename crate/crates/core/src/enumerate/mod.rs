//! Enumerators for unique response and minimal (perfect) Roman dominating
//! functions, with elementary-step accounting for delay measurements.
//!
//! An elementary step is one search-tree node expansion or one reduction
//! rule application.

mod minimal;
mod split;
mod urrdf;

pub use minimal::{
    enumerate_minimal_prdf, enumerate_minimal_rdf, rdf_from_v2, MinimalPrdfEnumerator,
    MinimalRdfEnumerator,
};
pub use split::{enumerate_urrdf_split, SplitUrrdfEnumerator};
pub use urrdf::{enumerate_urrdf, measure, Measure, PartialState, Slot, UrrdfEnumerator};

use serde::Serialize;

use crate::roman::RomanFunction;

/// A solution stream that counts its own elementary steps.
pub trait Enumerator: Iterator<Item = RomanFunction> {
    fn steps(&self) -> u64;

    /// Stop (returning `None`) once more than `budget` steps were spent.
    fn set_step_budget(&mut self, budget: Option<u64>);

    fn budget_exhausted(&self) -> bool;
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct StepCounter {
    steps: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl StepCounter {
    /// Records one step; false once the budget is exceeded.
    pub(crate) fn tick(&mut self) -> bool {
        self.steps += 1;
        if let Some(b) = self.budget {
            if self.steps > b {
                self.exhausted = true;
            }
        }
        !self.exhausted
    }

    pub(crate) fn steps(&self) -> u64 {
        self.steps
    }

    pub(crate) fn set_budget(&mut self, budget: Option<u64>) {
        self.budget = budget;
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }
}

/// Step counts between consecutive emissions. `gaps[0]` is start to first
/// solution, `gaps[k]` runs from solution `k` to `k + 1`, and the last gap
/// runs from the final solution to termination, so
/// `gaps.len() == solutions + 1` for a complete run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DelayTrace {
    pub gaps: Vec<u64>,
    pub total_steps: u64,
    pub complete: bool,
}

impl DelayTrace {
    pub fn max_gap(&self) -> u64 {
        self.gaps.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub solutions: Vec<RomanFunction>,
    pub trace: DelayTrace,
}

/// Drains an enumerator, recording the step gap before every emission and
/// the tail gap after the last one.
pub fn collect_traced<E: Enumerator>(mut e: E) -> Enumeration {
    let mut solutions = Vec::new();
    let mut gaps = Vec::new();
    let mut last = 0;
    while let Some(f) = e.next() {
        gaps.push(e.steps() - last);
        last = e.steps();
        solutions.push(f);
    }
    gaps.push(e.steps() - last);
    Enumeration {
        solutions,
        trace: DelayTrace {
            gaps,
            total_steps: e.steps(),
            complete: !e.budget_exhausted(),
        },
    }
}
