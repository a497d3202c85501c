//! Three-valued labelling search with propagation.
//!
//! Every argument carries a domain over `{IN, OUT, UNDEC}`. In complete mode
//! the labelling rules are the usual ones (IN iff all attackers OUT, OUT iff
//! some attacker IN, UNDEC otherwise). In conflict-free mode IN only requires
//! that no neighbour is IN, and OUT/UNDEC mark whether an argument lies in
//! the range of the IN set.

use std::cell::Cell;

use crate::framework::ArgumentationFramework;

use super::EngineError;

pub(crate) const IN: u8 = 1;
pub(crate) const OUT: u8 = 2;
pub(crate) const UND: u8 = 4;
const ANY: u8 = IN | OUT | UND;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Complete,
    ConflictFree,
}

#[derive(Debug, Clone)]
pub(crate) enum Clause {
    /// At least one listed argument is IN.
    SomeIn(Vec<usize>),
    /// At least one listed argument is IN or OUT.
    SomeDecided(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

/// Node-expansion counter shared by all searches of one engine call.
#[derive(Debug)]
pub(crate) struct Budget {
    used: Cell<u64>,
    limit: Option<u64>,
}

impl Budget {
    pub(crate) fn new(limit: Option<u64>) -> Self {
        Budget {
            used: Cell::new(0),
            limit,
        }
    }

    fn tick(&self) -> Result<(), EngineError> {
        let used = self.used.get() + 1;
        self.used.set(used);
        match self.limit {
            Some(limit) if used > limit => Err(EngineError::BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }
}

pub(crate) struct Search<'a> {
    af: &'a ArgumentationFramework,
    mode: Mode,
    dom: Vec<u8>,
    trail: Vec<(usize, u8)>,
    queue: Vec<usize>,
    queued: Vec<bool>,
    clauses: Vec<Clause>,
    budget: &'a Budget,
    /// Set when a restriction emptied a domain.
    failed: bool,
}

impl<'a> Search<'a> {
    pub(crate) fn new(af: &'a ArgumentationFramework, mode: Mode, budget: &'a Budget) -> Self {
        let n = af.len();
        let mut search = Search {
            af,
            mode,
            dom: vec![ANY; n],
            trail: Vec::new(),
            queue: Vec::with_capacity(n),
            queued: vec![false; n],
            clauses: Vec::new(),
            budget,
            failed: false,
        };
        for a in 0..n {
            if af.is_self_attacking(a) {
                search.dom[a] &= !IN;
            }
            search.enqueue(a);
        }
        search
    }

    /// Fixes the grounded labelling, which every complete labelling extends.
    pub(crate) fn seed_grounded(&mut self, grounded: &[bool]) {
        debug_assert_eq!(self.mode, Mode::Complete);
        for (a, &g) in grounded.iter().enumerate().take(self.af.len()) {
            if g {
                self.restrict(a, IN);
                for &b in self.af.targets(a) {
                    self.restrict(b, OUT);
                }
            }
        }
    }

    pub(crate) fn restrict(&mut self, a: usize, allowed: u8) {
        let old = self.dom[a];
        let new = old & allowed;
        if new == old {
            return;
        }
        self.trail.push((a, old));
        self.dom[a] = new;
        if new == 0 {
            self.failed = true;
        }
        self.enqueue(a);
        for i in 0..self.af.targets(a).len() {
            let t = self.af.targets(a)[i];
            self.enqueue(t);
        }
        if self.mode == Mode::ConflictFree {
            for i in 0..self.af.attackers(a).len() {
                let b = self.af.attackers(a)[i];
                self.enqueue(b);
            }
        }
    }

    pub(crate) fn add_clause(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    fn enqueue(&mut self, a: usize) {
        if !self.queued[a] {
            self.queued[a] = true;
            self.queue.push(a);
        }
    }

    fn clear_queue(&mut self) {
        for a in self.queue.drain(..) {
            self.queued[a] = false;
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (a, old) = self.trail.pop().unwrap();
            self.dom[a] = old;
        }
        self.failed = false;
        self.clear_queue();
    }

    fn propagate(&mut self) -> bool {
        loop {
            while let Some(a) = self.queue.pop() {
                self.queued[a] = false;
                if self.failed {
                    break;
                }
                match self.mode {
                    Mode::Complete => self.revise_complete(a),
                    Mode::ConflictFree => self.revise_conflict_free(a),
                }
            }
            if self.failed {
                self.clear_queue();
                return false;
            }
            if !self.check_clauses() {
                self.clear_queue();
                return false;
            }
            if self.queue.is_empty() {
                return true;
            }
        }
    }

    fn revise_complete(&mut self, a: usize) {
        let af = self.af;
        let attackers = af.attackers(a);
        let mut all_can_out = true;
        let mut all_can_not_in = true;
        let mut some_can_in = false;
        let mut some_can_und = false;
        for &b in attackers {
            let d = self.dom[b];
            all_can_out &= d & OUT != 0;
            all_can_not_in &= d & (OUT | UND) != 0;
            some_can_in |= d & IN != 0;
            some_can_und |= d & UND != 0;
        }
        let mut allowed = 0;
        if all_can_out {
            allowed |= IN;
        }
        if some_can_in {
            allowed |= OUT;
        }
        if all_can_not_in && some_can_und {
            allowed |= UND;
        }
        self.restrict(a, allowed);
        if self.failed {
            return;
        }
        let d = self.dom[a];
        if d & OUT == 0 {
            // IN or UNDEC: no attacker may be IN.
            for &b in attackers {
                self.restrict(b, OUT | UND);
            }
        }
        if d == IN {
            for &b in attackers {
                self.restrict(b, OUT);
            }
        }
        if d == OUT {
            self.require_one(attackers, IN);
        }
        if d == UND {
            self.require_one(attackers, UND);
        }
        if d & IN == 0 {
            // OUT or UNDEC: some attacker is not OUT.
            self.require_one(attackers, IN | UND);
        }
    }

    fn revise_conflict_free(&mut self, a: usize) {
        let af = self.af;
        let attackers = af.attackers(a);
        let mut all_not_in = true;
        let mut some_can_in = false;
        for &b in attackers {
            let d = self.dom[b];
            all_not_in &= d & (OUT | UND) != 0;
            some_can_in |= d & IN != 0;
        }
        let targets_not_in = af.targets(a).iter().all(|&t| self.dom[t] & (OUT | UND) != 0);
        let mut allowed = 0;
        if all_not_in && targets_not_in && !af.is_self_attacking(a) {
            allowed |= IN;
        }
        if some_can_in {
            allowed |= OUT;
        }
        if all_not_in {
            allowed |= UND;
        }
        self.restrict(a, allowed);
        if self.failed {
            return;
        }
        let d = self.dom[a];
        if d & OUT == 0 {
            for &b in attackers {
                self.restrict(b, OUT | UND);
            }
        }
        if d == IN {
            for i in 0..af.targets(a).len() {
                let t = af.targets(a)[i];
                self.restrict(t, OUT | UND);
            }
        }
        if d == OUT {
            self.require_one(attackers, IN);
        }
    }

    /// At least one of `args` must keep a value in `values`.
    fn require_one(&mut self, args: &[usize], values: u8) {
        let mut candidate = None;
        for &b in args {
            if self.dom[b] & values != 0 {
                if candidate.is_some() {
                    return;
                }
                candidate = Some(b);
            }
        }
        match candidate {
            Some(b) => self.restrict(b, values),
            None => self.failed = true,
        }
    }

    fn check_clauses(&mut self) -> bool {
        for i in 0..self.clauses.len() {
            let (args, values) = match &self.clauses[i] {
                Clause::SomeIn(args) => (args, IN),
                Clause::SomeDecided(args) => (args, IN | OUT),
            };
            let mut candidates = 0usize;
            let mut last = usize::MAX;
            let mut satisfied = false;
            for &a in args {
                let d = self.dom[a];
                if d & values != 0 {
                    if d & !values == 0 {
                        satisfied = true;
                        break;
                    }
                    candidates += 1;
                    last = a;
                }
            }
            if satisfied {
                continue;
            }
            match candidates {
                0 => return false,
                1 => {
                    self.restrict(last, values);
                    if self.failed {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    /// Depth-first enumeration of all total labellings consistent with the
    /// current domains and clauses. Values are tried in IN, OUT, UNDEC order.
    pub(crate) fn for_each(&mut self, visit: &mut dyn FnMut(&[u8]) -> Flow) -> Result<Flow, EngineError> {
        if self.failed {
            return Ok(Flow::Continue);
        }
        self.descend(visit)
    }

    fn descend(&mut self, visit: &mut dyn FnMut(&[u8]) -> Flow) -> Result<Flow, EngineError> {
        self.budget.tick()?;
        if !self.propagate() {
            return Ok(Flow::Continue);
        }
        let Some(var) = self.dom.iter().position(|d| d.count_ones() > 1) else {
            debug_assert!(self.is_consistent_leaf());
            return Ok(visit(&self.dom));
        };
        for value in [IN, OUT, UND] {
            if self.dom[var] & value == 0 {
                continue;
            }
            let mark = self.trail.len();
            self.restrict(var, value);
            let flow = self.descend(visit)?;
            self.undo_to(mark);
            if flow == Flow::Stop {
                return Ok(Flow::Stop);
            }
        }
        Ok(Flow::Continue)
    }

    /// First solution, if any.
    pub(crate) fn first(&mut self) -> Result<Option<Vec<u8>>, EngineError> {
        let mut found = None;
        self.for_each(&mut |lab| {
            found = Some(lab.to_vec());
            Flow::Stop
        })?;
        Ok(found)
    }

    fn is_consistent_leaf(&self) -> bool {
        let af = self.af;
        (0..af.len()).all(|a| {
            let att = af.attackers(a);
            let some_in = att.iter().any(|&b| self.dom[b] == IN);
            match self.mode {
                Mode::Complete => {
                    let all_out = att.iter().all(|&b| self.dom[b] == OUT);
                    match self.dom[a] {
                        IN => all_out,
                        OUT => some_in,
                        UND => !all_out && !some_in,
                        _ => false,
                    }
                }
                Mode::ConflictFree => match self.dom[a] {
                    IN => !some_in && af.targets(a).iter().all(|&t| self.dom[t] != IN),
                    OUT => some_in,
                    UND => !some_in,
                    _ => false,
                },
            }
        })
    }
}

pub(crate) fn in_set(labelling: &[u8]) -> Vec<bool> {
    labelling.iter().map(|&d| d == IN).collect()
}

pub(crate) fn undec_set(labelling: &[u8]) -> Vec<usize> {
    labelling
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == UND)
        .map(|(i, _)| i)
        .collect()
}
