use duality_theorems::{
    check_corollary_ct, check_fdp_corollaries, check_formal_hypotheses, check_key_lemma, check_key_steps, check_p2,
    check_rank_formula, check_self_test, check_structural, check_theorem, CheckId, CheckResult, Subject,
};
use power_algebras::Flavor;
use tensor_category::Model;

use crate::config::Config;

/// Number of seeded structural cases per model.
pub const STRUCTURAL_CASES: usize = 20;

/// `V` of the given dimensions and one flavor of powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubjectKey {
    pub even: usize,
    pub odd: usize,
    pub flavor: Flavor,
}

/// One unit of work. Subject tasks refer to an index into the subject list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Rank { subject: usize, k: usize },
    KeyLemma { subject: usize, i: usize, g: usize },
    KeySteps { subject: usize, m: usize, k: usize },
    Theorem { subject: usize, g: usize, i: usize, part: u8 },
    CorollaryCt { subject: usize, g: usize },
    P2 { subject: usize, g: usize, i: usize },
    FormalHypotheses { subject: usize, g: usize, i: usize },
    FdpCorollaries { subject: usize, g: usize, i: usize },
    Structural { model: Model, case: usize },
    SelfTest,
}

impl Task {
    pub fn subject(&self) -> Option<usize> {
        match *self {
            Task::Rank { subject, .. }
            | Task::KeyLemma { subject, .. }
            | Task::KeySteps { subject, .. }
            | Task::Theorem { subject, .. }
            | Task::CorollaryCt { subject, .. }
            | Task::P2 { subject, .. }
            | Task::FormalHypotheses { subject, .. }
            | Task::FdpCorollaries { subject, .. } => Some(subject),
            Task::Structural { .. } | Task::SelfTest => None,
        }
    }

    pub fn id(&self) -> CheckId {
        match self {
            Task::Rank { .. } => CheckId::RankFormula,
            Task::KeyLemma { .. } => CheckId::KeyLemma,
            Task::KeySteps { .. } => CheckId::KeySteps,
            Task::Theorem { .. } => CheckId::Theorem,
            Task::CorollaryCt { .. } => CheckId::CorollaryCt,
            Task::P2 { .. } => CheckId::P2,
            Task::FormalHypotheses { .. } => CheckId::FormalHypotheses,
            Task::FdpCorollaries { .. } => CheckId::FdpCorollaries,
            Task::Structural { .. } => CheckId::Structural,
            Task::SelfTest => CheckId::SelfTest,
        }
    }

    /// Runs a task that needs no subject.
    pub fn run_free(&self, seed: u64) -> Option<CheckResult> {
        match *self {
            Task::Structural { model, case } => Some(check_structural(model, seed, case)),
            Task::SelfTest => Some(check_self_test()),
            _ => None,
        }
    }

    /// Runs a task on its subject.
    pub fn run_on(&self, s: &Subject) -> Option<CheckResult> {
        Some(match *self {
            Task::Rank { k, .. } => check_rank_formula(s, k),
            Task::KeyLemma { i, g, .. } => check_key_lemma(s, i, g),
            Task::KeySteps { m, k, .. } => check_key_steps(s, m, k),
            Task::Theorem { g, i, part, .. } => check_theorem(s, g, i, part),
            Task::CorollaryCt { g, .. } => check_corollary_ct(s, g),
            Task::P2 { g, i, .. } => check_p2(s, g, i),
            Task::FormalHypotheses { g, i, .. } => check_formal_hypotheses(s, g, i),
            Task::FdpCorollaries { g, i, .. } => check_fdp_corollaries(s, g, i),
            Task::Structural { .. } | Task::SelfTest => return None,
        })
    }
}

/// The subjects and tasks of a run, in report order.
#[derive(Debug, Clone)]
pub struct Plan {
    pub subjects: Vec<SubjectKey>,
    pub tasks: Vec<Task>,
}

impl Plan {
    pub fn new(config: &Config) -> Plan {
        let needs_subject = config
            .suites
            .iter()
            .any(|c| !matches!(c, CheckId::Structural | CheckId::SelfTest));
        let mut subjects = Vec::new();
        if needs_subject {
            for even in config.even.clone() {
                for odd in config.odd.clone() {
                    if even + odd == 0 {
                        continue;
                    }
                    for &flavor in &config.flavors {
                        subjects.push(SubjectKey { even, odd, flavor });
                    }
                }
            }
        }
        let g_max = config.g_max;
        let mut tasks = Vec::new();
        for &suite in &config.suites {
            for subject in 0..subjects.len() {
                match suite {
                    CheckId::RankFormula => tasks.extend((0..=g_max).map(|k| Task::Rank { subject, k })),
                    CheckId::KeyLemma => {
                        for g in 1..=g_max {
                            tasks.extend((0..=g).map(|i| Task::KeyLemma { subject, i, g }));
                        }
                    }
                    CheckId::KeySteps => {
                        for m in 1..=g_max {
                            tasks.extend((0..=m).map(|k| Task::KeySteps { subject, m, k }));
                        }
                    }
                    CheckId::Theorem => {
                        for g in 1..=g_max {
                            for i in 0..=g {
                                tasks.extend((1..=4).map(|part| Task::Theorem { subject, g, i, part }));
                            }
                        }
                    }
                    CheckId::CorollaryCt => tasks.extend((1..=g_max).map(|g| Task::CorollaryCt { subject, g })),
                    CheckId::P2 => {
                        for g in 2..=g_max {
                            tasks.extend((1..g).map(|i| Task::P2 { subject, g, i }));
                        }
                    }
                    CheckId::FormalHypotheses => {
                        for g in 1..=g_max {
                            tasks.extend((0..=g).map(|i| Task::FormalHypotheses { subject, g, i }));
                        }
                    }
                    CheckId::FdpCorollaries => {
                        for g in 1..=g_max {
                            tasks.extend((0..=g).map(|i| Task::FdpCorollaries { subject, g, i }));
                        }
                    }
                    CheckId::Structural | CheckId::SelfTest => {}
                }
            }
            match suite {
                CheckId::Structural => tasks.extend((0..STRUCTURAL_CASES).map(|case| Task::Structural {
                    model: config.model,
                    case,
                })),
                CheckId::SelfTest => tasks.push(Task::SelfTest),
                _ => {}
            }
        }
        Plan { subjects, tasks }
    }
}
