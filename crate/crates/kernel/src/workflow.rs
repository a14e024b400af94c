//! Workflows: per-language processing modules registered for a phase and
//! executed automatically for every model of that language.

use crate::diag::Diagnostic;
use crate::registry::Workbench;
use crate::unit::ModelUnit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Define,
    Resolve,
    Check,
    Generate,
}

pub const PHASES: [Phase; 4] = [Phase::Define, Phase::Resolve, Phase::Check, Phase::Generate];

/// DEFINE workflows build their own unit's symbols and may not look at
/// other units; later phases read the whole registry.
pub enum WorkflowFn {
    Define(Box<dyn Fn(&mut ModelUnit) -> Vec<Diagnostic> + Send + Sync>),
    Analyze(Box<dyn Fn(&ModelUnit, &Workbench) -> Vec<Diagnostic> + Send + Sync>),
}

pub struct Workflow {
    pub name: String,
    pub phase: Phase,
    pub run: WorkflowFn,
}

impl Workflow {
    pub fn define(
        name: impl Into<String>,
        run: impl Fn(&mut ModelUnit) -> Vec<Diagnostic> + Send + Sync + 'static,
    ) -> Self {
        Workflow { name: name.into(), phase: Phase::Define, run: WorkflowFn::Define(Box::new(run)) }
    }

    pub fn analyze(
        name: impl Into<String>,
        phase: Phase,
        run: impl Fn(&ModelUnit, &Workbench) -> Vec<Diagnostic> + Send + Sync + 'static,
    ) -> Self {
        assert!(phase != Phase::Define, "DEFINE workflows use Workflow::define");
        Workflow { name: name.into(), phase, run: WorkflowFn::Analyze(Box::new(run)) }
    }
}
