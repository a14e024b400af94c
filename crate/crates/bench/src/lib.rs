//! Helpers shared by the benchmarks: load and check the demo corpus.

use kernel::Workbench;
use std::path::PathBuf;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

pub fn scenario_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(name)
}

/// Fresh workbench with the demo corpus loaded and checked clean.
pub fn checked_corpus() -> Workbench {
    let mut wb = Workbench::new();
    family_maa::register_family(&mut wb).expect("family registers");
    let load = kernel::load_models(&mut wb, &[corpus_dir()]);
    let diags = wb.run_pipeline(load);
    assert!(diags.is_empty(), "benchmark corpus must be clean: {diags:?}");
    wb
}
