//! Model loading: scan an ordered modelpath, parse every file with a
//! registered extension, and record the resulting units.

use crate::diag::{codes, Diagnostic};
use crate::registry::Workbench;
use crate::span::Span;
use crate::unit::ModelUnit;
use std::path::{Path, PathBuf};

/// Load every artifact under the modelpath roots, in deterministic order
/// (roots in the given order, files sorted within each root). Qualified
/// names derive from the root-relative directory path (package) plus the
/// declared artifact name; on a clash across roots the first root wins.
/// Units are recorded even when parsing only partially succeeded.
pub fn load_models(wb: &mut Workbench, modelpath: &[PathBuf]) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    for root in modelpath {
        let mut files = Vec::new();
        collect_files(root, &mut files);
        files.sort();
        for file in files {
            load_file(wb, root, &file, &mut diags);
        }
    }
    diags
}

fn collect_files(dir: &Path, out: &mut Vec<PathBuf>) {
    let Ok(entries) = std::fs::read_dir(dir) else { return };
    for entry in entries.flatten() {
        let path = entry.path();
        let name = entry.file_name();
        // Hidden files and directories are not model artifacts.
        if name.to_string_lossy().starts_with('.') {
            continue;
        }
        if path.is_dir() {
            collect_files(&path, out);
        } else {
            out.push(path);
        }
    }
}

fn load_file(wb: &mut Workbench, root: &Path, file: &Path, diags: &mut Vec<Diagnostic>) {
    let display = file.display().to_string();
    let ext = file.extension().and_then(|e| e.to_str()).unwrap_or("");
    let Some(lang) = wb.language_for_extension(ext) else {
        diags.push(Diagnostic::warning(
            codes::KRN0001,
            Span::file_level(display.as_str()),
            format!("no language registered for extension `.{ext}`; file skipped"),
        ));
        return;
    };
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            diags.push(Diagnostic::error(
                codes::KRN0002,
                Span::file_level(display.as_str()),
                format!("cannot read file: {e}"),
            ));
            return;
        }
    };
    let parsed = (lang.parse)(&source, file);
    let language_id = lang.language_id.clone();
    diags.extend(parsed.diagnostics);

    let artifact_name = parsed.artifact_name.unwrap_or_else(|| {
        file.file_stem().and_then(|s| s.to_str()).unwrap_or("unnamed").to_string()
    });
    let package = package_of(root, file);
    let qualified_name = if package.is_empty() {
        artifact_name
    } else {
        format!("{package}.{artifact_name}")
    };

    if wb.unit(&qualified_name).is_some() {
        diags.push(Diagnostic::error(
            codes::KRN0003,
            Span::file_level(display.as_str()),
            format!("model `{qualified_name}` is already defined under an earlier modelpath root; this file is ignored for resolution"),
        ));
        return;
    }
    let unit = ModelUnit::new(language_id, qualified_name, file.to_path_buf(), parsed.ast);
    wb.add_unit(unit).expect("qualified name checked above");
}

fn package_of(root: &Path, file: &Path) -> String {
    let rel = file.strip_prefix(root).unwrap_or(file);
    let mut parts: Vec<String> = rel
        .components()
        .map(|c| c.as_os_str().to_string_lossy().into_owned())
        .collect();
    parts.pop(); // file name
    parts.join(".")
}
