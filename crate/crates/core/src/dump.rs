//! Text renderings of named objects for inspection.

use std::fmt::Write;
use std::path::Path;

use crate::coxbraid::{self, relator_suite, suite_text};
use crate::exactnum::CycElem;
use crate::geometry::batches::{self, root_to_evec, batch_table_rows, PRINTED_ROW_COUNTS};
use crate::model::{CBasis, Model, RootLabel};

pub const OBJECTS: [&str; 8] =
    ["roots", "points", "cbasis-gram", "batch-table", "suites", "relators:<suite>", "batch:<c|pinf>:<n>", "l4-shells"];

#[derive(Debug, thiserror::Error)]
pub enum DumpError {
    #[error("unknown object {0}; known: {known}", known = OBJECTS.join(", "))]
    Unknown(String),
    #[error(transparent)]
    Suite(#[from] coxbraid::SuiteError),
    #[error(transparent)]
    Batch(#[from] batches::BatchError),
}

fn vector(v: &[CycElem]) -> String {
    let parts: Vec<String> = v.iter().map(CycElem::to_compact).collect();
    format!("({})", parts.join(", "))
}

/// Renders a named object. `batch:` objects read and fill the cache when a
/// directory is given.
pub fn dump(name: &str, cache_dir: Option<&Path>) -> Result<String, DumpError> {
    let m = Model::get();
    let mut out = String::new();
    match name.split(':').collect::<Vec<_>>().as_slice() {
        ["roots"] => {
            for l in RootLabel::all() {
                let v: Vec<String> = m.roots.get(l).iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{l}\t({})", v.join(", "));
            }
        }
        ["points"] => {
            for (n, v) in [("c", &m.c), ("p_inf", &m.p_inf), ("l_inf", &m.l_inf), ("tau", &m.tau), ("rho", &m.rho)] {
                let _ = writeln!(out, "{n}\t{}", vector(v));
            }
        }
        ["cbasis-gram"] => {
            let g = m.cbasis.gram();
            let _ = writeln!(out, "# matches block matrix: {}", g == CBasis::expected_gram());
            for row in &g {
                let r: Vec<String> = row.iter().map(CycElem::to_compact).collect();
                let _ = writeln!(out, "{}", r.join("\t"));
            }
        }
        ["batch-table"] => {
            for (row, printed) in batch_table_rows().iter().zip(PRINTED_ROW_COUNTS) {
                let _ = writeln!(out, "{}\t{}\tprinted {}", row.batch, row.label, printed);
            }
        }
        ["suites"] => {
            for s in coxbraid::SUITES {
                let _ = writeln!(out, "{s}\t{}", relator_suite(s)?.len());
            }
        }
        ["relators", s] => out = suite_text(&relator_suite(s)?),
        ["batch", center, n] => {
            let n: u32 = n.parse().map_err(|_| DumpError::Unknown(name.into()))?;
            let list = batches::batch(center, n, cache_dir)?;
            let _ = writeln!(
                out,
                "# center {} batch {} |pi|^2 {} sinh^2 {} count {}",
                list.spec.center,
                list.spec.batch,
                list.spec.pi_norm,
                list.spec.sinh_sq,
                list.roots.len()
            );
            for r in &list.roots {
                let v: Vec<String> = root_to_evec(r).iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "({})", v.join(", "));
            }
        }
        ["l4-shells"] => {
            for n in [3, 6] {
                let _ = writeln!(out, "norm {n}\t{}", batches::l4_shell(n).len());
            }
        }
        _ => return Err(DumpError::Unknown(name.into())),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_objects_render() {
        assert_eq!(dump("roots", None).unwrap().lines().count(), 26);
        assert_eq!(dump("points", None).unwrap().lines().count(), 5);
        assert!(dump("cbasis-gram", None).unwrap().starts_with("# matches block matrix: true"));
        assert_eq!(dump("batch-table", None).unwrap().lines().count(), 11);
        assert!(dump("relators:artin_a11", None).unwrap().lines().count() >= 66);
        assert!(dump("l4-shells", None).unwrap().contains("norm 6\t2160"));
        assert!(matches!(dump("nothing", None), Err(DumpError::Unknown(_))));
        assert!(matches!(dump("relators:nothing", None), Err(DumpError::Suite(_))));
    }
}
