//! Catalog of concrete groups: named builtins, matrix-derived permutation
//! groups over small fields, and verified witness files.

mod builtins;
mod gf;
mod matgroup;
mod table2;
mod witness;

pub use builtins::builtin_group;
pub use gf::GfField;
pub use matgroup::{matgroup_to_perm, sl_gens, sp_transvections, FiniteFieldMatrix, MatAction};
pub use table2::{order_bound, table2_orders_check, CatalogEntry, CatalogStatus};
pub use witness::{load_witness, load_witness_spec, WitnessSpec};

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Resolves group descriptors, caching witness loads: either a builtin name
/// or `witness:<file>` relative to the witness directory.
pub struct Catalog {
    dir: PathBuf,
    cache: Mutex<HashMap<String, PermGroup>>,
}

impl Catalog {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Catalog {
            dir: dir.into(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn group(&self, descriptor: &str) -> Result<PermGroup> {
        if let Some(g) = self.cache.lock().unwrap().get(descriptor) {
            return Ok(g.clone());
        }
        let g = if let Some(file) = descriptor.strip_prefix("witness:") {
            load_witness(&self.dir.join(file))?
        } else if descriptor.ends_with(".wit") {
            load_witness(&self.dir.join(descriptor))?
        } else {
            builtin_group(descriptor)?
        };
        self.cache
            .lock()
            .unwrap()
            .insert(descriptor.to_string(), g.clone());
        Ok(g)
    }

    pub fn witness_path(&self, file: &str) -> PathBuf {
        self.dir.join(file)
    }
}

impl std::fmt::Debug for Catalog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Catalog({})", self.dir.display())
    }
}

/// Convenience wrapper keeping error context for descriptor failures.
pub fn resolve_group(catalog: &Catalog, descriptor: &str) -> Result<PermGroup> {
    catalog.group(descriptor).map_err(|e| match e {
        Error::UnknownGroup(_) => Error::UnknownGroup(descriptor.to_string()),
        other => other,
    })
}
