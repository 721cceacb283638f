//! Content-addressed cache for expensive intermediates.
//!
//! Payloads are versioned text keyed by a SHA-256 of the inputs plus the
//! engine version, so any engine change invalidates previous entries.
//! Writes go through a temporary file and an atomic rename.

use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, OnceLock};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Cache> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn header(kind: &str) -> String {
        format!("syzalg-cache v1 engine {ENGINE_VERSION} kind {kind}")
    }

    pub fn get(&self, kind: &str, key: &str) -> Option<String> {
        let path = self.dir.join(format!("{key}.txt"));
        let text = std::fs::read_to_string(path).ok()?;
        let (first, rest) = text.split_once('\n')?;
        if first != Self::header(kind) {
            return None;
        }
        Some(rest.to_string())
    }

    pub fn put(&self, kind: &str, key: &str, payload: &str) {
        let path = self.dir.join(format!("{key}.txt"));
        let tmp = self.dir.join(format!("{key}.tmp.{}", std::process::id()));
        let text = format!("{}\n{}", Self::header(kind), payload);
        // best effort: a failed write only loses the cache entry
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
    }
}

/// Key derived from the operation kind, the engine version and the exact
/// textual serialization of the inputs.
pub fn content_key(kind: &str, material: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(kind.as_bytes());
    hasher.update([0]);
    hasher.update(ENGINE_VERSION.as_bytes());
    hasher.update([0]);
    hasher.update(material.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

static GLOBAL: OnceLock<Mutex<Option<Cache>>> = OnceLock::new();

fn global() -> &'static Mutex<Option<Cache>> {
    GLOBAL.get_or_init(|| Mutex::new(None))
}

/// Install (or clear) the process-wide cache used by the engine hooks.
pub fn set_global_cache(cache: Option<Cache>) {
    *global().lock().unwrap() = cache;
}

pub fn global_get(kind: &str, key: &str) -> Option<String> {
    global().lock().unwrap().as_ref()?.get(kind, key)
}

pub fn global_put(kind: &str, key: &str, payload: &str) {
    if let Some(c) = global().lock().unwrap().as_ref() {
        c.put(kind, key, payload);
    }
}
