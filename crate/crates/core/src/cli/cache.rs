//! On-disk result cache. Entries are keyed by a hash of the request and of
//! the algorithm sources, so a code change never serves stale results.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

const SOURCES: [&str; 6] = [
    include_str!("../qseries.rs"),
    include_str!("../planepart.rs"),
    include_str!("../hexlattice.rs"),
    include_str!("../doublebox.rs"),
    include_str!("../doubledimer.rs"),
    include_str!("../condense.rs"),
];

/// Hash of every source file the cached values depend on.
pub fn code_tag() -> &'static str {
    static TAG: OnceLock<String> = OnceLock::new();
    TAG.get_or_init(|| {
        let mut h = Sha256::new();
        for s in SOURCES {
            h.update((s.len() as u64).to_le_bytes());
            h.update(s.as_bytes());
        }
        hex::encode(h.finalize())
    })
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// File name for a request, e.g. `key("zdbc", "1,1,1;4")`.
    pub fn key(kind: &str, request: &str) -> String {
        let mut h = Sha256::new();
        h.update(code_tag());
        h.update([0]);
        h.update(kind);
        h.update([0]);
        h.update(request);
        format!("{kind}-{}.json", &hex::encode(h.finalize())[..32])
    }

    /// A cached value, or `None` if absent or unreadable.
    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.dir.join(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Writes to a temporary file in the same directory and renames it into
    /// place, so readers never see a partial entry.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> io::Result<()> {
        let tmp = self
            .dir
            .join(format!(".{key}.{}.{:?}.tmp", std::process::id(), std::thread::current().id()));
        let mut f = fs::File::create(&tmp)?;
        serde_json::to_writer(&mut f, value)?;
        f.write_all(b"\n")?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, self.dir.join(key))
    }
}
