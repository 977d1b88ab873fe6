use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn code_version() -> String {
    format!("cli-{}+core-{}", env!("CARGO_PKG_VERSION"), spverlinde::VERSION)
}

pub fn cache_key(op: &str, params: &Value) -> String {
    let mut h = Sha256::new();
    h.update(code_version().as_bytes());
    h.update([0]);
    h.update(op.as_bytes());
    h.update([0]);
    h.update(params.to_string().as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Unreadable or corrupt entries count as misses.
    pub fn get(&self, key: &str) -> Option<Value> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Write to a temporary file in the same directory, then rename over the target.
    pub fn put(&self, key: &str, v: &Value) -> std::io::Result<()> {
        let tmp = self
            .dir
            .join(format!(".{key}.{}.{:?}.tmp", std::process::id(), std::thread::current().id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string_pretty(v)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(key))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_depend_on_everything() {
        let a = cache_key("fusion det-t", &json!({"m": 5, "n": 1}));
        assert_eq!(a.len(), 64);
        assert_ne!(a, cache_key("fusion det-t", &json!({"m": 5, "n": 2})));
        assert_ne!(a, cache_key("fusion table", &json!({"m": 5, "n": 1})));
        assert_eq!(a, cache_key("fusion det-t", &json!({"m": 5, "n": 1})));
    }

    #[test]
    fn roundtrip_preserves_order() {
        let dir = std::env::temp_dir().join(format!("spv-cache-test-{}", std::process::id()));
        let c = Cache::new(&dir).unwrap();
        let v = json!({"z": 1, "a": [1, 2], "m": "x"});
        c.put("k", &v).unwrap();
        let back = c.get("k").unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&v).unwrap());
        assert!(c.get("missing").is_none());
        let _ = fs::remove_dir_all(dir);
    }
}
