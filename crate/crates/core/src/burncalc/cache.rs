//! On-disk cache of presentations, keyed by a hash of their [`Header`].

use std::fs;
use std::hash::Hash;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Data, Header, Presentation};
use crate::error::{Error, Result};
use crate::io::SCHEMA;

#[derive(Serialize, Deserialize)]
struct Envelope<S> {
    schema: u32,
    header: Header,
    data: Data<S>,
}

#[derive(Deserialize)]
struct HeaderOnly {
    header: Header,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(header: &Header) -> String {
        let bytes = serde_json::to_vec(header).expect("header serializes");
        hex::encode(Sha256::digest(bytes))
    }

    pub fn path(&self, header: &Header) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(header)))
    }

    pub fn load<S>(&self, header: &Header) -> Result<Option<Presentation<S>>>
    where
        S: DeserializeOwned + Clone + Eq + Hash,
    {
        let path = self.path(header);
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&path)?;
        let env: Envelope<S> = serde_json::from_str(&text)?;
        if env.schema != SCHEMA || env.header != *header {
            return Ok(None);
        }
        Ok(Some(Presentation::from_data(env.header, env.data)))
    }

    /// Writes atomically: a temporary file in the cache directory is renamed into place.
    pub fn store<S>(&self, p: &Presentation<S>) -> Result<PathBuf>
    where
        S: Serialize + Clone + Eq + Hash,
    {
        fs::create_dir_all(&self.dir)?;
        let env = Envelope { schema: SCHEMA, header: p.header.clone(), data: p.data().clone() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &env)?;
        tmp.flush()?;
        let path = self.path(&p.header);
        tmp.persist(&path).map_err(|e| Error::Io(e.to_string()))?;
        Ok(path)
    }

    pub fn get_or_build<S, F>(&self, header: &Header, build: F) -> Result<(Presentation<S>, bool)>
    where
        S: Serialize + DeserializeOwned + Clone + Eq + Hash,
        F: FnOnce() -> Result<Presentation<S>>,
    {
        if let Some(p) = self.load(header)? {
            return Ok((p, true));
        }
        let p = build()?;
        self.store(&p)?;
        Ok((p, false))
    }

    /// Headers of the cached presentations, with their file names, sorted.
    pub fn list(&self) -> Result<Vec<(String, Header)>> {
        let mut out = Vec::new();
        if !self.dir.exists() {
            return Ok(out);
        }
        for entry in fs::read_dir(&self.dir)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "json") {
                let text = fs::read_to_string(&path)?;
                if let Ok(h) = serde_json::from_str::<HeaderOnly>(&text) {
                    let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
                    out.push((name, h.header));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }

    /// Removes every cached presentation; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.list()?;
        for (name, _) in &entries {
            fs::remove_file(self.dir.join(name))?;
        }
        Ok(entries.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::{AbElem, FinAbGroup};
    use crate::burncalc::{header_b, present_b};
    use crate::symb::{canon_b, ClassVector};

    #[test]
    fn round_trip_preserves_decisions() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let z5 = FinAbGroup::cyclic(5);
        let header = header_b(&z5, 2);
        let (fresh, hit) = cache.get_or_build(&header, || present_b(&z5, 2)).unwrap();
        assert!(!hit);
        let (loaded, hit) = cache.get_or_build(&header, || present_b(&z5, 2)).unwrap();
        assert!(hit);
        assert_eq!(loaded.invariants(), fresh.invariants());
        let s = |a: u64, b: u64| canon_b(&z5, vec![AbElem(vec![a]), AbElem(vec![b])]).unwrap();
        let u = ClassVector::from_terms([(s(1, 3), 1), (s(2, 4), 1)]);
        let v = ClassVector::from_terms([(s(1, 2), 1), (s(3, 3), 1), (s(2, 4), 1)]);
        assert_eq!(loaded.class_eq(&u, &v).unwrap(), fresh.class_eq(&u, &v).unwrap());
        assert_eq!(cache.list().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.list().unwrap().is_empty());
    }
}
