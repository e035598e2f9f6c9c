//! Rings and maps loaded for one command, plus the scan configuration.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use altring_core::lie::{MapFile, MapTable};
use altring_core::ring_file::{self, RingFile};
use altring_core::{AlgebraError, Element, Result, Ring, ScanConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub scan: ScanConfig,
    pub format: Format,
}

pub struct Workspace {
    rings: BTreeMap<String, Arc<Ring>>,
    maps: BTreeMap<String, MapTable>,
    pub config: Config,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| AlgebraError::Parse(format!("{}: {e}", path.display())))
}

impl Workspace {
    pub fn new(config: Config) -> Self {
        Workspace { rings: BTreeMap::new(), maps: BTreeMap::new(), config }
    }

    /// Loads a ring file. Loading the same ring twice returns the same
    /// handle, so maps see one ring as both source and target; two different
    /// rings under one name are rejected.
    pub fn load_ring(&mut self, path: &Path) -> Result<Arc<Ring>> {
        let ring = ring_file::ring_from_json(&read(path)?)
            .map_err(|e| AlgebraError::Parse(format!("{}: {e}", path.display())))?;
        if let Some(known) = self.rings.get(ring.name()) {
            if RingFile::from_ring(known) != RingFile::from_ring(&ring) {
                return Err(AlgebraError::Parse(format!("two different rings are named {:?}", ring.name())));
            }
            return Ok(known.clone());
        }
        let ring = Arc::new(ring);
        self.rings.insert(ring.name().to_string(), ring.clone());
        Ok(ring)
    }

    pub fn ring(&self, name: &str) -> Result<&Arc<Ring>> {
        self.rings.get(name).ok_or_else(|| AlgebraError::Parse(format!("ring {name:?} is not loaded")))
    }

    /// Loads a map file whose source and target rings are already loaded.
    /// The map is registered under the file stem.
    pub fn load_map(&mut self, path: &Path) -> Result<MapTable> {
        let file = MapFile::from_json(&read(path)?)?;
        let source = self.ring(&file.source)?.clone();
        let target = self.ring(&file.target)?.clone();
        let map = file.build(&source, &target, self.config.scan.budget)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        if self.maps.contains_key(&name) {
            return Err(AlgebraError::Parse(format!("map {name:?} loaded twice")));
        }
        self.maps.insert(name, map.clone());
        Ok(map)
    }

    pub fn element(&self, ring: &Ring, coords: &str) -> Result<Element> {
        let v = ring_file::parse_coords(coords, ring.domain())?;
        ring.element(v)
    }
}
