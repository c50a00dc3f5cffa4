//! On-disk cache of families, consistency reports, Kostka matrices and
//! suite reports. Every write goes to a temporary file that is renamed into
//! place; unreadable or stale files are treated as missing.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::de::DeserializeOwned;
use serde::Serialize;
use supermac_core::inner::ZWeight;
use supermac_core::macdonald::{consistency_report, ConsistencyReport, Family};
use supermac_core::serial::{FamilyRecord, FORMAT_VERSION};
use supermac_core::special::{KostkaKind, KostkaMatrix, KostkaRecord, KostkaSet};

use crate::CliError;

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub struct Cache {
    pub root: PathBuf,
    pub force: bool,
}

pub enum Lookup<T> {
    Hit(T),
    Computed(T),
}

impl<T> Lookup<T> {
    pub fn into_inner(self) -> T {
        match self {
            Lookup::Hit(v) | Lookup::Computed(v) => v,
        }
    }

    pub fn was_hit(&self) -> bool {
        matches!(self, Lookup::Hit(_))
    }
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().expect("cache paths have a parent");
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.{}.tmp",
        path.file_name().unwrap().to_string_lossy(),
        std::process::id(),
        TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    write_atomic(path, &bytes)
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Option<T> {
    let bytes = fs::read(path).ok()?;
    serde_json::from_slice(&bytes).ok()
}

impl Cache {
    pub fn from_env(force: bool) -> Self {
        let root = std::env::var_os("SUPERMAC_CACHE").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("./cache"));
        Cache { root, force }
    }

    pub fn degree_dir(&self, n: u32, m: u32) -> PathBuf {
        self.root.join(format!("{n}_{m}"))
    }

    pub fn family_path(&self, n: u32, m: u32, w: &ZWeight) -> PathBuf {
        self.degree_dir(n, m).join(w.key()).join("family.json")
    }

    pub fn report_path(&self, n: u32, m: u32, w: &ZWeight) -> PathBuf {
        self.degree_dir(n, m).join(w.key()).join("report.json")
    }

    pub fn kostka_path(&self, n: u32, m: u32, kind: KostkaKind) -> PathBuf {
        self.root.join("kostka").join(format!("{n}_{m}")).join(format!("{}.json", kind.name()))
    }

    pub fn suite_report_path(&self, suite: &str, ext: &str) -> PathBuf {
        self.root.join("reports").join(format!("{suite}.{ext}"))
    }

    fn load_family(&self, n: u32, m: u32, w: &ZWeight) -> Option<(ConsistencyReport, Option<Family>)> {
        if self.force {
            return None;
        }
        let report: ConsistencyReport = read_json(&self.report_path(n, m, w))?;
        if (report.n, report.m) != (n, m) {
            return None;
        }
        if !report.consistent {
            return Some((report, None));
        }
        let rec: FamilyRecord = read_json(&self.family_path(n, m, w))?;
        if rec.format_version != FORMAT_VERSION || rec.kind != w.key() || (rec.n, rec.m) != (n, m) {
            return None;
        }
        let fam = Family::from_polys(n, m, w, &rec.polys().ok()?)?;
        Some((report, Some(fam)))
    }

    /// The consistency report and, when consistent, the family.
    pub fn family(&self, n: u32, m: u32, w: &ZWeight) -> Result<Lookup<(ConsistencyReport, Option<Family>)>, CliError> {
        if let Some(hit) = self.load_family(n, m, w) {
            return Ok(Lookup::Hit(hit));
        }
        let (report, fam) = consistency_report(n, m, w);
        if let Some(fam) = &fam {
            write_json(&self.family_path(n, m, w), &FamilyRecord::new(n, m, &w.key(), &fam.polys()))?;
        }
        write_json(&self.report_path(n, m, w), &report)?;
        Ok(Lookup::Computed((report, fam)))
    }

    /// A family that is expected to exist; an inconsistency is reported as a
    /// failure by the caller.
    pub fn consistent_family(&self, n: u32, m: u32, w: &ZWeight) -> Result<Result<Family, ConsistencyReport>, CliError> {
        let (report, fam) = self.family(n, m, w)?.into_inner();
        Ok(fam.ok_or(report))
    }

    fn load_kostka(&self, n: u32, m: u32) -> Option<KostkaSet> {
        if self.force {
            return None;
        }
        let mut mats = Vec::new();
        for kind in KostkaKind::ALL {
            let rec: KostkaRecord = read_json(&self.kostka_path(n, m, kind))?;
            if rec.format_version != FORMAT_VERSION || rec.kind != kind || (rec.n, rec.m) != (n, m) {
                return None;
            }
            mats.push(KostkaMatrix::from_record(rec).ok()?);
        }
        let mut it = mats.into_iter();
        let mut next = || it.next().unwrap();
        Some(KostkaSet { qt: next(), t_bar: next(), t: next(), monomial_bar: next(), monomial: next() })
    }

    pub fn kostka(&self, fam: &Family) -> Result<KostkaSet, CliError> {
        if let Some(set) = self.load_kostka(fam.n, fam.m) {
            return Ok(set);
        }
        let set = KostkaSet::compute(fam)?;
        for kind in KostkaKind::ALL {
            write_json(&self.kostka_path(fam.n, fam.m, kind), &set.get(kind).record())?;
        }
        Ok(set)
    }

    pub fn write_report(&self, suite: &str, json: &str, text: &str) -> Result<(), CliError> {
        write_atomic(&self.suite_report_path(suite, "json"), json.as_bytes())?;
        write_atomic(&self.suite_report_path(suite, "txt"), text.as_bytes())
    }

    /// Removes the whole cache, or a single degree.
    pub fn clean(&self, degree: Option<(u32, u32)>) -> Result<(), CliError> {
        let targets = match degree {
            None => vec![self.root.clone()],
            Some((n, m)) => vec![self.degree_dir(n, m), self.root.join("kostka").join(format!("{n}_{m}"))],
        };
        for t in targets {
            match fs::remove_dir_all(&t) {
                Ok(()) => {}
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
                Err(e) => return Err(e.into()),
            }
        }
        Ok(())
    }
}
