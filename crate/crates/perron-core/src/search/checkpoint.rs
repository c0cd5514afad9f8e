//! Newline-delimited checkpoint records for sharded runs.
//!
//! A file starts with a header carrying the run fingerprint, gains one
//! append-only record per completed prefix block, and is sealed by a
//! final MERGED record once every block of a full run has finished.
//! Resuming refuses files whose fingerprint does not match the current
//! configuration, and reports the first corrupt record it meets.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::dfs::BlockResult;
use super::{FilterTrace, SearchConfig};
use crate::error::SearchError;

pub(crate) const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase")]
pub(crate) enum Record {
    Header {
        version: u32,
        fingerprint: String,
    },
    Block(BlockRecord),
    Merged {
        step_counters: FilterTrace,
    },
}

#[derive(Clone, Serialize, Deserialize)]
pub(crate) struct BlockRecord {
    pub shard_index: usize,
    pub prefix: Vec<i64>,
    pub status: String,
    pub step_counters: FilterTrace,
    pub candidates: Vec<String>,
}

pub(crate) struct Checkpoint {
    path: PathBuf,
    completed: HashMap<Vec<i64>, BlockRecord>,
    sealed: bool,
}

impl Checkpoint {
    /// Opens (or creates) a checkpoint for this configuration, loading
    /// every completed block record.
    pub(crate) fn open(path: &Path, config: &SearchConfig) -> Result<Checkpoint, SearchError> {
        let fingerprint = config.fingerprint();
        if !path.exists() || std::fs::metadata(path)?.len() == 0 {
            let mut w = BufWriter::new(File::create(path)?);
            append_record_io(
                &mut w,
                &Record::Header {
                    version: FORMAT_VERSION,
                    fingerprint,
                },
            )?;
            w.flush()?;
            return Ok(Checkpoint {
                path: path.to_path_buf(),
                completed: HashMap::new(),
                sealed: false,
            });
        }

        let reader = BufReader::new(File::open(path)?);
        let mut completed = HashMap::new();
        let mut sealed = false;
        let mut saw_header = false;
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: Record =
                serde_json::from_str(&line).map_err(|e| SearchError::CorruptCheckpoint {
                    line: idx + 1,
                    reason: e.to_string(),
                })?;
            match record {
                Record::Header {
                    version,
                    fingerprint: fp,
                } => {
                    if version != FORMAT_VERSION {
                        return Err(SearchError::CheckpointMismatch(format!(
                            "format version {version} != {FORMAT_VERSION}"
                        )));
                    }
                    if fp != fingerprint {
                        return Err(SearchError::CheckpointMismatch(format!(
                            "checkpoint is for `{fp}`, current run is `{fingerprint}`"
                        )));
                    }
                    saw_header = true;
                }
                Record::Block(block) => {
                    if !saw_header {
                        return Err(SearchError::CorruptCheckpoint {
                            line: idx + 1,
                            reason: "block record before header".into(),
                        });
                    }
                    if block.status != "done" {
                        return Err(SearchError::CorruptCheckpoint {
                            line: idx + 1,
                            reason: format!("unknown block status `{}`", block.status),
                        });
                    }
                    completed.insert(block.prefix.clone(), block);
                }
                Record::Merged { .. } => {
                    sealed = true;
                }
            }
        }
        if !saw_header {
            return Err(SearchError::CorruptCheckpoint {
                line: 1,
                reason: "missing header record".into(),
            });
        }
        Ok(Checkpoint {
            path: path.to_path_buf(),
            completed,
            sealed,
        })
    }

    pub(crate) fn completed(&self, prefix: &[i64]) -> Option<&BlockRecord> {
        self.completed.get(prefix)
    }

    pub(crate) fn writer(&mut self) -> Result<BufWriter<File>, SearchError> {
        Ok(BufWriter::new(
            OpenOptions::new().append(true).open(&self.path)?,
        ))
    }

    /// Appends the MERGED record that marks a full run complete.
    pub(crate) fn seal(&mut self, trace: &FilterTrace) -> Result<(), SearchError> {
        if self.sealed {
            return Ok(());
        }
        let mut w = self.writer()?;
        append_record_io(
            &mut w,
            &Record::Merged {
                step_counters: *trace,
            },
        )?;
        w.flush()?;
        self.sealed = true;
        Ok(())
    }
}

pub(crate) fn block_record(shard_index: usize, prefix: &[i64], result: &BlockResult) -> Record {
    Record::Block(BlockRecord {
        shard_index,
        prefix: prefix.to_vec(),
        status: "done".into(),
        step_counters: result.trace,
        candidates: result
            .candidates
            .iter()
            .map(|c| c.polynomial.to_string())
            .collect(),
    })
}

pub(crate) fn append_record(w: &mut BufWriter<File>, record: &Record) {
    append_record_io(w, record).expect("checkpoint write failed");
    w.flush().expect("checkpoint flush failed");
}

fn append_record_io(w: &mut BufWriter<File>, record: &Record) -> Result<(), SearchError> {
    let line = serde_json::to_string(record).expect("record serialization is infallible");
    writeln!(w, "{line}")?;
    Ok(())
}
