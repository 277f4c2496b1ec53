use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::mpsc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

/// Outcome of one check on one parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub scope: &'static str,
    pub check: &'static str,
    pub params: BTreeMap<&'static str, Value>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Value>,
}

impl Record {
    pub fn new(scope: &'static str, check: &'static str) -> Self {
        Record {
            scope,
            check,
            params: BTreeMap::new(),
            pass: true,
            detail: None,
            report: None,
        }
    }

    pub fn param(mut self, key: &'static str, v: impl Into<Value>) -> Self {
        self.params.insert(key, v.into());
        self
    }

    pub fn pass(mut self, ok: bool) -> Self {
        self.pass = ok;
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn report<T: Serialize>(mut self, r: &T) -> Self {
        self.report = serde_json::to_value(r).ok();
        self
    }

    /// A failing record carrying an error from the library.
    pub fn error(self, e: impl std::fmt::Display) -> Self {
        self.pass(false).detail(e.to_string())
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "{} {} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.scope,
            self.check
        );
        for (k, v) in &self.params {
            match v {
                Value::String(t) => s.push_str(&format!(" {k}={t}")),
                other => s.push_str(&format!(" {k}={other}")),
            }
        }
        if let Some(d) = &self.detail {
            s.push_str(": ");
            s.push_str(d);
        }
        s
    }
}

pub struct Job {
    pub scope: &'static str,
    pub run: Box<dyn FnOnce() -> Vec<Record> + Send>,
}

impl Job {
    pub fn new(scope: &'static str, run: impl FnOnce() -> Vec<Record> + Send + 'static) -> Self {
        Job {
            scope,
            run: Box::new(run),
        }
    }
}

/// Runs the jobs on the rayon pool and hands their records to `emit` in
/// job order, as soon as every earlier job has finished.
pub fn run_ordered(jobs: Vec<Job>, mut emit: impl FnMut(Record)) {
    let (tx, rx) = mpsc::channel::<(usize, Vec<Record>)>();
    std::thread::scope(|s| {
        s.spawn(move || {
            jobs.into_par_iter()
                .enumerate()
                .for_each_with(tx, |tx, (i, job)| {
                    let scope = job.scope;
                    let recs = catch_unwind(AssertUnwindSafe(job.run)).unwrap_or_else(|p| {
                        let msg = p
                            .downcast_ref::<String>()
                            .cloned()
                            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_else(|| "panic".into());
                        vec![Record::new(scope, "panic").error(msg)]
                    });
                    let _ = tx.send((i, recs));
                });
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, recs) in rx {
            pending.insert(i, recs);
            while let Some(recs) = pending.remove(&next) {
                recs.into_iter().for_each(&mut emit);
                next += 1;
            }
        }
    });
}
