use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use clap::ValueEnum;

use vclab_core::exact::{min_maximal_matching, mvc};
use vclab_core::heuristics::{min_ed, min_mdg};
use vclab_core::Graph;

use crate::{read_graph, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Operation {
    Mvc,
    MinEd,
    MinMdg,
    MinMaximalMatching,
}

impl Operation {
    pub fn name(self) -> &'static str {
        match self {
            Operation::Mvc => "mvc",
            Operation::MinEd => "min-ed",
            Operation::MinMdg => "min-mdg",
            Operation::MinMaximalMatching => "min-maximal-matching",
        }
    }

    pub fn evaluate(self, g: &Graph) -> vclab_core::Result<usize> {
        match self {
            Operation::Mvc => mvc(g),
            Operation::MinEd => min_ed(g),
            Operation::MinMdg => min_mdg(g),
            Operation::MinMaximalMatching => min_maximal_matching(g),
        }
    }
}

pub const HEADER: [&str; 6] = ["file", "n", "m", "operation", "value", "millis"];

struct Row {
    file: String,
    n: usize,
    m: usize,
    operation: &'static str,
    value: usize,
    millis: u128,
}

fn rows_for(path: &Path, operations: &[Operation]) -> CliResult<Vec<Row>> {
    let g = read_graph(path)?;
    operations
        .iter()
        .map(|&op| {
            let start = Instant::now();
            let value = op.evaluate(&g)?;
            Ok(Row {
                file: path.display().to_string(),
                n: g.n(),
                m: g.m(),
                operation: op.name(),
                value,
                millis: start.elapsed().as_millis(),
            })
        })
        .collect()
}

/// Evaluates every operation on every file (files in parallel) and writes
/// the CSV in file order, then operation order. The first failing file, in
/// file order, is reported.
pub fn batch_report(
    files: &[PathBuf],
    operations: &[Operation],
    out: &mut dyn Write,
) -> CliResult<()> {
    let results: Vec<Mutex<Option<CliResult<Vec<Row>>>>> =
        files.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(files.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= files.len() {
                    break;
                }
                let r = rows_for(&files[i], operations);
                *results[i].lock().unwrap() = Some(r);
            });
        }
    });

    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for slot in results {
        let rows = slot.into_inner().unwrap().expect("every file processed")?;
        for r in rows {
            w.write_record([
                r.file,
                r.n.to_string(),
                r.m.to_string(),
                r.operation.to_string(),
                r.value.to_string(),
                r.millis.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
