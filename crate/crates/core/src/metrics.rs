//! Convergence logs and the quantities derived from them.
//!
//! A log is a step function: after the point `(t, s)` the run holds a
//! solution of size `s` until the next point.

use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogPoint {
    pub elapsed: f64,
    pub size: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConvergenceLog {
    pub instance: String,
    pub algorithm: String,
    pub seed: u64,
    /// `seconds` or `iterations`.
    pub clock: String,
    points: Vec<LogPoint>,
}

impl ConvergenceLog {
    pub fn new(instance: &str, algorithm: &str, seed: u64) -> Self {
        ConvergenceLog {
            instance: instance.to_string(),
            algorithm: algorithm.to_string(),
            seed,
            clock: "seconds".to_string(),
            points: Vec::new(),
        }
    }

    /// Builds a log from raw points, checking the invariants.
    pub fn from_points(points: &[(f64, usize)]) -> Result<Self> {
        let mut log = ConvergenceLog {
            clock: "seconds".to_string(),
            ..ConvergenceLog::default()
        };
        for (i, &(t, s)) in points.iter().enumerate() {
            if t.is_nan() || t < 0.0 {
                return Err(Error::parse(i + 1, "elapsed time must be non-negative"));
            }
            if let Some(last) = log.points.last() {
                if t < last.elapsed || s <= last.size {
                    return Err(Error::parse(
                        i + 1,
                        "times must not decrease and sizes must strictly increase",
                    ));
                }
            }
            log.points.push(LogPoint { elapsed: t, size: s });
        }
        Ok(log)
    }

    pub fn points(&self) -> &[LogPoint] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Appends `(elapsed, size)` when `size` beats the last point. Returns
    /// whether the point was kept.
    pub fn record(&mut self, elapsed: f64, size: usize) -> bool {
        if let Some(last) = self.points.last() {
            if size <= last.size {
                return false;
            }
            let elapsed = elapsed.max(last.elapsed);
            self.points.push(LogPoint { elapsed, size });
        } else {
            self.points.push(LogPoint {
                elapsed: elapsed.max(0.0),
                size,
            });
        }
        true
    }

    pub fn best_size(&self) -> Option<usize> {
        self.points.last().map(|p| p.size)
    }

    /// Size held at time `t`, if any point precedes it.
    pub fn size_at(&self, t: f64) -> Option<usize> {
        let idx = self.points.partition_point(|p| p.elapsed <= t);
        idx.checked_sub(1).map(|i| self.points[i].size)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# instance={} algorithm={} seed={} clock={}",
            self.instance, self.algorithm, self.seed, self.clock
        )?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["elapsed_seconds", "size"])?;
        for p in &self.points {
            // Shortest representation that parses back to the same value.
            w.write_record([p.elapsed.to_string(), p.size.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut reader = BufReader::new(input);
        let mut log = ConvergenceLog {
            clock: "seconds".to_string(),
            ..ConvergenceLog::default()
        };
        let mut header = String::new();
        let mut body = String::new();
        let mut first_data_line = 1;
        loop {
            header.clear();
            if reader.read_line(&mut header)? == 0 {
                break;
            }
            let line = header.trim();
            if let Some(meta) = line.strip_prefix('#') {
                first_data_line += 1;
                for pair in meta.split_whitespace() {
                    let Some((key, value)) = pair.split_once('=') else {
                        continue;
                    };
                    match key {
                        "instance" => log.instance = value.to_string(),
                        "algorithm" => log.algorithm = value.to_string(),
                        "seed" => {
                            log.seed = value
                                .parse()
                                .map_err(|_| Error::parse(first_data_line - 1, "bad seed"))?
                        }
                        "clock" => log.clock = value.to_string(),
                        _ => {}
                    }
                }
                continue;
            }
            body.push_str(&header);
            break;
        }
        reader.read_to_string(&mut body)?;
        let mut rows = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(body.as_bytes());
        let mut points = Vec::new();
        for (i, row) in rows.records().enumerate() {
            let row = row?;
            let line = first_data_line + i + 1;
            if row.len() != 2 {
                return Err(Error::parse(line, "expected two columns"));
            }
            let t: f64 = row[0]
                .parse()
                .map_err(|_| Error::parse(line, format!("bad time {:?}", &row[0])))?;
            let s: usize = row[1]
                .parse()
                .map_err(|_| Error::parse(line, format!("bad size {:?}", &row[1])))?;
            points.push((t, s));
        }
        let parsed = ConvergenceLog::from_points(&points).map_err(|e| match e {
            Error::Parse { line, message } => Error::parse(first_data_line + line, message),
            other => other,
        })?;
        log.points = parsed.points;
        Ok(log)
    }
}

/// Pointwise mean of the step functions, sampled at the union of event
/// times. At each time only the logs that have started contribute.
pub fn average_logs(logs: &[ConvergenceLog]) -> Result<Vec<(f64, f64)>> {
    if logs.is_empty() {
        return Err(Error::Empty("no logs to average"));
    }
    let mut times: Vec<f64> = logs
        .iter()
        .flat_map(|l| l.points.iter().map(|p| p.elapsed))
        .collect();
    times.sort_by(f64::total_cmp);
    times.dedup();
    Ok(times
        .into_iter()
        .map(|t| {
            let sizes: Vec<usize> = logs.iter().filter_map(|l| l.size_at(t)).collect();
            let mean = sizes.iter().sum::<usize>() as f64 / sizes.len() as f64;
            (t, mean)
        })
        .collect())
}

/// Earliest time at which the log holds a solution of at least `target`.
pub fn time_to_size(log: &ConvergenceLog, target: usize) -> Option<f64> {
    log.points
        .iter()
        .find(|p| p.size >= target)
        .map(|p| p.elapsed)
}

/// Largest ratio `time_to_size(other, i) / time_to_size(base, i)` over the
/// sizes `i` that `base` reports. Sizes `other` never reaches give
/// infinity; a zero over zero ratio counts as 1. `None` for an empty base.
pub fn max_speedup(base: &ConvergenceLog, other: &ConvergenceLog) -> Option<f64> {
    base.points
        .iter()
        .map(|p| {
            let tb = p.elapsed;
            match time_to_size(other, p.size) {
                None => f64::INFINITY,
                Some(to) if to == tb => 1.0,
                Some(_) if tb == 0.0 => f64::INFINITY,
                Some(to) => to / tb,
            }
        })
        .reduce(f64::max)
}

/// `quality · reference`, rounded up to a whole size.
pub fn quality_target(reference: usize, quality: f64) -> usize {
    let exact = reference as f64 * quality;
    let nearest = exact.round();
    if (exact - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest as usize
    } else {
        exact.ceil() as usize
    }
}
