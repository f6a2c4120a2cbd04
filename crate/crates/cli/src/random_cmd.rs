use std::time::{Duration, Instant};

use anyhow::{Context, Result};

use dsf_core::random::{experiment_grid, Generator, RandomSpec};
use dsf_core::{DegreeSequence, Error, Tester};

pub struct RandomOptions {
    pub n: usize,
    pub p_low: f64,
    pub p_high: f64,
    pub count: usize,
    pub seed: u64,
    pub budget: f64,
    pub grid: bool,
    pub timing: bool,
    pub sequences: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Forcibly,
    Not,
    TimedOut,
}

impl Outcome {
    fn label(self) -> &'static str {
        match self {
            Outcome::Forcibly => "true",
            Outcome::Not => "false",
            Outcome::TimedOut => "timeout",
        }
    }
}

fn run_one(d: &DegreeSequence, budget: Duration) -> Result<(Outcome, Duration)> {
    let start = Instant::now();
    let verdict = Tester::new().with_budget(budget).forcibly_biconnected(d);
    let took = start.elapsed();
    let outcome = match verdict {
        Ok(v) if v.is_forcibly_biconnected() => Outcome::Forcibly,
        Ok(_) => Outcome::Not,
        Err(Error::Timeout) => Outcome::TimedOut,
        Err(e) => return Err(e.into()),
    };
    Ok((outcome, took))
}

#[derive(Default)]
struct Tally {
    count: usize,
    decided: usize,
    forcibly: usize,
    total: Duration,
    worst: Duration,
}

impl Tally {
    fn add(&mut self, outcome: Outcome, took: Duration) {
        self.count += 1;
        self.decided += (outcome != Outcome::TimedOut) as usize;
        self.forcibly += (outcome == Outcome::Forcibly) as usize;
        self.total += took;
        self.worst = self.worst.max(took);
    }

    fn mean_ms(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.total.as_secs_f64() * 1e3 / self.count as f64
        }
    }

    fn timeouts(&self) -> usize {
        self.count - self.decided
    }
}

fn frac(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

pub fn run(opts: &RandomOptions) -> Result<()> {
    let budget = Duration::from_secs_f64(opts.budget);
    let mut out = csv::Writer::from_writer(std::io::stdout());
    let mut overall = Tally::default();

    if opts.grid {
        let mut header = vec!["p_l", "p_h", "count", "decided", "forcibly_biconnected"];
        if opts.timing {
            header.extend(["mean_ms", "max_ms"]);
        }
        out.write_record(&header)?;
        for (i, (p_low, p_high)) in experiment_grid().into_iter().enumerate() {
            let spec = RandomSpec::new(
                opts.n,
                p_low,
                p_high,
                opts.count,
                opts.seed.wrapping_add(i as u64),
            )?;
            let mut gen = Generator::new(&spec)?;
            let mut tally = Tally::default();
            for _ in 0..spec.count {
                let d = gen.sample().with_context(|| format!("p_l = {p_low}, p_h = {p_high}"))?;
                let (outcome, took) = run_one(&d, budget)?;
                tally.add(outcome, took);
                overall.add(outcome, took);
            }
            let mut row = vec![
                p_low.to_string(),
                p_high.to_string(),
                tally.count.to_string(),
                tally.decided.to_string(),
                tally.forcibly.to_string(),
            ];
            if opts.timing {
                row.push(format!("{:.3}", tally.mean_ms()));
                row.push(format!("{:.3}", tally.worst.as_secs_f64() * 1e3));
            }
            out.write_record(&row)?;
        }
    } else {
        let spec = RandomSpec::new(opts.n, opts.p_low, opts.p_high, opts.count, opts.seed)?;
        let mut gen = Generator::new(&spec)?;
        let mut header = vec!["index", "min", "max", "sum", "forcibly_biconnected"];
        if opts.timing {
            header.push("micros");
        }
        if opts.sequences {
            header.push("sequence");
        }
        out.write_record(&header)?;
        for i in 0..spec.count {
            let d = gen.sample()?;
            let (outcome, took) = run_one(&d, budget)?;
            overall.add(outcome, took);
            let mut row = vec![
                i.to_string(),
                d.min_term().to_string(),
                d.max_term().to_string(),
                d.sum().to_string(),
                outcome.label().to_string(),
            ];
            if opts.timing {
                row.push(took.as_micros().to_string());
            }
            if opts.sequences {
                row.push(d.to_string());
            }
            out.write_record(&row)?;
        }
    }
    out.flush()?;

    eprintln!(
        "instances: {}, decided within {}s: {} ({:.4}), forcibly biconnected: {} ({:.4} of decided)",
        overall.count,
        opts.budget,
        overall.decided,
        frac(overall.decided, overall.count),
        overall.forcibly,
        frac(overall.forcibly, overall.decided),
    );
    if opts.timing {
        eprintln!(
            "mean time: {:.3} ms, max time: {:.3} ms",
            overall.mean_ms(),
            overall.worst.as_secs_f64() * 1e3
        );
    }
    if overall.timeouts() > 0 {
        return Err(anyhow::Error::new(Error::Timeout)
            .context(format!("{} instance(s) timed out", overall.timeouts())));
    }
    Ok(())
}
