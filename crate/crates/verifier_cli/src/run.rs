use std::time::Instant;

use duality_theorems::{CheckResult, Params, Subject};
use rayon::prelude::*;

use crate::config::Config;
use crate::plan::Plan;
use crate::report::{Report, Row};

fn execute(config: &Config, plan: &Plan) -> Report {
    let start = Instant::now();
    let degree = config.cap.min(config.g_max.max(1));
    let subjects: Vec<Result<Subject, String>> = plan
        .subjects
        .par_iter()
        .map(|k| Subject::canonical(config.model, k.even, k.odd, k.flavor, degree).map_err(|e| e.to_string()))
        .collect();
    let rows: Vec<Row> = plan
        .tasks
        .par_iter()
        .map(|task| {
            let began = Instant::now();
            let result = match task.subject() {
                Some(i) => match &subjects[i] {
                    Ok(subject) => task.run_on(subject),
                    Err(e) => {
                        let key = plan.subjects[i];
                        let params = Params {
                            model: config.model.name().to_string(),
                            even: key.even,
                            odd: key.odd,
                            flavor: Some(key.flavor.name().to_string()),
                            degrees: Default::default(),
                        };
                        Some(CheckResult::errored(task.id(), params, e))
                    }
                },
                None => task.run_free(config.seed),
            }
            .expect("tasks with a subject index run on a subject");
            let ms = if config.timings { began.elapsed().as_millis() as u64 } else { 0 };
            Row { result, ms }
        })
        .collect();
    let elapsed_ms = if config.timings { start.elapsed().as_millis() as u64 } else { 0 };
    Report::new(config.clone(), rows, elapsed_ms)
}

/// Runs every check of `config` and collects the results in plan order,
/// independent of the number of worker threads.
pub fn run(config: &Config) -> Report {
    let plan = Plan::new(config);
    if config.jobs == 0 {
        return execute(config, &plan);
    }
    match rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build() {
        Ok(pool) => pool.install(|| execute(config, &plan)),
        Err(_) => execute(config, &plan),
    }
}
