use std::time::Duration;

use num_bigint::BigUint;
use serde::Serialize;

use crate::counting::CountStats;
use crate::graph::UndirectedGraph;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct StageTimings {
    pub pattern_extensions: f64,
    pub product: f64,
    pub host_extension: f64,
    pub dp: f64,
    pub total: f64,
}

/// Machine-readable summary of one counting run. Counts are decimal strings
/// so they survive JSON consumers without 64-bit limits.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub count: String,
    pub licl: usize,
    pub t: u32,
    pub n_extensions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spasm_size: Option<usize>,
    pub kappa: usize,
    pub delta_plus: usize,
    pub n: usize,
    pub m: usize,
    pub used_fallback: bool,
    pub stage_timings_ms: StageTimings,
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl RunReport {
    pub fn new(count: &BigUint, stats: &CountStats, host: &UndirectedGraph, total: Duration) -> Self {
        RunReport {
            count: count.to_string(),
            licl: stats.licl,
            t: stats.depth,
            n_extensions: stats.n_extensions,
            spasm_size: None,
            kappa: stats.kappa,
            delta_plus: stats.delta_plus,
            n: host.n(),
            m: host.m(),
            used_fallback: stats.used_fallback,
            stage_timings_ms: StageTimings {
                pattern_extensions: millis(stats.pattern_extensions),
                product: millis(stats.product),
                host_extension: millis(stats.host_extension),
                dp: millis(stats.dp),
                total: millis(total),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key: value` lines for terminal output.
    pub fn to_text(&self) -> String {
        let t = &self.stage_timings_ms;
        let mut s = format!(
            "count: {}\nlicl: {}\nt: {}\nn_extensions: {}\n",
            self.count, self.licl, self.t, self.n_extensions
        );
        if let Some(k) = self.spasm_size {
            s += &format!("spasm_size: {k}\n");
        }
        s += &format!(
            "host: n={} m={} kappa={} delta_plus={}\n",
            self.n, self.m, self.kappa, self.delta_plus
        );
        if self.used_fallback {
            s += "fallback: brute force\n";
        }
        s += &format!(
            "timings_ms: extensions={:.2} product={:.2} host_extension={:.2} dp={:.2} total={:.2}\n",
            t.pattern_extensions, t.product, t.host_extension, t.dp, t.total
        );
        s
    }
}
