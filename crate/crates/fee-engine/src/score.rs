use serde::Serialize;

use crate::error::{param, FeeError};

/// Outcome class of a prediction relative to the hindsight optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScoreClass {
    Optimal,
    Late,
    Overpay,
}

/// Signed ladder distance between a predicted bucket and the
/// hindsight-optimal one. Zero is optimal; negative means the cheaper
/// prediction missed the deadline; positive means fee was overpaid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Score {
    pub value: i64,
    pub class: ScoreClass,
}

fn ladder_index(ladder: &[f64], bucket: f64) -> Result<usize, FeeError> {
    ladder
        .iter()
        .position(|phi| *phi == bucket)
        .ok_or_else(|| FeeError::Param(format!("bucket {bucket} is not on the ladder")))
}

/// Score a prediction as its index distance to the oracle bucket.
///
/// ```
/// use fee_engine::{score, ScoreClass};
///
/// let ladder = [5.0, 10.0, 20.0, 50.0];
/// assert_eq!(score(20.0, 20.0, &ladder).unwrap().class, ScoreClass::Optimal);
/// assert_eq!(score(50.0, 10.0, &ladder).unwrap().value, 2);
/// assert_eq!(score(5.0, 10.0, &ladder).unwrap().class, ScoreClass::Late);
/// ```
pub fn score(method_bucket: f64, oracle_bucket: f64, ladder: &[f64]) -> Result<Score, FeeError> {
    if ladder.windows(2).any(|w| w[0] >= w[1]) {
        return param("ladder must be strictly ascending".to_string());
    }
    let method_idx = ladder_index(ladder, method_bucket)? as i64;
    let oracle_idx = ladder_index(ladder, oracle_bucket)? as i64;
    let value = method_idx - oracle_idx;
    let class = match value.cmp(&0) {
        std::cmp::Ordering::Equal => ScoreClass::Optimal,
        std::cmp::Ordering::Less => ScoreClass::Late,
        std::cmp::Ordering::Greater => ScoreClass::Overpay,
    };
    Ok(Score { value, class })
}

/// Aggregate performance of one method over a batch of decisions:
/// share of optimal picks, share and conditional mean of late ones,
/// share and conditional mean of overpaid ones.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreSummary {
    pub total: usize,
    pub optimal_pct: f64,
    pub late_pct: f64,
    pub mean_lateness: Option<f64>,
    pub overpay_pct: f64,
    pub mean_overpay: Option<f64>,
}

/// Fold scores into the summary-table shape.
///
/// `late_times` holds, for each late decision in order, how many block
/// units past the target the confirmation actually arrived;
/// `overpay_steps` holds the ladder distance for each overpaid one.
pub fn summarize_scores(
    scores: &[Score],
    late_times: &[f64],
    overpay_steps: &[f64],
) -> Result<ScoreSummary, FeeError> {
    if scores.is_empty() {
        return param("cannot summarize an empty score list".to_string());
    }
    let total = scores.len();
    let optimal = scores.iter().filter(|s| s.class == ScoreClass::Optimal).count();
    let late = scores.iter().filter(|s| s.class == ScoreClass::Late).count();
    let overpay = total - optimal - late;
    if late_times.len() != late {
        return param(format!(
            "{} lateness entries for {late} late scores",
            late_times.len()
        ));
    }
    if overpay_steps.len() != overpay {
        return param(format!(
            "{} overpay entries for {overpay} overpaid scores",
            overpay_steps.len()
        ));
    }
    if late_times.iter().chain(overpay_steps).any(|v| !v.is_finite()) {
        return param("lateness and overpay magnitudes must be finite".to_string());
    }
    let pct = |count: usize| 100.0 * count as f64 / total as f64;
    let mean = |values: &[f64]| {
        if values.is_empty() {
            None
        } else {
            Some(values.iter().sum::<f64>() / values.len() as f64)
        }
    };
    Ok(ScoreSummary {
        total,
        optimal_pct: pct(optimal),
        late_pct: pct(late),
        mean_lateness: mean(late_times),
        overpay_pct: pct(overpay),
        mean_overpay: mean(overpay_steps),
    })
}
