//! Scoring predicted subgraph sets against ground truth: thresholded
//! node-set matching, adapted precision and recall, and the F-measure.
//!
//! Matching compares node sets only and normalizes every ratio by the size
//! of the truth-side subgraph, whichever argument plays that role. All
//! thresholds are strict upper bounds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SgiSet, Subgraph};

/// Strict upper bounds on the three match ratios.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchThresholds {
    /// Bound on |pred \ truth| / |truth|.
    pub gamma_extra: f64,
    /// Bound on |truth \ pred| / |truth|.
    pub gamma_missing: f64,
    /// Bound on abs(|pred| - |truth|) / |truth|.
    pub gamma_size: f64,
}

impl MatchThresholds {
    pub fn new(gamma_extra: f64, gamma_missing: f64, gamma_size: f64) -> Self {
        MatchThresholds {
            gamma_extra,
            gamma_missing,
            gamma_size,
        }
    }

    pub fn uniform(gamma: f64) -> Self {
        Self::new(gamma, gamma, gamma)
    }
}

/// Which role the candidate plays in [`relevant`], so the truth side always
/// normalizes the ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateRole {
    Prediction,
    Truth,
}

/// True iff the prediction stays within all three thresholds of the truth
/// subgraph. The truth subgraph must have at least one node.
pub fn match_subgraphs(pred: &Subgraph, truth: &Subgraph, t: &MatchThresholds) -> Result<bool> {
    let truth_size = truth.node_count();
    if truth_size == 0 {
        return Err(Error::EmptyTruthSubgraph);
    }
    let truth_size = truth_size as f64;
    let extra = pred.nodes().difference(truth.nodes()).count() as f64 / truth_size;
    let missing = truth.nodes().difference(pred.nodes()).count() as f64 / truth_size;
    let size = (pred.node_count() as f64 - truth_size).abs() / truth_size;
    Ok(extra < t.gamma_extra && missing < t.gamma_missing && size < t.gamma_size)
}

/// True iff the candidate matches at least one member of the pool. The role
/// fixes the orientation: pool members stand in for the other role.
pub fn relevant(
    candidate: &Subgraph,
    pool: &SgiSet,
    t: &MatchThresholds,
    role: CandidateRole,
) -> Result<bool> {
    for member in pool.iter() {
        let matched = match role {
            CandidateRole::Prediction => match_subgraphs(candidate, member, t)?,
            CandidateRole::Truth => match_subgraphs(member, candidate, t)?,
        };
        if matched {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Share of predictions that match some truth subgraph. An empty prediction
/// set scores 0 (see [`evaluate`] for the degenerate flag).
pub fn precision(preds: &SgiSet, truth: &SgiSet, t: &MatchThresholds) -> Result<f64> {
    if preds.is_empty() {
        return Ok(0.0);
    }
    let mut matched = 0usize;
    for pred in preds.iter() {
        if relevant(pred, truth, t, CandidateRole::Prediction)? {
            matched += 1;
        }
    }
    Ok(matched as f64 / preds.len() as f64)
}

/// Share of truth subgraphs recovered by some prediction. The truth set must
/// be nonempty.
pub fn recall(preds: &SgiSet, truth: &SgiSet, t: &MatchThresholds) -> Result<f64> {
    if truth.is_empty() {
        return Err(Error::EmptyTruthSet);
    }
    let mut matched = 0usize;
    for member in truth.iter() {
        if relevant(member, preds, t, CandidateRole::Truth)? {
            matched += 1;
        }
    }
    Ok(matched as f64 / truth.len() as f64)
}

/// Weighted harmonic mean of precision and recall; 0 when both are 0.
pub fn f_score(precision: f64, recall: f64, beta: f64) -> f64 {
    let b2 = beta * beta;
    let denom = b2 * precision + recall;
    if denom == 0.0 {
        0.0
    } else {
        (1.0 + b2) * precision * recall / denom
    }
}

/// Full scoring report for one prediction/truth pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub precision: f64,
    pub recall: f64,
    pub f_score: f64,
    pub beta: f64,
    pub thresholds: MatchThresholds,
    /// Per prediction: did it match some truth subgraph?
    pub prediction_matched: Vec<bool>,
    /// Per truth subgraph: was it recovered by some prediction?
    pub truth_matched: Vec<bool>,
    pub empty_predictions: bool,
    pub empty_truth: bool,
}

impl EvalReport {
    /// Plain-text table for terminal output.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{:<22} {:>8}\n", "metric", "value"));
        out.push_str(&format!("{:-<31}\n", ""));
        out.push_str(&format!("{:<22} {:>8.4}\n", "precision", self.precision));
        out.push_str(&format!("{:<22} {:>8.4}\n", "recall", self.recall));
        out.push_str(&format!(
            "{:<22} {:>8.4}\n",
            format!("f{:.0}_score", self.beta),
            self.f_score
        ));
        out.push_str(&format!(
            "{:<22} {:>5}/{}\n",
            "predictions matched",
            self.prediction_matched.iter().filter(|&&m| m).count(),
            self.prediction_matched.len()
        ));
        out.push_str(&format!(
            "{:<22} {:>5}/{}\n",
            "truth recovered",
            self.truth_matched.iter().filter(|&&m| m).count(),
            self.truth_matched.len()
        ));
        if self.empty_predictions {
            out.push_str("note: prediction set is empty\n");
        }
        if self.empty_truth {
            out.push_str("note: truth set is empty\n");
        }
        out
    }
}

/// Score predictions against truth. Degenerate inputs (no predictions, no
/// truth) produce zero scores with flags instead of errors, so batch sweeps
/// never abort.
pub fn evaluate(
    preds: &SgiSet,
    truth: &SgiSet,
    t: &MatchThresholds,
    beta: f64,
) -> Result<EvalReport> {
    let mut prediction_matched = Vec::with_capacity(preds.len());
    for pred in preds.iter() {
        prediction_matched.push(relevant(pred, truth, t, CandidateRole::Prediction)?);
    }
    let mut truth_matched = Vec::with_capacity(truth.len());
    for member in truth.iter() {
        truth_matched.push(relevant(member, preds, t, CandidateRole::Truth)?);
    }
    let precision = if preds.is_empty() {
        0.0
    } else {
        prediction_matched.iter().filter(|&&m| m).count() as f64 / preds.len() as f64
    };
    let recall = if truth.is_empty() {
        0.0
    } else {
        truth_matched.iter().filter(|&&m| m).count() as f64 / truth.len() as f64
    };
    Ok(EvalReport {
        precision,
        recall,
        f_score: f_score(precision, recall, beta),
        beta,
        thresholds: *t,
        prediction_matched,
        truth_matched,
        empty_predictions: preds.is_empty(),
        empty_truth: truth.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(ids: &[&str]) -> Subgraph {
        Subgraph::from_node_ids(ids.iter().copied())
    }

    fn set(groups: &[&[&str]]) -> SgiSet {
        SgiSet::new("t", groups.iter().map(|g| sub(g)).collect())
    }

    #[test]
    fn identical_sets_match_at_any_positive_threshold() {
        let s = sub(&["A", "B", "C"]);
        for gamma in [1e-12, 0.1, 1.0, 100.0] {
            assert!(match_subgraphs(&s, &s, &MatchThresholds::uniform(gamma)).unwrap());
        }
    }

    #[test]
    fn match_ratios_evaluate_like_the_formulas() {
        let pred = sub(&["A", "B", "C", "X"]);
        let truth = sub(&["A", "B", "C", "D"]);
        // extra 1/4, missing 1/4, size 0.
        let t = MatchThresholds::new(0.3, 0.3, 0.1);
        assert!(match_subgraphs(&pred, &truth, &t).unwrap());
        let t = MatchThresholds::new(0.25, 0.3, 0.1);
        assert!(!match_subgraphs(&pred, &truth, &t).unwrap());

        let small = sub(&["A", "B"]);
        // missing 2/4 fails at 0.3.
        let t = MatchThresholds::uniform(0.3);
        assert!(!match_subgraphs(&small, &truth, &t).unwrap());
    }

    #[test]
    fn empty_truth_subgraph_is_an_error() {
        let pred = sub(&["A"]);
        let empty = sub(&[]);
        assert!(match_subgraphs(&pred, &empty, &MatchThresholds::uniform(0.5)).is_err());
    }

    #[test]
    fn zero_thresholds_reject_even_identity() {
        let s = sub(&["A", "B"]);
        assert!(!match_subgraphs(&s, &s, &MatchThresholds::uniform(0.0)).unwrap());
    }

    #[test]
    fn relevant_is_existential() {
        let t = MatchThresholds::uniform(0.3);
        let pool = set(&[&["A", "B", "C"], &["D", "E", "F"], &["G", "H"]]);
        let candidate = sub(&["D", "E", "F"]);
        assert!(relevant(&candidate, &pool, &t, CandidateRole::Prediction).unwrap());
        let stranger = sub(&["P", "Q", "R"]);
        assert!(!relevant(&stranger, &pool, &t, CandidateRole::Prediction).unwrap());
        let empty_pool = set(&[]);
        assert!(!relevant(&candidate, &empty_pool, &t, CandidateRole::Prediction).unwrap());
    }

    #[test]
    fn precision_counts_matching_predictions() {
        let t = MatchThresholds::uniform(0.3);
        let truth = set(&[&["A", "B", "C"], &["D", "E", "F"]]);
        let preds = set(&[&["A", "B", "C"], &["X", "Y", "Z"]]);
        assert_eq!(precision(&preds, &truth, &t).unwrap(), 0.5);
        assert_eq!(precision(&set(&[]), &truth, &t).unwrap(), 0.0);
    }

    #[test]
    fn recall_counts_recovered_truth() {
        let t = MatchThresholds::uniform(0.3);
        let truth = set(&[&["A", "B"], &["C", "D"], &["E", "F"], &["G", "H"]]);
        let preds = set(&[&["A", "B"], &["C", "D"], &["E", "F"]]);
        assert_eq!(recall(&preds, &truth, &t).unwrap(), 0.75);
        assert_eq!(recall(&set(&[]), &truth, &t).unwrap(), 0.0);
        assert!(recall(&preds, &set(&[]), &t).is_err());
    }

    #[test]
    fn f_score_contract_points() {
        assert_eq!(f_score(1.0, 1.0, 1.0), 1.0);
        assert_eq!(f_score(0.0, 0.7, 1.0), 0.0);
        assert!((f_score(0.5, 1.0, 1.0) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(f_score(0.0, 0.0, 1.0), 0.0);
    }

    #[test]
    fn evaluate_reports_flags_and_consistent_scores() {
        let t = MatchThresholds::uniform(0.3);
        let truth = set(&[&["A", "B", "C"]]);
        let report = evaluate(&truth, &truth, &t, 1.0).unwrap();
        assert_eq!(report.precision, 1.0);
        assert_eq!(report.recall, 1.0);
        assert_eq!(report.f_score, 1.0);
        assert!(!report.empty_predictions);

        let report = evaluate(&set(&[]), &truth, &t, 1.0).unwrap();
        assert_eq!(report.precision, 0.0);
        assert_eq!(report.recall, 0.0);
        assert!(report.empty_predictions);
        assert!(!report.empty_truth);

        let report = evaluate(&truth, &set(&[]), &t, 1.0).unwrap();
        assert!(report.empty_truth);
        assert_eq!(report.recall, 0.0);
    }

    #[test]
    fn report_table_mentions_degenerate_cases() {
        let t = MatchThresholds::uniform(0.3);
        let truth = set(&[&["A"]]);
        let report = evaluate(&set(&[]), &truth, &t, 1.0).unwrap();
        let table = report.to_table();
        assert!(table.contains("prediction set is empty"));
        assert!(table.contains("precision"));
    }
}
