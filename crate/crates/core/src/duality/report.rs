use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One checked equation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawCheck {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// All laws checked on one instance. `passed()` is true iff every recorded
/// equation held exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub instance: String,
    pub laws: Vec<LawCheck>,
}

impl AdjunctionReport {
    pub fn new(instance: impl Into<String>) -> Self {
        AdjunctionReport {
            instance: instance.into(),
            laws: Vec::new(),
        }
    }

    /// Records a law; the witness is only built on failure.
    pub fn record(&mut self, name: &str, pass: bool, witness: impl FnOnce() -> Value) {
        self.laws.push(LawCheck {
            name: name.to_string(),
            pass,
            witness: if pass { None } else { Some(witness()) },
        });
    }

    /// Records a law from a check returning the failing witness, if any.
    pub fn check(&mut self, name: &str, outcome: Option<Value>) {
        self.laws.push(LawCheck {
            name: name.to_string(),
            pass: outcome.is_none(),
            witness: outcome,
        });
    }

    /// Records a law that could not be evaluated.
    pub fn error(&mut self, name: &str, err: impl std::fmt::Display) {
        self.check(name, Some(serde_json::json!({ "error": err.to_string() })));
    }

    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.laws.iter().filter(|l| !l.pass)
    }

    /// Appends the laws of `other`, keeping this report's instance id.
    pub fn absorb(&mut self, other: AdjunctionReport) {
        self.laws.extend(other.laws);
    }
}

/// Reports for many instances, kept sorted by instance id so that merging
/// is associative and independent of evaluation order.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub reports: Vec<AdjunctionReport>,
}

impl SuiteReport {
    pub fn from_reports(mut reports: Vec<AdjunctionReport>) -> Self {
        reports.sort_by(|a, b| a.instance.cmp(&b.instance));
        SuiteReport { reports }
    }

    pub fn merge(self, other: SuiteReport) -> SuiteReport {
        let mut all = self.reports;
        all.extend(other.reports);
        SuiteReport::from_reports(all)
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(AdjunctionReport::passed)
    }

    pub fn law_count(&self) -> usize {
        self.reports.iter().map(|r| r.laws.len()).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.reports.iter().map(|r| r.failures().count()).sum()
    }

    pub fn failing(&self) -> impl Iterator<Item = &AdjunctionReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn report(id: &str, pass: bool) -> AdjunctionReport {
        let mut r = AdjunctionReport::new(id);
        r.record("law", pass, || json!({ "x": 1 }));
        r
    }

    #[test]
    fn witness_only_on_failure() {
        let r = report("a", true);
        assert!(r.passed());
        assert!(r.laws[0].witness.is_none());
        let r = report("a", false);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.laws[0].witness, Some(json!({ "x": 1 })));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(report("p", false)).unwrap();
        assert_eq!(
            v,
            json!({ "instance": "p", "laws": [{ "name": "law", "pass": false, "witness": { "x": 1 } }] })
        );
    }

    #[test]
    fn merge_is_associative_and_order_free() {
        let a = SuiteReport::from_reports(vec![report("c", true)]);
        let b = SuiteReport::from_reports(vec![report("a", false)]);
        let c = SuiteReport::from_reports(vec![report("b", true)]);
        let left = a.clone().merge(b.clone()).merge(c.clone());
        let right = a.clone().merge(b.clone().merge(c.clone()));
        assert_eq!(left, right);
        assert_eq!(left, c.merge(b).merge(a));
        assert_eq!(left.failure_count(), 1);
        assert!(!left.passed());
    }
}
