use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

/// One checkable claim about finite semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    GreenPartitions,
    GreenCompatibility,
    StarRefinement,
    CliffordTh3,
    CliffordLem4,
    CliffordCor1,
    CliffordCor4,
    GreenTh7,
    Uniqueness,
    OracleEquivalence,
    FourStatements,
    WitnessIdempotents,
    ExistenceTrace,
    InnerTrace,
    GroupFormula,
    GroupCriteria,
    Bicommutant,
    CommutingRemark,
    HClassDependence,
    ClassicalGroup,
    ClassicalDrazin,
    StrongPiRegular,
    ExistenceCriteria,
    ClassicalMp,
    MpCriterion,
    Patricio,
    Koliha,
}

impl CheckId {
    pub const ALL: [CheckId; 27] = [
        CheckId::GreenPartitions,
        CheckId::GreenCompatibility,
        CheckId::StarRefinement,
        CheckId::CliffordTh3,
        CheckId::CliffordLem4,
        CheckId::CliffordCor1,
        CheckId::CliffordCor4,
        CheckId::GreenTh7,
        CheckId::Uniqueness,
        CheckId::OracleEquivalence,
        CheckId::FourStatements,
        CheckId::WitnessIdempotents,
        CheckId::ExistenceTrace,
        CheckId::InnerTrace,
        CheckId::GroupFormula,
        CheckId::GroupCriteria,
        CheckId::Bicommutant,
        CheckId::CommutingRemark,
        CheckId::HClassDependence,
        CheckId::ClassicalGroup,
        CheckId::ClassicalDrazin,
        CheckId::StrongPiRegular,
        CheckId::ExistenceCriteria,
        CheckId::ClassicalMp,
        CheckId::MpCriterion,
        CheckId::Patricio,
        CheckId::Koliha,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::GreenPartitions => "green-partitions",
            CheckId::GreenCompatibility => "green-compatibility",
            CheckId::StarRefinement => "star-refinement",
            CheckId::CliffordTh3 => "clifford-th3",
            CheckId::CliffordLem4 => "clifford-lem4",
            CheckId::CliffordCor1 => "clifford-cor1",
            CheckId::CliffordCor4 => "clifford-cor4",
            CheckId::GreenTh7 => "green-th7",
            CheckId::Uniqueness => "uniqueness",
            CheckId::OracleEquivalence => "oracle-equivalence",
            CheckId::FourStatements => "thm-four-statements",
            CheckId::WitnessIdempotents => "cor-witness-idempotents",
            CheckId::ExistenceTrace => "thm-existence-trace",
            CheckId::InnerTrace => "cor-inner-trace",
            CheckId::GroupFormula => "cor-group-formula",
            CheckId::GroupCriteria => "cor-group-criteria",
            CheckId::Bicommutant => "thm-bicommutant",
            CheckId::CommutingRemark => "remark-commuting",
            CheckId::HClassDependence => "h-class-dependence",
            CheckId::ClassicalGroup => "thm-classical-group",
            CheckId::ClassicalDrazin => "thm-classical-drazin",
            CheckId::StrongPiRegular => "drazin-strong-pi-regular",
            CheckId::ExistenceCriteria => "cor-existence-criteria",
            CheckId::ClassicalMp => "thm-classical-mp",
            CheckId::MpCriterion => "cor-mp-criterion",
            CheckId::Patricio => "prop-patricio",
            CheckId::Koliha => "thm-koliha",
        }
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.as_str() == s)
    }

    /// Checks that only make sense with an involution.
    pub fn needs_star(self) -> bool {
        matches!(
            self,
            CheckId::ClassicalMp | CheckId::MpCriterion | CheckId::Patricio | CheckId::Koliha
        )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Cayley serialization of the semigroup (and involution, if any).
    pub semigroup: String,
    /// `(role, label)` of each element involved.
    pub elements: Vec<(String, String)>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub instances: u64,
    pub failures: u64,
    pub first_failure: Option<Counterexample>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub semigroups: u64,
    pub involutions: u64,
    /// Enumerated semigroups per order, for sweeps.
    pub orders: BTreeMap<usize, u64>,
    pub outcomes: BTreeMap<CheckId, CheckOutcome>,
    pub skipped: BTreeSet<CheckId>,
}

impl VerificationReport {
    pub fn outcome(&self, id: CheckId) -> CheckOutcome {
        self.outcomes.get(&id).cloned().unwrap_or_default()
    }

    pub fn total_failures(&self) -> u64 {
        self.outcomes.values().map(|o| o.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub(crate) fn touch(&mut self, id: CheckId) {
        self.outcomes.entry(id).or_default();
    }

    pub(crate) fn record(
        &mut self,
        id: CheckId,
        ok: bool,
        failure: impl FnOnce() -> Counterexample,
    ) {
        let o = self.outcomes.entry(id).or_default();
        o.instances += 1;
        if !ok {
            o.failures += 1;
            if o.first_failure.is_none() {
                o.first_failure = Some(failure());
            }
        }
    }

    /// Combine with a report that comes later in the run order. Associative,
    /// so any grouping of an ordered sequence yields the same result.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.semigroups += other.semigroups;
        self.involutions += other.involutions;
        for (order, k) in other.orders {
            *self.orders.entry(order).or_default() += k;
        }
        for (id, o) in other.outcomes {
            let mine = self.outcomes.entry(id).or_default();
            mine.instances += o.instances;
            mine.failures += o.failures;
            if mine.first_failure.is_none() {
                mine.first_failure = o.first_failure;
            }
        }
        self.skipped.extend(other.skipped);
        self
    }

    /// `CHECK <id> instances=<n> failures=<m>` per check, with an indented
    /// counterexample block after any failing one.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (id, o) in &self.outcomes {
            if o.instances == 0 && self.skipped.contains(id) {
                continue;
            }
            let _ = writeln!(
                out,
                "CHECK {} instances={} failures={}",
                id, o.instances, o.failures
            );
            if let Some(cx) = &o.first_failure {
                let _ = writeln!(out, "  counterexample: {}", cx.detail);
                let elems: Vec<String> = cx
                    .elements
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let _ = writeln!(out, "  elements: {}", elems.join(" "));
                for line in cx.semigroup.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        for id in &self.skipped {
            if self.outcome(*id).instances == 0 {
                let _ = writeln!(out, "SKIP {id} (no involution)");
            }
        }
        for (order, k) in &self.orders {
            let _ = writeln!(out, "ORDER {order} semigroups={k}");
        }
        let _ = writeln!(
            out,
            "SUMMARY semigroups={} involutions={} failures={}",
            self.semigroups,
            self.involutions,
            self.total_failures()
        );
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
