//! Exhaustive checks of the structural and inverse-related claims over a
//! single finite semigroup.
//!
//! Where a claim relates a computed quantity to a definition, the definition
//! side is evaluated by brute force here (group-ness of an H-class by its
//! table, principal ideals as sets, inverses by scanning `S`) rather than via
//! the fast routes in [`crate::green`] and [`crate::inverses`].

use std::collections::BTreeSet;

use crate::format::to_cayley_text;
use crate::green::{
    green_relations, is_trace_product, star_relations, trace_product_criterion_check,
    GreenStructure, StarStructure,
};
use crate::inverses::{
    bicommutant, drazin_inverse, drazin_oracle, four_statements, group_inverse,
    group_inverse_oracle, inverse_along, inverse_along_oracle, inverse_along_right, inverses,
    moore_penrose, moore_penrose_oracle, satisfies_drazin_axioms, InverseAlongResult,
};
use crate::semigroup::{ElementId, MonoidView, Semigroup, StarSemigroup};

use super::report::{CheckId, Counterexample, VerificationReport};

/// Whether `members` forms a group under the table of `s`: closed, with an
/// identity among the members and an inverse for each.
pub fn is_group_by_table(s: &Semigroup, members: &[ElementId]) -> bool {
    let inside = |x: ElementId| members.contains(&x);
    if !members
        .iter()
        .all(|&x| members.iter().all(|&y| inside(s.mul(x, y))))
    {
        return false;
    }
    let Some(e) = members.iter().copied().find(|&e| {
        members
            .iter()
            .all(|&x| s.mul(e, x) == x && s.mul(x, e) == x)
    }) else {
        return false;
    };
    members.iter().all(|&x| {
        members
            .iter()
            .any(|&y| s.mul(x, y) == e && s.mul(y, x) == e)
    })
}

struct Checker<'a> {
    s: &'a Semigroup,
    g: GreenStructure,
    star_rel: StarStructure,
    enabled: [bool; CheckId::ALL.len()],
    /// Criterion-route inverse along, indexed `[a * n + d]`.
    along: Vec<Option<InverseAlongResult>>,
    /// Brute-force group test per H-class.
    h_group: Vec<bool>,
    star: Option<Vec<ElementId>>,
}

impl<'a> Checker<'a> {
    fn new(s: &'a Semigroup, checks: &[CheckId]) -> Self {
        let g = green_relations(s);
        let mut enabled = [false; CheckId::ALL.len()];
        for &c in checks {
            enabled[c as usize] = true;
        }
        let along = s
            .elements()
            .flat_map(|a| s.elements().map(move |d| (a, d)))
            .map(|(a, d)| inverse_along(s, &g, a, d))
            .collect();
        let h_group = (0..g.h_class_count())
            .map(|h| is_group_by_table(s, g.h_members(h)))
            .collect();
        Checker {
            s,
            star_rel: star_relations(s),
            g,
            enabled,
            along,
            h_group,
            star: None,
        }
    }

    fn on(&self, id: CheckId) -> bool {
        self.enabled[id as usize]
    }

    fn along(&self, a: ElementId, d: ElementId) -> Option<InverseAlongResult> {
        self.along[a.index() * self.s.size() + d.index()]
    }

    fn h_is_group(&self, x: ElementId) -> bool {
        self.h_group[self.g.h_class(x)]
    }

    fn record(
        &self,
        report: &mut VerificationReport,
        id: CheckId,
        ok: bool,
        elements: &[(&str, ElementId)],
        detail: impl FnOnce() -> String,
    ) {
        report.record(id, ok, || Counterexample {
            semigroup: to_cayley_text(self.s, self.star.as_deref()),
            elements: elements
                .iter()
                .map(|&(k, x)| (k.to_string(), self.s.label(x).to_string()))
                .collect(),
            detail: detail(),
        });
    }

    fn run_structural(&self, report: &mut VerificationReport) {
        let s = self.s;
        let g = &self.g;

        if self.on(CheckId::GreenPartitions) {
            let m = MonoidView::new(s);
            let left_ideal: Vec<BTreeSet<ElementId>> = s
                .elements()
                .map(|a| m.elements().map(|x| m.mul(x, a)).collect())
                .collect();
            let right_ideal: Vec<BTreeSet<ElementId>> = s
                .elements()
                .map(|a| m.elements().map(|x| m.mul(a, x)).collect())
                .collect();
            for a in s.elements() {
                for b in s.elements() {
                    let l = left_ideal[a.index()] == left_ideal[b.index()];
                    let r = right_ideal[a.index()] == right_ideal[b.index()];
                    let d = s.elements().any(|c| {
                        left_ideal[a.index()] == left_ideal[c.index()]
                            && right_ideal[c.index()] == right_ideal[b.index()]
                    });
                    let ok = g.same_l(a, b) == l
                        && g.same_r(a, b) == r
                        && g.same_h(a, b) == (l && r)
                        && (g.d_class(a) == g.d_class(b)) == d;
                    self.record(
                        report,
                        CheckId::GreenPartitions,
                        ok,
                        &[("a", a), ("b", b)],
                        || "class ids disagree with principal ideals".into(),
                    );
                }
            }
            let mut seen = BTreeSet::new();
            let mut ok = true;
            for block in g.blocks() {
                for (i, row) in block.cells.iter().enumerate() {
                    for (j, cell) in row.iter().enumerate() {
                        ok &= !cell.is_empty();
                        for &x in cell {
                            ok &= g.r_class(x) == block.rows[i]
                                && g.l_class(x) == block.cols[j]
                                && g.d_class(x) == block.d_class
                                && seen.insert(x);
                        }
                    }
                }
            }
            ok &= seen.len() == s.size();
            self.record(report, CheckId::GreenPartitions, ok, &[], || {
                "egg-box cells do not partition the D-classes".into()
            });
        }

        if self.on(CheckId::GreenCompatibility) {
            for a in s.elements() {
                for b in s.elements() {
                    if g.same_l(a, b) {
                        let ok = s.elements().all(|c| g.same_l(s.mul(a, c), s.mul(b, c)));
                        self.record(
                            report,
                            CheckId::GreenCompatibility,
                            ok,
                            &[("a", a), ("b", b)],
                            || "L not right compatible".into(),
                        );
                    }
                    if g.same_r(a, b) {
                        let ok = s.elements().all(|c| g.same_r(s.mul(c, a), s.mul(c, b)));
                        self.record(
                            report,
                            CheckId::GreenCompatibility,
                            ok,
                            &[("a", a), ("b", b)],
                            || "R not left compatible".into(),
                        );
                    }
                }
            }
        }

        if self.on(CheckId::StarRefinement) {
            for a in s.elements() {
                for b in s.elements() {
                    let ok = (!g.same_l(a, b) || self.star_rel.same_l_star(a, b))
                        && (!g.same_r(a, b) || self.star_rel.same_r_star(a, b));
                    self.record(
                        report,
                        CheckId::StarRefinement,
                        ok,
                        &[("a", a), ("b", b)],
                        || "L or R not contained in L* or R*".into(),
                    );
                }
            }
        }

        if self.on(CheckId::CliffordTh3) {
            for a in s.elements() {
                for b in s.elements() {
                    let trace = is_trace_product(s, g, a, b);
                    let mut ok = trace == trace_product_criterion_check(g, a, b);
                    if ok && trace {
                        let ha = g.h_class_of(a);
                        let hb = g.h_class_of(b);
                        let a_hb: BTreeSet<_> = hb.iter().map(|&y| s.mul(a, y)).collect();
                        let ha_b: BTreeSet<_> = ha.iter().map(|&x| s.mul(x, b)).collect();
                        let ha_hb: BTreeSet<_> = ha
                            .iter()
                            .flat_map(|&x| hb.iter().map(move |&y| s.mul(x, y)))
                            .collect();
                        let h_ab: BTreeSet<_> = g.h_class_of(s.mul(a, b)).iter().copied().collect();
                        let ra_lb: BTreeSet<_> = g.r_cap_l(a, b).iter().copied().collect();
                        ok = a_hb == h_ab && ha_b == h_ab && ha_hb == h_ab && ra_lb == h_ab;
                    }
                    self.record(
                        report,
                        CheckId::CliffordTh3,
                        ok,
                        &[("a", a), ("b", b)],
                        || format!("trace product={trace} but criterion or set equalities differ"),
                    );
                }
            }
        }

        if self.on(CheckId::CliffordLem4) {
            for e in s.elements().filter(|&e| g.is_idempotent(e)) {
                let ok = s.elements().all(|x| {
                    (!g.same_l(x, e) || s.mul(x, e) == x) && (!g.same_r(x, e) || s.mul(e, x) == x)
                });
                self.record(report, CheckId::CliffordLem4, ok, &[("e", e)], || {
                    "idempotent is not a one-sided identity on its class".into()
                });
            }
        }

        if self.on(CheckId::CliffordCor1) {
            for h in 0..g.h_class_count() {
                let idem = g
                    .h_members(h)
                    .iter()
                    .filter(|&&x| g.is_idempotent(x))
                    .count();
                self.record(
                    report,
                    CheckId::CliffordCor1,
                    idem <= 1,
                    &[("h", g.h_members(h)[0])],
                    || format!("H-class holds {idem} idempotents"),
                );
            }
            for a in s.elements() {
                let invs = inverses(s, a);
                for h in 0..g.h_class_count() {
                    let b = g.h_members(h)[0];
                    let here = invs.iter().filter(|&&x| g.h_class(x) == h).count();
                    let criterion =
                        g.idempotent_in(a, b).is_some() && g.idempotent_in(b, a).is_some();
                    let ok = (here > 0) == criterion && here <= 1;
                    self.record(
                        report,
                        CheckId::CliffordCor1,
                        ok,
                        &[("a", a), ("b", b)],
                        || format!("{here} inverses of a in H_b, idempotent criterion {criterion}"),
                    );
                }
            }
        }

        if self.on(CheckId::CliffordCor4) {
            for a in s.elements() {
                for b in inverses(s, a) {
                    let commute = s.mul(a, b) == s.mul(b, a);
                    let mut ok = commute == g.same_h(a, b);
                    if ok && commute {
                        ok =
                            self.h_is_group(a) && g.h_idempotent(g.h_class(a)) == Some(s.mul(a, b));
                    }
                    self.record(
                        report,
                        CheckId::CliffordCor4,
                        ok,
                        &[("a", a), ("a'", b)],
                        || {
                            format!(
                                "mutual inverses: commute={commute}, same H={}",
                                g.same_h(a, b)
                            )
                        },
                    );
                }
            }
        }

        if self.on(CheckId::GreenTh7) {
            for h in 0..g.h_class_count() {
                let x = g.h_members(h)[0];
                let ok = g.h_idempotent(h).is_some() == self.h_group[h];
                self.record(report, CheckId::GreenTh7, ok, &[("h", x)], || {
                    "idempotent presence disagrees with the group test".into()
                });
            }
            for a in s.elements() {
                for b in s.elements() {
                    if g.same_h(a, b) && g.same_h(a, s.mul(a, b)) {
                        self.record(
                            report,
                            CheckId::GreenTh7,
                            self.h_is_group(a),
                            &[("a", a), ("b", b)],
                            || "a, b, ab share an H-class that is not a group".into(),
                        );
                    }
                }
            }
        }
    }

    fn run_pairs(&self, report: &mut VerificationReport) {
        let s = self.s;
        let g = &self.g;
        let trace = |x: ElementId, y: ElementId| is_trace_product(s, g, x, y);
        for a in s.elements() {
            for d in s.elements() {
                let along = self.along(a, d);
                let oracle = inverse_along_oracle(s, a, d);
                let els = [("a", a), ("d", d)];

                if self.on(CheckId::Uniqueness) {
                    self.record(report, CheckId::Uniqueness, oracle.is_ok(), &els, || {
                        format!("{:?}", oracle.as_ref().unwrap_err())
                    });
                }
                if self.on(CheckId::OracleEquivalence) {
                    let ok = matches!(oracle, Ok(o) if o == along.map(|r| r.b));
                    self.record(report, CheckId::OracleEquivalence, ok, &els, || {
                        format!("criterion {:?} vs oracle {:?}", along.map(|r| r.b), oracle)
                    });
                }
                let exists = matches!(oracle, Ok(Some(_)));

                if self.on(CheckId::FourStatements) {
                    let st = four_statements(s, g, a, d);
                    let ok = st.iter().all(|&x| x == exists);
                    self.record(report, CheckId::FourStatements, ok, &els, || {
                        format!("statements {st:?}, oracle existence {exists}")
                    });
                }

                if self.on(CheckId::ExistenceTrace) {
                    let via_trace = s.elements().any(|e| {
                        g.is_idempotent(e) && g.same_r(e, d) && {
                            let ae = s.mul(a, e);
                            trace(ae, d) && trace(d, ae)
                        }
                    });
                    self.record(
                        report,
                        CheckId::ExistenceTrace,
                        via_trace == exists,
                        &els,
                        || {
                            format!(
                                "trace-product criterion {via_trace}, oracle existence {exists}"
                            )
                        },
                    );
                }

                if self.on(CheckId::InnerTrace) {
                    let inner = matches!(oracle, Ok(Some(b)) if s.product(&[a, b, a]) == a);
                    let crit = trace(a, d) && trace(d, a);
                    let flag_ok = along.is_none_or(|r| r.inner == (s.product(&[a, r.b, a]) == a));
                    self.record(
                        report,
                        CheckId::InnerTrace,
                        inner == crit && flag_ok,
                        &els,
                        || format!("inner {inner}, ad and da trace products {crit}"),
                    );
                }

                if self.on(CheckId::GroupCriteria) {
                    let ad = s.mul(a, d);
                    let da = s.mul(d, a);
                    let left = g.same_l(ad, d) && self.h_is_group(ad);
                    let right = g.same_r(da, d) && self.h_is_group(da);
                    self.record(
                        report,
                        CheckId::GroupCriteria,
                        left == exists && right == exists,
                        &els,
                        || format!("ad-criterion {left}, da-criterion {right}, existence {exists}"),
                    );
                }

                if self.on(CheckId::HClassDependence) {
                    let b = along.map(|r| r.b);
                    for &d2 in g.h_class_of(d) {
                        let ok = self.along(a, d2).map(|r| r.b) == b;
                        self.record(
                            report,
                            CheckId::HClassDependence,
                            ok,
                            &[("a", a), ("d", d), ("d'", d2)],
                            || "inverse along differs within an H-class".into(),
                        );
                    }
                }

                let Ok(Some(b)) = oracle else { continue };
                let els = [("a", a), ("d", d), ("b", b)];

                if self.on(CheckId::WitnessIdempotents) {
                    let (e, f) = (s.mul(b, a), s.mul(a, b));
                    let ok = g.is_idempotent(e)
                        && g.same_r(e, d)
                        && g.is_idempotent(f)
                        && g.same_l(f, d)
                        && along.is_some_and(|r| r.e_witness == e && r.f_witness == f);
                    self.record(report, CheckId::WitnessIdempotents, ok, &els, || {
                        "ba not in R_d ∩ E(S) or ab not in L_d ∩ E(S)".into()
                    });
                }

                if self.on(CheckId::GroupFormula) {
                    let left = along.map(|r| s.mul(d, r.group_witness));
                    let right = inverse_along_right(s, g, a, d);
                    let ok = left == Some(b) && right == Some(b);
                    self.record(report, CheckId::GroupFormula, ok, &els, || {
                        format!("d(ad)# = {left:?}, (da)#d = {right:?}")
                    });
                }

                if self.on(CheckId::Bicommutant) {
                    let ok = bicommutant(s, &[a, d]).contains(b);
                    self.record(report, CheckId::Bicommutant, ok, &els, || {
                        "b not in {a,d}''".into()
                    });
                }

                if self.on(CheckId::CommutingRemark) && s.mul(a, d) == s.mul(d, a) {
                    let ok = s.mul(b, a) == s.mul(a, b)
                        && s.mul(b, d) == s.mul(d, b)
                        && g.same_h(d, s.mul(a, d))
                        && self.h_is_group(d);
                    self.record(report, CheckId::CommutingRemark, ok, &els, || {
                        "ad = da but b does not commute or H_d is not the group H_ad".into()
                    });
                }
            }
        }
    }

    fn run_elements(&self, report: &mut VerificationReport) {
        let s = self.s;
        let g = &self.g;
        for a in s.elements() {
            let els = [("a", a)];
            let grp = group_inverse(s, g, a);
            let grp_oracle = group_inverse_oracle(s, a);

            if self.on(CheckId::ClassicalGroup) {
                let ok = grp_oracle.len() <= 1
                    && grp_oracle.first().copied() == grp
                    && self.along(a, a).is_none_or(|r| r.inner);
                self.record(report, CheckId::ClassicalGroup, ok, &els, || {
                    format!("along a: {grp:?}, axioms: {grp_oracle:?}")
                });
            }

            let drazin = drazin_inverse(s, g, a);
            let dz_oracle = drazin_oracle(s, a);

            if self.on(CheckId::ClassicalDrazin) {
                let ok = match drazin {
                    Some(r) => {
                        r.index <= s.size()
                            && satisfies_drazin_axioms(s, a, r.b, r.index)
                            && dz_oracle == [(r.b, r.index)]
                            && self.along(a, s.pow(a, r.index)).map(|x| x.b) == Some(r.b)
                    }
                    None => false,
                };
                self.record(report, CheckId::ClassicalDrazin, ok, &els, || {
                    format!("along a^m: {drazin:?}, axioms: {dz_oracle:?}")
                });
            }

            if self.on(CheckId::StrongPiRegular) {
                let pi_regular = (1..=s.size()).any(|m| {
                    let am = s.pow(a, m);
                    g.same_h(s.mul(am, a), am)
                });
                self.record(
                    report,
                    CheckId::StrongPiRegular,
                    pi_regular == !dz_oracle.is_empty(),
                    &els,
                    || format!("strongly pi-regular {pi_regular}, Drazin solutions {dz_oracle:?}"),
                );
            }

            if self.on(CheckId::ExistenceCriteria) {
                let crit = g.same_h(s.mul(a, a), a);
                let mut ok = crit == !grp_oracle.is_empty();
                let comm = bicommutant(s, &[a]);
                if let Some(&x) = grp_oracle.first() {
                    ok &= comm.contains(x);
                }
                if let Some(&(x, _)) = dz_oracle.first() {
                    ok &= comm.contains(x);
                }
                self.record(report, CheckId::ExistenceCriteria, ok, &els, || {
                    format!("a^2 H a = {crit}, group inverse {grp_oracle:?}, Drazin {dz_oracle:?}")
                });
            }
        }
    }

    fn run_star(&self, star: &StarSemigroup, report: &mut VerificationReport) {
        let s = self.s;
        let g = &self.g;
        for a in s.elements() {
            let ast = star.star(a);
            let els = [("a", a), ("a*", ast)];
            let mp = moore_penrose(star, g, a);
            let mp_oracle = moore_penrose_oracle(star, a);

            if self.on(CheckId::ClassicalMp) {
                let ok = mp_oracle.len() <= 1
                    && mp_oracle.first().copied() == mp
                    && self.along(a, ast).is_none_or(|r| r.inner);
                self.record(report, CheckId::ClassicalMp, ok, &els, || {
                    format!("along a*: {mp:?}, Penrose equations: {mp_oracle:?}")
                });
            }

            if self.on(CheckId::MpCriterion) {
                let aas = s.mul(a, ast);
                let asa = s.mul(ast, a);
                let crit = g.same_r(aas, a) && g.same_l(asa, a);
                let mut ok = crit == !mp_oracle.is_empty();
                if let Some(&x) = mp_oracle.first() {
                    ok &= bicommutant(s, &[a, ast]).contains(x);
                }
                self.record(report, CheckId::MpCriterion, ok, &els, || {
                    format!("aa* R a and a*a L a: {crit}, Penrose solutions {mp_oracle:?}")
                });
            }

            if self.on(CheckId::Patricio) {
                let grp = group_inverse_oracle(s, a).first().copied();
                let mpx = mp_oracle.first().copied();
                let mut ok = true;
                if g.same_h(a, ast) {
                    ok &= mpx.is_some() == grp.is_some() && mpx == grp;
                }
                if mpx.is_some() && mpx == grp {
                    ok &= g.same_h(a, ast);
                }
                self.record(report, CheckId::Patricio, ok, &els, || {
                    format!("a H a* = {}, a+ = {mpx:?}, a# = {grp:?}", g.same_h(a, ast))
                });
            }

            if self.on(CheckId::Koliha) {
                let aas = s.mul(a, ast);
                let asa = s.mul(ast, a);
                let sharp = |x: ElementId| group_inverse_oracle(s, x).first().copied();
                let rhs = self.star_rel.same_r_star(aas, a)
                    && self.star_rel.same_l_star(asa, a)
                    && sharp(asa).is_some();
                let mpx = mp_oracle.first().copied();
                let mut ok = rhs == mpx.is_some();
                if let Some(x) = mpx {
                    let via_left = sharp(asa).map(|y| s.mul(y, ast));
                    let via_right = sharp(aas).map(|y| s.mul(ast, y));
                    ok &= via_left == Some(x) && via_right == Some(x);
                }
                self.record(report, CheckId::Koliha, ok, &els, || {
                    format!("R*/L*/group criterion {rhs}, a+ = {mpx:?}")
                });
            }
        }
    }
}

fn plain_checks(checks: &[CheckId]) -> bool {
    checks.iter().any(|c| !c.needs_star())
}

/// Evaluate `checks` on `s`. Involution checks run only when `star` is given
/// (its underlying semigroup must be `s`); otherwise they are marked skipped.
pub fn run_checks(
    s: &Semigroup,
    checks: &[CheckId],
    star: Option<&StarSemigroup>,
) -> VerificationReport {
    let mut report = VerificationReport {
        semigroups: 1,
        involutions: u64::from(star.is_some()),
        ..Default::default()
    };
    for &c in checks {
        report.touch(c);
    }
    let mut checker = Checker::new(s, checks);
    if plain_checks(checks) {
        checker.run_structural(&mut report);
        checker.run_pairs(&mut report);
        checker.run_elements(&mut report);
    }
    match star {
        Some(st) => {
            checker.star = Some(st.star_map().to_vec());
            checker.run_star(st, &mut report);
        }
        None => report
            .skipped
            .extend(checks.iter().filter(|c| c.needs_star())),
    }
    report
}

/// Plain checks once, then the involution checks for each involution in
/// `stars`. Used by the enumeration sweep.
pub(crate) fn run_checks_all_involutions(
    s: &Semigroup,
    checks: &[CheckId],
    stars: &[Vec<ElementId>],
) -> VerificationReport {
    let mut report = VerificationReport {
        semigroups: 1,
        involutions: stars.len() as u64,
        ..Default::default()
    };
    for &c in checks {
        report.touch(c);
    }
    let mut checker = Checker::new(s, checks);
    if plain_checks(checks) {
        checker.run_structural(&mut report);
        checker.run_pairs(&mut report);
        checker.run_elements(&mut report);
    }
    for map in stars {
        let st =
            StarSemigroup::new(s.clone(), map.clone()).expect("involution validated by caller");
        checker.star = Some(map.clone());
        checker.run_star(&st, &mut report);
    }
    report
}
