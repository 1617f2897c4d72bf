//! Generalized inverses: outer and inner inverses, the inverse along an
//! element, and the group, Drazin and Moore–Penrose inverses.
//!
//! The inverse of `a` along `d` is the unique `b` with `bad = d = dab` and
//! `b ∈ dS ∩ Sd`. It is computed here from the group-inverse formula
//! `b = d(ad)#`, which applies exactly when `ad L d` and `H_ad` is a group.
//! [`inverse_along_oracle`] finds the same element by scanning all of `S`.

use crate::error::{Error, Result};
use crate::green::{h_class_is_group, is_trace_product, GreenStructure};
use crate::semigroup::{ElementId, Semigroup, StarSemigroup};

/// The inverse of `a` along `d` together with its witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InverseAlongResult {
    /// `b`, the inverse along `d`.
    pub b: ElementId,
    /// `aba = a`.
    pub inner: bool,
    /// `ba`, an idempotent in `R_d`.
    pub e_witness: ElementId,
    /// `ab`, an idempotent in `L_d`.
    pub f_witness: ElementId,
    /// `(ad)#`, so that `b = d * group_witness`.
    pub group_witness: ElementId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DrazinResult {
    pub b: ElementId,
    /// Smallest `m >= 1` with `a^(m+1) H a^m`.
    pub index: usize,
}

/// A generating subset together with its commutant or bicommutant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantSet {
    pub generators: Vec<ElementId>,
    pub members: Vec<ElementId>,
}

impl CommutantSet {
    pub fn contains(&self, x: ElementId) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// `{ b : bab = b }`.
pub fn outer_inverses(s: &Semigroup, a: ElementId) -> Vec<ElementId> {
    s.elements()
        .filter(|&b| s.product(&[b, a, b]) == b)
        .collect()
}

/// `{ b : aba = a }`.
pub fn inner_inverses(s: &Semigroup, a: ElementId) -> Vec<ElementId> {
    s.elements()
        .filter(|&b| s.product(&[a, b, a]) == a)
        .collect()
}

/// `{ b : aba = a and bab = b }`.
pub fn inverses(s: &Semigroup, a: ElementId) -> Vec<ElementId> {
    s.elements()
        .filter(|&b| s.product(&[a, b, a]) == a && s.product(&[b, a, b]) == b)
        .collect()
}

/// Inverse of `x` inside its H-class, when that class is a group.
///
/// Finds the class idempotent `e` and pairs `x` with the member `y` satisfying
/// `xy = e = yx`.
pub fn group_inverse_in_class(
    s: &Semigroup,
    g: &GreenStructure,
    x: ElementId,
) -> Option<ElementId> {
    let h = g.h_class(x);
    let e = g.h_idempotent(h)?;
    g.h_members(h)
        .iter()
        .copied()
        .find(|&y| s.mul(x, y) == e && s.mul(y, x) == e)
}

/// `a^∠d` via `ad L d`, `H_ad` a group and `b = d(ad)#`.
pub fn inverse_along(
    s: &Semigroup,
    g: &GreenStructure,
    a: ElementId,
    d: ElementId,
) -> Option<InverseAlongResult> {
    let ad = s.mul(a, d);
    if !g.same_l(ad, d) || !h_class_is_group(s, g, g.h_class(ad)) {
        return None;
    }
    let group_witness = group_inverse_in_class(s, g, ad)?;
    let b = s.mul(d, group_witness);
    debug_assert_eq!(
        group_inverse_in_class(s, g, s.mul(d, a)).map(|x| s.mul(x, d)),
        Some(b)
    );
    let inner = s.product(&[a, b, a]) == a;
    debug_assert_eq!(
        inner,
        is_trace_product(s, g, a, d) && is_trace_product(s, g, d, a)
    );
    Some(InverseAlongResult {
        b,
        inner,
        e_witness: s.mul(b, a),
        f_witness: s.mul(a, b),
        group_witness,
    })
}

/// Same computation through the right-hand formula `b = (da)# d`, which
/// applies when `da R d` and `H_da` is a group.
pub fn inverse_along_right(
    s: &Semigroup,
    g: &GreenStructure,
    a: ElementId,
    d: ElementId,
) -> Option<ElementId> {
    let da = s.mul(d, a);
    if !g.same_r(da, d) || !h_class_is_group(s, g, g.h_class(da)) {
        return None;
    }
    group_inverse_in_class(s, g, da).map(|x| s.mul(x, d))
}

fn in_left_multiples(s: &Semigroup, d: ElementId, b: ElementId) -> bool {
    s.elements().any(|x| s.mul(d, x) == b)
}

fn in_right_multiples(s: &Semigroup, d: ElementId, b: ElementId) -> bool {
    s.elements().any(|y| s.mul(y, d) == b)
}

/// Whether `b` satisfies `bad = d = dab` and `b ∈ dS ∩ Sd`.
pub fn is_inverse_along(s: &Semigroup, a: ElementId, d: ElementId, b: ElementId) -> bool {
    s.product(&[b, a, d]) == d
        && s.product(&[d, a, b]) == d
        && in_left_multiples(s, d, b)
        && in_right_multiples(s, d, b)
}

/// Exhaustive search for the inverse along `d`. Two distinct solutions would
/// contradict uniqueness and are returned as [`Error::MultipleSolutions`].
pub fn inverse_along_oracle(
    s: &Semigroup,
    a: ElementId,
    d: ElementId,
) -> Result<Option<ElementId>> {
    let mut found: Option<ElementId> = None;
    for b in s.elements() {
        if is_inverse_along(s, a, d, b) {
            if let Some(first) = found {
                return Err(Error::MultipleSolutions(first, b));
            }
            found = Some(b);
        }
    }
    Ok(found)
}

/// Evaluates the four equivalent characterisations of invertibility along
/// `d`, each by its own search:
///
/// 1. some `b` has `bad = d = dab` and `b ∈ dS ∩ Sd`;
/// 2. some outer inverse `b` of `a` has `b H d`;
/// 3. some `b H d` and idempotent `e ∈ R_d` make `b` an inverse of `ae`;
/// 4. some `b H d` and idempotent `f ∈ L_d` make `b` an inverse of `fa`.
pub fn four_statements(s: &Semigroup, g: &GreenStructure, a: ElementId, d: ElementId) -> [bool; 4] {
    let is_inverse_of =
        |x: ElementId, b: ElementId| s.product(&[x, b, x]) == x && s.product(&[b, x, b]) == b;
    let h_d = g.h_class_of(d);
    let idempotents_r: Vec<ElementId> = s
        .elements()
        .filter(|&e| g.is_idempotent(e) && g.same_r(e, d))
        .collect();
    let idempotents_l: Vec<ElementId> = s
        .elements()
        .filter(|&f| g.is_idempotent(f) && g.same_l(f, d))
        .collect();

    let first = s.elements().any(|b| is_inverse_along(s, a, d, b));
    let second = h_d.iter().any(|&b| s.product(&[b, a, b]) == b);
    let third = h_d
        .iter()
        .any(|&b| idempotents_r.iter().any(|&e| is_inverse_of(s.mul(a, e), b)));
    let fourth = h_d
        .iter()
        .any(|&b| idempotents_l.iter().any(|&f| is_inverse_of(s.mul(f, a), b)));
    [first, second, third, fourth]
}

/// `a#`, computed as the inverse of `a` along itself.
pub fn group_inverse(s: &Semigroup, g: &GreenStructure, a: ElementId) -> Option<ElementId> {
    inverse_along(s, g, a, a).map(|r| r.b)
}

/// `{ b : aba = a, bab = b, ab = ba }`.
pub fn group_inverse_oracle(s: &Semigroup, a: ElementId) -> Vec<ElementId> {
    s.elements()
        .filter(|&b| {
            s.product(&[a, b, a]) == a && s.product(&[b, a, b]) == b && s.mul(a, b) == s.mul(b, a)
        })
        .collect()
}

/// `a^D` as the inverse of `a` along `a^m`, with `m` the smallest power for
/// which `a^(m+1) H a^m`. Always defined in a finite semigroup.
pub fn drazin_inverse(s: &Semigroup, g: &GreenStructure, a: ElementId) -> Option<DrazinResult> {
    let mut power = a;
    for m in 1..=s.size() {
        let next = s.mul(power, a);
        if g.same_h(next, power) {
            return inverse_along(s, g, a, power).map(|r| DrazinResult { b: r.b, index: m });
        }
        power = next;
    }
    None
}

/// Drazin's three axioms for `b` with exponent `m`.
pub fn satisfies_drazin_axioms(s: &Semigroup, a: ElementId, b: ElementId, m: usize) -> bool {
    let am = s.pow(a, m);
    s.mul(a, b) == s.mul(b, a) && s.mul(s.mul(am, a), b) == am && s.product(&[b, b, a]) == b
}

/// Every `b` satisfying Drazin's axioms for some `m` in `1..=n+1`, paired with
/// the smallest such `m`.
pub fn drazin_oracle(s: &Semigroup, a: ElementId) -> Vec<(ElementId, usize)> {
    s.elements()
        .filter_map(|b| {
            (1..=s.size() + 1)
                .find(|&m| satisfies_drazin_axioms(s, a, b, m))
                .map(|m| (b, m))
        })
        .collect()
}

/// `a+`, computed as the inverse of `a` along `a*`.
pub fn moore_penrose(star: &StarSemigroup, g: &GreenStructure, a: ElementId) -> Option<ElementId> {
    inverse_along(star.semigroup(), g, a, star.star(a)).map(|r| r.b)
}

/// The four Penrose equations.
pub fn satisfies_penrose_axioms(star: &StarSemigroup, a: ElementId, b: ElementId) -> bool {
    let s = star.semigroup();
    let ab = s.mul(a, b);
    let ba = s.mul(b, a);
    s.mul(ab, a) == a && s.mul(ba, b) == b && star.star(ab) == ab && star.star(ba) == ba
}

/// All solutions of the Penrose equations.
pub fn moore_penrose_oracle(star: &StarSemigroup, a: ElementId) -> Vec<ElementId> {
    star.semigroup()
        .elements()
        .filter(|&b| satisfies_penrose_axioms(star, a, b))
        .collect()
}

/// `A' = { x : xa = ax for all a in A }`.
pub fn commutant(s: &Semigroup, subset: &[ElementId]) -> CommutantSet {
    let members = s
        .elements()
        .filter(|&x| subset.iter().all(|&a| s.mul(x, a) == s.mul(a, x)))
        .collect();
    CommutantSet {
        generators: subset.to_vec(),
        members,
    }
}

/// `A'' = (A')'`.
pub fn bicommutant(s: &Semigroup, subset: &[ElementId]) -> CommutantSet {
    let first = commutant(s, subset);
    CommutantSet {
        generators: subset.to_vec(),
        members: commutant(s, &first.members).members,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::green_relations;
    use crate::matrix::{Semiring, SmallMatrix};
    use crate::semigroup::{boolean_matrices_2x2, full_transformation_monoid, ClosureLimits};

    struct Fixture {
        s: Semigroup,
        g: GreenStructure,
    }

    impl Fixture {
        fn new(s: Semigroup) -> Self {
            let g = green_relations(&s);
            Fixture { s, g }
        }

        fn e(&self, label: &str) -> ElementId {
            self.s.resolve(label).unwrap()
        }

        fn along(&self, a: &str, d: &str) -> Option<InverseAlongResult> {
            inverse_along(&self.s, &self.g, self.e(a), self.e(d))
        }
    }

    fn t3() -> Fixture {
        Fixture::new(full_transformation_monoid(3).unwrap())
    }

    #[test]
    fn t3_worked_example() {
        let f = t3();
        let r = f.along("221", "232").unwrap();
        assert_eq!(f.s.label(r.b), "323");
        assert!(r.inner);
        assert_eq!(f.s.label(r.e_witness), "121");
        assert_eq!(f.s.label(r.f_witness), "223");

        for a in ["123", "321"] {
            let r = f.along(a, "232").unwrap();
            assert_eq!(f.s.label(r.b), "323");
            assert!(!r.inner);
        }
        assert!(f.along("111", "232").is_none());
        // ad = (233) lies in an H-class without an idempotent
        assert!(f.along("122", "232").is_none());
        assert_eq!(inverse_along_oracle(&f.s, f.e("122"), f.e("232")), Ok(None));
    }

    #[test]
    fn t3_oracle_agrees_on_examples() {
        let f = t3();
        let (a, d) = (f.e("221"), f.e("232"));
        assert_eq!(inverse_along_oracle(&f.s, a, d), Ok(Some(f.e("323"))));
        assert_eq!(inverse_along_oracle(&f.s, f.e("111"), d), Ok(None));
        assert_eq!(four_statements(&f.s, &f.g, a, d), [true; 4]);
        assert_eq!(four_statements(&f.s, &f.g, f.e("111"), d), [false; 4]);
    }

    #[test]
    fn t3_right_formula_matches() {
        let f = t3();
        for a in f.s.elements() {
            for d in f.s.elements() {
                assert_eq!(
                    inverse_along(&f.s, &f.g, a, d).map(|r| r.b),
                    inverse_along_right(&f.s, &f.g, a, d)
                );
            }
        }
    }

    #[test]
    fn outer_and_inner_inverse_sets() {
        let f = t3();
        let a = f.e("221");
        assert!(outer_inverses(&f.s, a).contains(&f.e("323")));
        assert!(inner_inverses(&f.s, a).contains(&f.e("323")));

        let triv = Semigroup::from_cayley_table(1, &[vec![0]]).unwrap();
        assert_eq!(outer_inverses(&triv, ElementId(0)), vec![ElementId(0)]);

        // null semigroup with zero 0: 0 is the only outer inverse of anything
        let null = Semigroup::from_cayley_table(2, &[vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(outer_inverses(&null, ElementId(1)), vec![ElementId(0)]);
        // and 1 is not regular: 1*b*1 = 0
        assert!(inner_inverses(&null, ElementId(1)).is_empty());
    }

    #[test]
    fn group_inverses() {
        let f = t3();
        assert_eq!(group_inverse(&f.s, &f.g, f.e("231")), Some(f.e("312")));
        assert_eq!(group_inverse(&f.s, &f.g, f.e("111")), Some(f.e("111")));
        // (211)^3 = (211)
        let x = f.e("211");
        assert_eq!(f.s.pow(x, 3), x);
        assert_eq!(group_inverse(&f.s, &f.g, x), Some(x));
        assert_eq!(group_inverse(&f.s, &f.g, f.e("233")), None);
        for a in f.s.elements() {
            assert_eq!(
                group_inverse(&f.s, &f.g, a).into_iter().collect::<Vec<_>>(),
                group_inverse_oracle(&f.s, a)
            );
        }
    }

    #[test]
    fn drazin_in_t3() {
        let f = t3();
        let c = drazin_inverse(&f.s, &f.g, f.e("111")).unwrap();
        assert_eq!(
            c,
            DrazinResult {
                b: f.e("111"),
                index: 1
            }
        );
        for a in f.s.elements() {
            let r = drazin_inverse(&f.s, &f.g, a).unwrap();
            assert!(r.index <= f.s.size());
            assert!(satisfies_drazin_axioms(&f.s, a, r.b, r.index));
            assert_eq!(drazin_oracle(&f.s, a), vec![(r.b, r.index)]);
        }
        // (233): its square (333) is already in a group class, index 2
        let r = drazin_inverse(&f.s, &f.g, f.e("233")).unwrap();
        assert_eq!(r.index, 2);
        assert_eq!(r.b, f.e("333"));
    }

    #[test]
    fn group_elements_invert_along_anything() {
        let z3 = Fixture::new(
            Semigroup::from_cayley_table(3, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]])
                .unwrap(),
        );
        for a in z3.s.elements() {
            let inv =
                z3.s.elements()
                    .find(|&b| z3.s.mul(a, b) == ElementId(0))
                    .unwrap();
            for d in z3.s.elements() {
                let r = inverse_along(&z3.s, &z3.g, a, d).unwrap();
                assert_eq!(r.b, inv);
                assert!(r.inner);
            }
            let dr = drazin_inverse(&z3.s, &z3.g, a).unwrap();
            assert_eq!(dr, DrazinResult { b: inv, index: 1 });
        }
    }

    #[test]
    fn matrix_example() {
        let nat = |rows: Vec<Vec<u64>>| SmallMatrix::new(Semiring::Natural, rows).unwrap();
        let gens = vec![
            nat(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]),
            nat(vec![vec![0, 1, 1], vec![1, 0, 0], vec![0, 0, 0]]),
            nat(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]),
            nat(vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 0]]),
        ];
        let f = Fixture::new(
            Semigroup::from_matrix_generators(&gens, Semiring::Natural, ClosureLimits::default())
                .unwrap(),
        );
        assert_eq!(f.s.size(), 4);
        let r = f.along("b", "c").unwrap();
        assert_eq!(r.b, f.e("c"));
        assert_eq!(r.group_witness, f.e("a"));
        for a in f.s.elements() {
            for d in f.s.elements() {
                assert!(inverse_along(&f.s, &f.g, a, d).is_some());
            }
        }
    }

    #[test]
    fn moore_penrose_boolean() {
        let s = boolean_matrices_2x2().unwrap();
        let g = green_relations(&s);
        let star = StarSemigroup::with_transpose(s).unwrap();
        let s = star.semigroup();
        let id = s.resolve("[[1,0],[0,1]]").unwrap();
        assert_eq!(moore_penrose(&star, &g, id), Some(id));
        let p = s.resolve("[[1,0],[0,0]]").unwrap();
        assert_eq!(moore_penrose(&star, &g, p), Some(p));
        let ones = s.resolve("[[1,1],[1,1]]").unwrap();
        assert_eq!(moore_penrose(&star, &g, ones), Some(ones));
        for a in s.elements() {
            assert_eq!(
                moore_penrose(&star, &g, a).into_iter().collect::<Vec<_>>(),
                moore_penrose_oracle(&star, a),
                "element {}",
                s.label(a)
            );
        }
    }

    #[test]
    fn commutants() {
        let z3 = Semigroup::from_cayley_table(3, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]])
            .unwrap();
        let all: Vec<ElementId> = z3.elements().collect();
        assert_eq!(commutant(&z3, &all).members, all);

        let f = t3();
        let id = f.e("123");
        assert_eq!(commutant(&f.s, &[id]).members.len(), 27);

        let (a, d) = (f.e("221"), f.e("232"));
        let bi = bicommutant(&f.s, &[a, d]);
        assert!(bi.contains(f.e("323")));
        assert!(bi.contains(a) && bi.contains(d));
    }
}
