//! Finite semigroups given by a multiplication table.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::matrix::{Semiring, SmallMatrix, DEFAULT_ENTRY_BOUND};
use crate::transform::Transformation;

/// Index of an element inside its semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Where the elements of a semigroup came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Table,
    Transformations(Vec<Transformation>),
    Matrices {
        semiring: Semiring,
        matrices: Vec<SmallMatrix>,
        /// Element ids of the generators, in input order.
        generators: Vec<ElementId>,
    },
}

/// Limits applied while closing a generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureLimits {
    pub max_size: usize,
    pub entry_bound: u64,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits {
            max_size: 10_000,
            entry_bound: DEFAULT_ENTRY_BOUND,
        }
    }
}

/// A validated finite semigroup. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    n: usize,
    table: Vec<ElementId>,
    labels: Vec<String>,
    provenance: Provenance,
}

impl Semigroup {
    /// Build from an `n x n` Cayley table, checking closure and all `n^3`
    /// associativity triples.
    pub fn from_cayley_table(n: usize, table: &[Vec<usize>]) -> Result<Self> {
        if table.len() != n {
            return Err(Error::TableShape {
                n,
                rows: table.len(),
                len: table.first().map_or(0, Vec::len),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::TableShape {
                    n,
                    rows: table.len(),
                    len: entries.len(),
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::OutOfRange { row, col, value, n });
                }
                flat.push(ElementId::from(value));
            }
        }
        let s = Semigroup {
            n,
            table: flat,
            labels: (0..n).map(|i| i.to_string()).collect(),
            provenance: Provenance::Table,
        };
        s.check_associative()?;
        Ok(s)
    }

    /// Close a set of transformations under left-to-right composition.
    pub fn from_transformation_generators(
        degree: usize,
        gens: &[Transformation],
        limits: ClosureLimits,
    ) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        for (index, g) in gens.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    index,
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let closure = close(gens, |x, y| Ok(x.then(y)), limits.max_size)?;
        let labels = closure.elements.iter().map(Transformation::label).collect();
        Ok(Semigroup {
            n: closure.elements.len(),
            table: closure.table,
            labels,
            provenance: Provenance::Transformations(closure.elements),
        })
    }

    /// Close a set of square matrices under the semiring product.
    pub fn from_matrix_generators(
        gens: &[SmallMatrix],
        semiring: Semiring,
        limits: ClosureLimits,
    ) -> Result<Self> {
        let first = gens.first().ok_or(Error::EmptyGeneratorSet)?;
        let k = first.rows();
        for (index, g) in gens.iter().enumerate() {
            if !g.is_square() || g.rows() != k {
                return Err(Error::MatrixShape {
                    index,
                    rows: g.rows(),
                    cols: g.cols(),
                });
            }
        }
        let gens: Vec<SmallMatrix> = gens
            .iter()
            .map(|g| {
                if g.semiring() == semiring {
                    Ok(g.clone())
                } else {
                    let rows = (0..k)
                        .map(|i| (0..k).map(|j| g.get(i, j)).collect())
                        .collect();
                    SmallMatrix::new(semiring, rows)
                }
            })
            .collect::<Result<_>>()?;
        let closure = close(&gens, |x, y| x.mul(y, limits.entry_bound), limits.max_size)?;
        let labels = closure.elements.iter().map(SmallMatrix::label).collect();
        Ok(Semigroup {
            n: closure.elements.len(),
            table: closure.table,
            labels,
            provenance: Provenance::Matrices {
                semiring,
                matrices: closure.elements,
                generators: closure.generator_ids,
            },
        })
    }

    pub(crate) fn from_table_unchecked(n: usize, table: Vec<ElementId>) -> Self {
        Semigroup {
            n,
            table,
            labels: (0..n).map(|i| i.to_string()).collect(),
            provenance: Provenance::Table,
        }
    }

    fn check_associative(&self) -> Result<()> {
        for i in self.elements() {
            for j in self.elements() {
                let ij = self.mul(i, j);
                for k in self.elements() {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::NonAssociative {
                            i: i.index(),
                            j: j.index(),
                            k: k.index(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a.index() * self.n + b.index()]
    }

    /// Product of a nonempty sequence, left to right.
    pub fn product(&self, xs: &[ElementId]) -> ElementId {
        let (&first, rest) = xs.split_first().expect("empty product");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: ElementId, k: usize) -> ElementId {
        assert!(k >= 1, "semigroup powers start at 1");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.n as u32).map(ElementId)
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Rows of the Cayley table as plain indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|x| x.index()).collect())
            .collect()
    }

    pub fn is_idempotent(&self, e: ElementId) -> bool {
        self.mul(e, e) == e
    }

    /// `E(S)`, in element order.
    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The two-sided identity, if `S` is a monoid.
    pub fn identity(&self) -> Option<ElementId> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    /// Resolve a user-supplied element name: exact label first, then a
    /// generator letter (`a`, `b`, ... for matrix generators), then `#k`.
    pub fn resolve(&self, name: &str) -> Result<ElementId> {
        if let Some(i) = self.labels.iter().position(|l| l == name) {
            return Ok(ElementId::from(i));
        }
        if let Provenance::Matrices { generators, .. } = &self.provenance {
            let mut chars = name.chars();
            if let (Some(c @ 'a'..='z'), None) = (chars.next(), chars.next()) {
                if let Some(&g) = generators.get((c as u8 - b'a') as usize) {
                    return Ok(g);
                }
            }
        }
        if let Some(k) = name.strip_prefix('#').and_then(|k| k.parse::<usize>().ok()) {
            if k < self.n {
                return Ok(ElementId::from(k));
            }
        }
        Err(Error::UnknownElement(name.to_string()))
    }

    /// Cayley-format serialization (`table n` plus rows).
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("table {}\n", self.n);
        for row in self.table_rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

struct Closure<T> {
    elements: Vec<T>,
    table: Vec<ElementId>,
    generator_ids: Vec<ElementId>,
}

/// Breadth-first closure by right multiplication with generators. Each new
/// element records the `(parent, generator)` pair that produced it, so the full
/// table is filled afterwards from the right Cayley graph without further
/// element products.
fn close<T, F>(gens: &[T], mul: F, cap: usize) -> Result<Closure<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> Result<T>,
{
    let mut elements: Vec<T> = Vec::new();
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut generator_ids = Vec::with_capacity(gens.len());
    for g in gens {
        let id = *index.entry(g.clone()).or_insert_with(|| {
            elements.push(g.clone());
            elements.len() - 1
        });
        generator_ids.push(ElementId::from(id));
    }
    if elements.len() > cap {
        return Err(Error::ClosureBoundExceeded(cap));
    }
    let distinct_gens: Vec<usize> = {
        let mut v: Vec<usize> = generator_ids.iter().map(|g| g.index()).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let ngen = distinct_gens.len();
    // parent[y] = Some((x, k)) when y = x * gens[k]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; elements.len()];
    let mut right: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (k, &g) in distinct_gens.iter().enumerate() {
            let p = mul(&elements[i], &elements[g])?;
            let id = match index.get(&p) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureBoundExceeded(cap));
                    }
                    elements.push(p.clone());
                    index.insert(p, elements.len() - 1);
                    parent.push(Some((i, k)));
                    elements.len() - 1
                }
            };
            right.push(id);
        }
        i += 1;
    }
    let n = elements.len();
    let gen_slot: HashMap<usize, usize> = distinct_gens
        .iter()
        .enumerate()
        .map(|(k, &g)| (g, k))
        .collect();
    let mut table = vec![ElementId(0); n * n];
    for x in 0..n {
        for y in 0..n {
            let v = match parent[y] {
                None => right[x * ngen + gen_slot[&y]],
                Some((py, k)) => right[table[x * n + py].index() * ngen + k],
            };
            table[x * n + y] = ElementId::from(v);
        }
    }
    Ok(Closure {
        elements,
        table,
        generator_ids,
    })
}

/// `S^1`: `S` itself when it already has an identity, otherwise `S` with a
/// fresh identity appended at index `n`.
#[derive(Debug, Clone, Copy)]
pub struct MonoidView<'a> {
    base: &'a Semigroup,
    identity: ElementId,
    adjoined: bool,
}

impl<'a> MonoidView<'a> {
    pub fn new(base: &'a Semigroup) -> Self {
        match base.identity() {
            Some(identity) => MonoidView {
                base,
                identity,
                adjoined: false,
            },
            None => MonoidView {
                base,
                identity: ElementId::from(base.size()),
                adjoined: true,
            },
        }
    }

    pub fn base(&self) -> &'a Semigroup {
        self.base
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn adjoined(&self) -> bool {
        self.adjoined
    }

    pub fn size(&self) -> usize {
        self.base.size() + usize::from(self.adjoined)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.size() as u32).map(ElementId)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        if self.adjoined {
            if a == self.identity {
                return b;
            }
            if b == self.identity {
                return a;
            }
        }
        self.base.mul(a, b)
    }
}

/// Free-function form of [`MonoidView::new`].
pub fn adjoin_identity(s: &Semigroup) -> MonoidView<'_> {
    MonoidView::new(s)
}

/// A semigroup with a validated involution `a -> a*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSemigroup {
    base: Semigroup,
    star: Vec<ElementId>,
}

impl StarSemigroup {
    pub fn new(base: Semigroup, star: Vec<ElementId>) -> Result<Self> {
        validate_involution(&base, &star)?;
        Ok(StarSemigroup { base, star })
    }

    /// Matrix semigroups only: `a* = transpose(a)`.
    pub fn with_transpose(base: Semigroup) -> Result<Self> {
        let star = match base.provenance() {
            Provenance::Matrices { matrices, .. } => {
                let index: HashMap<&SmallMatrix, usize> =
                    matrices.iter().enumerate().map(|(i, m)| (m, i)).collect();
                let transposes: Vec<SmallMatrix> = matrices.iter().map(|m| m.transpose()).collect();
                transposes
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        index
                            .get(t)
                            .map(|&j| ElementId::from(j))
                            .ok_or(Error::InvolutionNotClosed(ElementId::from(i)))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            _ => return Err(Error::TransposeWithoutMatrices),
        };
        Self::new(base, star)
    }

    pub fn semigroup(&self) -> &Semigroup {
        &self.base
    }

    #[inline]
    pub fn star(&self, a: ElementId) -> ElementId {
        self.star[a.index()]
    }

    pub fn star_map(&self) -> &[ElementId] {
        &self.star
    }

    pub fn into_parts(self) -> (Semigroup, Vec<ElementId>) {
        (self.base, self.star)
    }
}

/// Check that `star` is a permutation, involutive and antihomomorphic.
pub fn validate_involution(s: &Semigroup, star: &[ElementId]) -> Result<()> {
    if star.len() != s.size() {
        return Err(Error::InvolutionLength {
            expected: s.size(),
            found: star.len(),
        });
    }
    let mut hit = vec![false; s.size()];
    for &x in star {
        if x.index() >= s.size() || hit[x.index()] {
            return Err(Error::NotPermutation(x.index()));
        }
        hit[x.index()] = true;
    }
    for a in s.elements() {
        if star[star[a.index()].index()] != a {
            return Err(Error::NotInvolutive(a));
        }
    }
    for a in s.elements() {
        for b in s.elements() {
            if star[s.mul(a, b).index()] != s.mul(star[b.index()], star[a.index()]) {
                return Err(Error::NotAntihomomorphic(a, b));
            }
        }
    }
    Ok(())
}

/// Free-function form of [`StarSemigroup::new`].
pub fn with_involution(s: Semigroup, star: Vec<ElementId>) -> Result<StarSemigroup> {
    StarSemigroup::new(s, star)
}

/// The full transformation monoid `T_n`, generated by a cycle, a
/// transposition and a rank-deficient map.
pub fn full_transformation_monoid(degree: usize) -> Result<Semigroup> {
    let mut gens = Vec::new();
    let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree + 1).collect();
    gens.push(Transformation::from_images(&cycle)?);
    if degree >= 2 {
        let mut swap: Vec<usize> = (1..=degree).collect();
        swap.swap(0, 1);
        gens.push(Transformation::from_images(&swap)?);
        let mut collapse: Vec<usize> = (1..=degree).collect();
        collapse[degree - 1] = 1;
        gens.push(Transformation::from_images(&collapse)?);
    }
    Semigroup::from_transformation_generators(degree, &gens, ClosureLimits::default())
}

/// All sixteen 2x2 boolean matrices.
pub fn boolean_matrices_2x2() -> Result<Semigroup> {
    let gens: Vec<SmallMatrix> = (0..16u64)
        .map(|bits| {
            SmallMatrix::new(
                Semiring::Boolean,
                vec![
                    vec![bits & 1, (bits >> 1) & 1],
                    vec![(bits >> 2) & 1, (bits >> 3) & 1],
                ],
            )
        })
        .collect::<Result<_>>()?;
    Semigroup::from_matrix_generators(&gens, Semiring::Boolean, ClosureLimits::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn t(s: &str) -> Transformation {
        Transformation::from_digits(s).unwrap()
    }

    fn t3() -> Semigroup {
        Semigroup::from_transformation_generators(
            3,
            &[t("231"), t("213"), t("112")],
            ClosureLimits::default(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_table() {
        let s = Semigroup::from_cayley_table(1, &[vec![0]]).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.idempotents(), vec![ElementId(0)]);
    }

    #[test]
    fn left_zero_table_is_valid() {
        let s = Semigroup::from_cayley_table(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(s.mul(ElementId(1), ElementId(0)), ElementId(1));
    }

    #[test]
    fn non_associative_table_reports_triple() {
        // (1*1)*1 = 0*1 = 1 but 1*(1*1) = 1*0 = 0
        let err = Semigroup::from_cayley_table(2, &[vec![0, 1], vec![0, 0]]).unwrap_err();
        assert!(matches!(err, Error::NonAssociative { .. }));
        let err = Semigroup::from_cayley_table(2, &[vec![0, 1], vec![0, 0]]).unwrap_err();
        if let Error::NonAssociative { i, j, k } = err {
            let tab = [[0, 1], [0, 0]];
            assert_ne!(tab[tab[i][j]][k], tab[i][tab[j][k]]);
        }
    }

    #[test]
    fn out_of_range_and_shape_errors() {
        assert!(matches!(
            Semigroup::from_cayley_table(2, &[vec![0, 2], vec![0, 0]]),
            Err(Error::OutOfRange { value: 2, .. })
        ));
        assert!(matches!(
            Semigroup::from_cayley_table(2, &[vec![0, 1]]),
            Err(Error::TableShape { .. })
        ));
    }

    #[test]
    fn t3_has_27_elements_and_is_closed() {
        let s = t3();
        assert_eq!(s.size(), 27);
        let all: HashSet<_> = s.labels().iter().cloned().collect();
        assert_eq!(all.len(), 27);
        // every product agrees with direct composition
        if let Provenance::Transformations(ts) = s.provenance() {
            for a in s.elements() {
                for b in s.elements() {
                    assert_eq!(ts[s.mul(a, b).index()], ts[a.index()].then(&ts[b.index()]));
                }
            }
        } else {
            panic!("missing provenance");
        }
        assert!(s.check_associative().is_ok());
        assert_eq!(s.idempotents().len(), 10);
    }

    #[test]
    fn generators_come_first() {
        let s = t3();
        assert_eq!(s.label(ElementId(0)), "231");
        assert_eq!(s.label(ElementId(1)), "213");
        assert_eq!(s.label(ElementId(2)), "112");
    }

    #[test]
    fn degree_one_and_monogenic() {
        let s = Semigroup::from_transformation_generators(1, &[t("1")], ClosureLimits::default())
            .unwrap();
        assert_eq!(s.size(), 1);
        let s = Semigroup::from_transformation_generators(3, &[t("232")], ClosureLimits::default())
            .unwrap();
        assert_eq!(s.size(), 2);
        assert!(s.resolve("323").is_ok());
    }

    #[test]
    fn closure_errors() {
        assert_eq!(
            Semigroup::from_transformation_generators(3, &[], ClosureLimits::default()),
            Err(Error::EmptyGeneratorSet)
        );
        let limits = ClosureLimits {
            max_size: 10,
            ..ClosureLimits::default()
        };
        assert_eq!(
            Semigroup::from_transformation_generators(3, &[t("231"), t("213"), t("112")], limits),
            Err(Error::ClosureBoundExceeded(10))
        );
        assert!(matches!(
            Semigroup::from_transformation_generators(3, &[t("12")], ClosureLimits::default()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn matrix_closures() {
        let id = SmallMatrix::identity(Semiring::Boolean, 2);
        let s =
            Semigroup::from_matrix_generators(&[id], Semiring::Boolean, ClosureLimits::default())
                .unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(boolean_matrices_2x2().unwrap().size(), 16);
        // [[1,1],[0,1]] generates an unbounded semigroup over the naturals
        let m = SmallMatrix::new(Semiring::Natural, vec![vec![1, 1], vec![0, 1]]).unwrap();
        let limits = ClosureLimits {
            max_size: 50,
            ..ClosureLimits::default()
        };
        assert_eq!(
            Semigroup::from_matrix_generators(std::slice::from_ref(&m), Semiring::Natural, limits),
            Err(Error::ClosureBoundExceeded(50))
        );
        let m2 = SmallMatrix::new(Semiring::Natural, vec![vec![2]]).unwrap();
        let limits = ClosureLimits {
            max_size: 1000,
            entry_bound: 1 << 20,
        };
        assert_eq!(
            Semigroup::from_matrix_generators(&[m2], Semiring::Natural, limits),
            Err(Error::EntryOverflow { bound: 1 << 20 })
        );
    }

    #[test]
    fn adjoin_identity_policy() {
        let s = t3();
        let m = adjoin_identity(&s);
        assert!(!m.adjoined());
        assert_eq!(m.size(), 27);
        assert_eq!(s.label(m.identity()), "123");

        let lz = Semigroup::from_cayley_table(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        let m = adjoin_identity(&lz);
        assert!(m.adjoined());
        assert_eq!(m.size(), 3);
        for x in m.elements() {
            assert_eq!(m.mul(m.identity(), x), x);
            assert_eq!(m.mul(x, m.identity()), x);
        }

        let triv = Semigroup::from_cayley_table(1, &[vec![0]]).unwrap();
        assert!(!adjoin_identity(&triv).adjoined());
    }

    #[test]
    fn involution_validation() {
        let b = boolean_matrices_2x2().unwrap();
        assert!(StarSemigroup::with_transpose(b).is_ok());

        // a commutative semigroup accepts the identity map
        let z2 = Semigroup::from_cayley_table(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(with_involution(z2, vec![ElementId(0), ElementId(1)]).is_ok());

        let s = t3();
        assert!(!s.is_commutative());
        let ident: Vec<ElementId> = s.elements().collect();
        assert!(matches!(
            with_involution(s, ident),
            Err(Error::NotAntihomomorphic(_, _))
        ));

        let lz = Semigroup::from_cayley_table(2, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert!(matches!(
            with_involution(lz.clone(), vec![ElementId(0), ElementId(0)]),
            Err(Error::NotPermutation(0))
        ));
        assert!(matches!(
            StarSemigroup::with_transpose(lz),
            Err(Error::TransposeWithoutMatrices)
        ));
    }

    #[test]
    fn three_cycle_permutation_is_not_involutive() {
        let z3 = Semigroup::from_cayley_table(3, &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]])
            .unwrap();
        assert!(matches!(
            with_involution(z3, vec![ElementId(1), ElementId(2), ElementId(0)]),
            Err(Error::NotInvolutive(_))
        ));
    }

    #[test]
    fn resolve_names() {
        let s = t3();
        assert_eq!(s.label(s.resolve("232").unwrap()), "232");
        assert_eq!(s.resolve("#3").unwrap(), ElementId(3));
        assert!(matches!(s.resolve("999"), Err(Error::UnknownElement(_))));
        assert!(s.resolve("#27").is_err());
    }
}
