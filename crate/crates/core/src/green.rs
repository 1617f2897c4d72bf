//! Green's relations `L`, `R`, `H`, `D`, the starred relations `L*`, `R*`,
//! trace products and egg-box diagrams.
//!
//! Class ids are assigned in order of each class's smallest member, so class
//! `0` always contains element `0` and output is deterministic.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::semigroup::{ElementId, MonoidView, Semigroup};

/// One D-class laid out as a grid: rows are R-classes, columns L-classes and
/// each cell one H-class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggBoxBlock {
    pub d_class: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `cells[i][j]` lists the members of `R(rows[i]) ∩ L(cols[j])`.
    pub cells: Vec<Vec<Vec<ElementId>>>,
}

impl EggBoxBlock {
    pub fn size(&self) -> usize {
        self.cells.iter().flatten().map(Vec::len).sum()
    }

    /// `(rows, cols)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenStructure {
    l_class: Vec<usize>,
    r_class: Vec<usize>,
    h_class: Vec<usize>,
    d_class: Vec<usize>,
    idempotent: Vec<bool>,
    h_members: Vec<Vec<ElementId>>,
    h_idempotent: Vec<Option<ElementId>>,
    h_by_rl: HashMap<(usize, usize), usize>,
    blocks: Vec<EggBoxBlock>,
}

impl GreenStructure {
    pub fn new(s: &Semigroup) -> Self {
        let n = s.size();
        // aS^1 and S^1a as bitsets
        let mut right = vec![FixedBitSet::with_capacity(n); n];
        let mut left = vec![FixedBitSet::with_capacity(n); n];
        for a in s.elements() {
            right[a.index()].insert(a.index());
            left[a.index()].insert(a.index());
            for x in s.elements() {
                right[a.index()].insert(s.mul(a, x).index());
                left[a.index()].insert(s.mul(x, a).index());
            }
        }
        let r_class = mutual_classes(&right);
        let l_class = mutual_classes(&left);

        let mut h_ids: HashMap<(usize, usize), usize> = HashMap::new();
        let h_class: Vec<usize> = (0..n)
            .map(|a| {
                let next = h_ids.len();
                *h_ids.entry((r_class[a], l_class[a])).or_insert(next)
            })
            .collect();

        // D is the join of L and R
        let mut uf = UnionFind::new(n);
        let mut first_in_l: HashMap<usize, usize> = HashMap::new();
        let mut first_in_r: HashMap<usize, usize> = HashMap::new();
        for a in 0..n {
            let l = *first_in_l.entry(l_class[a]).or_insert(a);
            uf.union(a, l);
            let r = *first_in_r.entry(r_class[a]).or_insert(a);
            uf.union(a, r);
        }
        let d_class = canonical_ids((0..n).map(|a| uf.find(a)));

        let idempotent: Vec<bool> = s.elements().map(|e| s.is_idempotent(e)).collect();
        let mut h_members = vec![Vec::new(); h_ids.len()];
        let mut h_idempotent = vec![None; h_ids.len()];
        for a in s.elements() {
            let h = h_class[a.index()];
            h_members[h].push(a);
            if idempotent[a.index()] {
                h_idempotent[h].get_or_insert(a);
            }
        }

        let mut g = GreenStructure {
            l_class,
            r_class,
            h_class,
            d_class,
            idempotent,
            h_members,
            h_idempotent,
            h_by_rl: h_ids,
            blocks: Vec::new(),
        };
        g.blocks = g.layout();
        g
    }

    fn layout(&self) -> Vec<EggBoxBlock> {
        let nd = self.d_class.iter().max().map_or(0, |m| m + 1);
        let mut rows = vec![Vec::new(); nd];
        let mut cols = vec![Vec::new(); nd];
        let mut sizes = vec![0usize; nd];
        for a in 0..self.d_class.len() {
            let d = self.d_class[a];
            sizes[d] += 1;
            if !rows[d].contains(&self.r_class[a]) {
                rows[d].push(self.r_class[a]);
            }
            if !cols[d].contains(&self.l_class[a]) {
                cols[d].push(self.l_class[a]);
            }
        }
        let mut blocks: Vec<EggBoxBlock> = (0..nd)
            .map(|d| {
                let mut rows = std::mem::take(&mut rows[d]);
                let mut cols = std::mem::take(&mut cols[d]);
                rows.sort_unstable();
                cols.sort_unstable();
                let cells = rows
                    .iter()
                    .map(|&r| {
                        cols.iter()
                            .map(|&l| {
                                self.h_by_rl
                                    .get(&(r, l))
                                    .map(|&h| self.h_members[h].clone())
                                    .unwrap_or_default()
                            })
                            .collect()
                    })
                    .collect();
                EggBoxBlock {
                    d_class: d,
                    rows,
                    cols,
                    cells,
                }
            })
            .collect();
        // d ids already follow minimal members, so a stable sort on size suffices
        blocks.sort_by_key(|b| std::cmp::Reverse(sizes[b.d_class]));
        blocks
    }

    pub fn size(&self) -> usize {
        self.l_class.len()
    }

    #[inline]
    pub fn l_class(&self, a: ElementId) -> usize {
        self.l_class[a.index()]
    }

    #[inline]
    pub fn r_class(&self, a: ElementId) -> usize {
        self.r_class[a.index()]
    }

    #[inline]
    pub fn h_class(&self, a: ElementId) -> usize {
        self.h_class[a.index()]
    }

    #[inline]
    pub fn d_class(&self, a: ElementId) -> usize {
        self.d_class[a.index()]
    }

    pub fn l_classes(&self) -> &[usize] {
        &self.l_class
    }

    pub fn r_classes(&self) -> &[usize] {
        &self.r_class
    }

    pub fn h_classes(&self) -> &[usize] {
        &self.h_class
    }

    pub fn d_classes(&self) -> &[usize] {
        &self.d_class
    }

    pub fn same_l(&self, a: ElementId, b: ElementId) -> bool {
        self.l_class(a) == self.l_class(b)
    }

    pub fn same_r(&self, a: ElementId, b: ElementId) -> bool {
        self.r_class(a) == self.r_class(b)
    }

    pub fn same_h(&self, a: ElementId, b: ElementId) -> bool {
        self.h_class(a) == self.h_class(b)
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.idempotent[a.index()]
    }

    pub fn h_class_count(&self) -> usize {
        self.h_members.len()
    }

    pub fn h_members(&self, h: usize) -> &[ElementId] {
        &self.h_members[h]
    }

    /// `H_a`.
    pub fn h_class_of(&self, a: ElementId) -> &[ElementId] {
        &self.h_members[self.h_class(a)]
    }

    /// The idempotent of H-class `h`, if any.
    pub fn h_idempotent(&self, h: usize) -> Option<ElementId> {
        self.h_idempotent[h]
    }

    /// The H-class `R(r) ∩ L(l)`, if nonempty.
    pub fn h_at(&self, r: usize, l: usize) -> Option<usize> {
        self.h_by_rl.get(&(r, l)).copied()
    }

    /// Members of `R_x ∩ L_y`.
    pub fn r_cap_l(&self, x: ElementId, y: ElementId) -> &[ElementId] {
        self.h_at(self.r_class(x), self.l_class(y))
            .map_or(&[], |h| self.h_members(h))
    }

    /// The idempotent in `R_x ∩ L_y`, if that H-class has one.
    pub fn idempotent_in(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.h_at(self.r_class(x), self.l_class(y))
            .and_then(|h| self.h_idempotent(h))
    }

    /// Egg-box blocks ordered by descending size, then smallest member.
    pub fn blocks(&self) -> &[EggBoxBlock] {
        &self.blocks
    }
}

/// Partition elements by mutual containment of their principal ideals.
fn mutual_classes(ideal: &[FixedBitSet]) -> Vec<usize> {
    let n = ideal.len();
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if class[a] != usize::MAX {
            continue;
        }
        class[a] = next;
        for b in ideal[a].ones().filter(|&b| b > a) {
            if class[b] == usize::MAX && ideal[b].contains(a) {
                class[b] = next;
            }
        }
        next += 1;
    }
    class
}

/// Relabel arbitrary keys as `0, 1, ...` in order of first occurrence.
fn canonical_ids<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.map(|k| {
        let next = ids.len();
        *ids.entry(k).or_insert(next)
    })
    .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn green_relations(s: &Semigroup) -> GreenStructure {
    GreenStructure::new(s)
}

/// Partitions for the generalized relations `L*` and `R*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarStructure {
    pub l_star_class: Vec<usize>,
    pub r_star_class: Vec<usize>,
}

impl StarStructure {
    pub fn same_l_star(&self, a: ElementId, b: ElementId) -> bool {
        self.l_star_class[a.index()] == self.l_star_class[b.index()]
    }

    pub fn same_r_star(&self, a: ElementId, b: ElementId) -> bool {
        self.r_star_class[a.index()] == self.r_star_class[b.index()]
    }
}

/// `a R* b` iff `xa = ya <=> xb = yb` for all `x, y` in `S^1`; `L*` dually
/// with `ax = ay`. Each element gets a bitset over the pairs `x < y` of `S^1`
/// and elements with equal bitsets share a class.
pub fn star_relations(s: &Semigroup) -> StarStructure {
    let m = MonoidView::new(s);
    let pairs: Vec<(ElementId, ElementId)> = m
        .elements()
        .flat_map(|x| m.elements().filter(move |&y| y > x).map(move |y| (x, y)))
        .collect();
    let signature = |a: ElementId, left: bool| {
        let mut bits = FixedBitSet::with_capacity(pairs.len());
        for (k, &(x, y)) in pairs.iter().enumerate() {
            let eq = if left {
                m.mul(x, a) == m.mul(y, a)
            } else {
                m.mul(a, x) == m.mul(a, y)
            };
            bits.set(k, eq);
        }
        bits
    };
    StarStructure {
        r_star_class: canonical_ids(s.elements().map(|a| signature(a, true))),
        l_star_class: canonical_ids(s.elements().map(|a| signature(a, false))),
    }
}

/// `ab` is a trace product when `ab ∈ R_a ∩ L_b`.
pub fn is_trace_product(s: &Semigroup, g: &GreenStructure, a: ElementId, b: ElementId) -> bool {
    let ab = s.mul(a, b);
    g.same_r(ab, a) && g.same_l(ab, b)
}

/// Whether `R_b ∩ L_a` contains an idempotent. Equivalent to
/// [`is_trace_product`] for every pair.
pub fn trace_product_criterion_check(g: &GreenStructure, a: ElementId, b: ElementId) -> bool {
    g.idempotent_in(b, a).is_some()
}

/// An H-class is a group exactly when it holds an idempotent.
pub fn h_class_is_group(s: &Semigroup, g: &GreenStructure, h: usize) -> bool {
    match g.h_idempotent(h) {
        Some(e) => {
            debug_assert!(g.h_members(h).iter().all(|&x| {
                g.h_members(h).iter().all(|&y| g.h_class(s.mul(x, y)) == h)
                    && s.mul(e, x) == x
                    && s.mul(x, e) == x
            }));
            true
        }
        None => false,
    }
}

/// Text egg-box: one block per D-class, rows are R-classes, columns are
/// L-classes, idempotents marked with `*`.
pub fn render_eggbox(s: &Semigroup, g: &GreenStructure) -> String {
    let mut out = String::new();
    for (k, block) in g.blocks().iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "D-class {} ({} R-classes x {} L-classes)",
            block.d_class,
            block.rows.len(),
            block.cols.len()
        );
        let cells: Vec<Vec<String>> = block
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|members| {
                        let parts: Vec<String> = members
                            .iter()
                            .map(|&x| {
                                let star = if g.is_idempotent(x) { "*" } else { "" };
                                format!("{}{}", s.label(x), star)
                            })
                            .collect();
                        format!("{{{}}}", parts.join(" "))
                    })
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = (0..block.cols.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join(" ").trim_end());
        }
    }
    out
}
