//! Finite groups as tables over dense element handles.
//!
//! Every group, whatever it was built from, is closed breadth-first from the
//! identity under its generators. The closure records right multiplication by
//! each generator and a shortest generator word for every element; products
//! are read from a dense table for small groups and evaluated along the word
//! of the right operand otherwise.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::catalog::GroupSpec;
use crate::error::{GroupError, Result};
use crate::limits::Limits;
use crate::subgroup::Subgroup;

/// Handle of an element inside its owning [`GroupTable`]. The identity is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A concrete model of group elements used only while a table is built.
pub(crate) trait Realization {
    type Elem: Clone + Eq + Hash;
    fn identity(&self) -> Self::Elem;
    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
}

/// A finite group materialized over element handles `0..order`.
pub struct GroupTable {
    name: String,
    source: Option<GroupSpec>,
    order: usize,
    generators: Vec<ElementId>,
    right_gen: Vec<u32>,
    word_start: Vec<u32>,
    word_data: Vec<u16>,
    inv: Vec<u32>,
    dense: Option<Vec<u16>>,
    element_orders: OnceLock<Vec<u32>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.generators.len())
            .field("dense", &self.dense.is_some())
            .finish()
    }
}

/// Close `gens` under multiplication. Returns the table together with the
/// concrete element behind every handle.
pub(crate) fn materialize<R: Realization>(
    real: &R,
    gens: &[R::Elem],
    name: impl Into<String>,
    limits: &Limits,
) -> Result<(GroupTable, Vec<R::Elem>)> {
    if gens.len() > u16::MAX as usize {
        return Err(GroupError::InvalidGenerator("too many generators".into()));
    }
    let ngens = gens.len();
    let mut elems = vec![real.identity()];
    let mut index: HashMap<R::Elem, u32> = HashMap::new();
    index.insert(real.identity(), 0);
    let mut parent = vec![0u32];
    let mut parent_gen = vec![0u16];
    let mut right_gen: Vec<u32> = Vec::new();

    let mut x = 0usize;
    while x < elems.len() {
        for (i, g) in gens.iter().enumerate() {
            let y = real.product(&elems[x], g);
            let id = match index.entry(y) {
                Entry::Occupied(e) => *e.get(),
                Entry::Vacant(e) => {
                    let id = elems.len() as u32;
                    if elems.len() >= limits.group_order {
                        return Err(GroupError::CapExceeded {
                            what: "group order",
                            limit: limits.group_order,
                        });
                    }
                    elems.push(e.key().clone());
                    e.insert(id);
                    parent.push(x as u32);
                    parent_gen.push(i as u16);
                    id
                }
            };
            right_gen.push(id);
        }
        x += 1;
    }

    let order = elems.len();
    let inv = elems.iter().map(|e| index[&real.inverse(e)]).collect();
    let generators = gens.iter().map(|g| ElementId(index[g])).collect();
    let table = GroupTable::assemble(name.into(), order, ngens, generators, right_gen, parent, parent_gen, inv, limits);
    Ok((table, elems))
}

impl GroupTable {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        name: String,
        order: usize,
        ngens: usize,
        generators: Vec<ElementId>,
        right_gen: Vec<u32>,
        parent: Vec<u32>,
        parent_gen: Vec<u16>,
        inv: Vec<u32>,
        limits: &Limits,
    ) -> Self {
        let mut word_start = Vec::with_capacity(order + 1);
        let mut word_data: Vec<u16> = Vec::new();
        let mut scratch = Vec::new();
        for x in 0..order {
            word_start.push(word_data.len() as u32);
            if x == 0 {
                continue;
            }
            // Parents always precede children in breadth-first order.
            let p = parent[x] as usize;
            let (s, e) = (word_start[p] as usize, word_start[p + 1] as usize);
            scratch.clear();
            scratch.extend_from_slice(&word_data[s..e]);
            scratch.push(parent_gen[x]);
            word_data.extend_from_slice(&scratch);
        }
        word_start.push(word_data.len() as u32);

        let dense = (order <= limits.dense_table && order <= u16::MAX as usize + 1).then(|| {
            let mut t = vec![0u16; order * order];
            for a in 0..order {
                let row = &mut t[a * order..(a + 1) * order];
                row[0] = a as u16;
                for b in 1..order {
                    let via = row[parent[b] as usize] as usize;
                    row[b] = right_gen[via * ngens + parent_gen[b] as usize] as u16;
                }
            }
            t
        });

        Self {
            name,
            source: None,
            order,
            generators,
            right_gen,
            word_start,
            word_data,
            inv,
            dense,
            element_orders: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// The spec this group was built from, when it came from the catalogue.
    pub fn source(&self) -> Option<&GroupSpec> {
        self.source.as_ref()
    }

    pub(crate) fn with_source(mut self, spec: GroupSpec) -> Self {
        self.name = spec.to_string();
        self.source = Some(spec);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Handles of the generators the group was closed from, in input order.
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn has_dense_table(&self) -> bool {
        self.dense.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order as u32).map(ElementId)
    }

    /// Generator word (as generator indices) that reaches `x` from the identity.
    pub fn word(&self, x: ElementId) -> &[u16] {
        let i = x.index();
        &self.word_data[self.word_start[i] as usize..self.word_start[i + 1] as usize]
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.dense {
            Some(t) => ElementId(t[a.index() * self.order + b.index()] as u32),
            None => {
                let ngens = self.generators.len();
                let mut x = a.0 as usize;
                for &g in self.word(b) {
                    x = self.right_gen[x * ngens + g as usize] as usize;
                }
                ElementId(x as u32)
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inv[a.index()])
    }

    /// Right multiplication by the `i`-th generator.
    #[inline]
    pub fn mul_gen(&self, a: ElementId, i: usize) -> ElementId {
        ElementId(self.right_gen[a.index() * self.generators.len() + i])
    }

    pub fn pow(&self, a: ElementId, mut e: u64) -> ElementId {
        let mut base = a;
        let mut acc = ElementId::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conj(&self, a: ElementId, g: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Least `m >= 1` with `a^m = 1`.
    pub fn element_order(&self, a: ElementId) -> u32 {
        if let Some(orders) = self.element_orders.get() {
            return orders[a.index()];
        }
        self.compute_order(a)
    }

    fn compute_order(&self, a: ElementId) -> u32 {
        let mut x = a;
        let mut m = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            m += 1;
        }
        m
    }

    /// Orders of all elements, indexed by handle.
    pub fn element_orders(&self) -> &[u32] {
        self.element_orders.get_or_init(|| {
            let mut orders = vec![0u32; self.order];
            for x in self.elements() {
                if orders[x.index()] != 0 {
                    continue;
                }
                let m = self.compute_order(x);
                orders[x.index()] = m;
                // Powers x^k with gcd(k, m) = 1 share the order.
                let mut y = x;
                for k in 1..m {
                    if crate::numtheory::gcd(k as u64, m as u64) == 1 {
                        orders[y.index()] = m;
                    }
                    y = self.mul(y, x);
                }
            }
            orders
        })
    }

    /// Histogram `order -> count`, sorted by order.
    pub fn order_profile(&self) -> Vec<(u32, usize)> {
        let mut counts: std::collections::BTreeMap<u32, usize> = Default::default();
        for &o in self.element_orders() {
            *counts.entry(o).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    pub fn involutions(&self) -> Vec<ElementId> {
        let orders = self.element_orders();
        self.elements().filter(|x| orders[x.index()] == 2).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, &a)| g[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Structural audit of the table: identity, inverses, Latin rows and
    /// columns, and associativity. Associativity is checked exhaustively up to
    /// order 512 and on `samples` random triples above.
    pub fn audit(&self, samples: usize, seed: u64) -> std::result::Result<(), String> {
        let n = self.order;
        let full = n <= 512;
        let mut rng = StdRng::seed_from_u64(seed);
        for x in self.elements() {
            if self.mul(ElementId::IDENTITY, x) != x || self.mul(x, ElementId::IDENTITY) != x {
                return Err(format!("identity law fails at {x}"));
            }
            if !self.mul(x, self.inv(x)).is_identity() || self.inv(self.inv(x)) != x {
                return Err(format!("inverse law fails at {x}"));
            }
        }
        if full {
            let mut seen = vec![0usize; n];
            for a in self.elements() {
                for b in self.elements() {
                    let c = self.mul(a, b).index();
                    if seen[c] == 2 * a.index() + 1 {
                        return Err(format!("row {a} is not a permutation"));
                    }
                    seen[c] = 2 * a.index() + 1;
                }
            }
            seen.fill(0);
            for b in self.elements() {
                for a in self.elements() {
                    let c = self.mul(a, b).index();
                    if seen[c] == 2 * b.index() + 2 {
                        return Err(format!("column {b} is not a permutation"));
                    }
                    seen[c] = 2 * b.index() + 2;
                }
            }
            for a in self.elements() {
                for b in self.elements() {
                    let ab = self.mul(a, b);
                    for c in self.elements() {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(format!("associativity fails at ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        } else {
            for _ in 0..samples {
                let a = ElementId(rng.gen_range(0..n as u32));
                let b = ElementId(rng.gen_range(0..n as u32));
                let c = ElementId(rng.gen_range(0..n as u32));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(format!("associativity fails at ({a}, {b}, {c})"));
                }
                // Cancellation stands in for the Latin-square check.
                if self.mul(self.inv(a), self.mul(a, b)) != b {
                    return Err(format!("cancellation fails at ({a}, {b})"));
                }
            }
        }
        Ok(())
    }

    /// Partition of the elements into conjugacy classes.
    pub fn conjugacy_classes(&self) -> ConjClassPartition {
        let mut class_of = vec![u32::MAX; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if class_of[x.index()] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = vec![x];
            class_of[x.index()] = c;
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for &g in &self.generators {
                    let z = self.conj(y, g);
                    if class_of[z.index()] == u32::MAX {
                        class_of[z.index()] = c;
                        members.push(z);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        let orders = self.element_orders();
        let involution_class_count = classes.iter().filter(|c| orders[c[0].index()] == 2).count();
        ConjClassPartition {
            classes,
            class_of,
            involution_class_count,
        }
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> Subgroup {
        let members: Vec<ElementId> = self
            .elements()
            .filter(|&x| self.generators.iter().all(|&g| self.mul(x, g) == self.mul(g, x)))
            .collect();
        Subgroup::from_sorted_members(self, members)
    }

    /// Derived subgroup of `h`: normal closure in `h` of the commutators of
    /// its generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = h.generators();
        let mut seeds = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                seeds.push(self.commutator(a, b));
            }
        }
        Subgroup::normal_closure(self, gens, &seeds)
    }

    /// The derived series `G, G', G'', ...` until it stabilizes, and whether
    /// it reaches the trivial subgroup.
    pub fn derived_series(&self) -> (Vec<Subgroup>, bool) {
        let mut series = vec![Subgroup::whole(self)];
        loop {
            let next = self.derived_subgroup(series.last().unwrap());
            if next.order() == series.last().unwrap().order() {
                break;
            }
            series.push(next);
        }
        let solvable = series.last().unwrap().order() == 1;
        (series, solvable)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().1
    }

    /// The quotient by a normal subgroup together with the projection map.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient> {
        if !normal.is_normal_in(self) {
            return Err(GroupError::NotNormal);
        }
        let mut label = vec![u32::MAX; self.order];
        let mut reps = Vec::new();
        for x in self.elements() {
            if label[x.index()] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &n in normal.members() {
                label[self.mul(x, n).index()] = c;
            }
        }
        let real = CosetRealization {
            group: self,
            label: &label,
            reps: &reps,
        };
        let gens: Vec<u32> = self.generators.iter().map(|g| label[g.index()]).collect();
        let limits = Limits {
            group_order: usize::MAX,
            ..Limits::default()
        };
        let name = format!("({})/N{}", self.name, normal.order());
        let (group, elems) = materialize(&real, &gens, name, &limits)?;
        let mut coset_to_id = vec![0u32; reps.len()];
        for (id, c) in elems.iter().enumerate() {
            coset_to_id[*c as usize] = id as u32;
        }
        let projection = label.iter().map(|&c| ElementId(coset_to_id[c as usize])).collect();
        Ok(Quotient { group, projection })
    }

    /// The subgroup `h` as a group in its own right, with the embedding of
    /// its handles into `self`.
    pub fn subgroup_table(&self, h: &Subgroup) -> (GroupTable, Vec<ElementId>) {
        let real = SubgroupRealization { group: self };
        let limits = Limits {
            group_order: usize::MAX,
            ..Limits::default()
        };
        let (table, elems) = materialize(&real, h.generators(), format!("subgroup of {}", self.name), &limits)
            .expect("subgroup closure is bounded by the parent");
        (table, elems)
    }
}

/// Elements partitioned by conjugacy.
#[derive(Debug, Clone)]
pub struct ConjClassPartition {
    /// Classes in order of their least element; the identity class is first.
    pub classes: Vec<Vec<ElementId>>,
    pub class_of: Vec<u32>,
    /// Number of classes made of involutions.
    pub involution_class_count: usize,
}

impl ConjClassPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn sorted_sizes(&self) -> Vec<usize> {
        let mut s = self.sizes();
        s.sort_unstable();
        s
    }
}

/// A quotient group with its projection map.
#[derive(Debug)]
pub struct Quotient {
    pub group: GroupTable,
    pub projection: Vec<ElementId>,
}

impl Quotient {
    pub fn project(&self, x: ElementId) -> ElementId {
        self.projection[x.index()]
    }
}

struct CosetRealization<'a> {
    group: &'a GroupTable,
    label: &'a [u32],
    reps: &'a [ElementId],
}

impl Realization for CosetRealization<'_> {
    type Elem = u32;
    fn identity(&self) -> u32 {
        self.label[0]
    }
    fn product(&self, a: &u32, b: &u32) -> u32 {
        let x = self.group.mul(self.reps[*a as usize], self.reps[*b as usize]);
        self.label[x.index()]
    }
    fn inverse(&self, a: &u32) -> u32 {
        self.label[self.group.inv(self.reps[*a as usize]).index()]
    }
}

struct SubgroupRealization<'a> {
    group: &'a GroupTable,
}

impl Realization for SubgroupRealization<'_> {
    type Elem = ElementId;
    fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }
    fn product(&self, a: &ElementId, b: &ElementId) -> ElementId {
        self.group.mul(*a, *b)
    }
    fn inverse(&self, a: &ElementId) -> ElementId {
        self.group.inv(*a)
    }
}

/// Breadth-first orbit helper shared by conjugation actions on subgroups.
pub(crate) fn orbit<T: Clone + Eq + Hash>(start: T, mut step: impl FnMut(&T) -> Vec<T>) -> Vec<T> {
    let mut seen: std::collections::HashSet<T> = std::collections::HashSet::new();
    let mut out = vec![start.clone()];
    seen.insert(start);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let next = step(&out[i]);
        for t in next {
            if seen.insert(t.clone()) {
                out.push(t);
                queue.push_back(out.len() - 1);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, family, Family};

    #[test]
    fn words_reach_every_element() {
        let g = family(Family::Symmetric, &[4]).unwrap();
        for x in g.elements() {
            let mut y = ElementId::IDENTITY;
            for &i in g.word(x) {
                y = g.mul_gen(y, i as usize);
            }
            assert_eq!(y, x);
        }
    }

    #[test]
    fn dense_and_word_products_agree() {
        let g = family(Family::Symmetric, &[5]).unwrap();
        let sparse_limits = Limits {
            dense_table: 0,
            ..Limits::default()
        };
        let h = crate::catalog::build_with(g.source().unwrap(), &sparse_limits).unwrap();
        assert!(g.has_dense_table());
        assert!(!h.has_dense_table());
        for a in g.elements().step_by(7) {
            for b in g.elements() {
                assert_eq!(g.mul(a, b), h.mul(a, b));
            }
        }
        h.audit(20_000, 1).unwrap();
    }

    #[test]
    fn element_orders() {
        let c6 = family(Family::Cyclic, &[6]).unwrap();
        assert_eq!(c6.element_order(ElementId::IDENTITY), 1);
        assert_eq!(c6.element_order(c6.generators()[0]), 6);

        let q8 = family(Family::Quaternion, &[8]).unwrap();
        let z = q8.center();
        for x in q8.elements() {
            if !z.contains(x) {
                assert_eq!(q8.element_order(x), 4);
            }
        }
    }

    #[test]
    fn conjugacy_classes_small() {
        let s3 = family(Family::Dihedral, &[6]).unwrap();
        let cc = s3.conjugacy_classes();
        assert_eq!(cc.sorted_sizes(), vec![1, 2, 3]);
        assert_eq!(cc.classes[0], vec![ElementId::IDENTITY]);

        let c12 = family(Family::Cyclic, &[12]).unwrap();
        assert_eq!(c12.conjugacy_classes().classes.len(), 12);

        let q8 = family(Family::Quaternion, &[8]).unwrap();
        let cc = q8.conjugacy_classes();
        assert_eq!(cc.involution_class_count, 1);
        let inv = q8.involutions();
        assert_eq!(inv.len(), 1);
        assert_eq!(cc.classes[cc.class_of[inv[0].index()] as usize].len(), 1);
    }

    #[test]
    fn derived_series_examples() {
        let a5 = family(Family::Alternating, &[5]).unwrap();
        assert!(!a5.derived_series().1);

        let s4 = family(Family::Symmetric, &[4]).unwrap();
        let (series, solvable) = s4.derived_series();
        assert!(solvable);
        let orders: Vec<usize> = series.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);

        let e = family(Family::ElementaryAbelian, &[3, 2]).unwrap();
        let (series, solvable) = e.derived_series();
        assert!(solvable);
        assert_eq!(series.len(), 2);
    }

    #[test]
    fn centers() {
        let sl25 = family(Family::Sl2, &[5]).unwrap();
        assert_eq!(sl25.center().order(), 2);
        let c9 = family(Family::Cyclic, &[9]).unwrap();
        assert_eq!(c9.center().order(), 9);
        let q16 = family(Family::Quaternion, &[16]).unwrap();
        assert_eq!(q16.center().order(), 2);
    }

    #[test]
    fn quotients() {
        let sl25 = family(Family::Sl2, &[5]).unwrap();
        let z = sl25.center();
        let q = sl25.quotient(&z).unwrap();
        assert_eq!(q.group.order(), 60);
        q.group.audit(0, 0).unwrap();
        for a in sl25.elements().step_by(5) {
            for b in sl25.elements() {
                assert_eq!(q.project(sl25.mul(a, b)), q.group.mul(q.project(a), q.project(b)));
            }
        }

        let s4 = build("symmetric:4").unwrap();
        let triv = Subgroup::trivial(&s4);
        let q = s4.quotient(&triv).unwrap();
        assert_eq!(q.group.order(), 24);
        assert_eq!(q.group.order_profile(), s4.order_profile());
        let whole = s4.quotient(&Subgroup::whole(&s4)).unwrap();
        assert_eq!(whole.group.order(), 1);

        let s3 = build("dihedral:6").unwrap();
        let refl = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let h = Subgroup::generated(&s3, &[refl]);
        assert_eq!(s3.quotient(&h).unwrap_err(), GroupError::NotNormal);
    }
}
