//! Subgroup lattices and the distinguished subgroups read off them.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{orbit, ElementId, GroupTable};
use crate::limits::Limits;
use crate::numtheory::{factorize, is_squarefree, odd_part};
use crate::subgroup::Subgroup;

/// One conjugacy class of subgroups. Indices point into
/// [`SubgroupLattice::subgroups`].
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub normalizer_order: usize,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Every subgroup of a group, partitioned into conjugacy classes.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
    classes: Vec<SubgroupClass>,
    class_of: Vec<usize>,
    index: HashMap<FixedBitSet, usize>,
    group_order: usize,
}

impl SubgroupLattice {
    /// Enumerate all subgroups by cyclic extension.
    ///
    /// Every subgroup is generated by elements of prime-power order, so
    /// starting from the trivial subgroup and repeatedly joining class
    /// representatives with cyclic subgroups of prime-power order reaches a
    /// conjugate of every subgroup; whole conjugacy orbits are added at once.
    pub fn compute(g: &GroupTable, limits: &Limits) -> Result<Self> {
        if g.order() > limits.lattice_order {
            return Err(GroupError::CapExceeded {
                what: "lattice group order",
                limit: limits.lattice_order,
            });
        }
        let extenders = prime_power_cyclic_generators(g);

        let mut subgroups: Vec<Subgroup> = Vec::new();
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut queue: Vec<usize> = Vec::new();

        let mut add_orbit = |h: Subgroup, subgroups: &mut Vec<Subgroup>, index: &mut HashMap<FixedBitSet, usize>| {
            let conjugates = orbit(h, |k| g.generators().iter().map(|&s| k.conjugate(g, s)).collect());
            let ids: Vec<usize> = conjugates
                .into_iter()
                .map(|k| {
                    let id = subgroups.len();
                    index.insert(k.bits().clone(), id);
                    subgroups.push(k);
                    id
                })
                .collect();
            let first = ids[0];
            orbits.push(ids);
            first
        };

        queue.push(add_orbit(Subgroup::trivial(g), &mut subgroups, &mut index));
        while let Some(h) = queue.pop() {
            for &z in &extenders {
                if subgroups[h].contains(z) {
                    continue;
                }
                let k = subgroups[h].extend(g, z);
                if !index.contains_key(k.bits()) {
                    queue.push(add_orbit(k, &mut subgroups, &mut index));
                }
            }
        }

        // Canonical numbering: subgroups sorted, classes by representative.
        let mut order: Vec<usize> = (0..subgroups.len()).collect();
        order.sort_by(|&a, &b| subgroups[a].cmp(&subgroups[b]));
        let mut renumber = vec![0; subgroups.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let mut slots: Vec<Option<Subgroup>> = subgroups.into_iter().map(Some).collect();
        let subgroups: Vec<Subgroup> = order.iter().map(|&old| slots[old].take().unwrap()).collect();
        let index: HashMap<FixedBitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.bits().clone(), i))
            .collect();

        let mut classes: Vec<SubgroupClass> = orbits
            .into_iter()
            .map(|ids| {
                let mut members: Vec<usize> = ids.into_iter().map(|i| renumber[i]).collect();
                members.sort_unstable();
                SubgroupClass {
                    representative: members[0],
                    normalizer_order: g.order() / members.len(),
                    members,
                }
            })
            .collect();
        classes.sort_by_key(|c| c.representative);
        let mut class_of = vec![0; subgroups.len()];
        for (c, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = c;
            }
        }
        Ok(Self {
            subgroups,
            classes,
            class_of,
            index,
            group_order: g.order(),
        })
    }

    /// All subgroups, smallest first.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn total_count(&self) -> usize {
        self.subgroups.len()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> &Subgroup {
        &self.subgroups[self.classes[class].representative]
    }

    pub fn class_of(&self, subgroup: usize) -> usize {
        self.class_of[subgroup]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.bits()).copied()
    }

    /// Classes of maximal subgroups.
    pub fn maximal_classes(&self) -> Vec<usize> {
        let n = self.group_order;
        (0..self.classes.len())
            .filter(|&c| {
                let m = self.representative(c);
                m.order() < n
                    && !self.subgroups.iter().any(|h| {
                        h.order() > m.order() && h.order() < n && h.order() % m.order() == 0 && m.is_subgroup_of(h)
                    })
            })
            .collect()
    }

    /// Normal subgroups: those whose conjugacy class is a singleton.
    pub fn normal_subgroups(&self) -> Vec<&Subgroup> {
        self.classes
            .iter()
            .filter(|c| c.size() == 1)
            .map(|c| &self.subgroups[c.representative])
            .collect()
    }

    /// Minimal normal subgroups.
    pub fn minimal_normal_subgroups(&self) -> Vec<&Subgroup> {
        let normals = self.normal_subgroups();
        normals
            .iter()
            .copied()
            .filter(|n| !n.is_trivial() && !normals.iter().any(|m| !m.is_trivial() && m.order() < n.order() && m.is_subgroup_of(n)))
            .collect()
    }

    /// The subgroup generated by all minimal normal subgroups.
    pub fn socle(&self, g: &GroupTable) -> Subgroup {
        let gens: Vec<ElementId> = self
            .minimal_normal_subgroups()
            .iter()
            .flat_map(|n| n.generators().iter().copied())
            .collect();
        Subgroup::generated(g, &gens)
    }

    /// A subgroup whose order is the full `primes`-part of `|G|`.
    pub fn hall_subgroup(&self, primes: &[u64]) -> Result<&Subgroup> {
        let target: u64 = factorize(self.group_order as u64)
            .into_iter()
            .filter(|(p, _)| primes.contains(p))
            .map(|(p, e)| p.pow(e))
            .product();
        self.subgroups
            .iter()
            .find(|h| h.order() as u64 == target)
            .ok_or_else(|| GroupError::NotFound(format!("no Hall subgroup for primes {primes:?}")))
    }
}

/// One generator for each cyclic subgroup of prime-power order > 1.
fn prime_power_cyclic_generators(g: &GroupTable) -> Vec<ElementId> {
    let orders = g.element_orders();
    let mut covered = FixedBitSet::with_capacity(g.order());
    let mut out = Vec::new();
    for x in g.elements().skip(1) {
        let m = orders[x.index()] as u64;
        if covered.contains(x.index()) || factorize(m).len() != 1 {
            continue;
        }
        out.push(x);
        // Mark the other generators x^k, gcd(k, m) = 1, of the same cyclic subgroup.
        let mut y = x;
        for k in 1..m {
            if crate::numtheory::gcd(k, m) == 1 {
                covered.insert(y.index());
            }
            y = g.mul(y, x);
        }
    }
    out
}

/// `{ x in G : H^x = H }`.
pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    normalizer_in(g, &Subgroup::whole(g), h)
}

/// `{ x in ambient : H^x = H }`.
pub fn normalizer_in(g: &GroupTable, ambient: &Subgroup, h: &Subgroup) -> Subgroup {
    let members: Vec<ElementId> = ambient
        .members()
        .iter()
        .copied()
        .filter(|&x| h.is_normalized_by(g, x))
        .collect();
    Subgroup::from_sorted_members(g, members)
}

/// A Sylow `p`-subgroup of `G`; trivial when `p` does not divide `|G|`.
pub fn sylow(g: &GroupTable, p: u64) -> Subgroup {
    sylow_in(g, &Subgroup::whole(g), p)
}

/// A Sylow `p`-subgroup of the subgroup `ambient`, grown one factor of `p`
/// at a time: while `P` is not Sylow, `N(P)/P` has an element of order `p`.
pub fn sylow_in(g: &GroupTable, ambient: &Subgroup, p: u64) -> Subgroup {
    sylow_containing(g, ambient, Subgroup::trivial(g), p)
}

/// A Sylow `p`-subgroup of `ambient` containing the `p`-subgroup `start`.
pub fn sylow_containing(g: &GroupTable, ambient: &Subgroup, start: Subgroup, p: u64) -> Subgroup {
    let target = crate::numtheory::p_part(ambient.order() as u64, p) as usize;
    let mut current = start;
    while current.order() < target {
        let x = ambient
            .members()
            .iter()
            .copied()
            .find(|&x| {
                !current.contains(x) && current.contains(g.pow(x, p)) && current.is_normalized_by(g, x)
            })
            .expect("a p-subgroup below Sylow size has a p-element in its normalizer");
        current = current.extend(g, x);
    }
    current
}

/// The largest normal 2-subgroup: the intersection of the conjugates of a
/// Sylow 2-subgroup.
pub fn core_o2(g: &GroupTable) -> Subgroup {
    let p = sylow(g, 2);
    let mut core = p.bits().clone();
    for k in orbit(p, |k| g.generators().iter().map(|&s| k.conjugate(g, s)).collect()) {
        core.intersect_with(k.bits());
    }
    let members = core.ones().map(|i| ElementId(i as u32)).collect();
    Subgroup::from_sorted_members(g, members)
}

/// Factored order of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeSignature {
    pub primes: Vec<u64>,
    pub exponents: Vec<u32>,
    pub odd_part: u64,
    pub odd_part_squarefree: bool,
}

pub fn prime_signature(order: u64) -> PrimeSignature {
    let f = factorize(order);
    PrimeSignature {
        primes: f.iter().map(|&(p, _)| p).collect(),
        exponents: f.iter().map(|&(_, e)| e).collect(),
        odd_part: odd_part(order),
        odd_part_squarefree: is_squarefree(odd_part(order)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    fn lattice(spec: &str) -> (GroupTable, SubgroupLattice) {
        let g = build(spec).unwrap();
        let l = SubgroupLattice::compute(&g, &Limits::default()).unwrap();
        (g, l)
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lattice("quaternion:8").1.total_count(), 6);
        assert_eq!(lattice("cyclic:81").1.total_count(), 5);
        let (_, s4) = lattice("symmetric:4");
        assert_eq!(s4.total_count(), 30);
        assert_eq!(s4.classes().len(), 11);
        let (_, a5) = lattice("alternating:5");
        assert_eq!(a5.classes().len(), 9);
    }

    #[test]
    fn class_sizes_match_normalizer_index() {
        let (g, l) = lattice("symmetric:4");
        for c in l.classes() {
            let n = normalizer(&g, &l.subgroups()[c.representative]);
            assert_eq!(c.size() * n.order(), g.order());
            assert_eq!(n.order(), c.normalizer_order);
        }
    }

    #[test]
    fn sylow_and_core() {
        let g = build("sl2:5").unwrap();
        assert_eq!(sylow(&g, 2).order(), 8);
        assert_eq!(sylow(&g, 7).order(), 1);
        assert_eq!(core_o2(&g).order(), 2);
        let a5 = build("alternating:5").unwrap();
        assert_eq!(sylow(&a5, 3).order(), 3);
        assert_eq!(core_o2(&a5).order(), 1);
        let d8 = build("dihedral:8").unwrap();
        assert_eq!(core_o2(&d8).order(), 8);
    }

    #[test]
    fn hall_maximal_socle() {
        let (_, c30) = lattice("cyclic:30");
        assert_eq!(c30.hall_subgroup(&[3, 5]).unwrap().order(), 15);
        assert_eq!(c30.hall_subgroup(&[]).unwrap().order(), 1);
        assert_eq!(c30.hall_subgroup(&[2, 3, 5]).unwrap().order(), 30);
        let (_, a5) = lattice("alternating:5");
        assert!(matches!(a5.hall_subgroup(&[2, 5]), Err(GroupError::NotFound(_))));

        let (g, psl27) = lattice("psl2:7");
        let mut orders: Vec<usize> = psl27.maximal_classes().iter().map(|&c| psl27.representative(c).order()).collect();
        orders.sort();
        assert_eq!(orders, vec![21, 24, 24]);
        assert_eq!(psl27.socle(&g).order(), 168);

        let (s4g, s4) = lattice("symmetric:4");
        assert_eq!(s4.socle(&s4g).order(), 4);
        let (_, q8) = lattice("quaternion:8");
        assert_eq!(q8.normal_subgroups().len(), 6);
        let (_, c7) = lattice("cyclic:7");
        let max: Vec<usize> = c7.maximal_classes();
        assert_eq!(max.len(), 1);
        assert!(c7.representative(max[0]).is_trivial());
    }

    #[test]
    fn normalizers() {
        let s3 = build("dihedral:6").unwrap();
        let t = s3.involutions()[0];
        let h = Subgroup::generated(&s3, &[t]);
        assert_eq!(normalizer(&s3, &h), h);
        let q8 = build("quaternion:8").unwrap();
        for x in q8.elements().filter(|&x| q8.element_order(x) == 4) {
            assert_eq!(normalizer(&q8, &Subgroup::generated(&q8, &[x])).order(), 8);
        }
    }

    #[test]
    fn signatures() {
        let s = prime_signature(120);
        assert_eq!(s.primes, vec![2, 3, 5]);
        assert_eq!(s.exponents, vec![3, 1, 1]);
        assert_eq!(s.odd_part, 15);
        assert!(s.odd_part_squarefree);
        assert!(prime_signature(1).primes.is_empty());
        assert!(!prime_signature(45).odd_part_squarefree);
    }
}
