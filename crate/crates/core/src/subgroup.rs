use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::group::{ElementId, GroupTable};

/// A subgroup of a [`GroupTable`], stored as a sorted member list plus a
/// membership bitmask over the owner's handles. Equality and hashing go
/// through the bitmask; the generator list is bookkeeping only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<ElementId>,
    bits: FixedBitSet,
    gens: Vec<ElementId>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Smaller subgroups first, then lexicographic on the sorted member lists.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl Subgroup {
    pub fn trivial(g: &GroupTable) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.order());
        bits.insert(0);
        Self {
            members: vec![ElementId::IDENTITY],
            bits,
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &GroupTable) -> Self {
        let mut bits = FixedBitSet::with_capacity(g.order());
        bits.insert_range(..);
        Self {
            members: g.elements().collect(),
            bits,
            gens: g.generators().iter().copied().filter(|x| !x.is_identity()).collect(),
        }
    }

    /// Wrap a member list already known to be a subgroup. Generators are
    /// recomputed greedily.
    pub(crate) fn from_sorted_members(g: &GroupTable, members: Vec<ElementId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut bits = FixedBitSet::with_capacity(g.order());
        for x in &members {
            bits.insert(x.index());
        }
        let mut sub = Self {
            members,
            bits,
            gens: Vec::new(),
        };
        sub.gens = sub.reduced_generators(g);
        sub
    }

    /// Build from an arbitrary element set, or `None` if it is not a subgroup.
    pub fn from_elements(g: &GroupTable, elems: &[ElementId]) -> Option<Self> {
        let mut members = elems.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&ElementId::IDENTITY) {
            return None;
        }
        let mut bits = FixedBitSet::with_capacity(g.order());
        for x in &members {
            bits.insert(x.index());
        }
        let closed = members
            .iter()
            .all(|&a| bits.contains(g.inv(a).index()) && members.iter().all(|&b| bits.contains(g.mul(a, b).index())));
        closed.then(|| Self::from_sorted_members(g, members))
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &GroupTable, gens: &[ElementId]) -> Self {
        let mut h = Self::trivial(g);
        for &x in gens {
            h = h.extend(g, x);
        }
        h
    }

    /// The subgroup generated by `gens`, or `None` once it grows past `max_order`.
    pub fn generated_bounded(g: &GroupTable, gens: &[ElementId], max_order: usize) -> Option<Self> {
        let mut h = Self::trivial(g);
        for &x in gens {
            h = h.extend_bounded(g, x, max_order)?;
        }
        Some(h)
    }

    /// Normal closure of `seeds` under conjugation by `ambient_gens`.
    pub fn normal_closure(g: &GroupTable, ambient_gens: &[ElementId], seeds: &[ElementId]) -> Self {
        let mut h = Self::generated(g, seeds);
        loop {
            let mut grew = false;
            let gens = h.gens.clone();
            'scan: for &s in &gens {
                for &a in ambient_gens {
                    let c = g.conj(s, a);
                    if !h.contains(c) {
                        h = h.extend(g, c);
                        grew = true;
                        break 'scan;
                    }
                }
            }
            if !grew {
                return h;
            }
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// A generating set (never contains the identity).
    pub fn generators(&self) -> &[ElementId] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.bits.contains(x.index())
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Whether `x` normalizes this subgroup.
    pub fn is_normalized_by(&self, g: &GroupTable, x: ElementId) -> bool {
        self.gens.iter().all(|&h| self.contains(g.conj(h, x)))
    }

    pub fn is_normal_in(&self, g: &GroupTable) -> bool {
        g.generators().iter().all(|&x| self.is_normalized_by(g, x))
    }

    /// `⟨self, c⟩`.
    pub fn extend(&self, g: &GroupTable, c: ElementId) -> Self {
        self.extend_bounded(g, c, usize::MAX).expect("unbounded extension")
    }

    /// `⟨self, c⟩`, or `None` if it has more than `max_order` elements.
    pub fn extend_bounded(&self, g: &GroupTable, c: ElementId, max_order: usize) -> Option<Self> {
        if self.contains(c) {
            return Some(self.clone());
        }
        let mut bits = self.bits.clone();
        let mut members = self.members.clone();
        if self.is_normalized_by(g, c) {
            // ⟨H, c⟩ is the union of the cosets H c^i.
            let mut power = c;
            while !bits.contains(power.index()) {
                for &h in &self.members {
                    let y = g.mul(h, power);
                    bits.insert(y.index());
                    members.push(y);
                }
                if members.len() > max_order {
                    return None;
                }
                power = g.mul(power, c);
            }
        } else {
            let mut all_gens = self.gens.clone();
            all_gens.push(c);
            // Elements of H only need the new generator; new elements need all.
            let base = members.len();
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                let gens: &[ElementId] = if i < base { std::slice::from_ref(&c) } else { &all_gens };
                for &s in gens {
                    let y = g.mul(x, s);
                    if !bits.contains(y.index()) {
                        bits.insert(y.index());
                        members.push(y);
                        if members.len() > max_order {
                            return None;
                        }
                    }
                }
                i += 1;
            }
        }
        members.sort_unstable();
        let mut gens = self.gens.clone();
        gens.push(c);
        Some(Self { members, bits, gens })
    }

    /// `x^-1 H x`.
    pub fn conjugate(&self, g: &GroupTable, x: ElementId) -> Self {
        let mut members: Vec<ElementId> = self.members.iter().map(|&h| g.conj(h, x)).collect();
        members.sort_unstable();
        let mut bits = FixedBitSet::with_capacity(g.order());
        for m in &members {
            bits.insert(m.index());
        }
        let gens = self.gens.iter().map(|&h| g.conj(h, x)).collect();
        Self { members, bits, gens }
    }

    pub fn intersection(&self, g: &GroupTable, other: &Subgroup) -> Self {
        let members: Vec<ElementId> = self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        Self::from_sorted_members(g, members)
    }

    /// Closure under products and inverses, and presence of the identity.
    pub fn verify(&self, g: &GroupTable) -> bool {
        self.contains(ElementId::IDENTITY)
            && g.order() % self.order() == 0
            && self.members.iter().all(|&a| {
                self.contains(g.inv(a)) && self.gens.iter().all(|&s| self.contains(g.mul(a, s)))
            })
            && self.gens.iter().all(|&s| self.contains(s))
            && Self::generated(g, &self.gens).bits == self.bits
    }

    /// Greedy generating set: scan members, keep those outside the span so far.
    fn reduced_generators(&self, g: &GroupTable) -> Vec<ElementId> {
        let orders = g.element_orders();
        // Prefer elements of large order so the set stays small.
        let mut candidates = self.members[1..].to_vec();
        candidates.sort_by_key(|x| (std::cmp::Reverse(orders[x.index()]), *x));
        let mut span = Self::trivial(g);
        let mut gens = Vec::new();
        for x in candidates {
            if span.order() == self.order() {
                break;
            }
            if !span.contains(x) {
                span = span.extend(g, x);
                gens.push(x);
            }
        }
        gens
    }

    pub fn is_cyclic(&self, g: &GroupTable) -> bool {
        let orders = g.element_orders();
        self.members.iter().any(|x| orders[x.index()] as usize == self.order())
    }

    pub fn is_abelian(&self, g: &GroupTable) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    #[test]
    fn generated_and_extend() {
        let s4 = build("symmetric:4").unwrap();
        let whole = Subgroup::generated(&s4, s4.generators());
        assert_eq!(whole.order(), 24);
        assert!(whole.verify(&s4));
        let t = Subgroup::trivial(&s4);
        assert!(t.verify(&s4));
        assert!(t.is_subgroup_of(&whole));
        let inv = s4.involutions();
        let h = Subgroup::generated(&s4, &inv[..1]);
        assert_eq!(h.order(), 2);
        assert!(Subgroup::generated_bounded(&s4, s4.generators(), 12).is_none());
    }

    #[test]
    fn from_elements_rejects_non_subgroups() {
        let s3 = build("dihedral:6").unwrap();
        let inv = s3.involutions();
        assert!(Subgroup::from_elements(&s3, &[ElementId::IDENTITY, inv[0], inv[1]]).is_none());
        let h = Subgroup::from_elements(&s3, &[ElementId::IDENTITY, inv[0]]).unwrap();
        assert_eq!(h.order(), 2);
        assert!(!h.is_normal_in(&s3));
    }

    #[test]
    fn normal_closure_of_a_transposition_is_s4() {
        let s4 = build("symmetric:4").unwrap();
        let t = s4.involutions()[0];
        let n = Subgroup::normal_closure(&s4, s4.generators(), &[t]);
        assert!(n.is_normal_in(&s4));
        assert!(n.order() == 24 || n.order() == 4);
    }
}
