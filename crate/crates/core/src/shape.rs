//! Recognizing the named group shapes, and isomorphism testing for small
//! groups.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::group::{ElementId, GroupTable};
use crate::numtheory::{is_power_of_two, prime_power};
use crate::subgroup::Subgroup;

/// The shapes named by the classification. Recognition tries them in the
/// order cyclic, elementary abelian (rank at least 2), dihedral (order at
/// least 6), generalized quaternion, so each group gets exactly one tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ShapeTag {
    Cyclic { order: usize },
    ElementaryAbelian { p: u64, k: u32 },
    Dihedral { order: usize },
    GeneralizedQuaternion { order: usize },
    Other,
}

impl ShapeTag {
    pub fn is_cyclic(self) -> bool {
        matches!(self, ShapeTag::Cyclic { .. })
    }

    pub fn is_quaternion(self) -> bool {
        matches!(self, ShapeTag::GeneralizedQuaternion { .. })
    }

    /// Cyclic or generalized quaternion.
    pub fn is_cyclic_or_quaternion(self) -> bool {
        self.is_cyclic() || self.is_quaternion()
    }
}

impl fmt::Display for ShapeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeTag::Cyclic { order } => write!(f, "cyclic({order})"),
            ShapeTag::ElementaryAbelian { p, k } => write!(f, "elementary_abelian({p},{k})"),
            ShapeTag::Dihedral { order } => write!(f, "dihedral({order})"),
            ShapeTag::GeneralizedQuaternion { order } => write!(f, "generalized_quaternion({order})"),
            ShapeTag::Other => write!(f, "other"),
        }
    }
}

pub fn recognize_shape(g: &GroupTable) -> ShapeTag {
    recognize_subgroup_shape(g, &Subgroup::whole(g))
}

/// Shape of the subgroup `h`, checked against defining relations inside `g`.
pub fn recognize_subgroup_shape(g: &GroupTable, h: &Subgroup) -> ShapeTag {
    let n = h.order();
    let orders = g.element_orders();
    let ord = |x: ElementId| orders[x.index()] as usize;
    if h.members().iter().any(|&x| ord(x) == n) {
        return ShapeTag::Cyclic { order: n };
    }
    if let Some((p, k)) = prime_power(n as u64) {
        if k >= 2 && h.is_abelian(g) && h.members()[1..].iter().all(|&x| ord(x) as u64 == p) {
            return ShapeTag::ElementaryAbelian { p, k };
        }
    }
    // x of order n/2, y outside <x> with y^2 = target(x) and y^-1 x y = x^-1.
    let index_two = |target: &dyn Fn(ElementId) -> ElementId| -> bool {
        let Some(&x) = h.members().iter().find(|&&x| ord(x) == n / 2) else {
            return false;
        };
        let cyc = Subgroup::generated(g, &[x]);
        let want = target(x);
        let xi = g.inv(x);
        h.members()
            .iter()
            .any(|&y| !cyc.contains(y) && g.mul(y, y) == want && g.conj(x, y) == xi)
    };
    if n >= 6 && n % 2 == 0 && index_two(&|_| ElementId::IDENTITY) {
        return ShapeTag::Dihedral { order: n };
    }
    if n >= 8 && is_power_of_two(n as u64) && index_two(&|x| g.pow(x, n as u64 / 4)) {
        return ShapeTag::GeneralizedQuaternion { order: n };
    }
    ShapeTag::Other
}

/// Cheap isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    pub order_profile: Vec<(u32, usize)>,
    pub class_sizes: Vec<usize>,
}

pub fn fingerprint(g: &GroupTable) -> Fingerprint {
    Fingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        order_profile: g.order_profile(),
        class_sizes: g.conjugacy_classes().sorted_sizes(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoVerdict {
    Isomorphic,
    NotIsomorphic,
    /// Above the exact-mode bound every invariant agreed; not a proof.
    FingerprintMatch,
}

impl IsoVerdict {
    /// Isomorphic or fingerprint-equal.
    pub fn plausible(self) -> bool {
        self != IsoVerdict::NotIsomorphic
    }
}

/// Largest order decided exactly by [`bounded_isomorphic`].
pub const EXACT_ISOMORPHISM_BOUND: usize = 256;

/// Exact up to [`EXACT_ISOMORPHISM_BOUND`], fingerprint comparison above.
pub fn bounded_isomorphic(g1: &GroupTable, g2: &GroupTable) -> IsoVerdict {
    if fingerprint(g1) != fingerprint(g2) {
        return IsoVerdict::NotIsomorphic;
    }
    // Finite abelian groups are determined by their element-order counts.
    if g1.is_abelian() {
        return IsoVerdict::Isomorphic;
    }
    if g1.order() > EXACT_ISOMORPHISM_BOUND {
        return IsoVerdict::FingerprintMatch;
    }
    if exact_isomorphism(g1, g2).is_some() {
        IsoVerdict::Isomorphic
    } else {
        IsoVerdict::NotIsomorphic
    }
}

/// An isomorphism `g1 -> g2` as an image table, found by backtracking over
/// images of a small generating set of `g1`.
pub fn exact_isomorphism(g1: &GroupTable, g2: &GroupTable) -> Option<Vec<ElementId>> {
    if g1.order() != g2.order() {
        return None;
    }
    let gens = Subgroup::from_sorted_members(g1, g1.elements().collect()).generators().to_vec();
    let cc1 = g1.conjugacy_classes();
    let cc2 = g2.conjugacy_classes();
    let key1 = |x: ElementId| (g1.element_order(x), cc1.classes[cc1.class_of[x.index()] as usize].len());
    let key2 = |y: ElementId| (g2.element_order(y), cc2.classes[cc2.class_of[y.index()] as usize].len());
    let candidates: Vec<Vec<ElementId>> = gens
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            g2.elements()
                .filter(|&y| key2(y) == key1(s))
                // Up to inner automorphisms of g2 the first image is a class representative.
                .filter(|&y| i > 0 || cc2.classes[cc2.class_of[y.index()] as usize][0] == y)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search_images(g1, g2, &gens, &candidates, &mut images)
}

fn search_images(
    g1: &GroupTable,
    g2: &GroupTable,
    gens: &[ElementId],
    candidates: &[Vec<ElementId>],
    images: &mut Vec<ElementId>,
) -> Option<Vec<ElementId>> {
    let j = images.len();
    if j == gens.len() {
        return extend_homomorphism(g1, &gens[..j], images, g2, true).filter(|m| m.iter().all(|x| x.0 != u32::MAX));
    }
    for &y in &candidates[j] {
        images.push(y);
        if extend_homomorphism(g1, &gens[..=j], images, g2, true).is_some() {
            if let Some(found) = search_images(g1, g2, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extend `gens[i] -> images[i]` along Cayley edges of `<gens>` in `g1`.
/// Returns the image table (unreached entries are `u32::MAX`) when every edge
/// is consistent, and, if `injective`, no two elements share an image.
pub fn extend_homomorphism(
    g1: &GroupTable,
    gens: &[ElementId],
    images: &[ElementId],
    g2: &GroupTable,
    injective: bool,
) -> Option<Vec<ElementId>> {
    let mut map = vec![ElementId(u32::MAX); g1.order()];
    let mut used = FixedBitSet::with_capacity(g2.order());
    map[0] = ElementId::IDENTITY;
    used.insert(0);
    let mut queue = vec![ElementId::IDENTITY];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let fx = map[x.index()];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g1.mul(x, s);
            let fy = g2.mul(fx, t);
            if map[y.index()].0 == u32::MAX {
                if injective && used.contains(fy.index()) {
                    return None;
                }
                used.insert(fy.index());
                map[y.index()] = fy;
                queue.push(y);
            } else if map[y.index()] != fy {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, semidirect_by_automorphisms};
    use crate::limits::Limits;

    #[test]
    fn shapes() {
        assert_eq!(recognize_shape(&build("quaternion:16").unwrap()), ShapeTag::GeneralizedQuaternion { order: 16 });
        assert_eq!(
            recognize_shape(&build("elementary_abelian:2:2").unwrap()),
            ShapeTag::ElementaryAbelian { p: 2, k: 2 }
        );
        assert_eq!(recognize_shape(&build("perm:(1,2,3);(1,2)").unwrap()), ShapeTag::Dihedral { order: 6 });
        assert_eq!(recognize_shape(&build("dihedral:4").unwrap()), ShapeTag::ElementaryAbelian { p: 2, k: 2 });
        assert_eq!(recognize_shape(&build("dihedral:2").unwrap()), ShapeTag::Cyclic { order: 2 });
        assert_eq!(recognize_shape(&build("cyclic:1").unwrap()), ShapeTag::Cyclic { order: 1 });
        assert_eq!(recognize_shape(&build("alternating:4").unwrap()), ShapeTag::Other);
        assert_eq!(recognize_shape(&build("dihedral:8").unwrap()), ShapeTag::Dihedral { order: 8 });
        assert_eq!(recognize_shape(&build("product:cyclic:2*cyclic:4").unwrap()), ShapeTag::Other);
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = build("cyclic:4").unwrap();
        let v4 = build("elementary_abelian:2:2").unwrap();
        assert_eq!(bounded_isomorphic(&c4, &v4), IsoVerdict::NotIsomorphic);
        let q8 = build("quaternion:8").unwrap();
        let d8 = build("dihedral:8").unwrap();
        assert_eq!(bounded_isomorphic(&q8, &d8), IsoVerdict::NotIsomorphic);
        assert_eq!(
            bounded_isomorphic(&build("psl2:5").unwrap(), &build("alternating:5").unwrap()),
            IsoVerdict::Isomorphic
        );
        assert_eq!(
            bounded_isomorphic(&build("dihedral:6").unwrap(), &build("symmetric:3").unwrap()),
            IsoVerdict::Isomorphic
        );
        let c6 = build("cyclic:6").unwrap();
        assert_eq!(
            bounded_isomorphic(&c6, &build("product:cyclic:2*cyclic:3").unwrap()),
            IsoVerdict::Isomorphic
        );
    }

    #[test]
    fn sl23_is_q8_by_z3() {
        let q8 = build("quaternion:8").unwrap();
        let z3 = build("cyclic:3").unwrap();
        let (x, y) = (q8.generators()[0], q8.generators()[1]);
        // i -> j -> k = ij -> i
        let auto = extend_homomorphism(&q8, &[x, y], &[y, q8.mul(x, y)], &q8, true).unwrap();
        let g = semidirect_by_automorphisms(&q8, &z3, &[auto], &Limits::default()).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(bounded_isomorphic(&build("sl2:3").unwrap(), &g), IsoVerdict::Isomorphic);
        let direct = build("product:quaternion:8*cyclic:3").unwrap();
        assert_eq!(bounded_isomorphic(&direct, &g), IsoVerdict::NotIsomorphic);
    }
}
