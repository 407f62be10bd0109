//! Per-space derived data: operator tables and set families.
//!
//! An [`Analysis`] wraps one validated [`Space`] and memoizes everything
//! the deciders need: closure and delta-closure of every subset, the
//! generalized open families, the theta-operator tables and the
//! generalized-closed families. Base tables are built eagerly (they cost
//! `O(2^n)`); families and theta data are built once on first use behind
//! `OnceLock`s, so an `Analysis` behaves as an idempotent write-once cache
//! and is safe to share across threads.
//!
//! Everything here works on raw `u32` masks for speed; the public
//! [`crate::genop`] surface wraps these tables back into [`Subset`]s.
//!
//! Closure and delta-closure tables are filled through point-closures
//! (both operators distribute over unions), while [`crate::space`] keeps
//! the direct definitional forms. The two routes are compared exhaustively
//! in tests.

use std::sync::OnceLock;

use crate::genop::{GVariant, Kind, ThetaKind};
use crate::space::Space;
use crate::subset::mask_full;

/// A family of subsets of one space: sorted member list plus a membership
/// bitmap over all `2^n` masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fam {
    n: usize,
    members: Vec<u32>,
    bitmap: Vec<u64>,
}

impl Fam {
    pub(crate) fn from_predicate(n: usize, mut pred: impl FnMut(u32) -> bool) -> Fam {
        let size = 1usize << n;
        let mut members = Vec::new();
        let mut bitmap = vec![0u64; size.div_ceil(64)];
        for m in 0..size as u32 {
            if pred(m) {
                members.push(m);
                bitmap[(m >> 6) as usize] |= 1 << (m & 63);
            }
        }
        Fam { n, members, bitmap }
    }

    pub(crate) fn from_members(n: usize, mut members: Vec<u32>) -> Fam {
        members.sort_unstable();
        members.dedup();
        let mut bitmap = vec![0u64; (1usize << n).div_ceil(64)];
        for &m in &members {
            bitmap[(m >> 6) as usize] |= 1 << (m & 63);
        }
        Fam { n, members, bitmap }
    }

    /// The family of complements of the members.
    pub(crate) fn complements(&self) -> Fam {
        let full = mask_full(self.n);
        Fam::from_members(self.n, self.members.iter().map(|&m| full & !m).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, m: u32) -> bool {
        self.bitmap[(m >> 6) as usize] & (1 << (m & 63)) != 0
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Theta-operator tables for one base kind (e*-open or beta-open sets).
///
/// `constraints[x]` holds the minimal kind-closures of base-open sets
/// containing `x`; a point is in the theta-closure of `A` iff every
/// constraint mask meets `A`, and in the theta-interior iff some
/// constraint mask is contained in `A`. Restricting to minimal masks is
/// sound for both quantifiers.
pub struct ThetaData {
    /// Theta-closure of every mask.
    pub cl: Vec<u32>,
    /// Theta-interior of every mask, computed from its own definition
    /// (not via complement duality; the duality is a verified property).
    pub int: Vec<u32>,
    /// Theta-open sets: complements of the fixpoints of `cl`.
    pub open: Fam,
    /// Theta-closed sets: fixpoints of `cl`.
    pub closed: Fam,
    /// `(U, kind_closure(U))` for every base-open `U`, in ascending order.
    pub base_kcl: Vec<(u32, u32)>,
    constraints: Vec<Vec<u32>>,
}

impl ThetaData {
    /// Kind-closure of a base-open member, if `m` is one.
    pub fn kcl_of_open(&self, m: u32) -> Option<u32> {
        self.base_kcl
            .binary_search_by_key(&m, |&(u, _)| u)
            .ok()
            .map(|i| self.base_kcl[i].1)
    }
}

/// Derived tables and cached families for one space.
pub struct Analysis {
    space: Space,
    n: usize,
    full: u32,
    opens: Vec<u32>,
    closeds: Vec<u32>,
    cl: Vec<u32>,
    cld: Vec<u32>,
    kind_open: [OnceLock<Fam>; Kind::COUNT],
    kind_closed: [OnceLock<Fam>; Kind::COUNT],
    theta: [OnceLock<ThetaData>; 2],
    g_closed: [OnceLock<Fam>; 2],
    g_open: [OnceLock<Fam>; 2],
}

impl Analysis {
    pub fn new(space: Space) -> Analysis {
        let n = space.n();
        let full = mask_full(n);
        let opens: Vec<u32> = space.opens().iter().map(|s| s.bits()).collect();
        let closeds: Vec<u32> = space.closeds().iter().map(|s| s.bits()).collect();

        // Point closures seed the full tables; closure and delta-closure
        // both distribute over finite unions.
        let size = 1usize << n;
        let mut cl = vec![0u32; size];
        let mut cld = vec![0u32; size];
        let cl_pt: Vec<u32> = (0..n).map(|x| space.closure_mask(1 << x)).collect();
        let cld_pt: Vec<u32> = (0..n).map(|x| space.delta_closure_mask(1 << x)).collect();
        for m in 1..size {
            let low = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            cl[m] = cl[rest] | cl_pt[low];
            cld[m] = cld[rest] | cld_pt[low];
        }

        Analysis {
            space,
            n,
            full,
            opens,
            closeds,
            cl,
            cld,
            kind_open: std::array::from_fn(|_| OnceLock::new()),
            kind_closed: std::array::from_fn(|_| OnceLock::new()),
            theta: std::array::from_fn(|_| OnceLock::new()),
            g_closed: std::array::from_fn(|_| OnceLock::new()),
            g_open: std::array::from_fn(|_| OnceLock::new()),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_mask(&self) -> u32 {
        self.full
    }

    pub fn open_masks(&self) -> &[u32] {
        &self.opens
    }

    pub fn closed_masks(&self) -> &[u32] {
        &self.closeds
    }

    pub fn is_open_mask(&self, m: u32) -> bool {
        self.opens.binary_search(&m).is_ok()
    }

    pub fn is_closed_mask(&self, m: u32) -> bool {
        self.closeds.binary_search(&m).is_ok()
    }

    pub fn cl_mask(&self, m: u32) -> u32 {
        self.cl[m as usize]
    }

    pub fn int_mask(&self, m: u32) -> u32 {
        self.full & !self.cl[(self.full & !m) as usize]
    }

    pub fn cld_mask(&self, m: u32) -> u32 {
        self.cld[m as usize]
    }

    pub fn intd_mask(&self, m: u32) -> u32 {
        self.full & !self.cld[(self.full & !m) as usize]
    }

    /// Whether `m` satisfies the defining inclusion of the kind.
    pub fn kind_open_mask(&self, kind: Kind, m: u32) -> bool {
        match kind {
            Kind::Open => self.is_open_mask(m),
            Kind::Semi => is_subset(m, self.cl_mask(self.int_mask(m))),
            Kind::Pre => is_subset(m, self.int_mask(self.cl_mask(m))),
            Kind::B => {
                is_subset(m, self.cl_mask(self.int_mask(m)) | self.int_mask(self.cl_mask(m)))
            }
            Kind::Beta => is_subset(m, self.cl_mask(self.int_mask(self.cl_mask(m)))),
            Kind::E => {
                is_subset(m, self.cl_mask(self.intd_mask(m)) | self.int_mask(self.cld_mask(m)))
            }
            Kind::Estar => is_subset(m, self.cl_mask(self.int_mask(self.cld_mask(m)))),
            Kind::DeltaOpen => self.intd_mask(m) == m,
            Kind::RegularOpen => self.int_mask(self.cl_mask(m)) == m,
        }
    }

    pub fn kind_family(&self, kind: Kind) -> &Fam {
        self.kind_open[kind.index()]
            .get_or_init(|| Fam::from_predicate(self.n, |m| self.kind_open_mask(kind, m)))
    }

    /// Complements of the kind-open family (semiclosed, preclosed, ...).
    pub fn kind_closed_family(&self, kind: Kind) -> &Fam {
        self.kind_closed[kind.index()].get_or_init(|| self.kind_family(kind).complements())
    }

    /// Intersection of all kind-closed supersets of `m`. Returns `None`
    /// when the result is not itself kind-closed, which certifies that the
    /// kind-closed family is not intersection-closed around `m`.
    pub fn kind_closure_mask(&self, kind: Kind, m: u32) -> Option<u32> {
        let closed = self.kind_closed_family(kind);
        let mut acc = self.full;
        for &c in closed.members() {
            if m & !c == 0 {
                acc &= c;
            }
        }
        closed.contains(acc).then_some(acc)
    }

    /// Union of all kind-open subsets of `m`, certified kind-open.
    pub fn kind_interior_mask(&self, kind: Kind, m: u32) -> Option<u32> {
        let open = self.kind_family(kind);
        let mut acc = 0u32;
        for &u in open.members() {
            if u & !m == 0 {
                acc |= u;
            }
        }
        open.contains(acc).then_some(acc)
    }

    pub fn theta(&self, tk: ThetaKind) -> &ThetaData {
        self.theta[tk.index()].get_or_init(|| self.build_theta(tk))
    }

    pub fn theta_cl_mask(&self, tk: ThetaKind, m: u32) -> u32 {
        self.theta(tk).cl[m as usize]
    }

    pub fn theta_int_mask(&self, tk: ThetaKind, m: u32) -> u32 {
        self.theta(tk).int[m as usize]
    }

    fn build_theta(&self, tk: ThetaKind) -> ThetaData {
        let base_kind = tk.base();
        let base = self.kind_family(base_kind);
        let closed = self.kind_closed_family(base_kind);

        let mut base_kcl = Vec::with_capacity(base.len());
        for &u in base.members() {
            let mut acc = self.full;
            for &c in closed.members() {
                if u & !c == 0 {
                    acc &= c;
                }
            }
            // Intersection-closedness of the kind-closed family is a
            // stated property of every base kind used here; certify it
            // rather than assume it.
            assert!(
                closed.contains(acc),
                "{base_kind:?}-closed family is not intersection-closed at {u:#x}"
            );
            base_kcl.push((u, acc));
        }

        let mut constraints: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for &(u, k) in &base_kcl {
            for (x, list) in constraints.iter_mut().enumerate() {
                if u & (1 << x) != 0 {
                    list.push(k);
                }
            }
        }
        for list in &mut constraints {
            // Keep only the minimal masks; they decide both quantifiers.
            list.sort_unstable_by_key(|m| (m.count_ones(), *m));
            list.dedup();
            let mut kept: Vec<u32> = Vec::new();
            for &m in list.iter() {
                if !kept.iter().any(|&k| k & !m == 0) {
                    kept.push(m);
                }
            }
            *list = kept;
        }

        let size = 1usize << self.n;
        let mut cl = vec![0u32; size];
        let mut int = vec![0u32; size];
        for m in 0..size as u32 {
            let mut c = 0u32;
            let mut i = 0u32;
            for (x, cs) in constraints.iter().enumerate() {
                if cs.iter().all(|&k| k & m != 0) {
                    c |= 1 << x;
                }
                if cs.iter().any(|&k| k & !m == 0) {
                    i |= 1 << x;
                }
            }
            cl[m as usize] = c;
            int[m as usize] = i;
        }

        let closed_f = Fam::from_predicate(self.n, |m| cl[m as usize] == m);
        let open_f = closed_f.complements();
        let open_by_interior = Fam::from_predicate(self.n, |m| int[m as usize] == m);
        assert_eq!(
            open_f.members, open_by_interior.members,
            "theta-open family: closed-complement route and interior fixpoint route disagree"
        );

        ThetaData { cl, int, open: open_f, closed: closed_f, base_kcl, constraints }
    }

    /// Per-point minimal constraint masks of the theta operator; exposed
    /// for the map classifiers.
    pub fn theta_constraints(&self, tk: ThetaKind) -> &[Vec<u32>] {
        &self.theta(tk).constraints
    }

    /// The generalized-closed family of the variant: every subset whose
    /// e*-theta-closure is contained in each enclosing set of the stated
    /// sort (open sets, or e*-theta-open sets). Decided by direct
    /// quantification over enclosing sets.
    pub fn g_closed_family(&self, v: GVariant) -> &Fam {
        self.g_closed[v.index()].get_or_init(|| {
            let theta = self.theta(ThetaKind::EstarTheta);
            let enclosing: &[u32] = match v {
                GVariant::GeStarTheta => &self.opens,
                GVariant::Pair => theta.open.members(),
            };
            Fam::from_predicate(self.n, |m| {
                let c = theta.cl[m as usize];
                enclosing.iter().all(|&u| m & !u != 0 || c & !u == 0)
            })
        })
    }

    pub fn g_open_family(&self, v: GVariant) -> &Fam {
        self.g_open[v.index()].get_or_init(|| self.g_closed_family(v).complements())
    }
}

pub(crate) fn is_subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;

    fn analysis(masks: &[u32], n: usize) -> Analysis {
        Analysis::new(Space::from_masks(n, masks).unwrap())
    }

    fn s1() -> Analysis {
        analysis(&[0b0000, 0b0001, 0b0010, 0b0011, 0b1101, 0b1111], 4)
    }

    #[test]
    fn tables_agree_with_definitional_operators() {
        for a in [
            s1(),
            Analysis::new(Space::sierpinski()),
            Analysis::new(Space::discrete(3)),
            Analysis::new(Space::indiscrete(3)),
            analysis(&[0b000, 0b001, 0b011, 0b111], 3),
        ] {
            let sp = a.space();
            for m in 0..=a.full_mask() {
                let s = Subset::from_mask(a.n(), m).unwrap();
                assert_eq!(a.cl_mask(m), sp.closure(s).unwrap().bits());
                assert_eq!(a.int_mask(m), sp.interior(s).unwrap().bits());
                assert_eq!(a.cld_mask(m), sp.delta_closure(s).unwrap().bits());
                assert_eq!(a.intd_mask(m), sp.delta_interior(s).unwrap().bits());
            }
        }
    }

    #[test]
    fn regular_open_family_matches_space_route() {
        let a = s1();
        let via_kind: Vec<u32> = a.kind_family(Kind::RegularOpen).members().to_vec();
        let via_space: Vec<u32> =
            a.space().regular_open_family().iter().map(|s| s.bits()).collect();
        assert_eq!(via_kind, via_space);
        assert_eq!(via_kind, vec![0b0000, 0b0010, 0b1101, 0b1111]);
    }

    #[test]
    fn theta_tables_are_dual() {
        for a in [s1(), Analysis::new(Space::sierpinski()), analysis(&[0b000, 0b001, 0b111], 3)] {
            for tk in [ThetaKind::EstarTheta, ThetaKind::BetaTheta] {
                let t = a.theta(tk);
                for m in 0..=a.full_mask() {
                    let co = a.full_mask() & !m;
                    assert_eq!(t.int[m as usize], a.full_mask() & !t.cl[co as usize]);
                }
            }
        }
    }
}
