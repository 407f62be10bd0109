//! Generalized open-set families and their operators.
//!
//! The membership predicates, with `cl`/`int` the ordinary operators and
//! `cl_d`/`int_d` their delta versions:
//!
//! | kind      | `A` is open when                          |
//! |-----------|-------------------------------------------|
//! | semi      | `A \u{2286} cl(int(A))`                   |
//! | pre       | `A \u{2286} int(cl(A))`                   |
//! | b         | `A \u{2286} cl(int(A)) \u{222a} int(cl(A))` |
//! | beta      | `A \u{2286} cl(int(cl(A)))`               |
//! | e         | `A \u{2286} cl(int_d(A)) \u{222a} int(cl_d(A))` |
//! | e*        | `A \u{2286} cl(int(cl_d(A)))`             |
//!
//! Kind-closures are intersections of kind-closed supersets. The theta
//! operators are built on top of a base kind: a point lies in the
//! e*-theta-closure of `A` when the e*-closure of every e*-open set
//! containing it meets `A`, and in the e*-theta-interior when some such
//! set has its e*-closure inside `A`. Theta-open sets are complements of
//! the theta-closure fixpoints; the beta-theta operators are the same
//! construction over beta-open sets.
//!
//! The generalized-closed variants quantify over enclosing sets directly:
//! a set is ge*theta-closed when its e*-theta-closure is contained in
//! every enclosing open set, and (e*,theta)-closed when it is contained
//! in every enclosing e*-theta-open set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::Analysis;
use crate::space::{Fingerprint, SpaceError};
use crate::subset::Subset;
use crate::verdict::{Verdict, Witness};

/// The non-theta open-set kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Kind {
    Open,
    Semi,
    Pre,
    B,
    Beta,
    E,
    Estar,
    DeltaOpen,
    RegularOpen,
}

impl Kind {
    pub const COUNT: usize = 9;

    pub const ALL: [Kind; Kind::COUNT] = [
        Kind::Open,
        Kind::Semi,
        Kind::Pre,
        Kind::B,
        Kind::Beta,
        Kind::E,
        Kind::Estar,
        Kind::DeltaOpen,
        Kind::RegularOpen,
    ];

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Open => "OPEN",
            Kind::Semi => "SEMI",
            Kind::Pre => "PRE",
            Kind::B => "B",
            Kind::Beta => "BETA",
            Kind::E => "E",
            Kind::Estar => "ESTAR",
            Kind::DeltaOpen => "DELTA_OPEN",
            Kind::RegularOpen => "REGULAR_OPEN",
        }
    }
}

/// The two theta constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ThetaKind {
    EstarTheta,
    BetaTheta,
}

impl ThetaKind {
    pub(crate) fn index(self) -> usize {
        self as usize
    }

    /// The base open family the theta operator quantifies over.
    pub fn base(self) -> Kind {
        match self {
            ThetaKind::EstarTheta => Kind::Estar,
            ThetaKind::BetaTheta => Kind::Beta,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            ThetaKind::EstarTheta => "ESTAR_THETA",
            ThetaKind::BetaTheta => "BETA_THETA",
        }
    }
}

/// Kinds for which "regular set" (simultaneously open and closed of the
/// kind) is defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegularSetKind {
    EstarTheta,
    BetaTheta,
    Estar,
}

impl RegularSetKind {
    pub fn tag(self) -> &'static str {
        match self {
            RegularSetKind::EstarTheta => "ESTAR_THETA_REGULAR",
            RegularSetKind::BetaTheta => "BETA_THETA_REGULAR",
            RegularSetKind::Estar => "ESTAR_REGULAR",
        }
    }
}

/// The two generalized-closed variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GVariant {
    /// Enclosing sets are the open sets (ge*theta-closed).
    GeStarTheta,
    /// Enclosing sets are the e*-theta-open sets ((e*,theta)-closed).
    Pair,
}

impl GVariant {
    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn closed_tag(self) -> &'static str {
        match self {
            GVariant::GeStarTheta => "GE_STAR_THETA_CLOSED",
            GVariant::Pair => "PAIR_E_THETA_CLOSED",
        }
    }

    pub fn open_tag(self) -> &'static str {
        match self {
            GVariant::GeStarTheta => "GE_STAR_THETA_OPEN",
            GVariant::Pair => "PAIR_E_THETA_OPEN",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenopError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("the {kind}-closed family is not intersection-closed; closure undefined")]
    NotIntersectionClosed { kind: String },
    #[error("the {kind}-open family is not union-closed; interior undefined")]
    NotUnionClosed { kind: String },
}

/// A named family of subsets of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub space: Fingerprint,
    pub kind: String,
    pub members: Vec<Subset>,
}

impl SetFamily {
    fn from_masks(a: &Analysis, kind: &str, masks: &[u32]) -> SetFamily {
        SetFamily {
            space: a.space().fingerprint(),
            kind: kind.to_string(),
            members: masks.iter().map(|&m| Subset::from_mask(a.n(), m).unwrap()).collect(),
        }
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Analysis {
    fn check_dim(&self, a: Subset) -> Result<u32, SpaceError> {
        if a.n() != self.n() {
            return Err(SpaceError::DimensionMismatch { expected: self.n(), got: a.n() });
        }
        Ok(a.bits())
    }

    fn wrap(&self, m: u32) -> Subset {
        Subset::from_mask(self.n(), m).unwrap()
    }

    /// All subsets satisfying the kind's defining inclusion.
    pub fn open_family(&self, kind: Kind) -> SetFamily {
        SetFamily::from_masks(self, kind.tag(), self.kind_family(kind).members())
    }

    pub fn closed_family_of(&self, kind: Kind) -> SetFamily {
        let tag = format!("{}_CLOSED", kind.tag());
        SetFamily::from_masks(self, &tag, self.kind_closed_family(kind).members())
    }

    /// Intersection of all kind-closed supersets of `a`.
    ///
    /// Fails with [`GenopError::NotIntersectionClosed`] when the candidate
    /// is not itself kind-closed (possible for `REGULAR_OPEN`, whose
    /// closed family is not an intersection system).
    pub fn kind_closure(&self, kind: Kind, a: Subset) -> Result<Subset, GenopError> {
        let m = self.check_dim(a)?;
        self.kind_closure_mask(kind, m)
            .map(|r| self.wrap(r))
            .ok_or(GenopError::NotIntersectionClosed { kind: kind.tag().to_string() })
    }

    /// Union of all kind-open subsets of `a`.
    pub fn kind_interior(&self, kind: Kind, a: Subset) -> Result<Subset, GenopError> {
        let m = self.check_dim(a)?;
        self.kind_interior_mask(kind, m)
            .map(|r| self.wrap(r))
            .ok_or(GenopError::NotUnionClosed { kind: kind.tag().to_string() })
    }

    /// Theta-closure of `a`: the points whose every base-open
    /// neighbourhood has kind-closure meeting `a`.
    pub fn theta_closure(&self, tk: ThetaKind, a: Subset) -> Result<Subset, SpaceError> {
        let m = self.check_dim(a)?;
        Ok(self.wrap(self.theta_cl_mask(tk, m)))
    }

    /// Theta-interior of `a`: the points having a base-open neighbourhood
    /// whose kind-closure lies inside `a`.
    pub fn theta_interior(&self, tk: ThetaKind, a: Subset) -> Result<Subset, SpaceError> {
        let m = self.check_dim(a)?;
        Ok(self.wrap(self.theta_int_mask(tk, m)))
    }

    /// The theta-open family (complements of theta-closure fixpoints,
    /// cross-checked against the theta-interior fixpoint route when the
    /// tables are built).
    pub fn theta_open_family(&self, tk: ThetaKind) -> SetFamily {
        SetFamily::from_masks(self, tk.tag(), self.theta(tk).open.members())
    }

    pub fn theta_closed_family(&self, tk: ThetaKind) -> SetFamily {
        let tag = format!("{}_CLOSED", tk.tag());
        SetFamily::from_masks(self, &tag, self.theta(tk).closed.members())
    }

    /// Sets that are simultaneously open and closed of the given kind.
    pub fn regular_sets(&self, rk: RegularSetKind) -> SetFamily {
        let members: Vec<u32> = match rk {
            RegularSetKind::EstarTheta => {
                let t = self.theta(ThetaKind::EstarTheta);
                t.open.members().iter().copied().filter(|&m| t.closed.contains(m)).collect()
            }
            RegularSetKind::BetaTheta => {
                let t = self.theta(ThetaKind::BetaTheta);
                t.open.members().iter().copied().filter(|&m| t.closed.contains(m)).collect()
            }
            RegularSetKind::Estar => {
                let open = self.kind_family(Kind::Estar);
                let closed = self.kind_closed_family(Kind::Estar);
                open.members().iter().copied().filter(|&m| closed.contains(m)).collect()
            }
        };
        SetFamily::from_masks(self, rk.tag(), &members)
    }

    pub fn g_closed_sets(&self, v: GVariant) -> SetFamily {
        SetFamily::from_masks(self, v.closed_tag(), self.g_closed_family(v).members())
    }

    pub fn g_open_sets(&self, v: GVariant) -> SetFamily {
        SetFamily::from_masks(self, v.open_tag(), self.g_open_family(v).members())
    }

    /// The F-quantified characterization of generalized-open: `a` passes
    /// when every stated-sort set `F` inside it satisfies
    /// `F \u{2286} e*-int_theta(a)`. Closed `F` for the ge* variant,
    /// e*-theta-closed `F` for the pair variant. Agreement with complement
    /// membership in the g-closed family is itself a verified lemma.
    pub fn g_open_check(&self, v: GVariant, a: Subset) -> Result<Verdict, SpaceError> {
        let m = self.check_dim(a)?;
        let inner = self.theta_int_mask(ThetaKind::EstarTheta, m);
        let range: &[u32] = match v {
            GVariant::GeStarTheta => self.closed_masks(),
            GVariant::Pair => self.theta(ThetaKind::EstarTheta).closed.members(),
        };
        let property = format!("g_open.{}", v.open_tag().to_lowercase());
        for &f in range {
            if f & !m == 0 && f & !inner != 0 {
                let w = Witness::new("g-open-failure")
                    .with_subset("A", a)
                    .with_subset("F", self.wrap(f));
                return Ok(Verdict::fails(property, w));
            }
        }
        Ok(Verdict::holds(property))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Space;

    fn s1() -> Analysis {
        Analysis::new(
            Space::from_masks(4, &[0b0000, 0b0001, 0b0010, 0b0011, 0b1101, 0b1111]).unwrap(),
        )
    }

    fn s2() -> Analysis {
        Analysis::new(
            Space::from_masks(4, &[0b0000, 0b0001, 0b0010, 0b0011, 0b0111, 0b1111]).unwrap(),
        )
    }

    fn s3() -> Analysis {
        Analysis::new(
            Space::from_masks(
                4,
                &[0b0000, 0b0001, 0b0010, 0b0011, 0b0101, 0b0111, 0b1011, 0b1111],
            )
            .unwrap(),
        )
    }

    fn sub(n: usize, pts: &[usize]) -> Subset {
        Subset::from_points(n, pts).unwrap()
    }

    #[test]
    fn estar_family_of_the_second_example() {
        // e*-open sets are everything except {2}, {3}, {2,3}.
        let fam = s2().open_family(Kind::Estar);
        assert_eq!(fam.len(), 13);
        for m in [0b0100u32, 0b1000, 0b1100] {
            assert!(!fam.contains(&Subset::from_mask(4, m).unwrap()));
        }
        // And e*-theta-open agrees with e*-open on this space.
        let theta = s2().theta_open_family(ThetaKind::EstarTheta);
        let masks: Vec<u32> = fam.members.iter().map(|s| s.bits()).collect();
        let theta_masks: Vec<u32> = theta.members.iter().map(|s| s.bits()).collect();
        assert_eq!(masks, theta_masks);
    }

    #[test]
    fn every_kind_is_full_on_the_discrete_space() {
        let a = Analysis::new(Space::discrete(3));
        for kind in Kind::ALL {
            assert_eq!(a.open_family(kind).len(), 8, "{kind:?}");
        }
    }

    #[test]
    fn beta_family_of_s1_contains_all_opens() {
        let a = s1();
        let fam = a.open_family(Kind::Beta);
        for u in a.space().opens() {
            assert!(fam.contains(u));
        }
        // Brute-force oracle over all 16 subsets: beta-open means
        // A within cl(int(cl(A))), with the definitional space operators.
        let sp = a.space();
        let mut expect = Vec::new();
        for m in 0..16u32 {
            let s = Subset::from_mask(4, m).unwrap();
            let hull = sp.closure(sp.interior(sp.closure(s).unwrap()).unwrap()).unwrap();
            if s.is_subset_of(hull) {
                expect.push(s);
            }
        }
        assert_eq!(fam.members, expect);
        assert_eq!(fam.len(), 10);
    }

    #[test]
    fn kind_closure_examples() {
        let a = s2();
        assert_eq!(a.kind_closure(Kind::Estar, a.space().full()).unwrap(), a.space().full());
        // {2} is already e*-closed in this space, so it is its own closure.
        assert_eq!(a.kind_closure(Kind::Estar, sub(4, &[2])).unwrap(), sub(4, &[2]));
        // {0,1} is not e*-closed and the only e*-closed superset is X.
        assert_eq!(a.kind_closure(Kind::Estar, sub(4, &[0, 1])).unwrap(), a.space().full());

        let sp = Analysis::new(Space::sierpinski());
        assert_eq!(sp.kind_closure(Kind::Estar, sub(2, &[0])).unwrap(), sub(2, &[0]));
    }

    #[test]
    fn theta_closure_examples() {
        let a = s1();
        assert_eq!(
            a.theta_closure(ThetaKind::EstarTheta, a.space().empty()).unwrap(),
            a.space().empty()
        );
        // On this space every subset is e*-theta-closed.
        for m in 0..16u32 {
            let s = Subset::from_mask(4, m).unwrap();
            assert_eq!(a.theta_closure(ThetaKind::EstarTheta, s).unwrap(), s);
        }
        let sp = Analysis::new(Space::sierpinski());
        assert_eq!(sp.theta_closure(ThetaKind::EstarTheta, sub(2, &[0])).unwrap(), sub(2, &[0]));
    }

    #[test]
    fn theta_open_families_of_the_worked_examples() {
        let a = s1();
        assert_eq!(a.theta_open_family(ThetaKind::EstarTheta).len(), 16);
        let beta_theta = a.theta_open_family(ThetaKind::BetaTheta);
        assert_eq!(
            beta_theta.members,
            vec![a.space().empty(), sub(4, &[1]), sub(4, &[0, 2, 3]), a.space().full()]
        );

        let c = s3();
        let fam = c.theta_open_family(ThetaKind::EstarTheta);
        assert_eq!(fam.len(), 15);
        assert!(!fam.contains(&sub(4, &[3])));
        assert_eq!(c.theta_interior(ThetaKind::EstarTheta, sub(4, &[3])).unwrap(), c.space().empty());
        assert_eq!(
            c.theta_interior(ThetaKind::EstarTheta, c.space().full()).unwrap(),
            c.space().full()
        );
    }

    #[test]
    fn theta_interior_by_duality_on_indiscrete() {
        let a = Analysis::new(Space::indiscrete(2));
        for m in 0..4u32 {
            let s = Subset::from_mask(2, m).unwrap();
            let dual = a
                .theta_closure(ThetaKind::EstarTheta, s.complement())
                .unwrap()
                .complement();
            assert_eq!(a.theta_interior(ThetaKind::EstarTheta, s).unwrap(), dual);
        }
    }

    #[test]
    fn regular_sets_examples() {
        assert_eq!(s1().regular_sets(RegularSetKind::EstarTheta).len(), 16);
        let ind = Analysis::new(Space::indiscrete(3));
        let fam = ind.regular_sets(RegularSetKind::Estar);
        assert!(fam.contains(&ind.space().empty()));
        assert!(fam.contains(&ind.space().full()));
        // Oracle: intersect the open family with the closed family.
        let a = s2();
        let open = a.theta_open_family(ThetaKind::EstarTheta);
        let closed = a.theta_closed_family(ThetaKind::EstarTheta);
        let expect: Vec<Subset> =
            open.members.iter().copied().filter(|s| closed.contains(s)).collect();
        assert_eq!(a.regular_sets(RegularSetKind::EstarTheta).members, expect);
        assert_eq!(expect.len(), 10);
    }

    #[test]
    fn g_closed_families() {
        // Every e*-theta-closed set is ge*theta-closed.
        for a in [s1(), s2(), s3()] {
            let g = a.g_closed_sets(GVariant::GeStarTheta);
            for s in &a.theta_closed_family(ThetaKind::EstarTheta).members {
                assert!(g.contains(s));
            }
        }
        // On the first example space every one of the 16 subsets qualifies.
        assert_eq!(s1().g_closed_sets(GVariant::GeStarTheta).len(), 16);
        // Oracle for the third space: direct quantification over all
        // (A, open U) pairs with the definitional theta-closure.
        let a = s3();
        let mut expect = Vec::new();
        for m in 0..16u32 {
            let s = Subset::from_mask(4, m).unwrap();
            let cl = a.theta_closure(ThetaKind::EstarTheta, s).unwrap();
            let ok = a
                .space()
                .opens()
                .iter()
                .all(|&u| !s.is_subset_of(u) || cl.is_subset_of(u));
            if ok {
                expect.push(s);
            }
        }
        let got = a.g_closed_sets(GVariant::GeStarTheta);
        assert_eq!(got.members, expect);
        assert_eq!(got.len(), 15);
        assert!(!got.contains(&sub(4, &[0, 1, 2])));
    }

    #[test]
    fn g_open_check_agrees_with_complement_membership() {
        for a in [s1(), s2(), s3()] {
            for v in [GVariant::GeStarTheta, GVariant::Pair] {
                let closed = a.g_closed_family(v);
                for m in 0..16u32 {
                    let s = Subset::from_mask(4, m).unwrap();
                    let verdict = a.g_open_check(v, s).unwrap();
                    let via_complement = closed.contains(s.complement().bits());
                    assert_eq!(verdict.holds, via_complement, "{v:?} {s}");
                }
            }
        }
        // X always passes: its theta-interior is X.
        let a = s3();
        assert!(a.g_open_check(GVariant::GeStarTheta, a.space().full()).unwrap().holds);
        // {0,1,2} in the third space: ge*theta-open iff its complement {3}
        // is ge*theta-closed, which it is.
        assert!(a.g_open_check(GVariant::GeStarTheta, sub(4, &[0, 1, 2])).unwrap().holds);
    }
}
