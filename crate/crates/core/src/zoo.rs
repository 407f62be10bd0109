//! Enumeration, canonicalization and persistence of small topologies.
//!
//! Labeled enumeration walks minimal-neighbourhood assignments: a
//! topology on a finite carrier is determined by the map sending each
//! point to the intersection of its open neighbourhoods, and a map
//! `N : X -> 2^X` arises this way exactly when `x \u{2208} N(x)` and
//! `y \u{2208} N(x)` implies `N(y) \u{2286} N(x)`. Backtracking over
//! partial assignments with that consistency check emits every topology
//! exactly once and prunes dead branches early, which keeps `n = 5`
//! (6942 labeled topologies) immediate. An independent generate-and-filter
//! oracle over raw subset families re-derives the counts in the test
//! suite.
//!
//! Canonical forms minimize the sorted open-set encoding over all `n!`
//! point permutations; equal canonical ids mean homeomorphic. The id
//! embeds the winning open family, so any canonical id can be rebuilt
//! into a space and replayed.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::space::{Space, SpaceError};
use crate::subset::{mask_full, Subset, MAX_POINTS};

/// Exhaustive enumeration cap: the labeled count grows super-exponentially
/// (209527 labeled topologies at n = 6).
pub const ENUM_MAX_POINTS: usize = 5;

/// Canonicalization cap: minimization is over all n! permutations.
pub const CANON_MAX_POINTS: usize = 6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZooError {
    #[error("point count {n} exceeds the cap {max} for this operation")]
    CapExceeded { n: usize, max: usize },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("malformed canonical id {id:?}")]
    BadCanonicalId { id: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumMode {
    /// Every topology on the labeled carrier, each exactly once.
    Labeled,
    /// One representative per homeomorphism class, in canonical order.
    Canonical,
}

/// All topologies on `n` labeled points, in a deterministic order.
pub fn enumerate_topologies(n: usize, mode: EnumMode) -> Result<Vec<Space>, ZooError> {
    if !(1..=ENUM_MAX_POINTS).contains(&n) {
        return Err(ZooError::CapExceeded { n, max: ENUM_MAX_POINTS });
    }
    match mode {
        EnumMode::Labeled => Ok(enumerate_labeled(n)),
        EnumMode::Canonical => {
            let mut classes: BTreeMap<String, Space> = BTreeMap::new();
            for space in enumerate_labeled(n) {
                let id = canonical_form(&space)?;
                classes.entry(id.clone()).or_insert_with(|| space_of_canonical_id(&id).unwrap());
            }
            Ok(classes.into_values().collect())
        }
    }
}

fn enumerate_labeled(n: usize) -> Vec<Space> {
    let full = mask_full(n);
    let mut neighbourhoods = vec![0u32; n];
    let mut out = Vec::new();
    assign_neighbourhood(n, full, 0, &mut neighbourhoods, &mut out);
    out
}

fn assign_neighbourhood(
    n: usize,
    full: u32,
    point: usize,
    nbr: &mut Vec<u32>,
    out: &mut Vec<Space>,
) {
    if point == n {
        out.push(space_from_neighbourhoods(n, nbr));
        return;
    }
    let bit = 1u32 << point;
    // Candidate minimal neighbourhoods in ascending mask order: every
    // subset of the carrier containing the point itself. `s -> (s - rest) & rest`
    // walks the submasks of `rest` in increasing order.
    let rest = full & !bit;
    let mut sub = 0u32;
    loop {
        let candidate = sub | bit;
        let consistent = (0..point).all(|earlier| {
            (candidate & (1 << earlier) == 0 || nbr[earlier] & !candidate == 0)
                && (nbr[earlier] & bit == 0 || candidate & !nbr[earlier] == 0)
        });
        if consistent {
            nbr[point] = candidate;
            assign_neighbourhood(n, full, point + 1, nbr, out);
        }
        if sub == rest {
            break;
        }
        sub = sub.wrapping_sub(rest) & rest;
    }
}

fn space_from_neighbourhoods(n: usize, nbr: &[u32]) -> Space {
    let full = mask_full(n);
    let mut opens = Vec::new();
    for m in 0..=full {
        let open = (0..n).all(|x| m & (1 << x) == 0 || nbr[x] & !m == 0);
        if open {
            opens.push(Subset::from_mask(n, m).unwrap());
        }
    }
    Space::new(n, opens).expect("minimal-neighbourhood family is a topology")
}

/// Permutation-minimal encoding of the open family. Equal ids exactly
/// characterize homeomorphic spaces; the id embeds `n` and the winning
/// sorted open masks, so spaces can be rebuilt from it.
pub fn canonical_form(space: &Space) -> Result<String, ZooError> {
    let n = space.n();
    if n > CANON_MAX_POINTS {
        return Err(ZooError::CapExceeded { n, max: CANON_MAX_POINTS });
    }
    let masks: Vec<u32> = space.opens().iter().map(|s| s.bits()).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut image: Vec<u32> = masks.iter().map(|&m| apply_perm_mask(m, p)).collect();
        image.sort_unstable();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    });
    Ok(encode_canonical_id(n, &best.unwrap()))
}

fn encode_canonical_id(n: usize, masks: &[u32]) -> String {
    let body: Vec<String> = masks.iter().map(|m| format!("{m:04x}")).collect();
    format!("{n}:{}", body.join("."))
}

/// Rebuilds the representative space encoded in a canonical id.
pub fn space_of_canonical_id(id: &str) -> Result<Space, ZooError> {
    let bad = || ZooError::BadCanonicalId { id: id.to_string() };
    let (n_text, body) = id.split_once(':').ok_or_else(bad)?;
    let n: usize = n_text.parse().map_err(|_| bad())?;
    if !(1..=MAX_POINTS).contains(&n) {
        return Err(bad());
    }
    let mut masks = Vec::new();
    for part in body.split('.') {
        masks.push(u32::from_str_radix(part, 16).map_err(|_| bad())?);
    }
    Ok(Space::from_masks(n, &masks)?)
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// Image of a point set under a permutation (`point x` maps to
/// `perm[x]`).
pub fn apply_perm_mask(m: u32, perm: &[usize]) -> u32 {
    let mut out = 0u32;
    for (x, &px) in perm.iter().enumerate() {
        if m & (1 << x) != 0 {
            out |= 1 << px;
        }
    }
    out
}

/// The homeomorphic copy of a space under a point permutation.
pub fn apply_permutation(space: &Space, perm: &[usize]) -> Result<Space, SpaceError> {
    let masks: Vec<u32> = space.opens().iter().map(|s| apply_perm_mask(s.bits(), perm)).collect();
    Space::from_masks(space.n(), &masks)
}

/// Seeded random space: each proper nonempty subset is included with the
/// given probability, then the family is closed under pairwise union and
/// intersection. The same seed always yields the same space.
pub fn random_space(n: usize, seed: u64, density: f64) -> Result<Space, ZooError> {
    if !(1..=MAX_POINTS).contains(&n) {
        return Err(ZooError::CapExceeded { n, max: MAX_POINTS });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = mask_full(n);
    let mut chosen: Vec<u32> = vec![0, full];
    for m in 1..full {
        if rng.gen_bool(density.clamp(0.0, 1.0)) {
            chosen.push(m);
        }
    }
    chosen.sort_unstable();
    chosen.dedup();
    // Close under pairwise union/intersection up to a fixpoint.
    let mut member = vec![false; (full as usize) + 1];
    for &m in &chosen {
        member[m as usize] = true;
    }
    let mut queue = chosen.clone();
    while let Some(m) = queue.pop() {
        for &other in &chosen.clone() {
            for candidate in [m | other, m & other] {
                if !member[candidate as usize] {
                    member[candidate as usize] = true;
                    chosen.push(candidate);
                    queue.push(candidate);
                }
            }
        }
    }
    let masks: Vec<u32> = (0..=full).filter(|&m| member[m as usize]).collect();
    Ok(Space::from_masks(n, &masks)?)
}

/// Seeded random subset of an `n`-point carrier.
pub fn random_subset(n: usize, seed: u64) -> Subset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Subset::from_mask(n, rng.gen_range(0..=mask_full(n))).unwrap()
}

/// One corpus line: a space plus (optionally) its decided properties.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZooRecord {
    /// Canonical id; homeomorphic spaces share it.
    pub id: String,
    pub n: usize,
    /// The labeled open family, one lowercase-hex mask per subset.
    pub opens_hex: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub props: Option<BTreeMap<String, bool>>,
}

impl ZooRecord {
    pub fn of_space(space: &Space) -> Result<ZooRecord, ZooError> {
        Ok(ZooRecord {
            id: canonical_form(space)?,
            n: space.n(),
            opens_hex: space.opens().iter().map(|s| s.to_hex()).collect(),
            props: None,
        })
    }

    pub fn space(&self) -> Result<Space, ZooError> {
        let opens = self
            .opens_hex
            .iter()
            .map(|h| Subset::from_hex(self.n, h))
            .collect::<Result<Vec<_>, _>>()
            .map_err(SpaceError::from)?;
        Ok(Space::new(self.n, opens)?)
    }
}

/// Writes one JSON record per line; append-safe.
pub fn write_corpus<W: Write>(mut w: W, records: &[ZooRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn read_corpus<R: BufRead>(r: R) -> std::io::Result<Vec<ZooRecord>> {
    let mut out = Vec::new();
    for line in r.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line)?);
    }
    Ok(out)
}
