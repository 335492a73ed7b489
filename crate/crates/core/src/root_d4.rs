//! The root systems D_n for small n, with the orthogonality structure of D4.
//!
//! Subsets of the twelve positive roots of D4 are `u16` masks; bit `k` is the `k`-th
//! root of [`d4_roots`], in the order 12-, 12+, 13-, 13+, 14-, 14+, 23-, 23+, 24-, 24+, 34-, 34+.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linalg::{RationalMatrix, RationalVector};
use crate::graphs_matroids::{is_unimodular_vectors, label_of_vectors, ConwayLabel};

/// A root `e_i ± e_j` with `i < j`, 1-based, taken up to sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    i: u8,
    j: u8,
    plus: bool,
}

impl Root {
    pub fn new(i: usize, j: usize, plus: bool) -> Result<Self> {
        if i == 0 || i >= j || j > 9 {
            return Err(Error::NotARoot(format!("indices {i},{j}")));
        }
        Ok(Self { i: i as u8, j: j as u8, plus })
    }

    pub fn i(self) -> usize {
        self.i as usize
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    pub fn is_plus(self) -> bool {
        self.plus
    }

    pub fn coords_in(self, n: usize) -> Vec<i64> {
        let mut x = vec![0; n];
        x[self.i() - 1] = 1;
        x[self.j() - 1] = if self.plus { 1 } else { -1 };
        x
    }

    pub fn vector_in(self, n: usize) -> RationalVector {
        RationalVector::from_ints(&self.coords_in(n))
    }

    /// The vector in four dimensions.
    pub fn vector(self) -> RationalVector {
        self.vector_in(4)
    }

    pub fn coords(self) -> [i64; 4] {
        let mut x = [0; 4];
        x.copy_from_slice(&self.coords_in(4));
        x
    }

    pub fn dot(self, other: Root) -> i64 {
        self.coords().iter().zip(other.coords()).map(|(a, b)| a * b).sum()
    }

    pub fn is_orthogonal(self, other: Root) -> bool {
        self.dot(other) == 0
    }

    /// Recognizes `±(e_i ± e_j)`.
    pub fn from_vector(v: &RationalVector) -> Result<Self> {
        let bad = || Error::NotARoot(v.to_string());
        let x = v.to_i64().ok_or_else(bad)?;
        let nz: Vec<usize> = (0..x.len()).filter(|&k| x[k] != 0).collect();
        if nz.len() != 2 || x[nz[0]].abs() != 1 || x[nz[1]].abs() != 1 {
            return Err(bad());
        }
        Root::new(nz[0] + 1, nz[1] + 1, x[nz[0]] == x[nz[1]])
    }

    /// Position among the positive roots of D4.
    pub fn index(self) -> usize {
        debug_assert!(self.j <= 4);
        let pair = match (self.i, self.j) {
            (1, 2) => 0,
            (1, 3) => 1,
            (1, 4) => 2,
            (2, 3) => 3,
            (2, 4) => 4,
            _ => 5,
        };
        2 * pair + usize::from(self.plus)
    }

    pub fn bit(self) -> u16 {
        1 << self.index()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.i, self.j, if self.plus { '+' } else { '-' })
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Root {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid root {s:?}"));
        let b = s.trim().as_bytes();
        if b.len() != 3 || !b[0].is_ascii_digit() || !b[1].is_ascii_digit() {
            return Err(bad());
        }
        let plus = match b[2] {
            b'+' => true,
            b'-' => false,
            _ => return Err(bad()),
        };
        Root::new((b[0] - b'0') as usize, (b[1] - b'0') as usize, plus).map_err(|_| bad())
    }
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// All `e_i ± e_j`, `i < j <= n`, one per pair of opposite roots.
pub fn positive_roots(n: usize) -> Result<Vec<Root>> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("D_{n} not supported, need 2 <= n <= 5")));
    }
    let mut out = Vec::with_capacity(n * (n - 1));
    for i in 1..=n {
        for j in (i + 1)..=n {
            for plus in [false, true] {
                out.push(Root::new(i, j, plus)?);
            }
        }
    }
    Ok(out)
}

pub fn d4_roots() -> &'static [Root; 12] {
    static ROOTS: OnceLock<[Root; 12]> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let v = positive_roots(4).expect("n = 4 is supported");
        std::array::from_fn(|k| v[k])
    })
}

pub fn roots_of_mask(mask: u16) -> Vec<Root> {
    d4_roots().iter().copied().filter(|r| mask & r.bit() != 0).collect()
}

pub fn mask_of_roots(roots: &[Root]) -> u16 {
    roots.iter().fold(0, |m, r| m | r.bit())
}

pub fn format_roots(roots: &[Root]) -> String {
    roots.iter().map(Root::to_string).join(",")
}

/// Four mutually orthogonal positive roots `{ij-, ij+, kl-, kl+}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quadruple {
    pub roots: [Root; 4],
}

impl Quadruple {
    pub fn mask(&self) -> u16 {
        mask_of_roots(&self.roots)
    }
}

/// The three quadruples, one per splitting of {1,2,3,4} into two pairs.
pub fn quadruples() -> [Quadruple; 3] {
    let q = |i, j, k, l| Quadruple {
        roots: [
            Root::new(i, j, false).expect("valid"),
            Root::new(i, j, true).expect("valid"),
            Root::new(k, l, false).expect("valid"),
            Root::new(k, l, true).expect("valid"),
        ],
    };
    [q(1, 2, 3, 4), q(1, 3, 2, 4), q(1, 4, 2, 3)]
}

pub fn contains_quadruple(mask: u16) -> bool {
    quadruples().iter().any(|q| mask & q.mask() == q.mask())
}

/// Three mutually orthogonal roots and the fourth root orthogonal to all of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triple {
    pub roots: [Root; 3],
    pub completion: Root,
}

impl Triple {
    pub fn mask(&self) -> u16 {
        mask_of_roots(&self.roots)
    }
}

fn check_roots(u: &[RationalVector]) -> Result<Vec<Root>> {
    u.iter().map(|v| if v.dim() == 4 { Root::from_vector(v) } else { Err(Error::NotARoot(v.to_string())) }).collect()
}

fn completion(t: [Root; 3]) -> Root {
    *d4_roots()
        .iter()
        .find(|r| !t.contains(r) && t.iter().all(|s| s.is_orthogonal(**r)))
        .expect("three orthogonal roots of D4 have a unique completion")
}

/// The mutually orthogonal triples inside a set of D4 roots.
pub fn tau_mask(mask: u16) -> Vec<Triple> {
    roots_of_mask(mask)
        .into_iter()
        .combinations(3)
        .filter(|t| t[0].is_orthogonal(t[1]) && t[0].is_orthogonal(t[2]) && t[1].is_orthogonal(t[2]))
        .map(|t| {
            let roots = [t[0], t[1], t[2]];
            Triple { roots, completion: completion(roots) }
        })
        .collect()
}

pub fn tau(u: &[RationalVector]) -> Result<Vec<Triple>> {
    Ok(tau_mask(mask_of_roots(&check_roots(u)?)))
}

/// Orthogonal pairs in the set that no third root of the set is orthogonal to.
pub fn pi_mask(mask: u16) -> Vec<(Root, Root)> {
    let roots = roots_of_mask(mask);
    roots
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| a.is_orthogonal(**b))
        .filter(|(a, b)| !roots.iter().any(|c| c != *a && c != *b && c.is_orthogonal(**a) && c.is_orthogonal(**b)))
        .map(|(a, b)| (*a, *b))
        .collect()
}

pub fn pi(u: &[RationalVector]) -> Result<Vec<(Root, Root)>> {
    Ok(pi_mask(mask_of_roots(&check_roots(u)?)))
}

/// The completing roots of three disjoint triples, in the order of the triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triad {
    pub roots: [Root; 3],
    pub minus_count: usize,
}

impl Triad {
    /// Whether the three index pairs cover only three indices, as in (34,24,23),
    /// rather than sharing one index, as in (12,13,14).
    pub fn is_triangle(&self) -> bool {
        let mut seen = [false; 5];
        for r in &self.roots {
            seen[r.i()] = true;
            seen[r.j()] = true;
        }
        seen.iter().filter(|&&b| b).count() == 3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TriadClass {
    /// even number of minus signs
    A4MinusE,
    /// odd number of minus signs
    K33Dual,
}

/// Splits a 9-root set into three disjoint orthogonal triples and classifies the triad
/// of their completions by parity. Parity decides the matroid class for triangle-shaped
/// triads only; a star-shaped triad always gives `A4 - e`.
pub fn triad_class_mask(mask: u16) -> Result<(Triad, TriadClass)> {
    let bad = || Error::NotThreeTriples(format_roots(&roots_of_mask(mask)));
    if mask.count_ones() != 9 {
        return Err(bad());
    }
    let triples = tau_mask(mask);
    let split = triples
        .iter()
        .tuple_combinations()
        .find(|(a, b, c)| a.mask() | b.mask() | c.mask() == mask && a.mask() & b.mask() == 0)
        .ok_or_else(bad)?;
    let roots = [split.0.completion, split.1.completion, split.2.completion];
    let minus_count = roots.iter().filter(|r| !r.is_plus()).count();
    let class = if minus_count % 2 == 0 { TriadClass::A4MinusE } else { TriadClass::K33Dual };
    Ok((Triad { roots, minus_count }, class))
}

pub fn triad_class(u: &[RationalVector]) -> Result<(Triad, TriadClass)> {
    triad_class_mask(mask_of_roots(&check_roots(u)?))
}

/// A signed permutation of coordinates, stored by its action on the twelve positive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: [usize; 4],
    pub signs: [i64; 4],
    image: [u8; 12],
}

impl SignedPermutation {
    pub fn apply_root(&self, r: Root) -> Root {
        d4_roots()[self.image[r.index()] as usize]
    }

    pub fn apply_mask(&self, mask: u16) -> u16 {
        (0..12).filter(|k| mask & (1 << k) != 0).fold(0, |m, k| m | (1 << self.image[k]))
    }
}

/// The 384 signed permutations of four coordinates.
pub fn signed_permutations() -> &'static [SignedPermutation] {
    static GROUP: OnceLock<Vec<SignedPermutation>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let mut out = Vec::with_capacity(384);
        for p in (0..4).permutations(4) {
            for s in 0..16u32 {
                let perm = [p[0], p[1], p[2], p[3]];
                let signs: [i64; 4] = std::array::from_fn(|k| if s & (1 << k) != 0 { -1 } else { 1 });
                let mut image = [0u8; 12];
                for (k, r) in d4_roots().iter().enumerate() {
                    let x = r.coords();
                    let mut y = [0i64; 4];
                    for c in 0..4 {
                        y[perm[c]] = signs[c] * x[c];
                    }
                    let img = Root::from_vector(&RationalVector::from_ints(&y)).expect("roots map to roots");
                    image[k] = img.index() as u8;
                }
                out.push(SignedPermutation { perm, signs, image });
            }
        }
        out
    })
}

/// Smallest mask in the orbit under signed permutations.
pub fn orbit_representative(mask: u16) -> u16 {
    signed_permutations().iter().map(|g| g.apply_mask(mask)).min().expect("group is nonempty")
}

pub fn is_unimodular_mask(mask: u16) -> bool {
    let v: Vec<RationalVector> = roots_of_mask(mask).iter().map(|r| r.vector()).collect();
    is_unimodular_vectors(&v)
}

/// Unimodularity of every subset of positive roots, indexed by mask.
pub fn unimodular_table() -> &'static [bool] {
    static TABLE: OnceLock<Vec<bool>> = OnceLock::new();
    TABLE.get_or_init(|| crate::exec::map_range(0..4096u32, |m| is_unimodular_mask(m as u16)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnextendibleClass {
    pub representative: Vec<Root>,
    pub size: usize,
    pub instances: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnextendibleReport {
    pub subsets_scanned: usize,
    pub unimodular_subsets: usize,
    pub unextendible: usize,
    /// classes up to isomorphism of the represented matroid
    pub classes: Vec<UnextendibleClass>,
    /// orbits of the unextendible subsets under signed permutations alone
    pub signed_permutation_orbits: usize,
    pub three_triple_sets: usize,
    pub even_triads: usize,
    pub odd_triads: usize,
    pub a4_minus_e_sets: usize,
    pub k33_dual_sets: usize,
    /// three-triple sets whose parity class differs from the class of their matroid
    pub parity_mismatches: usize,
    /// how many of the mismatches have star-shaped triads
    pub star_shaped_mismatches: usize,
}

fn class_label(mask: u16) -> String {
    if quadruples().iter().any(|q| q.mask() == mask) {
        return "quadruple".to_string();
    }
    let v: Vec<RationalVector> = roots_of_mask(mask).iter().map(|r| r.vector()).collect();
    match label_of_vectors(&v) {
        Ok(ConwayLabel::K5Minus1) => "A4-e".to_string(),
        Ok(l) => l.to_string(),
        Err(_) => "unnamed".to_string(),
    }
}

/// Exhaustive search for unimodular root subsets to which no further root can be added.
pub fn unextendible_unimodular_subsystems() -> UnextendibleReport {
    let uni = unimodular_table();
    let unext: Vec<u16> = (0..4096u16)
        .filter(|&m| uni[m as usize] && (0..12).all(|k| m & (1 << k) != 0 || !uni[(m | (1 << k)) as usize]))
        .collect();
    let mut by_label: BTreeMap<String, Vec<u16>> = BTreeMap::new();
    for &m in &unext {
        by_label.entry(class_label(m)).or_default().push(m);
    }
    let classes = by_label
        .into_iter()
        .map(|(label, members)| {
            let representative = roots_of_mask(members[0]);
            UnextendibleClass { size: representative.len(), representative, instances: members.len(), label }
        })
        .collect();
    let orbits: std::collections::BTreeSet<u16> = unext.iter().map(|&m| orbit_representative(m)).collect();
    let sets = three_triple_sets();
    let (mut even, mut a4, mut mismatches, mut star) = (0, 0, 0, 0);
    for &m in &sets {
        let (triad, class) = triad_class_mask(m).expect("three disjoint triples by construction");
        let label = class_label(m);
        if class == TriadClass::A4MinusE {
            even += 1;
        }
        if label == "A4-e" {
            a4 += 1;
        }
        let expected = match class {
            TriadClass::A4MinusE => "A4-e",
            TriadClass::K33Dual => "K33*",
        };
        if label != expected || !uni[m as usize] {
            mismatches += 1;
            if !triad.is_triangle() {
                star += 1;
            }
        }
    }
    UnextendibleReport {
        subsets_scanned: 4096,
        unimodular_subsets: uni.iter().filter(|&&b| b).count(),
        unextendible: unext.len(),
        classes,
        signed_permutation_orbits: orbits.len(),
        three_triple_sets: sets.len(),
        even_triads: even,
        odd_triads: sets.len() - even,
        a4_minus_e_sets: a4,
        k33_dual_sets: sets.iter().filter(|&&m| class_label(m) == "K33*").count(),
        parity_mismatches: mismatches,
        star_shaped_mismatches: star,
    }
}

/// Unions of one triple from each quadruple.
pub fn three_triple_sets() -> Vec<u16> {
    let qs = quadruples();
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                out.push((qs[0].mask() & !qs[0].roots[a].bit())
                    | (qs[1].mask() & !qs[1].roots[b].bit())
                    | (qs[2].mask() & !qs[2].roots[c].bit()));
            }
        }
    }
    out
}

/// The matrix with columns 12+, 12-, 34+, 34-, taking the frame `-1 <= x_i ± x_j <= 1`
/// to the frame where the edges of the 24-cell are roots.
pub fn frame_map() -> RationalMatrix {
    RationalMatrix::from_int_rows(&[&[1, 1, 0, 0], &[1, -1, 0, 0], &[0, 0, 1, 1], &[0, 0, 1, -1]])
}
