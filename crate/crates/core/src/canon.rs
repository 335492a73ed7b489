//! Canonical labeling of bipartite incidence structures.
//!
//! Color refinement with individualization and backtracking. The certificate of a
//! structure is its adjacency code under the canonical leaf, so two structures get the
//! same certificate exactly when they are isomorphic by a map that keeps the sides.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Canonical form of a bipartite incidence structure, printable and totally ordered.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Certificate(String);

impl Certificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() > 40 {
            write!(f, "Certificate({}..)", &self.0[..40])
        } else {
            write!(f, "Certificate({})", self.0)
        }
    }
}

/// A bipartite graph with `n_left` left nodes and `n_right` right nodes. Parallel
/// right nodes (equal neighborhoods) are allowed.
#[derive(Clone, Debug)]
pub struct Bipartite {
    n_left: usize,
    n_right: usize,
    adj: Vec<Vec<u32>>,
}

impl Bipartite {
    /// `rows[r]` lists the left neighbors of right node `r`.
    pub fn new(n_left: usize, rows: &[Vec<usize>]) -> Self {
        let n_right = rows.len();
        let mut adj = vec![Vec::new(); n_left + n_right];
        for (r, row) in rows.iter().enumerate() {
            for &l in row {
                assert!(l < n_left, "left index {l} out of range");
                adj[l].push((n_left + r) as u32);
                adj[n_left + r].push(l as u32);
            }
        }
        Self { n_left, n_right, adj }
    }

    pub fn n_left(&self) -> usize {
        self.n_left
    }

    pub fn n_right(&self) -> usize {
        self.n_right
    }

    pub fn certificate(&self) -> Certificate {
        let code = Search::new(self).run();
        let mut s = format!("{}x{}:", self.n_left, self.n_right);
        for w in code {
            s.push_str(&format!("{w:016x}"));
        }
        Certificate(s)
    }
}

struct Leaf {
    traces: Vec<Vec<u32>>,
    code: Vec<u64>,
    /// node index at each canonical position
    order: Vec<u32>,
}

struct Search<'a> {
    g: &'a Bipartite,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<u32>>,
    keybuf: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Bipartite) -> Self {
        Self { g, n: g.n_left + g.n_right, first: None, best: None, automorphisms: Vec::new(), keybuf: Vec::new() }
    }

    fn run(mut self) -> Vec<u64> {
        let mut colors: Vec<u32> = (0..self.n).map(|v| u32::from(v >= self.g.n_left)).collect();
        let trace = self.refine(&mut colors);
        let mut traces = vec![trace];
        let mut path = Vec::new();
        self.descend(&mut colors, &mut traces, &mut path);
        self.best.expect("search reaches at least one leaf").code
    }

    /// Refines `colors` to the coarsest equitable partition finer than it. Colors stay
    /// dense and are numbered in order of (old color, sorted neighbor colors), so the
    /// result does not depend on node names. Returns the cell sizes.
    fn refine(&mut self, colors: &mut [u32]) -> Vec<u32> {
        let n = self.n;
        let mut n_colors = count_colors(colors);
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + self.g.adj[v].len();
        }
        let mut order: Vec<u32> = (0..n as u32).collect();
        loop {
            self.keybuf.clear();
            for v in 0..n {
                let start = self.keybuf.len();
                self.keybuf.extend(self.g.adj[v].iter().map(|&w| colors[w as usize]));
                self.keybuf[start..].sort_unstable();
            }
            let key = |v: u32| {
                let v = v as usize;
                (colors[v], &self.keybuf[offsets[v]..offsets[v + 1]])
            };
            order.sort_unstable_by(|&a, &b| key(a).cmp(&key(b)));
            let mut new = vec![0u32; n];
            let mut c = 0u32;
            for i in 0..n {
                if i > 0 && key(order[i]) != key(order[i - 1]) {
                    c += 1;
                }
                new[order[i] as usize] = c;
            }
            let k = c as usize + 1;
            colors.copy_from_slice(&new);
            if k == n_colors {
                break;
            }
            n_colors = k;
        }
        let mut sizes = vec![0u32; n_colors];
        for &c in colors.iter() {
            sizes[c as usize] += 1;
        }
        sizes
    }

    fn descend(&mut self, colors: &mut Vec<u32>, traces: &mut Vec<Vec<u32>>, path: &mut Vec<u32>) {
        if let Some(best) = &self.best {
            if cmp_prefix(traces, &best.traces) == Ordering::Greater {
                return;
            }
        }
        let sizes = traces.last().expect("trace per level");
        let Some(target) = sizes.iter().position(|&s| s > 1) else {
            self.leaf(colors, traces);
            return;
        };
        let target = target as u32;
        let cell: Vec<u32> = (0..self.n as u32).filter(|&v| colors[v as usize] == target).collect();
        let mut tried: Vec<u32> = Vec::new();
        for &x in &cell {
            if !tried.is_empty() && self.equivalent_to_tried(path, &tried, x) {
                continue;
            }
            tried.push(x);
            let mut child: Vec<u32> =
                colors.iter().enumerate().map(|(v, &c)| if v as u32 == x { 2 * c } else { 2 * c + 1 }).collect();
            let t = self.refine(&mut child);
            traces.push(t);
            path.push(x);
            self.descend(&mut child, traces, path);
            path.pop();
            traces.pop();
        }
    }

    /// Whether `x` lies in the orbit of an explored sibling under the known
    /// automorphisms that fix every node on the current path.
    fn equivalent_to_tried(&self, path: &[u32], tried: &[u32], x: u32) -> bool {
        let stabilizing: Vec<&Vec<u32>> = self
            .automorphisms
            .iter()
            .filter(|g| path.iter().all(|&p| g[p as usize] == p))
            .collect();
        if stabilizing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for g in stabilizing {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w as usize);
            }
        }
        let rx = uf.find(x as usize);
        tried.iter().any(|&t| uf.find(t as usize) == rx)
    }

    fn leaf(&mut self, colors: &[u32], traces: &[Vec<u32>]) {
        let n_left = self.g.n_left;
        let mut order = vec![0u32; self.n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v as u32;
        }
        let words = n_left.div_ceil(64).max(1);
        let mut code = vec![0u64; words * self.g.n_right];
        for (row, &r) in order[n_left..].iter().enumerate() {
            for &l in &self.g.adj[r as usize] {
                let pos = colors[l as usize] as usize;
                // most significant bit first so word order matches position order
                code[row * words + pos / 64] |= 1u64 << (63 - pos % 64);
            }
        }
        let leaf = Leaf { traces: traces.to_vec(), code, order };
        for other in [&self.first, &self.best].into_iter().flatten() {
            if other.traces == leaf.traces && other.code == leaf.code {
                let mut g = vec![0u32; self.n];
                for (pos, &v) in leaf.order.iter().enumerate() {
                    g[v as usize] = other.order[pos];
                }
                if !self.automorphisms.contains(&g) {
                    self.automorphisms.push(g);
                }
            }
        }
        let better = match &self.best {
            None => true,
            Some(b) => (&leaf.traces, &leaf.code) < (&b.traces, &b.code),
        };
        if self.first.is_none() {
            self.first = Some(Leaf { traces: leaf.traces.clone(), code: leaf.code.clone(), order: leaf.order.clone() });
        }
        if better {
            self.best = Some(leaf);
        }
    }
}

fn count_colors(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn cmp_prefix(path: &[Vec<u32>], best: &[Vec<u32>]) -> Ordering {
    for (a, b) in path.iter().zip(best) {
        match a.cmp(b) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
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

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn cert(n_left: usize, rows: &[Vec<usize>]) -> Certificate {
        Bipartite::new(n_left, rows).certificate()
    }

    /// Cube vertices as sign vectors, facets as (coordinate, sign).
    fn cube_rows(d: usize) -> Vec<Vec<usize>> {
        let mut rows = Vec::new();
        for k in 0..d {
            for s in [0, 1] {
                rows.push((0..1usize << d).filter(|v| (v >> k) & 1 == s).collect());
            }
        }
        rows
    }

    /// Brute-force oracle: minimal code over every pair of side permutations.
    fn brute_code(n_left: usize, rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut best: Option<Vec<Vec<usize>>> = None;
        for pl in (0..n_left).permutations(n_left) {
            let mut relabeled: Vec<Vec<usize>> = rows
                .iter()
                .map(|r| {
                    let mut x: Vec<usize> = r.iter().map(|&l| pl[l]).collect();
                    x.sort_unstable();
                    x
                })
                .collect();
            relabeled.sort();
            if best.as_ref().is_none_or(|b| relabeled < *b) {
                best = Some(relabeled);
            }
        }
        best.unwrap()
    }

    #[test]
    fn cube_is_invariant_under_relabeling() {
        let rows = cube_rows(3);
        let perm = [5, 2, 7, 0, 3, 6, 1, 4];
        let relabeled: Vec<Vec<usize>> = rows.iter().rev().map(|r| r.iter().map(|&v| perm[v]).collect()).collect();
        assert_eq!(cert(8, &rows), cert(8, &relabeled));
        assert!(cert(8, &rows).as_str().starts_with("8x6:"));
    }

    #[test]
    fn distinguishes_path_and_star() {
        // vertices vs edges
        let path = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        let star = vec![vec![0, 1], vec![0, 2], vec![0, 3]];
        assert_ne!(cert(4, &path), cert(4, &star));
    }

    #[test]
    fn parallel_right_nodes() {
        let a = vec![vec![0, 1], vec![0, 1], vec![1, 2]];
        let b = vec![vec![1, 2], vec![0, 1], vec![1, 2]];
        let c = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(cert(3, &a), cert(3, &b));
        assert_ne!(cert(3, &a), cert(3, &c));
    }

    #[test]
    fn large_symmetric_structure_terminates() {
        let rows = cube_rows(5);
        assert_eq!(cert(32, &rows), cert(32, &rows.iter().rev().cloned().collect::<Vec<_>>()));
    }

    fn random_structure() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
        (1usize..6, 1usize..5).prop_flat_map(|(nl, nr)| {
            (Just(nl), prop::collection::vec(prop::collection::btree_set(0..nl, 0..=nl), nr))
                .prop_map(|(nl, rows)| (nl, rows.into_iter().map(|s| s.into_iter().collect()).collect()))
        })
    }

    proptest! {
        #[test]
        fn certificate_matches_brute_force_equivalence(
            (nl, rows) in random_structure(),
            (nl2, rows2) in random_structure(),
        ) {
            let same = nl == nl2 && rows.len() == rows2.len() && brute_code(nl, &rows) == brute_code(nl2, &rows2);
            prop_assert_eq!(cert(nl, &rows) == cert(nl2, &rows2), same);
        }

        #[test]
        fn certificate_is_invariant((nl, rows) in random_structure(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pl: Vec<usize> = (0..nl).collect();
            pl.shuffle(&mut rng);
            let mut shuffled: Vec<Vec<usize>> = rows.iter().map(|r| r.iter().map(|&l| pl[l]).collect()).collect();
            shuffled.shuffle(&mut rng);
            prop_assert_eq!(cert(nl, &rows), cert(nl, &shuffled));
        }
    }
}
