//! Deterministic d-regular bipartite expanders built from permutation matchings.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::measure::{self, Certificate};
use crate::ratio::{self, Rational};
use crate::spectral;

/// Certified edge-expansion target φ_X.
pub fn phi_target() -> Rational {
    ratio::rat(1, 20)
}

const ROUNDS: usize = 64;
/// Stride between rounds in the offset sequence; larger than any slot count we use per round.
const ROUND_STRIDE: usize = 1 << 16;
const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// X on L ∪ R with |L| = |R| = N, as the union of d perfect matchings.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteExpander {
    side_size: usize,
    degree: usize,
    /// `matchings[i][x]` is the right neighbour of left vertex `x` in slot `i`.
    matchings: Vec<Vec<usize>>,
    inverse: Vec<Vec<usize>>,
    certificate: Certificate,
}

impl BipartiteExpander {
    pub fn side_size(&self) -> usize {
        self.side_size
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    /// Certified φ_X (rounded down for spectral certificates).
    pub fn phi(&self) -> Rational {
        self.certificate.value()
    }

    pub fn matchings(&self) -> &[Vec<usize>] {
        &self.matchings
    }

    pub fn neighbor(&self, left: usize, slot: usize) -> Result<usize> {
        if slot >= self.degree || left >= self.side_size {
            return Err(Error::InvalidIndex(format!("left {left}, slot {slot}")));
        }
        Ok(self.matchings[slot][left])
    }

    /// The left neighbour of right vertex `right` in slot `slot`.
    pub fn left_neighbor(&self, right: usize, slot: usize) -> Result<usize> {
        if slot >= self.degree || right >= self.side_size {
            return Err(Error::InvalidIndex(format!("right {right}, slot {slot}")));
        }
        Ok(self.inverse[slot][right])
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        self.matchings.iter().any(|p| p[left] == right)
    }

    /// Edges `(left, right)` sorted by left vertex, then right vertex.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> =
            (0..self.side_size).flat_map(|x| self.matchings.iter().map(move |p| (x, p[x]))).collect();
        e.sort_unstable();
        e
    }

    /// The expander as a graph on `0..2N` (left `x`, right `N + y`).
    pub fn to_graph(&self) -> Graph {
        from_matchings(self.side_size, &self.matchings)
    }

    /// Edge-list text with the `# bipartite N=.. d=.. phi=p/q` header.
    pub fn to_edge_list(&self) -> String {
        let phi = self.phi();
        let mut s = format!("# bipartite N={} d={} phi={}\n", self.side_size, self.degree, ratio::fmt(phi));
        s.push_str(&crate::io::write_edge_list(&self.to_graph()));
        s
    }
}

fn from_matchings(n: usize, matchings: &[Vec<usize>]) -> Graph {
    let mut g = Graph::new(2 * n);
    for p in matchings {
        for (x, &y) in p.iter().enumerate() {
            g.insert_edge(x, n + y).expect("matchings are disjoint");
        }
    }
    g
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multipliers ≥ 2 coprime to N, in increasing order; `[1]` when none exist.
fn multipliers(n: usize) -> Vec<usize> {
    let a: Vec<usize> = (2..n).filter(|&a| gcd(a, n) == 1).collect();
    if a.is_empty() {
        vec![1]
    } else {
        a
    }
}

/// Slot `i` of round `r` before repair: x ↦ a·x + b mod N.
fn affine(n: usize, r: usize, i: usize, mults: &[usize]) -> Vec<usize> {
    if i == 0 {
        return (0..n).collect();
    }
    let k = r * ROUND_STRIDE + i;
    let a = mults[(r + i - 1) % mults.len()];
    let b = ((k as f64 * GOLDEN).fract() * n as f64) as usize % n;
    (0..n).map(|x| (a * x + b) % n).collect()
}

/// Makes `p` avoid `used[x]` at every x by swapping images; None if stuck.
fn repair(p: &mut [usize], used: &[Vec<bool>]) -> Option<()> {
    let n = p.len();
    for x in 0..n {
        if !used[x][p[x]] {
            continue;
        }
        let mut fixed = false;
        for step in 1..n {
            let y = (x + step) % n;
            if !used[x][p[y]] && !used[y][p[x]] {
                p.swap(x, y);
                fixed = true;
                break;
            }
        }
        if !fixed {
            return None;
        }
    }
    Some(())
}

/// The d matchings of round `r`, or None if repair gets stuck.
fn round_matchings(n: usize, d: usize, r: usize) -> Option<Vec<Vec<usize>>> {
    let mults = multipliers(n);
    let mut used = vec![vec![false; n]; n];
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let mut p = affine(n, r, i, &mults);
        repair(&mut p, &used)?;
        for (x, &y) in p.iter().enumerate() {
            used[x][y] = true;
        }
        out.push(p);
    }
    Some(out)
}

fn circulant(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0..d).map(|i| (0..n).map(|x| (x + i * n / d) % n).collect()).collect()
}

fn inverse_of(matchings: &[Vec<usize>]) -> Vec<Vec<usize>> {
    matchings
        .iter()
        .map(|p| {
            let mut inv = vec![0; p.len()];
            for (x, &y) in p.iter().enumerate() {
                inv[y] = x;
            }
            inv
        })
        .collect()
}

/// Certifies φ_X for a union of matchings: exact h/d when 2N ≤ 26, else (d − σ₂)/(2d).
pub fn certify_matchings(n: usize, matchings: &[Vec<usize>], target: Rational) -> Certificate {
    let rows: Vec<Vec<usize>> = (0..n).map(|x| matchings.iter().map(|p| p[x]).collect()).collect();
    certify_rows(n, &rows, target)
}

/// Same certificate for a d-regular bipartite graph given by its left adjacency rows.
pub fn certify_rows(n: usize, rows: &[Vec<usize>], target: Rational) -> Certificate {
    let d = rows.first().map_or(0, |r| r.len());
    if 2 * n <= measure::EXACT_LIMIT {
        let mut g = Graph::new(2 * n);
        for (x, row) in rows.iter().enumerate() {
            for &y in row {
                g.insert_edge(x, n + y).expect("simple rows");
            }
        }
        let (h, cut) = measure::exact_edge_expansion(&g).expect("guarded");
        return Certificate::exact(h / d as i64, &cut, target);
    }
    let est = spectral::biadjacency_sigma2(rows, n, d);
    let value = (d as f64 - est.value) / (2.0 * d as f64);
    Certificate::spectral(value, est.value, est.residual, target)
}

/// The Cheeger certificate φ_X ≥ (d − σ₂)/(2d) regardless of size.
pub fn spectral_certificate(n: usize, matchings: &[Vec<usize>], target: Rational) -> Certificate {
    let d = matchings.len();
    let rows: Vec<Vec<usize>> = (0..n).map(|x| matchings.iter().map(|p| p[x]).collect()).collect();
    let est = spectral::biadjacency_sigma2(&rows, n, d);
    let value = (d as f64 - est.value) / (2.0 * d as f64);
    Certificate::spectral(value, est.value, est.residual, target)
}

/// Builds X(N, d) with certified φ_X ≥ 0.05.
pub fn build_bipartite_expander(n_side: usize, degree: usize) -> Result<BipartiteExpander> {
    if degree > n_side && n_side >= 1 {
        return Err(Error::InfeasibleDegree { n: n_side, d: degree });
    }
    if n_side < 4 || degree < 3 {
        return Err(Error::InvalidInput(format!("need N ≥ 4 and 3 ≤ d ≤ N, got N={n_side}, d={degree}")));
    }
    let target = phi_target();
    for r in 0..ROUNDS {
        let Some(m) = round_matchings(n_side, degree, r) else { continue };
        let cert = certify_matchings(n_side, &m, target);
        if cert.meets_target {
            return Ok(finish(n_side, m, cert));
        }
    }
    let m = circulant(n_side, degree);
    let cert = certify_matchings(n_side, &m, target);
    if cert.meets_target {
        return Ok(finish(n_side, m, cert));
    }
    Err(Error::CertificationFailed { n: n_side, d: degree })
}

fn finish(n: usize, matchings: Vec<Vec<usize>>, certificate: Certificate) -> BipartiteExpander {
    BipartiteExpander { side_size: n, degree: matchings.len(), inverse: inverse_of(&matchings), matchings, certificate }
}

/// Certifies an arbitrary X against a target (used to re-check expanders read back from disk).
pub fn certify_edge_expansion(x: &BipartiteExpander, phi_target: Rational) -> Certificate {
    certify_matchings(x.side_size, &x.matchings, phi_target)
}

/// Smallest degree ≥ `d` (and ≤ N) for which construction certifies.
pub fn build_at_least(n_side: usize, d: usize) -> Result<BipartiteExpander> {
    let mut last = Error::CertificationFailed { n: n_side, d };
    for dd in d.max(3)..=n_side {
        match build_bipartite_expander(n_side, dd) {
            Ok(x) => return Ok(x),
            Err(e @ Error::CertificationFailed { .. }) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// A cut of X as the set of its left and right members (right ids offset by N).
pub fn cut_of(n: usize, left: &[usize], right: &[usize]) -> Cut {
    Cut::new(left.iter().copied().chain(right.iter().map(|&y| n + y)))
}
