//! Cut arithmetic, exact conductance / edge expansion, and spectral certificates.

use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::ratio::{self, Rational};
use crate::spectral;
use serde::{Deserialize, Serialize};

/// Largest vertex count for 2^(n−1) cut enumeration.
pub const EXACT_LIMIT: usize = 26;

/// Boundary size e(S, V∖S).
pub fn cut_edges(g: &Graph, inside: &[bool]) -> usize {
    g.edges().filter(|&(u, v)| inside[u] != inside[v]).count()
}

pub fn cut_conductance(g: &Graph, c: &Cut) -> Result<Rational> {
    let n = g.vertex_count();
    if c.is_empty() || c.len() >= n || c.vertices().iter().any(|&v| v >= n) {
        return Err(Error::InvalidCut);
    }
    let inside = c.membership(n);
    let e = cut_edges(g, &inside);
    let vol_s = g.volume(c.vertices().iter().copied());
    let vol_t = 2 * g.edge_count() - vol_s;
    let min = vol_s.min(vol_t);
    if min == 0 {
        return Ok(Rational::from_integer(0));
    }
    Ok(ratio::rat(e as i64, min as i64))
}

/// Walks all cuts with vertex n−1 outside S in Gray-code order, calling
/// `visit(mask, |S|, vol(S), e(S, V∖S))`; stops early when `visit` returns false.
fn gray_walk<F: FnMut(u64, usize, usize, usize) -> bool>(g: &Graph, mut visit: F) {
    let n = g.vertex_count();
    let nb = g.bitmasks();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let (mut mask, mut size, mut vol, mut boundary) = (0u64, 0usize, 0usize, 0isize);
    for i in 1u64..(1u64 << (n - 1)) {
        let v = i.trailing_zeros() as usize;
        let inside_nb = (nb[v] & mask).count_ones() as isize;
        if mask >> v & 1 == 0 {
            boundary += deg[v] as isize - 2 * inside_nb;
            vol += deg[v];
            size += 1;
        } else {
            boundary -= deg[v] as isize - 2 * inside_nb;
            vol -= deg[v];
            size -= 1;
        }
        mask ^= 1 << v;
        if !visit(mask, size, vol, boundary as usize) {
            return;
        }
    }
}

fn guard(g: &Graph, what: &'static str) -> Result<()> {
    let n = g.vertex_count();
    if !(2..=EXACT_LIMIT).contains(&n) {
        return Err(Error::TooLargeForExact { what, n, limit: EXACT_LIMIT });
    }
    Ok(())
}

/// φ_G with a minimizing cut.
pub fn exact_conductance(g: &Graph) -> Result<(Rational, Cut)> {
    guard(g, "exact_conductance")?;
    let n = g.vertex_count();
    let total = 2 * g.edge_count();
    let mut best: Option<(usize, usize, u64)> = None;
    gray_walk(g, |mask, _, vol, e| {
        let min = vol.min(total - vol);
        if min == 0 {
            best = Some((0, 1, mask));
            return false;
        }
        match best {
            Some((bn, bd, _)) if e * bd >= bn * min => {}
            _ => best = Some((e, min, mask)),
        }
        true
    });
    let (num, den, mask) = best.unwrap();
    Ok((ratio::rat(num as i64, den as i64), Cut::from_mask(mask, n)))
}

/// h_G = min e(S, V∖S)/|S| over nonempty S with |S| ≤ n/2, with a minimizing S.
pub fn exact_edge_expansion(g: &Graph) -> Result<(Rational, Cut)> {
    guard(g, "exact_edge_expansion")?;
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;
    let mut best: Option<(usize, usize, u64)> = None;
    gray_walk(g, |mask, size, _, e| {
        let (den, side) = if size <= n - size { (size, mask) } else { (n - size, full ^ mask) };
        match best {
            Some((bn, bd, _)) if e * bd >= bn * den => {}
            _ => best = Some((e, den, side)),
        }
        e != 0
    });
    let (num, den, mask) = best.unwrap();
    Ok((ratio::rat(num as i64, den as i64), Cut::from_mask(mask, n)))
}

/// Cheeger lower bound λ₂/2 on φ_G, reduced by the eigen-residual; 0 when disconnected.
pub fn spectral_conductance_lower_bound(g: &Graph) -> f64 {
    if g.vertex_count() < 2 || !g.is_connected() {
        return 0.0;
    }
    let est = spectral::normalized_laplacian_lambda2(g);
    (est.value / 2.0 - est.residual).max(0.0)
}

/// σ₂ (upper estimate) of the biadjacency matrix of a d-regular bipartite graph.
pub fn second_singular_value_bipartite(g: &Graph, left: &[usize], right: &[usize]) -> Result<f64> {
    let (rows, d) = biadjacency(g, left, right)?;
    Ok(spectral::biadjacency_sigma2(&rows, left.len(), d).value)
}

/// Rows of the biadjacency matrix (left index → right indices) and the common degree.
pub(crate) fn biadjacency(g: &Graph, left: &[usize], right: &[usize]) -> Result<(Vec<Vec<usize>>, usize)> {
    let n = g.vertex_count();
    let bad = |m: &str| Error::InvalidInput(m.to_string());
    if left.len() != right.len() || left.len() + right.len() != n {
        return Err(bad("bipartition must split the vertex set into equal halves"));
    }
    let mut pos = vec![None; n];
    for (i, &v) in left.iter().enumerate() {
        pos[v] = Some((false, i));
    }
    for (i, &v) in right.iter().enumerate() {
        if v >= n || pos[v].is_some() {
            return Err(bad("bipartition sides overlap"));
        }
        pos[v] = Some((true, i));
    }
    let d = g.degree(left.first().copied().ok_or_else(|| bad("empty graph"))?);
    if (0..n).any(|v| g.degree(v) != d) {
        return Err(bad("graph is not regular"));
    }
    let mut rows = vec![Vec::with_capacity(d); left.len()];
    for (u, v) in g.edges() {
        match (pos[u], pos[v]) {
            (Some((false, i)), Some((true, j))) | (Some((true, j)), Some((false, i))) => rows[i].push(j),
            _ => return Err(bad("edge inside one side")),
        }
    }
    Ok((rows, d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Exact,
    Spectral,
}

/// Evidence that a graph meets an expansion threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value_num: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value_den: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value_float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_cut: Option<Vec<usize>>,
    /// λ₂ (conductance) or σ₂ (bipartite expansion) estimate behind a spectral value.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigen_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<f64>,
    #[serde(with = "ratio::serde_rational")]
    pub target: Rational,
    pub meets_target: bool,
}

/// Denominator used when rounding spectral values down to rationals.
pub const SPECTRAL_DEN: i64 = 1_000_000;

impl Certificate {
    pub fn exact(value: Rational, witness: &Cut, target: Rational) -> Self {
        Certificate {
            kind: CertificateKind::Exact,
            value_num: Some(*value.numer()),
            value_den: Some(*value.denom()),
            value_float: None,
            witness_cut: Some(witness.vertices().to_vec()),
            eigen_estimate: None,
            residual: None,
            target,
            meets_target: value >= target,
        }
    }

    pub fn spectral(value: f64, eigen: f64, residual: f64, target: Rational) -> Self {
        let value = value.max(0.0);
        Certificate {
            kind: CertificateKind::Spectral,
            value_num: None,
            value_den: None,
            value_float: Some(value),
            witness_cut: None,
            eigen_estimate: Some(eigen),
            residual: Some(residual),
            target,
            meets_target: ratio::floor_rational(value, SPECTRAL_DEN) >= target,
        }
    }

    /// The certified value as a rational, rounded down for spectral certificates.
    pub fn value(&self) -> Rational {
        match self.kind {
            CertificateKind::Exact => ratio::rat(self.value_num.unwrap_or(0), self.value_den.unwrap_or(1)),
            CertificateKind::Spectral => ratio::floor_rational(self.value_float.unwrap_or(0.0), SPECTRAL_DEN),
        }
    }
}

/// Certifies φ_G ≥ target: exact enumeration when n ≤ 26, otherwise the Cheeger bound.
pub fn certify_conductance(g: &Graph, target: Rational) -> Certificate {
    let n = g.vertex_count();
    if (2..=EXACT_LIMIT).contains(&n) {
        let (phi, cut) = exact_conductance(g).expect("guarded");
        return Certificate::exact(phi, &cut, target);
    }
    if n < 2 || !g.is_connected() {
        return Certificate::spectral(0.0, 0.0, 0.0, target);
    }
    let est = spectral::normalized_laplacian_lambda2(g);
    Certificate::spectral(est.value / 2.0 - est.residual, est.value, est.residual, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    fn brute_conductance(g: &Graph) -> Rational {
        let n = g.vertex_count();
        let mut best: Option<Rational> = None;
        for mask in 1u64..(1 << n) - 1 {
            let c = cut_conductance(g, &Cut::from_mask(mask, n)).unwrap();
            best = Some(best.map_or(c, |b| b.min(c)));
        }
        best.unwrap()
    }

    #[test]
    fn cut_values() {
        let c4 = Graph::cycle(4);
        assert_eq!(cut_conductance(&c4, &Cut::new([0, 1])).unwrap(), rat(1, 2));
        assert_eq!(cut_conductance(&Graph::complete(4), &Cut::new([0])).unwrap(), rat(1, 1));
        let g = Graph::from_edges(4, &[(2, 3)]).unwrap();
        assert_eq!(cut_conductance(&g, &Cut::new([0])).unwrap(), rat(0, 1));
        assert_eq!(cut_conductance(&c4, &Cut::new([])), Err(Error::InvalidCut));
        assert_eq!(cut_conductance(&c4, &Cut::new(0..4)), Err(Error::InvalidCut));
    }

    #[test]
    fn exact_values() {
        assert_eq!(exact_conductance(&Graph::cycle(4)).unwrap().0, rat(1, 2));
        // K₄: the balanced cut has e=4 over vol=6; brute force over all 14 cuts agrees
        assert_eq!(exact_conductance(&Graph::complete(4)).unwrap().0, rat(2, 3));
        assert_eq!(brute_conductance(&Graph::complete(4)), rat(2, 3));
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(exact_conductance(&two_triangles).unwrap().0, rat(0, 1));
    }

    #[test]
    fn exact_witness_matches_value() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap();
        let (phi, cut) = exact_conductance(&g).unwrap();
        assert_eq!(cut_conductance(&g, &cut).unwrap(), phi);
        assert_eq!(phi, brute_conductance(&g));
    }

    #[test]
    fn edge_expansion_values() {
        assert_eq!(exact_edge_expansion(&Graph::cycle(4)).unwrap().0, rat(1, 1));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(exact_edge_expansion(&star).unwrap().0, rat(1, 1));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(exact_edge_expansion(&two_edges).unwrap().0, rat(0, 1));
    }

    #[test]
    fn guard_rejects() {
        assert!(matches!(exact_conductance(&Graph::new(1)), Err(Error::TooLargeForExact { .. })));
        assert!(matches!(exact_conductance(&Graph::new(27)), Err(Error::TooLargeForExact { .. })));
    }

    #[test]
    fn spectral_bounds() {
        let k4 = Graph::complete(4);
        let lb = spectral_conductance_lower_bound(&k4);
        assert!((lb - 2.0 / 3.0).abs() < 1e-9);
        assert!(lb <= ratio::to_f64(exact_conductance(&k4).unwrap().0) + 1e-12);
        let p3 = Graph::path(3);
        assert!(spectral_conductance_lower_bound(&p3) <= ratio::to_f64(exact_conductance(&p3).unwrap().0));
        assert_eq!(spectral_conductance_lower_bound(&Graph::new(3)), 0.0);
    }

    #[test]
    fn singular_value_checks() {
        let mut g = Graph::new(6);
        for i in 0..3 {
            for j in 0..3 {
                g.insert_edge(i, 3 + j).unwrap();
            }
        }
        let s = second_singular_value_bipartite(&g, &[0, 1, 2], &[3, 4, 5]).unwrap();
        assert!(s < 1e-6);
        g.delete_edge(0, 3).unwrap();
        assert!(second_singular_value_bipartite(&g, &[0, 1, 2], &[3, 4, 5]).is_err());
        let tri = Graph::complete(3);
        assert!(second_singular_value_bipartite(&tri, &[0], &[1]).is_err());
    }

    #[test]
    fn certificate_roundtrip() {
        let c = certify_conductance(&Graph::cycle(4), rat(1, 4));
        assert!(c.meets_target);
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"value_num\":1") && json.contains("\"witness_cut\""));
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(!certify_conductance(&Graph::path(6), rat(9, 10)).meets_target);
    }
}
