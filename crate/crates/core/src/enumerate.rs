//! Brute-force loop enumeration: closed rank-one geodesics and closed
//! rank-one galleries, grouped into rotation classes.
//!
//! Both enumerators only extend a partial loop while it can still close,
//! and only start at the smallest element of the loop, so each rotation
//! class is met through its lexicographically least rotation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::complex::TriangleComplex;
use crate::exactalg::IntPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("requested {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerationConfig {
    /// Largest geodesic loop length.
    pub max_length: usize,
    /// Largest number of chambers in a gallery loop.
    pub max_gallery_chambers: usize,
    /// Primitive loops kept in the returned list; counts are always complete.
    pub store_limit: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            max_length: 10,
            max_gallery_chambers: 18,
            store_limit: 100_000,
        }
    }
}

/// Index of the least rotation of `s` and the period of `s`.
fn least_rotation(s: &[usize]) -> (usize, usize) {
    let n = s.len();
    let rotated = |k: usize| (0..n).map(move |i| s[(i + k) % n]);
    let best = (0..n)
        .min_by(|&a, &b| rotated(a).cmp(rotated(b)))
        .unwrap_or(0);
    let period = (1..=n)
        .find(|&d| n.is_multiple_of(d) && rotated(d).eq(s.iter().copied()))
        .unwrap_or(n);
    (best, period)
}

/// The period of `s` if `s` is its own least rotation.
fn period_if_least<T: Ord>(s: &[T]) -> Option<usize> {
    let n = s.len();
    for i in 1..n {
        if s[i] > s[0] {
            continue;
        }
        match (0..n)
            .map(|j| s[(i + j) % n].cmp(&s[j]))
            .find(|o| o.is_ne())
        {
            Some(std::cmp::Ordering::Less) => return None,
            Some(_) => {}
            None => return Some(i),
        }
    }
    Some(n)
}

/// A closed geodesic as its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicLoop {
    pub edges: Vec<usize>,
    pub primitive_length: usize,
}

impl GeodesicLoop {
    pub fn length(&self) -> usize {
        self.edges.len()
    }
}

/// Geodesic loop counts for lengths `1..=n_max` (index 0 is length 1).
#[derive(Clone, Debug, Serialize)]
pub struct GeodesicEnumeration {
    pub n_max: usize,
    /// `sum over classes of length n of l(c_0)`.
    pub trace_sums: Vec<u64>,
    /// Rotation classes of length `n`.
    pub classes: Vec<u64>,
    /// Primitive rotation classes of length `n`.
    pub primitive_counts: Vec<u64>,
    pub primitive_loops: Vec<GeodesicLoop>,
    pub loops_truncated: bool,
}

impl GeodesicEnumeration {
    /// `prod over primitive loops (1 - u^l)`, modulo `u^(n_max+1)`.
    pub fn euler_product(&self) -> IntPolynomial {
        euler_product(&self.primitive_counts, self.n_max + 1)
    }
}

/// `prod_l (1 - u^l)^{counts[l-1]}` modulo `u^order`.
pub fn euler_product(counts: &[u64], order: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::one().truncate(order);
    for (i, &k) in counts.iter().enumerate() {
        let l = i + 1;
        if l >= order || k == 0 {
            continue;
        }
        // (1 - u^l)^k = sum_j (-1)^j C(k, j) u^(lj)
        let mut coeffs = vec![BigInt::zero(); order];
        let mut binom = BigInt::one();
        for j in 0..=(order - 1) / l {
            if j as u64 > k {
                break;
            }
            coeffs[l * j] = if j % 2 == 0 {
                binom.clone()
            } else {
                -binom.clone()
            };
            binom = binom * BigInt::from(k - j as u64) / BigInt::from(j as u64 + 1);
        }
        acc = acc.mul_truncated(&IntPolynomial::new(coeffs), order);
    }
    acc
}

pub fn enumerate_geodesic_loops(
    c: &TriangleComplex,
    n_max: usize,
) -> Result<GeodesicEnumeration, EnumerateError> {
    enumerate_geodesic_loops_with(c, n_max, &EnumerationConfig::default())
}

pub fn enumerate_geodesic_loops_with(
    c: &TriangleComplex,
    n_max: usize,
    config: &EnumerationConfig,
) -> Result<GeodesicEnumeration, EnumerateError> {
    if n_max > config.max_length {
        return Err(EnumerateError::BoundExceeded {
            requested: n_max,
            bound: config.max_length,
        });
    }
    let graph = c.continuation_graph();
    let ne = graph.len();
    let mut out = GeodesicEnumeration {
        n_max,
        trace_sums: vec![0; n_max],
        classes: vec![0; n_max],
        primitive_counts: vec![0; n_max],
        primitive_loops: Vec::new(),
        loops_truncated: false,
    };
    for start in 0..ne {
        // can_close[k][f]: k more edges can follow f, all >= start, and the
        // last continues into start.
        let mut can_close = vec![vec![false; ne]; n_max];
        for f in start..ne {
            can_close[0][f] = graph[f].contains(&start);
        }
        for k in 1..n_max {
            for f in start..ne {
                can_close[k][f] = graph[f].iter().any(|&g| g >= start && can_close[k - 1][g]);
            }
        }
        for n in 1..=n_max {
            if !can_close[n - 1][start] {
                continue;
            }
            let mut path = vec![start];
            walk(&graph, &can_close, n, &mut path, &mut |p: &[usize]| {
                let (best, period) = least_rotation(p);
                if best != 0 {
                    return;
                }
                out.classes[n - 1] += 1;
                out.trace_sums[n - 1] += period as u64;
                if period == n {
                    out.primitive_counts[n - 1] += 1;
                    if out.primitive_loops.len() < config.store_limit {
                        out.primitive_loops.push(GeodesicLoop {
                            edges: p.to_vec(),
                            primitive_length: n,
                        });
                    } else {
                        out.loops_truncated = true;
                    }
                }
            });
        }
    }
    out.primitive_loops
        .sort_by(|a, b| (a.length(), &a.edges).cmp(&(b.length(), &b.edges)));
    Ok(out)
}

fn walk(
    graph: &[Vec<usize>],
    can_close: &[Vec<bool>],
    n: usize,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if path.len() == n {
        visit(path);
        return;
    }
    let last = *path.last().expect("non-empty path");
    let remaining = n - path.len();
    for &g in &graph[last] {
        if g >= path[0] && can_close[remaining - 1][g] {
            path.push(g);
            walk(graph, can_close, n, path, visit);
            path.pop();
        }
    }
}

/// Closed gallery counts for one chamber count.
#[derive(Clone, Debug, Serialize)]
pub struct GalleryCount {
    pub chambers: usize,
    /// Rotation classes.
    pub classes: u64,
    /// Primitive rotation classes.
    pub primitive: u64,
    /// Based loops, `sum over classes of the period`.
    pub based: u64,
}

/// Gallery loop counts for every chamber count divisible by 3 up to the
/// bound. Loops with an even number `6n` of chambers have length `3n` and
/// are compared with `tr L^n`; odd counts close only as one-sided strips
/// and are listed for completeness.
#[derive(Clone, Debug, Serialize)]
pub struct GalleryEnumeration {
    pub max_chambers: usize,
    pub counts: Vec<GalleryCount>,
}

impl GalleryEnumeration {
    /// `sum over classes with 6n chambers of l(c_0)/3`, for `n = 1, 2, ...`.
    pub fn trace_sums(&self) -> Vec<BigRational> {
        self.counts
            .iter()
            .filter(|g| g.chambers % 6 == 0)
            .map(|g| BigRational::new(BigInt::from(g.based), BigInt::from(6)))
            .collect()
    }

    /// Primitive loops with `6n` chambers, for `n = 1, 2, ...`.
    pub fn primitive_by_length(&self) -> Vec<u64> {
        self.counts
            .iter()
            .filter(|g| g.chambers % 6 == 0)
            .map(|g| g.primitive)
            .collect()
    }

    pub fn odd_loops(&self) -> u64 {
        self.counts
            .iter()
            .filter(|g| g.chambers % 2 == 1)
            .map(|g| g.classes)
            .sum()
    }
}

/// Gallery step state: a chamber and the slot of the edge it was entered by.
/// The boundary edge sits in the next slot and the exit edge in the one
/// after, so that both boundary paths are positively oriented in the
/// direction of travel.
type GalleryState = (usize, usize);

struct Strip<'a> {
    c: &'a TriangleComplex,
    graph: Vec<Vec<usize>>,
}

impl Strip<'_> {
    fn boundary(&self, (ch, slot): GalleryState) -> usize {
        self.c.chambers()[ch].edges[(slot + 1) % 3]
    }

    fn successors(&self, (ch, slot): GalleryState) -> impl Iterator<Item = GalleryState> + '_ {
        let exit = self.c.chambers()[ch].edges[(slot + 2) % 3];
        self.c
            .chambers_of_edge(exit)
            .iter()
            .copied()
            .filter(move |&next| next != ch)
            .map(move |next| (next, (slot + 2) % 3))
    }

    fn continues(&self, e: usize, f: usize) -> bool {
        self.graph[e].contains(&f)
    }
}

pub fn enumerate_gallery_loops(
    c: &TriangleComplex,
    max_chambers: usize,
) -> Result<GalleryEnumeration, EnumerateError> {
    enumerate_gallery_loops_with(c, max_chambers, &EnumerationConfig::default())
}

pub fn enumerate_gallery_loops_with(
    c: &TriangleComplex,
    max_chambers: usize,
    config: &EnumerationConfig,
) -> Result<GalleryEnumeration, EnumerateError> {
    if max_chambers > config.max_gallery_chambers {
        return Err(EnumerateError::BoundExceeded {
            requested: max_chambers,
            bound: config.max_gallery_chambers,
        });
    }
    let strip = Strip {
        c,
        graph: c.continuation_graph(),
    };
    let lengths: Vec<usize> = (3..=max_chambers).step_by(3).collect();
    let mut counts: Vec<GalleryCount> = lengths
        .iter()
        .map(|&chambers| GalleryCount {
            chambers,
            classes: 0,
            primitive: 0,
            based: 0,
        })
        .collect();
    let starts: Vec<GalleryState> = (0..c.chambers().len())
        .flat_map(|ch| (0..3).map(move |s| (ch, s)))
        .collect();
    let key = |s: GalleryState| s.0 * 3 + s.1;
    let ns = starts.len();
    // consecutive pairs (x, y) and the pairs (y, z) that may follow them
    let pair = |x: GalleryState, y: GalleryState| key(x) * ns + key(y);
    let mut follows: Vec<(usize, Vec<usize>)> = Vec::new();
    for &x in &starts {
        for y in strip.successors(x) {
            let next = strip
                .successors(y)
                .filter(|&z| z.0 != x.0 && strip.continues(strip.boundary(x), strip.boundary(z)))
                .map(|z| pair(y, z))
                .collect();
            follows.push((pair(x, y), next));
        }
    }
    for &start in &starts {
        // returns[k][pair]: a walk ending in the pair reaches the start after
        // exactly k more steps
        let mut returns = vec![vec![false; ns * ns]];
        for &(p, _) in &follows {
            returns[0][p] = p % ns == key(start);
        }
        for k in 1..max_chambers {
            let mut row = vec![false; ns * ns];
            for (p, next) in &follows {
                row[*p] = next.iter().any(|&r| returns[k - 1][r]);
            }
            returns.push(row);
        }
        for (li, &n) in lengths.iter().enumerate() {
            let mut path = vec![start];
            let walk = Walk {
                strip: &strip,
                n,
                returns: &returns,
                key: &key,
                states: ns,
            };
            walk.run(&mut path, &mut |p| {
                if let Some(period) = period_if_least(p) {
                    let g = &mut counts[li];
                    g.classes += 1;
                    g.based += period as u64;
                    if period == n {
                        g.primitive += 1;
                    }
                }
            });
        }
    }
    Ok(GalleryEnumeration {
        max_chambers,
        counts,
    })
}

struct Walk<'a, K> {
    strip: &'a Strip<'a>,
    n: usize,
    returns: &'a [Vec<bool>],
    key: &'a K,
    states: usize,
}

impl<K: Fn(GalleryState) -> usize> Walk<'_, K> {
    fn run(&self, path: &mut Vec<GalleryState>, visit: &mut impl FnMut(&[GalleryState])) {
        let (strip, n, key) = (self.strip, self.n, self.key);
        let len = path.len();
        if len == n {
            let (first, last) = (path[0], path[n - 1]);
            let closes = strip.successors(last).any(|s| s == first)
                && path[n - 2].0 != first.0
                && last.0 != path[1].0
                && strip.continues(strip.boundary(path[n - 2]), strip.boundary(first))
                && strip.continues(strip.boundary(last), strip.boundary(path[1]));
            if closes {
                visit(path);
            }
            return;
        }
        let last = path[len - 1];
        for s in strip.successors(last) {
            if key(s) < key(path[0]) || !self.returns[n - len][key(last) * self.states + key(s)] {
                continue;
            }
            if len >= 2 {
                let before = path[len - 2];
                if before.0 == s.0 || !strip.continues(strip.boundary(before), strip.boundary(s)) {
                    continue;
                }
            }
            path.push(s);
            self.run(path, visit);
            path.pop();
        }
    }
}

/// One row of the trace comparison table.
#[derive(Clone, Debug, Serialize)]
pub struct TraceRow {
    pub n: usize,
    pub geodesic_sum: Option<u64>,
    #[serde(serialize_with = "as_string")]
    pub trace_t_n: BigInt,
    #[serde(serialize_with = "as_opt_string")]
    pub gallery_sum: Option<BigRational>,
    #[serde(serialize_with = "as_opt_string")]
    pub trace_l_n: Option<BigInt>,
}

fn as_string<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn as_opt_string<S: serde::Serializer, T: std::fmt::Display>(
    v: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

impl TraceRow {
    /// Geodesic sum equals `tr T^n`, and the gallery sum equals `tr L^n`
    /// where both are present.
    pub fn matches(&self) -> bool {
        let geodesic = self
            .geodesic_sum
            .is_none_or(|s| BigInt::from(s) == self.trace_t_n);
        let gallery = match (&self.gallery_sum, &self.trace_l_n) {
            (Some(g), Some(l)) => *g == BigRational::from_integer(l.clone()),
            _ => true,
        };
        geodesic && gallery
    }
}

/// CSV with header `n,geodesic_sum,trace_T_n,gallery_sum,trace_L_n,match`;
/// absent entries are empty fields.
pub fn trace_table_csv(rows: &[TraceRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let opt = |v: Option<String>| v.unwrap_or_default();
    let records = std::iter::once(
        [
            "n",
            "geodesic_sum",
            "trace_T_n",
            "gallery_sum",
            "trace_L_n",
            "match",
        ]
        .map(String::from),
    )
    .chain(rows.iter().map(|r| {
        [
            r.n.to_string(),
            opt(r.geodesic_sum.map(|s| s.to_string())),
            r.trace_t_n.to_string(),
            opt(r.gallery_sum.as_ref().map(ToString::to_string)),
            opt(r.trace_l_n.as_ref().map(ToString::to_string)),
            r.matches().to_string(),
        ]
    }));
    for record in records {
        w.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii fields")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_if_least_agrees_with_least_rotation() {
        for s in [
            &[1, 2, 1, 2][..],
            &[2, 1, 2, 1],
            &[1, 1, 2],
            &[1, 2, 1, 1],
            &[3],
            &[1, 2, 1, 3],
        ] {
            let (best, period) = least_rotation(s);
            assert_eq!(period_if_least(s), (best == 0).then_some(period), "{s:?}");
        }
    }

    #[test]
    fn least_rotation_and_period() {
        assert_eq!(least_rotation(&[3, 1, 2]), (1, 3));
        assert_eq!(least_rotation(&[2, 1, 2, 1]), (1, 2));
        assert_eq!(least_rotation(&[5]), (0, 1));
    }

    #[test]
    fn euler_product_of_one_loop_per_length() {
        // prod_{l>=1} (1 - u^l) = 1 - u - u^2 + u^5 + u^7 - ...
        let p = euler_product(&[1; 8], 9);
        assert_eq!(p, IntPolynomial::from_i64s(&[1, -1, -1, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn euler_product_with_large_multiplicity() {
        let p = euler_product(&[20], 4);
        // (1-u)^20 mod u^4
        assert_eq!(p, IntPolynomial::from_i64s(&[1, -20, 190, -1140]));
    }

    #[test]
    fn empty_complex_has_no_loops() {
        let c = TriangleComplex::new(2, vec![], vec![], vec![]).unwrap();
        let g = enumerate_geodesic_loops(&c, 6).unwrap();
        assert!(g.trace_sums.iter().all(|&s| s == 0));
        let gal = enumerate_gallery_loops(&c, 12).unwrap();
        assert!(gal.counts.iter().all(|g| g.classes == 0));
    }

    #[test]
    fn bounds_are_enforced() {
        let c = TriangleComplex::new(2, vec![], vec![], vec![]).unwrap();
        assert_eq!(
            enumerate_geodesic_loops(&c, 11).unwrap_err(),
            EnumerateError::BoundExceeded {
                requested: 11,
                bound: 10
            }
        );
        assert!(enumerate_gallery_loops(&c, 24).is_err());
    }

    #[test]
    fn csv_header_and_match_column() {
        let rows = [TraceRow {
            n: 1,
            geodesic_sum: Some(3),
            trace_t_n: BigInt::from(3),
            gallery_sum: None,
            trace_l_n: None,
        }];
        assert_eq!(
            trace_table_csv(&rows),
            "n,geodesic_sum,trace_T_n,gallery_sum,trace_L_n,match\n1,3,3,,,true\n"
        );
    }
}
