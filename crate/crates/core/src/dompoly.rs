//! Domination polynomials.
//!
//! [`brute_force`] enumerates subsets and is the reference oracle.
//! [`DomEngine::compute`] is the scalable path: it factors over components,
//! runs a three-state dynamic program on tree components, and otherwise
//! applies the nested-neighborhood recurrence
//! `D_G = x·D_{G/u} + D_{G-u} + x·D_{G-N[u]}` (valid whenever
//! `N[v] ⊆ N[u]` for some `v ≠ u`) with an isomorphism-aware memo. Anything
//! left over falls back to brute force under its guard.

use std::cell::RefCell;

use lru::LruCache;
use num_bigint::BigUint;

use crate::canon::{canonical_code, CanonicalCode, GENERAL_CANON_GUARD};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::poly::DomPolynomial;
use crate::rational::Rational;

pub const DEFAULT_BRUTE_GUARD: usize = 25;
pub const DEFAULT_CACHE_CAPACITY: usize = 1_000_000;

fn brute_masks(g: &Graph, guard: usize) -> Result<Vec<u64>> {
    if g.order() > guard {
        return Err(Error::GuardExceeded {
            what: "brute-force enumeration",
            order: g.order(),
            guard,
            hint: "; use compute for larger graphs",
        });
    }
    Ok(g.closed_masks()
        .expect("guard keeps the order within bitmask range"))
}

/// Counts dominating sets by size among those containing `forced_in` and
/// avoiding `forced_out`. Depth-first over vertices in index order; a branch
/// dies as soon as some vertex has had its whole closed neighborhood decided
/// without being covered.
pub(crate) fn count_by_size(closed: &[u64], forced_in: u64, forced_out: u64) -> Vec<u64> {
    let n = closed.len();
    // settled_at[i]: vertices whose closed neighborhood has maximum index i.
    let mut settled_at = vec![0u64; n];
    for (v, &m) in closed.iter().enumerate() {
        settled_at[63 - m.leading_zeros() as usize] |= 1 << v;
    }
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }

    struct Walk<'a> {
        closed: &'a [u64],
        settled_at: &'a [u64],
        forced_in: u64,
        forced_out: u64,
        counts: &'a mut [u64],
    }

    impl Walk<'_> {
        fn go(&mut self, i: usize, covered: u64, size: usize) {
            if i == self.closed.len() {
                self.counts[size] += 1;
                return;
            }
            let bit = 1u64 << i;
            if self.forced_in & bit == 0 && covered & self.settled_at[i] == self.settled_at[i] {
                self.go(i + 1, covered, size);
            }
            if self.forced_out & bit == 0 {
                let with = covered | self.closed[i];
                if with & self.settled_at[i] == self.settled_at[i] {
                    self.go(i + 1, with, size + 1);
                }
            }
        }
    }

    Walk {
        closed,
        settled_at: &settled_at,
        forced_in,
        forced_out,
        counts: &mut counts,
    }
    .go(0, 0, 0);
    counts
}

/// `(D(1), D'(1))` for a labeled graph on at most 8 vertices given by its
/// closed-neighborhood masks. Used by the labeled-graph sweeps.
pub fn eval_pair_small(closed: &[u64]) -> (u64, u64) {
    let n = closed.len();
    assert!(n <= 8, "eval_pair_small handles at most 8 vertices");
    let full = (1u64 << n) - 1;
    let mut union = [0u64; 256];
    let (mut d1, mut dp1) = (u64::from(n == 0), 0u64);
    for s in 1usize..(1 << n) {
        let u = union[s & (s - 1)] | closed[s.trailing_zeros() as usize];
        union[s] = u;
        if u == full {
            d1 += 1;
            dp1 += u64::from(s.count_ones());
        }
    }
    (d1, dp1)
}

/// Reference oracle: enumerate every subset. Rejects graphs above `guard`.
pub fn brute_force_with_guard(g: &Graph, guard: usize) -> Result<DomPolynomial> {
    let masks = brute_masks(g, guard)?;
    Ok(DomPolynomial::from_counts(count_by_size(&masks, 0, 0)))
}

pub fn brute_force(g: &Graph) -> Result<DomPolynomial> {
    brute_force_with_guard(g, DEFAULT_BRUTE_GUARD)
}

/// `D_{K_{1,k}}(x) = x(1+x)^k + x^k`, and `x` for `k = 0`.
pub fn star_poly(k: usize) -> DomPolynomial {
    if k == 0 {
        return DomPolynomial::monomial(1);
    }
    &DomPolynomial::one_plus_x_pow(k).shift(1) + &DomPolynomial::monomial(k)
}

/// `D_{K_n}(x) = (1+x)^n - 1`.
pub fn complete_poly(n: usize) -> DomPolynomial {
    let full = DomPolynomial::one_plus_x_pow(n);
    if n == 0 {
        return full;
    }
    let mut coeffs = full.coeffs().to_vec();
    coeffs[0] = BigUint::default();
    DomPolynomial::new(coeffs)
}

/// Three-state tree DP. `t` must be a tree.
fn tree_poly(t: &Graph) -> DomPolynomial {
    let n = t.order();
    if n == 0 {
        return DomPolynomial::one();
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[0] = 0;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }

    let x = DomPolynomial::monomial(1);
    // Per vertex: in the set; out and dominated by a child; out and waiting
    // for its parent.
    let mut in_set = vec![DomPolynomial::zero(); n];
    let mut dominated = vec![DomPolynomial::zero(); n];
    let mut waiting = vec![DomPolynomial::zero(); n];
    for &v in order.iter().rev() {
        let mut any = DomPolynomial::one();
        let mut has_in_child = DomPolynomial::zero();
        let mut no_in_child = DomPolynomial::one();
        for &c in t.neighbors(v) {
            if c == parent[v] {
                continue;
            }
            let in_or_dom = &in_set[c] + &dominated[c];
            any = &any * &(&in_or_dom + &waiting[c]);
            has_in_child = &(&has_in_child * &in_or_dom) + &(&no_in_child * &in_set[c]);
            no_in_child = &no_in_child * &dominated[c];
        }
        in_set[v] = &any * &x;
        dominated[v] = has_in_child;
        waiting[v] = no_in_child;
    }
    &in_set[0] + &dominated[0]
}

/// Some `(u, v)`, `u ≠ v`, with `N[v] ⊆ N[u]`, preferring the largest `deg(u)`.
pub fn find_nested_pair(g: &Graph) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.order() {
        for &u in g.neighbors(v) {
            if g.closed_nbhd_nested(v, u) && best.is_none_or(|(b, _)| g.degree(u) > g.degree(b)) {
                best = Some((u, v));
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum CacheKey {
    Canonical(CanonicalCode),
    Labeled(Graph),
}

fn cache_key(g: &Graph) -> CacheKey {
    if g.order() <= GENERAL_CANON_GUARD {
        CacheKey::Canonical(canonical_code(g).expect("order within guard"))
    } else {
        CacheKey::Labeled(g.clone())
    }
}

/// Polynomial engine with a per-instance LRU memo.
///
/// Not `Sync`; concurrent workers each own one (see [`with_default_engine`]).
/// The cache affects speed only.
pub struct DomEngine {
    brute_guard: usize,
    capacity: usize,
    cache: RefCell<LruCache<CacheKey, DomPolynomial>>,
}

impl Default for DomEngine {
    fn default() -> Self {
        DomEngine::new(DEFAULT_BRUTE_GUARD, DEFAULT_CACHE_CAPACITY)
    }
}

impl DomEngine {
    pub fn new(brute_guard: usize, cache_capacity: usize) -> Self {
        // Unbounded storage with a manual cap: `LruCache::new` reserves the
        // full capacity up front.
        DomEngine {
            brute_guard,
            capacity: cache_capacity.max(1),
            cache: RefCell::new(LruCache::unbounded()),
        }
    }

    pub fn brute_guard(&self) -> usize {
        self.brute_guard
    }

    pub fn cache_len(&self) -> usize {
        self.cache.borrow().len()
    }

    pub fn compute(&self, g: &Graph) -> Result<DomPolynomial> {
        let mut acc = DomPolynomial::one();
        for (component, _) in g.components() {
            acc = &acc * &self.compute_connected(&component)?;
        }
        Ok(acc)
    }

    fn compute_connected(&self, g: &Graph) -> Result<DomPolynomial> {
        if g.is_forest() {
            return Ok(tree_poly(g));
        }
        let key = cache_key(g);
        if let Some(p) = self.cache.borrow_mut().get(&key) {
            return Ok(p.clone());
        }
        let poly = match find_nested_pair(g) {
            Some((u, _)) => {
                let contracted = self.compute(&g.contract(u)?)?;
                let (minus_u, _) = g.delete_vertices([u])?;
                let (minus_nbhd, _) = g.delete_closed_neighborhood(u)?;
                let rest = self.compute(&minus_nbhd)?;
                &(&contracted + &rest).shift(1) + &self.compute(&minus_u)?
            }
            None if g.order() <= self.brute_guard => brute_force_with_guard(g, self.brute_guard)?,
            None => {
                return Err(Error::Intractable {
                    order: g.order(),
                    guard: self.brute_guard,
                })
            }
        };
        let mut cache = self.cache.borrow_mut();
        cache.put(key, poly.clone());
        if cache.len() > self.capacity {
            cache.pop_lru();
        }
        Ok(poly)
    }

    pub fn avd(&self, g: &Graph) -> Result<Rational> {
        Ok(self.compute(g)?.eval_pair().avd())
    }

    pub fn gamma(&self, g: &Graph) -> Result<usize> {
        Ok(self
            .compute(g)?
            .lowest_term()
            .expect("domination polynomials are nonzero"))
    }
}

thread_local! {
    static DEFAULT_ENGINE: DomEngine = DomEngine::default();
}

/// Runs `f` with this thread's default engine.
pub fn with_default_engine<R>(f: impl FnOnce(&DomEngine) -> R) -> R {
    DEFAULT_ENGINE.with(f)
}

pub fn compute(g: &Graph) -> Result<DomPolynomial> {
    with_default_engine(|e| e.compute(g))
}

pub fn avd(g: &Graph) -> Result<Rational> {
    with_default_engine(|e| e.avd(g))
}

pub fn gamma(g: &Graph) -> Result<usize> {
    with_default_engine(|e| e.gamma(g))
}

fn vertex_mask(g: &Graph, set: &[VertexId]) -> Result<u64> {
    set.iter().try_fold(0u64, |m, &VertexId(v)| {
        if v < g.order() {
            Ok(m | 1 << v)
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            })
        }
    })
}

/// Number of dominating sets of `g` disjoint from `avoid`.
pub fn count_dominating_avoiding(g: &Graph, avoid: &[VertexId]) -> Result<BigUint> {
    let masks = brute_masks(g, DEFAULT_BRUTE_GUARD)?;
    let avoid = vertex_mask(g, avoid)?;
    Ok(count_by_size(&masks, 0, avoid)
        .into_iter()
        .map(BigUint::from)
        .sum())
}

/// Dominating sets split by whether they contain `u`: `(with u, without u)`.
pub fn split_by_vertex(g: &Graph, u: VertexId) -> Result<(DomPolynomial, DomPolynomial)> {
    let masks = brute_masks(g, DEFAULT_BRUTE_GUARD)?;
    let bit = vertex_mask(g, &[u])?;
    Ok((
        DomPolynomial::from_counts(count_by_size(&masks, bit, 0)),
        DomPolynomial::from_counts(count_by_size(&masks, 0, bit)),
    ))
}
