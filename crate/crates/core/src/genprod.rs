//! The generalized product group on G x G, its transversals, and the
//! gyrotransversal criterion.
//!
//! Pairs are indexed `a * |G| + x`. The pair multiplication combines a
//! conjugation of the first factor's second coordinate, a commutator-style
//! correction in the first coordinate, and the undeformed transversal
//! operation in the second:
//!
//! ```text
//! (a, x) . (b, y) = (K(xc, y^-1) b a,  y^-1 xc y^2)    with xc = b x b^-1
//! ```
//!
//! where `K(u, v) = v u v^-1 u^-1`. Word order here mirrors the usual
//! right-to-left composition because this crate composes left-to-right; the
//! convention test below pins the choice by checking group axioms under
//! both bracket arrangements. The identity is `(1, 1)`, the inverse of
//! `(a, x)` is `(a^-1, a^-1 x^-1 a)`, and the right cosets of
//! `H = G x {1}` are indexed by the second coordinate.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::loops::base_op;

/// Default cap on the number of pairs (|G|^2).
pub const DEFAULT_PAIR_CAP: usize = 1024;
/// Full cubic associativity checking up to this many pairs.
pub const FULL_ASSOC_LIMIT: usize = 216;
/// Sample size for randomized associativity beyond [`FULL_ASSOC_LIMIT`].
pub const ASSOC_SAMPLES: usize = 1_000_000;
/// Seed for the sampled associativity check.
pub const DEFAULT_SEED: u64 = 0x67790;

/// How thoroughly construction verifies the group axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Full cubic check regardless of size.
    Exhaustive,
    /// Full up to [`FULL_ASSOC_LIMIT`] pairs, seeded sampling beyond.
    Auto { seed: u64 },
}

impl Default for VerifyMode {
    fn default() -> Self {
        VerifyMode::Auto { seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bracket {
    /// `K(u, v) = v u v^-1 u^-1`
    VuVU,
    /// `K(u, v) = v^-1 u^-1 v u`; rejected by the convention test, kept so
    /// the test can demonstrate the rejection
    #[cfg_attr(not(test), allow(dead_code))]
    VUvu,
}

/// The group of pairs `(a, x)` over a base group.
#[derive(Debug, Clone)]
pub struct GenProduct {
    base: Arc<FiniteGroup>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

impl GenProduct {
    /// Builds and verifies the pair group. Verification failures abort
    /// construction: they signal a wrong convention, never a usable result.
    pub fn build(base: Arc<FiniteGroup>, cap: usize, mode: VerifyMode) -> Result<Self> {
        Self::build_with_bracket(base, cap, mode, Bracket::VuVU)
    }

    fn build_with_bracket(
        base: Arc<FiniteGroup>,
        cap: usize,
        mode: VerifyMode,
        bracket: Bracket,
    ) -> Result<Self> {
        let n = base.order();
        let pairs = n * n;
        if pairs > cap {
            return Err(Error::SizeCapExceeded {
                what: "generalized product",
                size: pairs,
                cap,
            });
        }

        let mut mul = vec![vec![0usize; pairs]; pairs];
        for a in 0..n {
            for x in 0..n {
                let p = a * n + x;
                for b in 0..n {
                    let xc = base.mul(base.mul(b, x), base.inv(b));
                    for y in 0..n {
                        let u = xc;
                        let v = base.inv(y);
                        let k = match bracket {
                            Bracket::VuVU => base.mul(
                                base.mul(base.mul(v, u), base.inv(v)),
                                base.inv(u),
                            ),
                            Bracket::VUvu => base.mul(
                                base.mul(base.mul(base.inv(v), base.inv(u)), v),
                                u,
                            ),
                        };
                        let first = base.mul(base.mul(k, b), a);
                        let second = base_op(&base, xc, y);
                        mul[p][b * n + y] = first * n + second;
                    }
                }
            }
        }

        // inverse of (a, x) is (a^-1, a^-1 x^-1 a); verified below
        let inv: Vec<usize> = (0..pairs)
            .map(|p| {
                let (a, x) = (p / n, p % n);
                base.inv(a) * n + base.conjugate(base.inv(x), a)
            })
            .collect();

        let product = GenProduct {
            base,
            mul,
            inv,
            identity: 0,
        };
        product.verify(mode)?;
        Ok(product)
    }

    fn verify(&self, mode: VerifyMode) -> Result<()> {
        let pairs = self.mul.len();
        let e = self.identity;
        for p in 0..pairs {
            if self.mul[e][p] != p || self.mul[p][e] != p {
                return Err(Error::AxiomFailure(format!(
                    "pair identity fails at {:?}",
                    self.split(p)
                )));
            }
            if self.mul[p][self.inv[p]] != e || self.mul[self.inv[p]][p] != e {
                return Err(Error::AxiomFailure(format!(
                    "pair inverse formula fails at {:?}",
                    self.split(p)
                )));
            }
        }
        // right cosets of G x {1} must be indexed by the second coordinate
        let n = self.base.order();
        for p in 0..pairs {
            for h in 0..n {
                if self.mul[h * n][p] % n != p % n {
                    return Err(Error::AxiomFailure(
                        "cosets of G x {1} not indexed by second coordinate".to_string(),
                    ));
                }
            }
        }
        let full = matches!(mode, VerifyMode::Exhaustive) || pairs <= FULL_ASSOC_LIMIT;
        if full {
            for p in 0..pairs {
                for q in 0..pairs {
                    for r in 0..pairs {
                        if self.mul[self.mul[p][q]][r] != self.mul[p][self.mul[q][r]] {
                            return Err(Error::AxiomFailure(format!(
                                "associativity fails at ({p}, {q}, {r})"
                            )));
                        }
                    }
                }
            }
        } else {
            let seed = match mode {
                VerifyMode::Auto { seed } => seed,
                VerifyMode::Exhaustive => unreachable!(),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..ASSOC_SAMPLES {
                let p = rng.gen_range(0..pairs);
                let q = rng.gen_range(0..pairs);
                let r = rng.gen_range(0..pairs);
                if self.mul[self.mul[p][q]][r] != self.mul[p][self.mul[q][r]] {
                    return Err(Error::AxiomFailure(format!(
                        "associativity fails at sampled ({p}, {q}, {r})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn pair(&self, a: usize, x: usize) -> usize {
        a * self.base.order() + x
    }

    pub fn split(&self, p: usize) -> (usize, usize) {
        let n = self.base.order();
        (p / n, p % n)
    }

    pub fn mul(&self, p: usize, q: usize) -> usize {
        self.mul[p][q]
    }

    pub fn inv(&self, p: usize) -> usize {
        self.inv[p]
    }

    /// `h . p . h^-1` for `h` in the subgroup `G x {1}`.
    pub fn conjugate_by_subgroup(&self, p: usize, h: usize) -> usize {
        let hp = self.pair(h, self.base.identity());
        self.mul[self.mul[hp][p]][self.inv[hp]]
    }
}

/// A right transversal `{(g(x), x)}` of `G x {1}`, one member per coset.
#[derive(Debug, Clone)]
pub struct Transversal {
    product: Arc<GenProduct>,
    g: Vec<usize>,
    members: Vec<usize>, // pair index per second coordinate
}

impl Transversal {
    pub fn product(&self) -> &Arc<GenProduct> {
        &self.product
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn g(&self) -> &[usize] {
        &self.g
    }

    pub fn contains(&self, p: usize) -> bool {
        let (_, x) = self.product.split(p);
        self.members[x] == p
    }
}

/// Builds the transversal `{(g(x), x) : x in G}`. Any `g` fixing the
/// identity works; the second coordinates exhaust the cosets by
/// construction.
pub fn embed_transversal(product: &Arc<GenProduct>, g: &[usize]) -> Result<Transversal> {
    let base = product.base();
    let n = base.order();
    if g.len() != n {
        return Err(Error::InvalidClassFunction(format!(
            "map has {} values for group order {}",
            g.len(),
            n
        )));
    }
    if g[base.identity()] != base.identity() {
        return Err(Error::MapDoesNotFixIdentity);
    }
    if let Some(&bad) = g.iter().find(|&&v| v >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            order: n,
        });
    }
    let members: Vec<usize> = (0..n).map(|x| product.pair(g[x], x)).collect();
    Ok(Transversal {
        product: product.clone(),
        g: g.to_vec(),
        members,
    })
}

/// Why a transversal fails to be a gyrotransversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransversalFailure {
    /// The inverse of the member over `x` escapes the member set.
    InverseEscapes { x: usize },
    /// Conjugating the member over `x` by `(h, 1)` escapes the member set.
    ConjugateEscapes { x: usize, h: usize },
}

/// Checks closure of the member set under inversion and under conjugation
/// by every element of `G x {1}`.
pub fn is_gyrotransversal(t: &Transversal) -> std::result::Result<(), TransversalFailure> {
    let product = t.product();
    let n = product.base().order();
    for x in 0..n {
        if !t.contains(product.inv(t.members[x])) {
            return Err(TransversalFailure::InverseEscapes { x });
        }
    }
    for x in 0..n {
        for h in 0..n {
            if !t.contains(product.conjugate_by_subgroup(t.members[x], h)) {
                return Err(TransversalFailure::ConjugateEscapes { x, h });
            }
        }
    }
    Ok(())
}

/// Why a map fails the gyrotransversal criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaFailure {
    /// `g(x^-1) != g(x)^-1`.
    Inversion { x: usize },
    /// `g(h^-1 x h) != h^-1 g(x) h`.
    Equivariance { x: usize, h: usize },
}

impl LemmaFailure {
    pub fn describe(&self, group: &FiniteGroup) -> String {
        match self {
            LemmaFailure::Inversion { x } => {
                format!("g({}^-1) != g({})^-1", group.element(*x), group.element(*x))
            }
            LemmaFailure::Equivariance { x, h } => format!(
                "g(h^-1 x h) != h^-1 g(x) h at x = {}, h = {}",
                group.element(*x),
                group.element(*h)
            ),
        }
    }
}

/// The two-condition criterion equivalent to `{(g(x), x)}` being a
/// gyrotransversal: `g(x^-1) = g(x)^-1` and `g(h^-1 x h) = h^-1 g(x) h`.
pub fn lemma_criterion(
    group: &Arc<FiniteGroup>,
    g: &[usize],
) -> std::result::Result<(), LemmaFailure> {
    let n = group.order();
    assert_eq!(g.len(), n, "one value per element");
    for x in 0..n {
        if g[group.inv(x)] != group.inv(g[x]) {
            return Err(LemmaFailure::Inversion { x });
        }
    }
    for x in 0..n {
        for h in 0..n {
            if g[group.conjugate(x, h)] != group.conjugate(g[x], h) {
                return Err(LemmaFailure::Equivariance { x, h });
            }
        }
    }
    Ok(())
}
