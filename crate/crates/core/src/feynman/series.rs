//! Graph-sum and Wick-expansion series, tree sums, and the stationary
//! field.
//!
//! Two independent routes compute the same partition series: the graph
//! sum weights every isomorphism class by λ^{−χ}/|Aut| times its
//! tensor-network weight, while the Wick expansion integrates the
//! interaction exponential term by term over pairings and never touches
//! graph enumeration. Their exact agreement order by order is the
//! fundamental cross-check of this module.

use super::{factorial, CouplingSym, FeynmanError, FieldPolynomial, FormalSeries, Model, Monomial};
use crate::graph::enumerate::{enumerate_graphs, EnumerationOptions};
use crate::graph::{CombinatorialGraph, DecoratedGraph};
use crate::ratio;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Whether a Wick moment carries its λ^m factor (m = number of pairs).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    WithPower,
    Without,
}

/// All pairings (perfect matchings) of {0, .., n−1}; empty for odd n,
/// a single empty pairing for n = 0.
pub fn pairings(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n % 2 == 1 {
        return Vec::new();
    }
    fn go(pool: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if pool.is_empty() {
            out.push(cur.clone());
            return;
        }
        let first = pool.remove(0);
        for k in 0..pool.len() {
            let mate = pool.remove(k);
            cur.push((first, mate));
            go(pool, cur, out);
            cur.pop();
            pool.insert(k, mate);
        }
        pool.insert(0, first);
    }
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    go(&mut pool, &mut Vec::new(), &mut out);
    out
}

/// Σ over pairings of Π g^{a_i a_j}, as a plain rational. Zero for odd
/// index lists, one for the empty list.
pub fn wick_sum(indices: &[usize], model: &Model) -> BigRational {
    let mut total = BigRational::zero();
    for pairing in pairings(indices.len()) {
        let mut prod = BigRational::one();
        for (i, j) in pairing {
            prod *= model.metric_inv(indices[i], indices[j]);
        }
        total += prod;
    }
    total
}

/// Gaussian moment of a product of field coordinates: zero for an odd
/// number of insertions, otherwise λ^m Σ_pairings Π g^{a_i a_j}.
pub fn wick_moment(indices: &[usize], model: &Model, mode: LambdaMode) -> FormalSeries {
    let cap = 0;
    if indices.len() % 2 == 1 {
        return FormalSeries::zero(cap);
    }
    let m = (indices.len() / 2) as i64;
    let monomial = match mode {
        LambdaMode::WithPower => Monomial::lambda_power(m),
        LambdaMode::Without => Monomial::one(),
    };
    FormalSeries::from_term(monomial, wick_sum(indices, model), cap)
}

fn color_tuples(colors: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..colors).map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    out
}

/// Tensor-network weight of a graph: Σ over flag colorings of
/// Π_edges g^{colors} · Π_vertices C_{colors at the vertex}, with the
/// couplings kept as formal symbols. Tail colors are summed with no
/// metric factor. Colorings touching an absent coupling entry contribute
/// zero; a vertex valence above the model's largest coupling rank is an
/// error.
pub fn graph_weight(
    g: &CombinatorialGraph,
    model: &Model,
    weight_cap: u32,
) -> Result<FormalSeries, FeynmanError> {
    for v in g.vertices() {
        if g.valence(v) > model.max_rank() {
            return Err(FeynmanError::MissingCoupling { rank: g.valence(v) });
        }
    }
    let flags: Vec<_> = g.flags().cloned().collect();
    let index_of = |f: &crate::graph::FlagId| flags.iter().position(|x| x == f).unwrap();
    let mut out = FormalSeries::zero(weight_cap);
    'coloring: for u in color_tuples(model.color_count(), flags.len()) {
        let mut coeff = BigRational::one();
        for (f, p) in g.edges() {
            coeff *= model.metric_inv(u[index_of(&f)], u[index_of(&p)]);
        }
        if coeff.is_zero() {
            continue;
        }
        let mut mono = Monomial::one();
        for v in g.vertices() {
            let colors: Vec<usize> = g.flags_at(v).iter().map(|f| u[index_of(f)]).collect();
            let sym = CouplingSym::new(colors);
            if !model.coupling_supported(&sym) {
                continue 'coloring;
            }
            mono = mono.times(&Monomial::coupling(sym));
        }
        out.add_term(mono, coeff);
    }
    Ok(out)
}

fn graph_sum(
    model: &Model,
    max_weight: u32,
    class_cap: usize,
    keep: impl Fn(&CombinatorialGraph) -> bool,
) -> Result<FormalSeries, FeynmanError> {
    let opts = EnumerationOptions::new(max_weight as usize / 2).with_cap(class_cap);
    let supported = model.supported_ranks();
    let mut total = FormalSeries::zero(max_weight);
    for g in enumerate_graphs(&opts)? {
        if !keep(&g) {
            continue;
        }
        if g.vertices().any(|v| !supported.contains(&g.valence(v))) {
            continue; // some vertex has an identically-zero coupling tensor
        }
        let weight = graph_weight(&g, model, max_weight)?;
        if weight.is_zero() {
            continue;
        }
        let aut = crate::graph::canon::automorphism_count(&DecoratedGraph::bare(g.clone()));
        let coeff = BigRational::new(BigInt::one(), BigInt::from(aut));
        let chi = g.euler_characteristic();
        total = total.add(&weight.scale(&coeff).lambda_shift(-chi));
    }
    Ok(total)
}

/// Partition series as a sum over all isomorphism classes of tail-free
/// graphs: Σ λ^{−χ(τ)}/|Aut τ| · w(τ), truncated by coupling weight.
pub fn partition_series_graphs(
    model: &Model,
    max_weight: u32,
    class_cap: usize,
) -> Result<FormalSeries, FeynmanError> {
    graph_sum(model, max_weight, class_cap, |_| true)
}

/// Ordered tuples (k_1, .., k_N) with parts from `ranks`, sum ≤ bound.
fn rank_tuples(ranks: &[usize], len: usize, bound: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for prefix in rank_tuples(ranks, len - 1, bound) {
        let used: usize = prefix.iter().sum();
        for &r in ranks {
            if used + r <= bound {
                let mut t = prefix.clone();
                t.push(r);
                out.push(t);
            }
        }
    }
    out
}

/// Partition series by term-wise Gaussian integration of the interaction
/// exponential: Σ_N λ^{−N}/N! Σ_{k_1..k_N} Π 1/k_i! Σ_colorings
/// Π C · ⟨Π φ⟩. Independent of graph enumeration in every code path.
pub fn partition_series_wick(model: &Model, max_weight: u32) -> Result<FormalSeries, FeynmanError> {
    let mut total = FormalSeries::one(max_weight);
    let ranks: Vec<usize> = model.supported_ranks().into_iter().collect();
    if ranks.is_empty() {
        return Ok(total);
    }
    for n_vertices in 1..=max_weight as usize {
        let n_fact = factorial(n_vertices as u64);
        for ktuple in rank_tuples(&ranks, n_vertices, max_weight as usize) {
            let slots: usize = ktuple.iter().sum();
            if slots % 2 == 1 {
                continue; // odd moment vanishes
            }
            let mut k_facts = BigRational::one();
            for &k in &ktuple {
                k_facts *= factorial(k as u64);
            }
            let norm = (&n_fact * &k_facts).recip();
            'coloring: for coloring in color_tuples(model.color_count(), slots) {
                let mut mono = Monomial::one();
                let mut offset = 0;
                for &k in &ktuple {
                    let sym = CouplingSym::new(coloring[offset..offset + k].to_vec());
                    if !model.coupling_supported(&sym) {
                        continue 'coloring;
                    }
                    mono = mono.times(&Monomial::coupling(sym));
                    offset += k;
                }
                let moment = wick_sum(&coloring, model);
                if moment.is_zero() {
                    continue;
                }
                mono.lambda = slots as i64 / 2 - n_vertices as i64;
                total.add_term(mono, &norm * &moment);
            }
        }
    }
    Ok(total)
}

/// Graph sum restricted to connected non-empty graphs; equals the log of
/// the full partition series order by order.
pub fn connected_series(
    model: &Model,
    max_weight: u32,
    class_cap: usize,
) -> Result<FormalSeries, FeynmanError> {
    graph_sum(model, max_weight, class_cap, |g| {
        !g.is_empty() && g.classify().is_connected()
    })
}

/// Graph sum restricted to trees with at least one edge.
pub fn tree_series(
    model: &Model,
    max_weight: u32,
    class_cap: usize,
) -> Result<FormalSeries, FeynmanError> {
    graph_sum(model, max_weight, class_cap, |g| {
        g.edge_count() >= 1 && g.classify().is_tree()
    })
}

/// The action as a polynomial in the field coordinates:
/// −½ Σ g_{ab} φ^a φ^b + Σ_k 1/k! Σ C_{a_1..a_k} φ^{a_1}…φ^{a_k},
/// couplings formal, metric exact.
pub fn action_polynomial(model: &Model, cap: u32) -> FieldPolynomial {
    let mut s = FieldPolynomial::new();
    let half = ratio::frac(1, 2);
    for a in 0..model.color_count() {
        for b in a..model.color_count() {
            let factor = if a == b { &half } else { &BigRational::one() };
            let coeff = -(model.metric(a, b) * factor);
            s.add_term(vec![a, b], FormalSeries::from_term(Monomial::one(), coeff, cap));
        }
    }
    for (sym, _) in model.couplings() {
        // Σ over ordered tuples collapses to multiplicity factors:
        // (1/k!)·(k! / Π mult!) = 1 / Π mult!
        let mut denom = BigRational::one();
        let mut run = 1u64;
        for w in sym.colors().windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                denom *= factorial(run);
                run = 1;
            }
        }
        denom *= factorial(run);
        s.add_term(
            sym.colors().to_vec(),
            FormalSeries::from_term(Monomial::coupling(sym.clone()), denom.recip(), cap),
        );
    }
    s
}

/// The stationary field φ₀: the unique solution of ∂S/∂φ^a = 0 congruent
/// to C^a = Σ g^{ab} C_b modulo couplings of rank ≥ 2, computed by
/// fixed-point iteration truncated at the weight cap.
#[derive(Clone, Debug, PartialEq)]
pub struct StationaryPoint {
    pub components: Vec<FormalSeries>,
}

pub fn stationary_point(model: &Model, max_weight: u32) -> StationaryPoint {
    let colors = model.color_count();
    let mut phi: Vec<FormalSeries> = vec![FormalSeries::zero(max_weight); colors];
    // φ^a ← Σ_b g^{ab} Σ_k 1/(k−1)! Σ_{b_2..b_k} C_{b,b_2..b_k} φ^{b_2}…φ^{b_k}
    for _ in 0..=max_weight + 1 {
        let mut raw: Vec<FormalSeries> = vec![FormalSeries::zero(max_weight); colors];
        #[allow(clippy::needless_range_loop)]
        for b in 0..colors {
            for k in model.supported_ranks() {
                let scale = factorial(k as u64 - 1).recip();
                for tail in color_tuples(colors, k - 1) {
                    let mut key = vec![b];
                    key.extend_from_slice(&tail);
                    let sym = CouplingSym::new(key);
                    if !model.coupling_supported(&sym) {
                        continue;
                    }
                    let mut term = FormalSeries::from_term(
                        Monomial::coupling(sym),
                        scale.clone(),
                        max_weight,
                    );
                    for &c in &tail {
                        term = term.mul(&phi[c]);
                    }
                    raw[b] = raw[b].add(&term);
                }
            }
        }
        let next: Vec<FormalSeries> = (0..colors)
            .map(|a| {
                let mut s = FormalSeries::zero(max_weight);
                for (b, r) in raw.iter().enumerate() {
                    s = s.add(&r.scale(model.metric_inv(a, b)));
                }
                s
            })
            .collect();
        if next == phi {
            break;
        }
        phi = next;
    }
    StationaryPoint { components: phi }
}

/// Residual of the stationarity equations at a candidate field: the
/// vector of series ∂S/∂φ^a evaluated at φ, which must vanish to the
/// truncation order at φ₀.
pub fn stationary_residual(model: &Model, phi: &[FormalSeries], cap: u32) -> Vec<FormalSeries> {
    let action = action_polynomial(model, cap);
    (0..model.color_count())
        .map(|a| action.partial(a).eval(phi, cap))
        .collect()
}

/// Critical value S(φ₀) of the action.
pub fn action_value(model: &Model, phi: &[FormalSeries], cap: u32) -> FormalSeries {
    action_polynomial(model, cap).eval(phi, cap)
}

/// λ handling when comparing the tree series with the stationary data:
/// either keep the λ^{−χ} factors as written or collapse λ to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaConvention {
    AsWritten,
    AtOne,
}

/// Report for the tree-level identities: ∂Z/∂C_a = φ₀^a and Z = S(φ₀).
#[derive(Clone, Debug)]
pub struct TreeIdentityReport {
    pub convention: LambdaConvention,
    pub derivative_matches: bool,
    pub critical_value_matches: bool,
}

pub fn verify_tree_identities(
    model: &Model,
    max_weight: u32,
    class_cap: usize,
    convention: LambdaConvention,
) -> Result<TreeIdentityReport, FeynmanError> {
    let z = tree_series(model, max_weight, class_cap)?;
    let phi0 = stationary_point(model, max_weight);
    let normalize = |s: &FormalSeries| match convention {
        LambdaConvention::AsWritten => s.clone(),
        LambdaConvention::AtOne => s.at_lambda_one(),
    };
    // ∂Z/∂C_a drops one weight unit; compare below the cap.
    let derivative_matches = (0..model.color_count()).all(|a| {
        let dz = normalize(&z).d_coupling(&CouplingSym::new(vec![a]));
        let phi = normalize(&phi0.components[a]);
        truncate(&dz, max_weight - 1) == truncate(&phi, max_weight - 1)
    });
    let s_phi0 = action_value(model, &phi0.components, max_weight);
    let critical_value_matches = normalize(&z) == normalize(&s_phi0);
    Ok(TreeIdentityReport {
        convention,
        derivative_matches,
        critical_value_matches,
    })
}

fn truncate(s: &FormalSeries, cap: u32) -> FormalSeries {
    let mut out = FormalSeries::zero(cap);
    for (m, c) in s.terms() {
        out.add_term(m.clone(), c.clone());
    }
    out
}
