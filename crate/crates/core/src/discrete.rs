//! Disentropy functionals on discrete probability distributions.
//!
//! The disentropy of a distribution is `D_q = Σ p_i^q W_q(p_i)` for the
//! Tsallis family, `Σ p_i R_2(p_i)` for the Shannon-side family, and
//! `Σ p_i W_κ(p_i)` for the Kaniadakis family. It is maximal at a delta
//! distribution (`W(1)`-type value) and minimal at the uniform one, so the
//! normalized form subtracts the uniform floor.

use crate::error::{Error, Result};
use crate::special::{exp_kappa, lambert_w, ln_q, r_lambda, wk, wq, BranchId, DeformationParams};

/// Which disentropy family a functional evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Family {
    /// `Σ p^q W_q(p)`, dual of the Tsallis entropy.
    #[default]
    TsallisQ,
    /// `Σ p R_2(p)`, dual of the base-2 Shannon entropy.
    ShannonR2,
    /// `Σ p W_κ(p)`.
    Kaniadakis,
}

/// A nonnegative, normalized weight vector over a finite alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist {
    weights: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl ProbDist {
    /// Validate and wrap a weight vector. Weights must be nonnegative and
    /// sum to 1 within `1e-12`.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("empty weight vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!("bad weight {w}")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(Self {
            weights,
            labels: None,
        })
    }

    /// Normalize an arbitrary nonnegative weight vector.
    pub fn from_weights(raw: &[f64]) -> Result<Self> {
        let total: f64 = raw.iter().sum();
        if !(total > 0.0) {
            return Err(Error::InvalidDistribution("zero total weight".into()));
        }
        Self::new(raw.iter().map(|w| w / total).collect())
    }

    /// Attach symbol labels.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.weights.len() {
            return Err(Error::InvalidDistribution(
                "label count does not match support".into(),
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Uniform distribution over `k` symbols.
    pub fn uniform(k: usize) -> Self {
        Self {
            weights: vec![1.0 / k as f64; k],
            labels: None,
        }
    }

    /// Delta distribution on symbol `idx` of a `k`-symbol alphabet.
    pub fn delta(k: usize, idx: usize) -> Self {
        let mut w = vec![0.0; k];
        w[idx] = 1.0;
        Self {
            weights: w,
            labels: None,
        }
    }

    /// Poisson weights on the fixed support `0..k`, renormalized. The
    /// discarded tail mass must be below `1e-9` or the support is too short.
    pub fn poisson(lambda: f64, k: usize) -> Result<Self> {
        if !(lambda > 0.0) || k < 2 {
            return Err(Error::OutOfRange(format!(
                "poisson needs lambda > 0 and k >= 2, got {lambda}, {k}"
            )));
        }
        let mut w = Vec::with_capacity(k);
        let mut term = (-lambda).exp();
        let mut mass = 0.0;
        for n in 0..k {
            if n > 0 {
                term *= lambda / n as f64;
            }
            w.push(term);
            mass += term;
        }
        if 1.0 - mass > 1e-9 {
            return Err(Error::Truncation(format!(
                "poisson tail mass {:.3e} at support {k}",
                1.0 - mass
            )));
        }
        Self::from_weights(&w)
    }

    /// Smallest support that brings the Poisson tail mass below `tail`.
    pub fn poisson_support(lambda: f64, tail: f64) -> usize {
        let mut term = (-lambda).exp();
        let mut mass = term;
        let mut n = 1;
        while 1.0 - mass > tail && n < 4096 {
            term *= lambda / n as f64;
            mass += term;
            n += 1;
        }
        n
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Support size `K`.
    pub fn support(&self) -> usize {
        self.weights.len()
    }
}

/// Joint weights over a `K x J` product alphabet, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDist {
    m: Vec<f64>,
    k: usize,
    j: usize,
}

impl JointDist {
    pub fn new(m: Vec<f64>, k: usize, j: usize) -> Result<Self> {
        if m.len() != k * j || k == 0 || j == 0 {
            return Err(Error::InvalidDistribution("joint shape mismatch".into()));
        }
        if let Some(w) = m.iter().find(|w| !w.is_finite() || **w < 0.0) {
            return Err(Error::InvalidDistribution(format!("bad joint weight {w}")));
        }
        let total: f64 = m.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidDistribution(format!(
                "joint weights sum to {total}"
            )));
        }
        Ok(Self { m, k, j })
    }

    /// Product of two independent marginals.
    pub fn product(px: &ProbDist, py: &ProbDist) -> Self {
        let k = px.support();
        let j = py.support();
        let mut m = Vec::with_capacity(k * j);
        for a in px.weights() {
            for b in py.weights() {
                m.push(a * b);
            }
        }
        Self { m, k, j }
    }

    pub fn entries(&self) -> &[f64] {
        &self.m
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.k, self.j)
    }

    /// Marginal over the row variable X.
    pub fn marginal_x(&self) -> ProbDist {
        let mut w = vec![0.0; self.k];
        for a in 0..self.k {
            for b in 0..self.j {
                w[a] += self.m[a * self.j + b];
            }
        }
        ProbDist {
            weights: w,
            labels: None,
        }
    }

    /// Marginal over the column variable Y.
    pub fn marginal_y(&self) -> ProbDist {
        let mut w = vec![0.0; self.j];
        for a in 0..self.k {
            for b in 0..self.j {
                w[b] += self.m[a * self.j + b];
            }
        }
        ProbDist {
            weights: w,
            labels: None,
        }
    }
}

/// Precomputed normalization floor/ceiling for a family at support `K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizationContext {
    pub k: usize,
    pub d_min: f64,
    pub d_max: f64,
}

impl NormalizationContext {
    /// Build the context for a support of `k` symbols.
    pub fn new(k: usize, params: &DeformationParams, family: Family) -> Result<Self> {
        if k == 0 {
            return Err(Error::DegenerateSupport("empty support".into()));
        }
        let uniform = ProbDist::uniform(k);
        Ok(Self {
            k,
            d_min: disentropy(&uniform, params, family)?,
            d_max: family_max(params, family)?,
        })
    }
}

/// Family value at a delta distribution: `W_q(1)`, `R_2(1)` or `W_κ(1)`.
pub fn family_max(params: &DeformationParams, family: Family) -> Result<f64> {
    match family {
        Family::TsallisQ => wq(1.0, params.q, BranchId::Principal),
        Family::ShannonR2 => r_lambda(1.0, 2.0, BranchId::Principal),
        Family::Kaniadakis => wk(1.0, params.kappa, BranchId::Principal),
    }
}

/// Per-symbol disinformation `W(p)` in the selected family.
fn disinformation(p: f64, params: &DeformationParams, family: Family) -> Result<f64> {
    match family {
        Family::TsallisQ => wq(p, params.q, BranchId::Principal),
        Family::ShannonR2 => r_lambda(p, 2.0, BranchId::Principal),
        Family::Kaniadakis => wk(p, params.kappa, BranchId::Principal),
    }
}

/// Weight prefactor of a term: `p^q` for the Tsallis family, `p` otherwise.
fn term_weight(p: f64, params: &DeformationParams, family: Family) -> f64 {
    match family {
        Family::TsallisQ => p.powf(params.q),
        Family::ShannonR2 | Family::Kaniadakis => p,
    }
}

/// Disentropy of a distribution in the selected family.
///
/// Zero-probability symbols contribute nothing (`W(0) = 0`).
pub fn disentropy(p: &ProbDist, params: &DeformationParams, family: Family) -> Result<f64> {
    let mut acc = 0.0;
    for &pi in p.weights() {
        if pi > 0.0 {
            acc += term_weight(pi, params, family) * disinformation(pi, params, family)?;
        }
    }
    Ok(acc)
}

/// Map a disentropy value to `[0, 1]` between the uniform floor and the
/// delta ceiling of its family.
pub fn normalize_disentropy(d: f64, ctx: &NormalizationContext) -> Result<f64> {
    let span = ctx.d_max - ctx.d_min;
    if ctx.k < 2 || span <= 0.0 {
        return Err(Error::DegenerateSupport(format!(
            "normalization span {span} at K = {}",
            ctx.k
        )));
    }
    Ok(((d - ctx.d_min) / span).clamp(0.0, 1.0))
}

/// Disentropy of the joint distribution, `Σ p(x,y)^q W_q(p(x,y))`.
pub fn joint_disentropy(j: &JointDist, params: &DeformationParams) -> Result<f64> {
    let mut acc = 0.0;
    for &pij in j.entries() {
        if pij > 0.0 {
            acc += pij.powf(params.q) * wq(pij, params.q, BranchId::Principal)?;
        }
    }
    Ok(acc)
}

/// Mutual disentropy `D_q(X:Y) = D_q(X) + D_q(Y) - D_q(X,Y)`.
pub fn mutual_disentropy(j: &JointDist, params: &DeformationParams) -> Result<f64> {
    let dx = disentropy(&j.marginal_x(), params, Family::TsallisQ)?;
    let dy = disentropy(&j.marginal_y(), params, Family::TsallisQ)?;
    Ok(dx + dy - joint_disentropy(j, params)?)
}

/// Conditioning direction for [`conditional_disentropy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondDirection {
    /// `D_q(X|Y) = D_q(Y) - D_q(X,Y)`, as defined.
    XGivenY,
    /// `D_q(Y|X) = D_q(X) - D_q(X,Y)`.
    YGivenX,
}

/// Conditional disentropy, implemented exactly as defined (conditioning
/// subtracts the joint from the *conditioning* variable's marginal); the
/// value may be negative.
pub fn conditional_disentropy(
    j: &JointDist,
    params: &DeformationParams,
    direction: CondDirection,
) -> Result<f64> {
    let marginal = match direction {
        CondDirection::XGivenY => j.marginal_y(),
        CondDirection::YGivenX => j.marginal_x(),
    };
    let dm = disentropy(&marginal, params, Family::TsallisQ)?;
    Ok(dm - joint_disentropy(j, params)?)
}

/// The four relative-disentropy kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelVariant {
    /// `Σ p^q |W_q(p) - W_q(t)|`
    AbsDiff,
    /// `Σ p^q (W_q(p) - W_q(t))`
    SignedDiff,
    /// `Σ p^q W_q(p - t)`; may be negative and may leave the real domain.
    OfDiff,
    /// `Σ p^q W_q(|p - t|)`
    OfAbsDiff,
}

/// Relative disentropy between two distributions of equal support.
pub fn relative_disentropy(
    p: &ProbDist,
    t: &ProbDist,
    params: &DeformationParams,
    variant: RelVariant,
) -> Result<f64> {
    if p.support() != t.support() {
        return Err(Error::InvalidDistribution(format!(
            "support mismatch {} vs {}",
            p.support(),
            t.support()
        )));
    }
    let q = params.q;
    let mut acc = 0.0;
    for (&pk, &tk) in p.weights().iter().zip(t.weights()) {
        if pk <= 0.0 {
            continue;
        }
        let w = pk.powf(q);
        let term = match variant {
            RelVariant::AbsDiff => {
                (wq(pk, q, BranchId::Principal)? - wq(tk, q, BranchId::Principal)?).abs()
            }
            RelVariant::SignedDiff => {
                wq(pk, q, BranchId::Principal)? - wq(tk, q, BranchId::Principal)?
            }
            RelVariant::OfDiff => wq(pk - tk, q, BranchId::Principal)?,
            RelVariant::OfAbsDiff => wq((pk - tk).abs(), q, BranchId::Principal)?,
        };
        acc += w * term;
    }
    Ok(acc)
}

/// Split the Tsallis entropy into disentropy and intrinsic entropy.
///
/// Returns `(s_q, d_q, s_int)` with `s_q = -Σ p^q ln_q p`,
/// `d_q = Σ p^q W_q(p)` and `s_int = -Σ p^q ln_q W_q(p)`. They satisfy
/// `s_q = -d_q + s_int - (1-q) Σ p^q W_q(p) ln_q W_q(p)`, which reduces to
/// `S = S_int - D` at `q = 1`. Requires strictly positive weights.
pub fn entropy_decomposition(p: &ProbDist, q: f64) -> Result<(f64, f64, f64)> {
    let mut s_q = 0.0;
    let mut d_q = 0.0;
    let mut s_int = 0.0;
    for &pi in p.weights() {
        if !(pi > 0.0) {
            return Err(Error::Domain(
                "entropy_decomposition requires positive weights; strip zeros first".into(),
            ));
        }
        let w = wq(pi, q, BranchId::Principal)?;
        let pw = pi.powf(q);
        s_q -= pw * ln_q(pi, q)?;
        d_q += pw * w;
        s_int -= pw * ln_q(w, q)?;
    }
    Ok((s_q, d_q, s_int))
}

/// Disentropic uncertainty check: `D_q(X) + D_q(Y) <= 2 W_q(1)`.
pub fn uncertainty_check(
    px: &ProbDist,
    py: &ProbDist,
    params: &DeformationParams,
) -> Result<(f64, f64, bool)> {
    let sum =
        disentropy(px, params, Family::TsallisQ)? + disentropy(py, params, Family::TsallisQ)?;
    let bound = 2.0 * wq(1.0, params.q, BranchId::Principal)?;
    Ok((sum, bound, sum <= bound + 1e-12))
}

/// Normalized entropy, normalized disentropy, and their difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomnessReport {
    /// Tsallis entropy over its maximum `ln_q K`, in `[0, 1]`.
    pub s_norm: f64,
    /// Normalized disentropy, in `[0, 1]`.
    pub d_norm: f64,
    /// Degree of randomness `r = s_norm - d_norm`, in `[-1, 1]`.
    pub r: f64,
}

/// Tsallis entropy `S_q = (1 - Σ p^q)/(q - 1)`, natural log at `q = 1`.
pub fn tsallis_entropy(p: &ProbDist, q: f64) -> f64 {
    if (q - 1.0).abs() < 1e-12 {
        -p.weights()
            .iter()
            .filter(|&&pi| pi > 0.0)
            .map(|&pi| pi * pi.ln())
            .sum::<f64>()
    } else {
        let sum: f64 = p
            .weights()
            .iter()
            .filter(|&&pi| pi > 0.0)
            .map(|&pi| pi.powf(q))
            .sum();
        (1.0 - sum) / (q - 1.0)
    }
}

/// Degree of randomness: normalized entropy minus normalized disentropy.
///
/// A delta distribution scores `-1`, the uniform one `+1`.
pub fn degree_of_randomness(
    p: &ProbDist,
    q: f64,
    ctx: &NormalizationContext,
) -> Result<RandomnessReport> {
    if ctx.k < 2 {
        return Err(Error::DegenerateSupport(format!("K = {}", ctx.k)));
    }
    let params = DeformationParams::tsallis(q);
    let s_max = if (q - 1.0).abs() < 1e-12 {
        (ctx.k as f64).ln()
    } else {
        ln_q(ctx.k as f64, q)?
    };
    let s_norm = tsallis_entropy(p, q) / s_max;
    let d = disentropy(p, &params, Family::TsallisQ)?;
    let d_norm = normalize_disentropy(d, ctx)?;
    Ok(RandomnessReport {
        s_norm,
        d_norm,
        r: s_norm - d_norm,
    })
}

/// Kaniadakis disentropy `Σ p W_κ(p)`.
pub fn kaniadakis_disentropy(p: &ProbDist, kappa: f64) -> Result<f64> {
    let _ = exp_kappa(0.0, kappa)?; // validates kappa
    let mut acc = 0.0;
    for &pi in p.weights() {
        if pi > 0.0 {
            acc += pi * wk(pi, kappa, BranchId::Principal)?;
        }
    }
    Ok(acc)
}

/// Classical Lambert disentropy `Σ p W(p)` (Tsallis family at `q = 1`).
pub fn lambert_disentropy(p: &ProbDist) -> Result<f64> {
    let mut acc = 0.0;
    for &pi in p.weights() {
        if pi > 0.0 {
            acc += pi * lambert_w(pi, BranchId::Principal)?;
        }
    }
    Ok(acc)
}
