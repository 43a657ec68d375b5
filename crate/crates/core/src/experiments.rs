//! Explicit sequences of algebraic-unit polynomials whose zeros lie on a
//! preimage set `K = r^{-1}(E)`, and measurements of how fast their zero
//! measures approach the limiting measure of `K`.

use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homspace::{
    canonical_zeros, hom_height_with_zeros, is_generic, lemma41_check, lemma42_check, lift,
    zeros_by_direction, CircledSet, DiscreteMeasure2D, HomMap, Reduction, RobinFunctionK, C2,
};
use crate::planar::{
    height_with_zeros, sample_nu_k, DiscreteMeasure1D, MonicRationalMap, PlanarSet, ProbVector2,
};
use crate::polycore::IntPoly;

/// The base set `E` of capacity one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    /// `|w - c| = 1`
    Circle,
    /// `[c - 2, c + 2]`
    Interval4,
}

/// `r(z) = N(z) / z^j` over a base `E` centered at the integer `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitSequenceSpec {
    pub map: MonicRationalMap,
    pub base: BaseKind,
    pub center: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    numerator: Vec<i64>,
    pole_order: usize,
    base: BaseKind,
    #[serde(default)]
    center: i64,
}

impl UnitSequenceSpec {
    pub fn new(map: MonicRationalMap, base: BaseKind, center: i64) -> Self {
        UnitSequenceSpec { map, base, center }
    }

    /// `{"numerator":[c0,..,cn],"pole_order":j,"base":"circle"|"interval4","center":c}`
    pub fn from_json(text: &str) -> Result<Self> {
        let j: SpecJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("sequence spec: {e}")))?;
        let map = MonicRationalMap::new(IntPoly::from_i64(&j.numerator), j.pole_order)?;
        Ok(Self::new(map, j.base, j.center))
    }

    pub fn base_set(&self) -> PlanarSet {
        let c = self.center as f64;
        match self.base {
            BaseKind::Circle => PlanarSet::Circle {
                center: Complex64::new(c, 0.0),
                radius: 1.0,
            },
            BaseKind::Interval4 => PlanarSet::Interval { a: c - 2.0, b: c + 2.0 },
        }
    }

    /// `K = r^{-1}(E)`.
    pub fn set(&self) -> Result<PlanarSet> {
        PlanarSet::preimage(self.map.clone(), self.base_set())
    }

    /// `(j/n, (n-j)/n)`.
    pub fn vector(&self) -> ProbVector2 {
        let n = self.map.degree() as f64;
        let j = self.map.pole_order() as f64;
        ProbVector2 { s1: j / n, s2: (n - j) / n }
    }

    /// The `m` points of `E` whose preimages are the zeros of `p_m`: the
    /// `m`-th roots of unity shifted by `c`, or the Chebyshev nodes
    /// `c + 2 cos((2k+1) pi / 2m)`.
    pub fn base_points(&self, m: usize) -> Vec<Complex64> {
        let c = Complex64::new(self.center as f64, 0.0);
        (0..m)
            .map(|k| match self.base {
                BaseKind::Circle => c + Complex64::from_polar(1.0, TAU * k as f64 / m as f64),
                BaseKind::Interval4 => {
                    c + 2.0 * ((2 * k + 1) as f64 * PI / (2 * m) as f64).cos()
                }
            })
            .collect()
    }

    /// Position of a base point in `[0, 1]` under the equilibrium
    /// distribution function of `E`.
    fn base_cdf(&self, w: Complex64) -> f64 {
        let c = self.center as f64;
        match self.base {
            BaseKind::Circle => (w - c).arg().rem_euclid(TAU) / TAU,
            BaseKind::Interval4 => 0.5 + ((w.re - c) / 2.0).clamp(-1.0, 1.0).asin() / PI,
        }
    }
}

/// Monic Chebyshev polynomials `C_0 = 2`, `C_1 = y`, `C_{k+1} = y C_k - C_{k-1}`.
fn chebyshev_monic(m: usize) -> IntPoly {
    let y = IntPoly::monomial(BigInt::one(), 1);
    let mut prev = IntPoly::constant(BigInt::from(2));
    if m == 0 {
        return prev;
    }
    let mut cur = y.clone();
    for _ in 1..m {
        let next = &(&y * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `p_m`, monic with constant term `+-1` and degree `n m`, whose zeros are
/// the preimages of [`UnitSequenceSpec::base_points`].
///
/// Circle base: `(N - c z^j)^m - z^{jm}`. Interval base:
/// `z^{jm} q_m(r(z))` with `q_m(x) = C_m(x - c)`.
pub fn unit_poly(spec: &UnitSequenceSpec, m: usize) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::Domain("sequence index m must be positive".into()));
    }
    let n_poly = spec.map.numerator();
    let j = spec.map.pole_order();
    let c = BigInt::from(spec.center);
    let zj = IntPoly::monomial(BigInt::one(), j);
    match spec.base {
        BaseKind::Circle => {
            let shifted = n_poly - &zj.scale(&c);
            Ok(&shifted.pow(m) - &IntPoly::monomial(BigInt::one(), j * m))
        }
        BaseKind::Interval4 => {
            let q = chebyshev_monic(m).compose(&IntPoly::new(vec![-c, BigInt::one()]));
            let mut total = IntPoly::zero();
            let mut npow = IntPoly::one();
            for k in 0..=m {
                let term = npow.scale(&q.coeff(k)).shift(j * (m - k));
                total = &total + &term;
                npow = &npow * n_poly;
            }
            Ok(total)
        }
    }
}

/// Zeros of `p_m` from the `m` structured equations `N(z) - w z^j = 0`,
/// checked to be simple.
pub fn unit_zeros(spec: &UnitSequenceSpec, m: usize) -> Result<Vec<Complex64>> {
    let mut zeros = Vec::with_capacity(spec.map.degree() * m);
    for w in spec.base_points(m) {
        zeros.extend(spec.map.preimages(w)?);
    }
    for (i, a) in zeros.iter().enumerate() {
        if let Some(b) = zeros[i + 1..].iter().find(|b| (*a - **b).norm() <= 1e-9) {
            return Err(Error::RepeatedZero(format!("{a} ~ {b}")));
        }
    }
    Ok(zeros)
}

/// `nu_m`: weight `1 / deg p_m` at each zero.
pub fn zero_measure(spec: &UnitSequenceSpec, m: usize) -> Result<DiscreteMeasure1D> {
    DiscreteMeasure1D::uniform(unit_zeros(spec, m)?)
}

/// Kolmogorov-Smirnov distance of the image measure `r_* nu` from the
/// equilibrium distribution of the base.
pub fn ks_discrepancy(nu: &DiscreteMeasure1D, spec: &UnitSequenceSpec) -> f64 {
    let mut vals: Vec<(f64, f64)> = nu
        .points
        .iter()
        .zip(&nu.weights)
        .map(|(&z, &w)| (spec.base_cdf(spec.map.eval(z)), w))
        .collect();
    vals.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut below = 0.0;
    let mut worst: f64 = 0.0;
    let mut i = 0;
    while i < vals.len() {
        let u = vals[i].0;
        let mut mass = 0.0;
        while i < vals.len() && vals[i].0 == u {
            mass += vals[i].1;
            i += 1;
        }
        worst = worst.max((u - below).abs()).max((below + mass - u).abs());
        below += mass;
    }
    worst
}

/// Monte-Carlo reference for `nu_K`: per-draw group means of `z` and `z^2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentReference {
    pub mean1: Complex64,
    pub mean2: Complex64,
    /// Standard error of `mean1`.
    pub sigma1: f64,
    pub sigma2: f64,
    pub count: usize,
}

pub fn moment_reference(spec: &UnitSequenceSpec, count: usize, seed: u64) -> Result<MomentReference> {
    let k = spec.set()?;
    let sample = sample_nu_k(&k, &spec.vector(), count, seed)?;
    let n = spec.map.degree();
    let groups: Vec<(Complex64, Complex64)> = sample
        .points
        .chunks(n)
        .map(|g| {
            let m1 = g.iter().sum::<Complex64>() / n as f64;
            let m2 = g.iter().map(|z| z * z).sum::<Complex64>() / n as f64;
            (m1, m2)
        })
        .collect();
    let cnt = groups.len() as f64;
    let mean1 = groups.iter().map(|g| g.0).sum::<Complex64>() / cnt;
    let mean2 = groups.iter().map(|g| g.1).sum::<Complex64>() / cnt;
    let var1 = groups.iter().map(|g| (g.0 - mean1).norm_sqr()).sum::<f64>() / (cnt - 1.0);
    let var2 = groups.iter().map(|g| (g.1 - mean2).norm_sqr()).sum::<f64>() / (cnt - 1.0);
    Ok(MomentReference {
        mean1,
        mean2,
        sigma1: (var1 / cnt).sqrt(),
        sigma2: (var2 / cnt).sqrt(),
        count,
    })
}

/// KS distance plus moment errors against a Monte-Carlo reference.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub ks: f64,
    pub moment1_err: f64,
    pub moment2_err: f64,
}

pub fn discrepancy(nu: &DiscreteMeasure1D, spec: &UnitSequenceSpec, reference: &MomentReference) -> Discrepancy {
    let m1 = nu.mean();
    let m2: Complex64 = nu.points.iter().zip(&nu.weights).map(|(&z, &w)| z * z * w).sum();
    Discrepancy {
        ks: ks_discrepancy(nu, spec),
        moment1_err: (m1 - reference.mean1).norm(),
        moment2_err: (m2 - reference.mean2).norm(),
    }
}

/// Zero measures of `(z1^n - 1, z2^n - 1)` and `(z1^n, z2^n - 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolydiskSequence {
    /// All `n^2` zeros of the generic map, uniform weights.
    pub generic: DiscreteMeasure2D,
    /// One zero per direction class of the generic map, weight `1/n`.
    pub generic_selection: DiscreteMeasure2D,
    /// The non-generic map: atoms `(0, zeta)` of weight `1/n`.
    pub nongeneric: DiscreteMeasure2D,
}

pub fn mu_sequence_polydisk(n: usize) -> Result<PolydiskSequence> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let mut e0 = vec![BigInt::zero(); n + 1];
    let mut en = vec![BigInt::zero(); n + 1];
    e0[0] = BigInt::one();
    en[n] = BigInt::one();
    let minus = -BigInt::one();
    let generic = HomMap::new(n, en.clone(), e0.clone(), minus.clone(), minus.clone())?;
    let classes = zeros_by_direction(&generic)?;
    let all: Vec<C2> = classes.iter().flatten().copied().collect();
    let nongeneric = HomMap::new(n, en, e0, BigInt::zero(), minus)?;
    let ng_classes = zeros_by_direction(&nongeneric)?;
    Ok(PolydiskSequence {
        generic: DiscreteMeasure2D::uniform(all)?,
        generic_selection: DiscreteMeasure2D::selection(&classes)?,
        nongeneric: DiscreteMeasure2D::uniform(ng_classes[0].clone())?,
    })
}

/// One row of a convergence report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub m: usize,
    pub degree: usize,
    pub height_weighted: f64,
    pub lift_height: f64,
    pub ks_discrepancy: f64,
    pub moment1_err: f64,
    pub moment2_err: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub rows: Vec<ReportRow>,
    pub reference: MomentReference,
    /// KS column strictly decreasing in `m`.
    pub ks_decreasing: bool,
}

impl ConvergenceReport {
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("m,degree,height_weighted,lift_height,ks_discrepancy,moment1_err,moment2_err\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:e},{:e},{:e},{:e},{:e}\n",
                r.m, r.degree, r.height_weighted, r.lift_height, r.ks_discrepancy, r.moment1_err, r.moment2_err
            ));
        }
        out
    }
}

/// Sample size of the Monte-Carlo reference in [`run_report`].
pub const REFERENCE_COUNT: usize = 10_000;

/// One row of the report for a single `m`.
pub fn report_row(
    spec: &UnitSequenceSpec,
    m: usize,
    reference: &MomentReference,
    rf: &RobinFunctionK,
) -> Result<ReportRow> {
    let k = spec.set()?;
    let p = unit_poly(spec, m)?;
    let zeros = unit_zeros(spec, m)?;
    let h = height_with_zeros(&k, &p, &zeros)?;
    let jm = spec.map.pole_order() * m;
    let f = lift(&p, jm)?;
    let lifted: Vec<C2> = canonical_zeros(&f, &zeros)?.into_iter().flatten().collect();
    let lift_height = hom_height_with_zeros(&f, &CircledSet::Lifted(rf.clone()), &lifted)?;
    let nu = DiscreteMeasure1D::uniform(zeros)?;
    let disc = discrepancy(&nu, spec, reference);
    Ok(ReportRow {
        m,
        degree: p.degree().unwrap(),
        height_weighted: h.total,
        lift_height,
        ks_discrepancy: disc.ks,
        moment1_err: disc.moment1_err,
        moment2_err: disc.moment2_err,
    })
}

pub fn run_report(spec: &UnitSequenceSpec, m_list: &[usize], seed: u64) -> Result<ConvergenceReport> {
    let reference = moment_reference(spec, REFERENCE_COUNT, seed)?;
    let rf = RobinFunctionK::new(spec.set()?)?;
    let rows = m_list
        .iter()
        .map(|&m| report_row(spec, m, &reference, &rf))
        .collect::<Result<Vec<_>>>()?;
    let ks_decreasing = rows.windows(2).all(|w| w[1].ks_discrepancy < w[0].ks_discrepancy);
    Ok(ConvergenceReport {
        rows,
        reference,
        ks_decreasing,
    })
}

/// Tallies of the randomized checks of the wedge-product identity and
/// inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaSuiteReport {
    pub trials: usize,
    pub identity_pass: usize,
    pub inequality_pass: usize,
    pub max_identity_rel_diff: f64,
    pub min_inequality_slack: f64,
    pub canonical: usize,
    pub unimodular: usize,
    pub scaled: usize,
    pub summary: String,
}

/// Tolerance on `|lhs / rhs - 1|` for the identity.
pub const IDENTITY_TOLERANCE: f64 = 1e-8;

fn random_forms(rng: &mut ChaCha8Rng, d: usize, coef: i64) -> (Vec<i64>, Vec<i64>) {
    let mut draw = || (0..=d).map(|_| rng.gen_range(-coef..=coef)).collect::<Vec<_>>();
    (draw(), draw())
}

/// A random generic map of shape `(F1, F2 - 1)`, degree in `2..=max_degree`,
/// coefficients in `[-9, 9]`.
pub fn random_canonical_map(rng: &mut ChaCha8Rng, max_degree: usize) -> Result<HomMap> {
    loop {
        let d = rng.gen_range(2..=max_degree);
        let (h1, h2) = random_forms(rng, d, 9);
        let Ok(f) = HomMap::from_i64(d, &h1, &h2, 0, -1) else { continue };
        if is_generic(&f)? {
            return Ok(f);
        }
    }
}

/// A random generic map whose constants in `[-5, 5]^2` fall into the given
/// reduction branch.
pub fn random_map_in_branch(rng: &mut ChaCha8Rng, max_degree: usize, branch: Reduction) -> Result<HomMap> {
    loop {
        let (a1, a2) = match branch {
            Reduction::Canonical => (0, -1),
            _ => (rng.gen_range(-5..=5i64), rng.gen_range(-5..=5i64)),
        };
        if a1 == 0 && a2 == 0 {
            continue;
        }
        let g = num_integer::gcd(a1, a2);
        let fits = match branch {
            Reduction::Canonical => true,
            Reduction::Unimodular => g == 1 && (a1, a2) != (0, -1),
            Reduction::Scaled => g > 1,
        };
        if !fits {
            continue;
        }
        let d = rng.gen_range(2..=max_degree);
        let (h1, h2) = random_forms(rng, d, 9);
        let Ok(f) = HomMap::from_i64(d, &h1, &h2, a1, a2) else { continue };
        if is_generic(&f)? {
            return Ok(f);
        }
    }
}

/// Runs `trials` identity checks on canonical maps and `trials` inequality
/// checks cycling through the three reduction branches.
pub fn lemma_suite(trials: usize, max_degree: usize, seed: u64) -> Result<LemmaSuiteReport> {
    if max_degree < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: max_degree });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut identity_pass = 0;
    let mut max_rel = 0.0f64;
    for _ in 0..trials {
        let f = random_canonical_map(&mut rng, max_degree)?;
        let r = lemma41_check(&f)?;
        max_rel = max_rel.max(r.rel_diff);
        if r.rel_diff < IDENTITY_TOLERANCE {
            identity_pass += 1;
        }
    }
    let branches = [Reduction::Canonical, Reduction::Unimodular, Reduction::Scaled];
    let mut counts = [0usize; 3];
    let mut inequality_pass = 0;
    let mut min_slack = f64::INFINITY;
    for i in 0..trials {
        let f = random_map_in_branch(&mut rng, max_degree, branches[i % 3])?;
        let r = lemma42_check(&f)?;
        counts[branches.iter().position(|b| *b == r.branch).unwrap()] += 1;
        min_slack = min_slack.min(r.slack);
        if r.holds {
            inequality_pass += 1;
        }
    }
    Ok(LemmaSuiteReport {
        trials,
        identity_pass,
        inequality_pass,
        max_identity_rel_diff: max_rel,
        min_inequality_slack: min_slack,
        canonical: counts[0],
        unimodular: counts[1],
        scaled: counts[2],
        summary: format!(
            "{identity_pass}/{trials} identity pass, {inequality_pass}/{trials} inequality pass"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::roots;

    fn spec(base: BaseKind) -> UnitSequenceSpec {
        let map = MonicRationalMap::new(IntPoly::from_i64(&[-1, 1, 1]), 1).unwrap();
        UnitSequenceSpec::new(map, base, 0)
    }

    #[test]
    fn first_members() {
        assert_eq!(unit_poly(&spec(BaseKind::Circle), 1).unwrap(), IntPoly::from_i64(&[-1, 0, 1]));
        // q_1(x) = x, so p_1 = N
        assert_eq!(unit_poly(&spec(BaseKind::Interval4), 1).unwrap(), IntPoly::from_i64(&[-1, 1, 1]));
        assert_eq!(chebyshev_monic(3), IntPoly::from_i64(&[0, -3, 0, 1]));
    }

    #[test]
    fn units_and_structure() {
        for base in [BaseKind::Circle, BaseKind::Interval4] {
            let s = spec(base);
            for m in [2usize, 5, 8] {
                let p = unit_poly(&s, m).unwrap();
                assert!(p.is_monic());
                assert_eq!(p.degree(), Some(2 * m));
                assert!(p.constant_term().magnitude().is_one());
                let structured = unit_zeros(&s, m).unwrap();
                let direct = roots(&p.to_complex().unwrap()).unwrap();
                for z in &structured {
                    let best = direct.iter().map(|w| (z - w).norm()).fold(f64::INFINITY, f64::min);
                    assert!(best < 1e-8, "{base:?} {m} {z}");
                    assert!(p.to_complex().unwrap().backward_error(*z) < 1e-10);
                }
            }
        }
    }

    #[test]
    fn ks_exact_values() {
        let s = spec(BaseKind::Circle);
        let nu = zero_measure(&s, 10).unwrap();
        assert!((ks_discrepancy(&nu, &s) - 0.1).abs() < 1e-9);
        let t = spec(BaseKind::Interval4);
        let nu = zero_measure(&t, 10).unwrap();
        assert!((ks_discrepancy(&nu, &t) - 0.05).abs() < 1e-9);
        let atom = DiscreteMeasure1D::uniform(vec![Complex64::new(1.0, 0.0)]).unwrap();
        assert!(ks_discrepancy(&atom, &s) > 0.9);
    }

    #[test]
    fn small_lemma_suite() {
        let r = lemma_suite(60, 5, 11).unwrap();
        assert_eq!(r.identity_pass, 60, "{r:?}");
        assert_eq!(r.inequality_pass, 60, "{r:?}");
        assert_eq!((r.canonical, r.unimodular, r.scaled), (20, 20, 20));
    }

    #[test]
    fn polydisk_sequences() {
        let seq = mu_sequence_polydisk(6).unwrap();
        assert_eq!(seq.generic.len(), 36);
        assert_eq!(seq.generic_selection.len(), 6);
        assert_eq!(seq.nongeneric.len(), 6);
        for z in &seq.generic.points {
            assert!((z[0].norm() - 1.0).abs() < 1e-12 && (z[1].norm() - 1.0).abs() < 1e-12);
        }
        for z in &seq.nongeneric.points {
            assert!(z[0].norm() == 0.0 && (z[1].norm() - 1.0).abs() < 1e-12);
        }
    }
}
