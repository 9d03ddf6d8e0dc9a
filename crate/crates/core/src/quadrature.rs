//! Globally adaptive 21-point Gauss-Kronrod quadrature.
//!
//! The driver works for real and complex integrands alike. Callers pass the
//! initial panel boundaries explicitly, which is how oscillatory integrands are
//! kept from aliasing: a panel should never span more than a few periods of the
//! local phase, and kinks of the integrand should sit on a boundary.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Values that can be integrated: closed under addition and real scaling.
pub trait QuadValue: Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn magnitude(self) -> f64;
}

impl QuadValue for f64 {
    #[inline]
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    #[inline]
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Result of a quadrature: value, estimated absolute error and the number of
/// integrand evaluations spent.
#[derive(Debug, Clone, Copy)]
pub struct Estimate<T> {
    pub value: T,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl<T> Eq for Segment<T> {}

impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

// QUADPACK's error rescaling; the raw |K - G| difference is the error of the
// Gauss rule and grossly overestimates the Kronrod error.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One application of the 21-point Kronrod rule on `[a, b]`.
fn gk21<T, F>(f: &F, a: f64, b: f64) -> Segment<T>
where
    T: QuadValue,
    F: Fn(f64) -> T,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut fv1 = [T::default(); 10];
    let mut fv2 = [T::default(); 10];

    let f_center = f(center);
    let mut res_k = f_center * WGK[10];
    let mut res_g = T::default();
    let mut res_abs = WGK[10] * f_center.magnitude();

    for j in 0..10 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k = res_k + (f1 + f2) * WGK[j];
        res_abs += WGK[j] * (f1.magnitude() + f2.magnitude());
        // odd indices are the embedded Gauss nodes
        if j % 2 == 1 {
            res_g = res_g + (f1 + f2) * WG[j / 2];
        }
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (f_center - mean).magnitude();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).magnitude() + (fv2[j] - mean).magnitude());
    }

    let err = (res_k - res_g).magnitude() * half.abs();
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();

    Segment {
        a,
        b,
        value: res_k * half,
        error: rescale_error(err, res_abs, res_asc),
    }
}

/// Adaptive integrator settings.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_segments: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_segments: 200_000,
        }
    }
}

impl Quadrature {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Self {
        Quadrature {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }

    pub fn integrate<T, F>(&self, f: F, a: f64, b: f64) -> Result<Estimate<T>>
    where
        T: QuadValue,
        F: Fn(f64) -> T,
    {
        self.integrate_panels(f, &[a, b])
    }

    /// Integrates over `[points[0], points[last]]`, using every entry of the
    /// sorted `points` slice as an initial panel boundary.
    pub fn integrate_panels<T, F>(&self, f: F, points: &[f64]) -> Result<Estimate<T>>
    where
        T: QuadValue,
        F: Fn(f64) -> T,
    {
        if points.len() < 2 {
            return Ok(Estimate {
                value: T::default(),
                error: 0.0,
                evaluations: 0,
            });
        }

        let mut heap = BinaryHeap::with_capacity(points.len() * 2);
        let mut total = T::default();
        let mut total_err = 0.0;
        let mut evaluations = 0;
        // segments too narrow to bisect further
        let mut frozen_value = T::default();
        let mut frozen_err = 0.0;

        for w in points.windows(2) {
            if w[1] == w[0] {
                continue;
            }
            let seg = gk21(&f, w[0], w[1]);
            evaluations += 21;
            total = total + seg.value;
            total_err += seg.error;
            heap.push(seg);
        }

        loop {
            let tolerance = self.abs_tol.max(self.rel_tol * total.magnitude());
            if total_err <= tolerance {
                break;
            }
            let Some(worst) = heap.pop() else {
                break;
            };
            if heap.len() + 1 >= self.max_segments {
                return Err(Error::NotConverged {
                    estimate: total_err,
                    tolerance,
                    segments: heap.len() + 1,
                });
            }

            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
                frozen_value = frozen_value + worst.value;
                frozen_err += worst.error;
                continue;
            }
            let left = gk21(&f, worst.a, mid);
            let right = gk21(&f, mid, worst.b);
            evaluations += 42;

            total = total - worst.value + left.value + right.value;
            total_err += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
        }

        // re-sum to shed the drift of the running totals
        let mut value = frozen_value;
        let mut error = frozen_err;
        for seg in heap.iter() {
            value = value + seg.value;
            error += seg.error;
        }
        Ok(Estimate {
            value,
            error,
            evaluations,
        })
    }
}

/// `n` equal panels on `[a, b]`, returned as `n + 1` boundaries.
pub fn uniform_panels(a: f64, b: f64, n: usize) -> Vec<f64> {
    let n = n.max(1);
    let h = (b - a) / n as f64;
    (0..=n)
        .map(|i| if i == n { b } else { a + h * i as f64 })
        .collect()
}

/// Merges extra breakpoints inside `[a, b]` into a sorted boundary list.
pub fn merge_breakpoints(mut panels: Vec<f64>, extra: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let (lo, hi) = match (panels.first(), panels.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return panels,
    };
    panels.extend(extra.into_iter().filter(|&p| p > lo && p < hi));
    panels.sort_by(f64::total_cmp);
    panels.dedup();
    panels
}
