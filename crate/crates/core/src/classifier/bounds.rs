//! Closed-form upper bounds on the reset threshold, per class.

use std::fmt;

use num::{BigInt, BigRational, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Registry ids: the general cubic bounds, then one per class.
pub const BOUND_IDS: &[&str] = &[
    "cerny", "pin_frankl", "szykula", "shitov", "kari_eulerian", "a1", "a2", "a3", "a4", "a5",
    "a6", "a7", "a8", "a9", "a10", "b1", "b2", "b2_sc", "b3", "b4", "b5", "b6", "b7", "c1", "c2",
    "c3", "c4", "c5", "c6", "c7", "d1", "d1_quasi", "d2", "d3", "d4", "d5", "d6",
];

#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(BigRational),
    /// Logarithmic formulas, evaluated in `f64`.
    Real(f64),
}

impl BoundValue {
    pub fn as_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(q) => q.to_f64().expect("finite rational"),
            BoundValue::Real(x) => *x,
        }
    }

    /// `rt <= value`. Real values get a `1e-9` slack.
    pub fn admits(&self, rt: usize) -> bool {
        match self {
            BoundValue::Exact(q) => BigRational::from_integer(BigInt::from(rt)) <= *q,
            BoundValue::Real(x) => rt as f64 <= x + 1e-9,
        }
    }

    /// `value >= other`, exact when both sides are rational.
    pub fn at_least(&self, other: &BigRational) -> bool {
        match self {
            BoundValue::Exact(q) => q >= other,
            BoundValue::Real(x) => *x + 1e-9 >= other.to_f64().expect("finite rational"),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(q) => write!(f, "{q}"),
            BoundValue::Real(x) => write!(f, "{x}"),
        }
    }
}

/// Extra inputs some formulas need.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundParams {
    /// Quasi-one-cluster / quasi-Eulerian degree.
    pub d: Option<usize>,
    /// Alphabet size.
    pub k: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Bound {
    pub id: String,
    pub n: usize,
    pub value: BoundValue,
    pub formula: &'static str,
    /// Only the leading term of an asymptotic statement.
    pub asymptotic: bool,
}

impl Bound {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id,
            "n": self.n,
            "formula": self.formula,
            "value": self.value.to_string(),
            "approx": self.value.as_f64(),
            "exact": matches!(self.value, BoundValue::Exact(_)),
        });
        if self.asymptotic {
            v["asymptotic"] = json!(true);
        }
        v
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio(num: BigInt, den: i64) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

/// Smallest `r` with `k^r >= n`.
fn ceil_log(n: usize, k: usize) -> usize {
    let (mut r, mut p) = (0, 1usize);
    while p < n {
        p = p.saturating_mul(k);
        r += 1;
    }
    r
}

pub fn bound_for_class(id: &str, n: usize, params: &BoundParams) -> Result<Bound> {
    if n == 0 {
        return Err(Error::input("n must be at least 1"));
    }
    let id_lc = id.to_ascii_lowercase();
    let ni = n as i64;
    let nb = BigInt::from(n);
    let cerny = int((ni - 1) * (ni - 1));
    let half = ratio(BigInt::from(ni * (ni - 1)), 2);
    let need_d = || {
        params
            .d
            .ok_or_else(|| Error::input(format!("bound {id_lc} needs the degree parameter d")))
    };
    let (value, formula, asymptotic) = match id_lc.as_str() {
        "cerny" | "a1" | "a2" | "a3" | "a4" | "a5" | "a7" | "a8" | "a9" | "a10" => {
            (BoundValue::Exact(cerny), "(n-1)^2", false)
        }
        "pin_frankl" => (
            BoundValue::Exact(ratio(&nb * &nb * &nb - &nb, 6)),
            "(n^3-n)/6",
            false,
        ),
        "szykula" => {
            let num = BigInt::from(85059) * &nb * &nb * &nb
                + BigInt::from(90024) * &nb * &nb
                + BigInt::from(196504) * &nb
                - BigInt::from(10648);
            (
                BoundValue::Exact(ratio(num, 511104)),
                "(85059n^3+90024n^2+196504n-10648)/511104",
                false,
            )
        }
        "shitov" => {
            let coef = ratio(BigInt::from(7), 48) + ratio(BigInt::from(15625), 798768);
            (
                BoundValue::Exact(coef * int(ni * ni * ni)),
                "(7/48+15625/798768)n^3",
                true,
            )
        }
        "kari_eulerian" | "a6" => (BoundValue::Exact(int(ni * ni - 3 * ni + 3)), "n^2-3n+3", false),
        "b1" | "b2" | "b3" | "b5" => (BoundValue::Exact(half), "n(n-1)/2", false),
        "b2_sc" => (BoundValue::Exact(int(ni * (ni + 1) / 6)), "floor(n(n+1)/6)", false),
        "b4" => {
            let k = params
                .k
                .ok_or_else(|| Error::input("bound b4 needs the alphabet size k"))?;
            if k < 2 {
                return Err(Error::input("bound b4 needs an alphabet of at least 2 letters"));
            }
            let r = ceil_log(n, k) as i64;
            if r >= 4 {
                let v = int(2) + ratio(BigInt::from((ni + r - 1) * (r * r * r - r)), 6);
                (BoundValue::Exact(v), "2+(n+r-1)(r^3-r)/6, r=ceil(log_k n)", false)
            } else {
                let v = int(2 + (ni + r - 1) * (r - 1) * (r - 1));
                (BoundValue::Exact(v), "2+(n+r-1)(r-1)^2, r=ceil(log_k n)", false)
            }
        }
        "b6" => (BoundValue::Exact(int(ni + ni / 2 - 2)), "n+floor(n/2)-2", false),
        "b7" => (BoundValue::Exact(int(3 * ni - 5)), "3n-5", false),
        "c1" | "c2" | "c3" | "c4" | "c5" | "c6" | "c7" => {
            (BoundValue::Exact(int(ni - 1)), "n-1", false)
        }
        "d1" => {
            let x = n as f64;
            let v = 2.0 * x * x - 4.0 * x + 1.0 - 2.0 * (x - 1.0) * (x / 2.0).ln();
            (BoundValue::Real(v), "2n^2-4n+1-2(n-1)ln(n/2)", false)
        }
        "d1_quasi" => {
            let d = need_d()? as i64;
            let v = BigInt::from(2).pow(d as u32) * BigInt::from((ni - d + 1) * (2 * ni - d - 2));
            (BoundValue::Exact(BigRational::from_integer(v)), "2^d(n-d+1)(2n-d-2)", false)
        }
        "d2" => {
            if n < 3 {
                return Err(Error::domain("bound d2 holds for n >= 3"));
            }
            let x = n as f64;
            let v = 2.0 * x * x - x * x.ln() - 4.0 * x + 2.0;
            (BoundValue::Real(v), "2n^2-n ln n-4n+2", false)
        }
        "d3" => {
            let d = need_d()? as i64;
            let v = BigInt::from(2).pow(d as u32) * BigInt::from((ni - d + 1) * (ni - 1));
            (BoundValue::Exact(BigRational::from_integer(v)), "2^d(n-d+1)(n-1)", false)
        }
        "d4" => (BoundValue::Exact(int(2 * (ni - 1) * (ni - 1))), "2(n-1)^2", false),
        "d5" => (BoundValue::Exact(int(6 * ni * ni - 11 * ni - 1)), "6n^2-11n-1", false),
        "d6" => (BoundValue::Exact(int(2 * ni * ni - 7 * ni + 7)), "2n^2-7n+7", false),
        _ => return Err(Error::input(format!("unknown bound id {id:?}"))),
    };
    Ok(Bound {
        id: id_lc,
        n,
        value,
        formula,
        asymptotic,
    })
}

/// Registry ids whose value drops below `(n-1)^2` for some `n >= 3`. These
/// are only compared against members of their own class.
pub fn below_cerny(id: &str) -> bool {
    let id = id.to_ascii_lowercase();
    id.starts_with('b') || id.starts_with('c') && id != "cerny" || id == "a6" || id == "kari_eulerian"
}
