//! Deterministic rendering helpers.

use ntkit::BigRat;
use num::Complex;
use serde_json::Value;

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}")
        .parse()
        .expect("float formatting round-trips");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn num(x: f64) -> Value {
    let r = sig12(x);
    serde_json::Number::from_f64(r).map_or_else(|| Value::String(r.to_string()), Value::Number)
}

/// Plain decimals in `[1e-4, 1e15)`, exponent notation outside.
pub fn fmt_f64(x: f64) -> String {
    let r = sig12(x);
    let a = r.abs();
    if r == 0.0 {
        "0".into()
    } else if !(1e-4..1e15).contains(&a) {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

/// `a+bi` with both parts at 12 significant digits.
pub fn fmt_complex(z: Complex<f64>) -> String {
    let (re, im) = (sig12(z.re), sig12(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", fmt_f64(re), sign, fmt_f64(im.abs()))
}

pub fn complex(z: Complex<f64>) -> Value {
    Value::String(fmt_complex(z))
}

pub fn rat(r: &BigRat) -> Value {
    Value::String(r.to_string())
}

/// Sorted-key JSON followed by a newline.
pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
