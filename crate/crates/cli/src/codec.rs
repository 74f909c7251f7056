//! JSON encodings of the core types.
//!
//! Complex numbers are `[re, im]` (a bare number is read as real), 2×2
//! matrices are row-major nested arrays, points of `Γ` are `[s, p]`, points
//! of the tetrablock are `[x1, x2, x3]`, and rational functions are
//! `{"num": [c0, c1, ...], "den": [...]}` with ascending coefficients.

use musynth_core::numerics::{Polynomial, RationalFunction};
use musynth_core::{Complex64, GammaPoint, Mat2, TetraPoint};
use serde_json::{json, Map, Value};

use crate::CliError;

fn bad(field: &str, what: &str) -> CliError {
    CliError::Input { field: field.to_string(), message: what.to_string() }
}

pub fn real(v: &Value, field: &str) -> Result<f64, CliError> {
    match v.as_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(bad(field, "expected a finite number")),
    }
}

pub fn complex(v: &Value, field: &str) -> Result<Complex64, CliError> {
    if v.is_number() {
        return Ok(Complex64::new(real(v, field)?, 0.0));
    }
    match v.as_array().map(|a| a.as_slice()) {
        Some([re, im]) => Ok(Complex64::new(real(re, field)?, real(im, field)?)),
        _ => Err(bad(field, "expected a complex number: a number or [re, im]")),
    }
}

fn fixed<'a>(v: &'a Value, n: usize, field: &str, what: &str) -> Result<&'a [Value], CliError> {
    match v.as_array() {
        Some(a) if a.len() == n => Ok(a),
        _ => Err(bad(field, what)),
    }
}

pub fn matrix(v: &Value, field: &str) -> Result<Mat2, CliError> {
    let rows = fixed(v, 2, field, "expected a 2x2 matrix as [[a11, a12], [a21, a22]]")?;
    let mut e = [Complex64::new(0.0, 0.0); 4];
    for (i, row) in rows.iter().enumerate() {
        let row = fixed(row, 2, field, "expected a 2x2 matrix as [[a11, a12], [a21, a22]]")?;
        for (j, x) in row.iter().enumerate() {
            e[2 * i + j] = complex(x, &format!("{field}[{i}][{j}]"))?;
        }
    }
    Ok(Mat2::new(e[0], e[1], e[2], e[3]))
}

pub fn gamma_point(v: &Value, field: &str) -> Result<GammaPoint, CliError> {
    let a = fixed(v, 2, field, "expected a point [s, p]")?;
    Ok(GammaPoint::new(complex(&a[0], &format!("{field}.s"))?, complex(&a[1], &format!("{field}.p"))?))
}

pub fn tetra_point(v: &Value, field: &str) -> Result<TetraPoint, CliError> {
    let a = fixed(v, 3, field, "expected a point [x1, x2, x3]")?;
    Ok(TetraPoint::new(
        complex(&a[0], &format!("{field}.x1"))?,
        complex(&a[1], &format!("{field}.x2"))?,
        complex(&a[2], &format!("{field}.x3"))?,
    ))
}

fn polynomial(v: &Value, field: &str) -> Result<Polynomial, CliError> {
    let a = v.as_array().ok_or_else(|| bad(field, "expected an array of coefficients"))?;
    let coeffs =
        a.iter().enumerate().map(|(i, c)| complex(c, &format!("{field}[{i}]"))).collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

pub fn rational(v: &Value, field: &str) -> Result<RationalFunction, CliError> {
    let obj = v.as_object().ok_or_else(|| bad(field, "expected {\"num\": [...], \"den\": [...]}"))?;
    for k in obj.keys() {
        if k != "num" && k != "den" {
            return Err(bad(&format!("{field}.{k}"), "unknown field"));
        }
    }
    let num = polynomial(
        obj.get("num").ok_or_else(|| bad(&format!("{field}.num"), "missing field"))?,
        &format!("{field}.num"),
    )?;
    let den = match obj.get("den") {
        Some(d) => polynomial(d, &format!("{field}.den"))?,
        None => Polynomial::one(),
    };
    RationalFunction::new(num, den).map_err(|_| bad(&format!("{field}.den"), "denominator is identically zero"))
}

pub fn enc_complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn enc_matrix(m: &Mat2) -> Value {
    json!([[enc_complex(m.a11), enc_complex(m.a12)], [enc_complex(m.a21), enc_complex(m.a22)]])
}

pub fn enc_gamma(z: &GammaPoint) -> Value {
    json!([enc_complex(z.s), enc_complex(z.p)])
}

fn enc_poly(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| enc_complex(c)).collect())
}

pub fn enc_rational(r: &RationalFunction) -> Value {
    json!({ "num": enc_poly(&r.num), "den": enc_poly(&r.den) })
}

/// Object fields of a payload, with the prefix used to name them in
/// diagnostics (`payload.` for files, `--` for inline flags).
pub struct Fields {
    pub map: Map<String, Value>,
    pub prefix: &'static str,
}

impl Fields {
    pub fn name(&self, key: &str) -> String {
        format!("{}{}", self.prefix, key)
    }

    pub fn allow_only(&self, keys: &[&str]) -> Result<(), CliError> {
        match self.map.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(bad(&self.name(k), "unknown field")),
            None => Ok(()),
        }
    }

    pub fn get(&self, key: &str) -> Result<&Value, CliError> {
        self.map.get(key).ok_or_else(|| bad(&self.name(key), "missing field"))
    }

    pub fn opt(&self, key: &str) -> Option<&Value> {
        self.map.get(key)
    }

    pub fn complex(&self, key: &str) -> Result<Complex64, CliError> {
        complex(self.get(key)?, &self.name(key))
    }

    pub fn real(&self, key: &str) -> Result<f64, CliError> {
        real(self.get(key)?, &self.name(key))
    }

    pub fn matrix(&self, key: &str) -> Result<Mat2, CliError> {
        matrix(self.get(key)?, &self.name(key))
    }

    pub fn gamma(&self, key: &str) -> Result<GammaPoint, CliError> {
        gamma_point(self.get(key)?, &self.name(key))
    }

    pub fn str(&self, key: &str) -> Result<&str, CliError> {
        self.get(key)?.as_str().ok_or_else(|| bad(&self.name(key), "expected a string"))
    }

    pub fn array(&self, key: &str) -> Result<&[Value], CliError> {
        self.get(key)?.as_array().map(|a| a.as_slice()).ok_or_else(|| bad(&self.name(key), "expected an array"))
    }
}

/// Inline flag values are JSON; a bare comma list such as `0,0.5` is read
/// as the array `[0,0.5]`.
pub fn inline_value(text: &str, flag: &str) -> Result<Value, CliError> {
    serde_json::from_str(text)
        .or_else(|_| serde_json::from_str(&format!("[{text}]")))
        .map_err(|_| bad(&format!("--{flag}"), "not a number, complex [re, im] or JSON array"))
}
