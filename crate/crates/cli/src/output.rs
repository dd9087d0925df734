use std::fmt::Display;

use burnside::burncalc::{ImageCoord, Verdict};
use serde_json::{json, Value};

/// Integers fitting in `i64` become JSON numbers; larger ones become strings.
pub fn big(x: &impl Display) -> Value {
    let s = x.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

pub fn image_json(image: &[ImageCoord]) -> Value {
    image
        .iter()
        .map(|c| json!({ "slot": c.slot, "value": big(&c.value), "modulus": big(&c.modulus) }))
        .collect()
}

pub fn image_text(image: &[ImageCoord]) -> String {
    let parts: Vec<String> = image
        .iter()
        .map(|c| {
            if c.modulus.to_string() == "0" {
                format!("{}: {} in Z", c.slot, c.value)
            } else {
                format!("{}: {} mod {}", c.slot, c.value, c.modulus)
            }
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

pub fn certificate_json(cert: &[(usize, impl Display)]) -> Value {
    cert.iter().map(|(row, k)| json!({ "row": row, "coeff": big(k) })).collect()
}

pub fn certificate_text(cert: &[(usize, impl Display)]) -> String {
    let parts: Vec<String> = cert.iter().map(|(row, k)| format!("{k}*r{row}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Equal { certificate } => json!({ "verdict": "equal", "certificate": certificate_json(certificate) }),
        Verdict::Distinct { image } => json!({ "verdict": "distinct", "image": image_json(image) }),
    }
}

pub fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Equal { certificate } => format!("Equal\ncertificate: {}", certificate_text(certificate)),
        Verdict::Distinct { image } => format!("Distinct\nimage: {}", image_text(image)),
    }
}

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}
