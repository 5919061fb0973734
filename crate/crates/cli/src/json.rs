use serde_json::Value;
use tropical_kummer::exactcore::{format_rational, IntMatrix, Matrix2};
use tropical_kummer::{Rational, Vec2, Vec3};

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn vec2(v: &Vec2) -> Value {
    Value::Array(vec![rational(&v.x), rational(&v.y)])
}

pub fn vec3(v: &Vec3) -> Value {
    Value::Array(v.components().iter().map(|c| rational(c)).collect())
}

pub fn matrix2(m: &Matrix2) -> Value {
    Value::Array(
        m.rows
            .iter()
            .map(|r| Value::Array(r.iter().map(rational).collect()))
            .collect(),
    )
}

pub fn int_matrix(m: &IntMatrix) -> Value {
    Value::Array(
        m.rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}
