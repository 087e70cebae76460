//! Typed scenario parameters with embedded defaults.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::VerifyError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Int(u64),
    Float(f64),
    List(Vec<f64>),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Float(x) => write!(f, "{x:e}"),
            Value::List(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| format!("{x}")).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Text(s) => write!(f, "\"{s}\""),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum ParamDefault {
    Int(u64),
    Float(f64),
    List(&'static [f64]),
    Text(&'static str),
}

impl ParamDefault {
    fn value(self) -> Value {
        match self {
            ParamDefault::Int(n) => Value::Int(n),
            ParamDefault::Float(x) => Value::Float(x),
            ParamDefault::List(xs) => Value::List(xs.to_vec()),
            ParamDefault::Text(s) => Value::Text(s.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub key: &'static str,
    pub default: ParamDefault,
    pub doc: &'static str,
}

impl ParamSpec {
    pub fn default_value(&self) -> Value {
        self.default.value()
    }
}

/// Resolved parameters of one scenario run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params(BTreeMap<String, Value>);

impl Params {
    pub fn defaults(specs: &[ParamSpec]) -> Self {
        Self(specs.iter().map(|s| (s.key.to_string(), s.default_value())).collect())
    }

    /// Defaults overridden by a config table. Unknown keys and values of the
    /// wrong type are rejected.
    pub fn resolve(specs: &[ParamSpec], table: Option<&toml::Table>, scenario: &str) -> Result<Self, VerifyError> {
        let mut params = Self::defaults(specs);
        let Some(table) = table else { return Ok(params) };
        for (key, raw) in table {
            let spec = specs
                .iter()
                .find(|s| s.key == key)
                .ok_or_else(|| VerifyError::Config(format!("[{scenario}] has no parameter `{key}`")))?;
            let value = convert(spec.default, raw)
                .ok_or_else(|| VerifyError::Config(format!("[{scenario}] `{key}`: expected {}", kind(spec.default))))?;
            params.0.insert(key.clone(), value);
        }
        Ok(params)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Value)> {
        self.0.iter()
    }

    pub fn as_map(&self) -> &BTreeMap<String, Value> {
        &self.0
    }

    pub fn usize(&self, key: &str) -> usize {
        match self.0.get(key) {
            Some(Value::Int(n)) => *n as usize,
            other => panic!("parameter `{key}` is not an integer: {other:?}"),
        }
    }

    pub fn f64(&self, key: &str) -> f64 {
        match self.0.get(key) {
            Some(Value::Float(x)) => *x,
            other => panic!("parameter `{key}` is not a float: {other:?}"),
        }
    }

    pub fn list(&self, key: &str) -> &[f64] {
        match self.0.get(key) {
            Some(Value::List(xs)) => xs,
            other => panic!("parameter `{key}` is not a list: {other:?}"),
        }
    }

    pub fn text(&self, key: &str) -> &str {
        match self.0.get(key) {
            Some(Value::Text(s)) => s,
            other => panic!("parameter `{key}` is not text: {other:?}"),
        }
    }
}

fn kind(d: ParamDefault) -> &'static str {
    match d {
        ParamDefault::Int(_) => "a non-negative integer",
        ParamDefault::Float(_) => "a number",
        ParamDefault::List(_) => "a list of numbers",
        ParamDefault::Text(_) => "a string",
    }
}

fn number(v: &toml::Value) -> Option<f64> {
    match v {
        toml::Value::Float(x) => Some(*x),
        toml::Value::Integer(n) => Some(*n as f64),
        _ => None,
    }
}

fn convert(d: ParamDefault, v: &toml::Value) -> Option<Value> {
    match d {
        ParamDefault::Int(_) => match v {
            toml::Value::Integer(n) if *n >= 0 => Some(Value::Int(*n as u64)),
            _ => None,
        },
        ParamDefault::Float(_) => number(v).map(Value::Float),
        ParamDefault::List(_) => match v {
            toml::Value::Array(xs) => xs.iter().map(number).collect::<Option<Vec<_>>>().map(Value::List),
            _ => None,
        },
        ParamDefault::Text(_) => v.as_str().map(|s| Value::Text(s.to_string())),
    }
}
