use std::collections::{HashMap, HashSet};

use super::Token;
use crate::error::{Error, Result};

/// Smoothed inverse document frequency over a set of text units.
#[derive(Debug, Clone, PartialEq)]
pub struct IdfTable {
    idf: HashMap<Token, f64>,
    unit_count: usize,
}

impl IdfTable {
    pub fn get(&self, token: &str) -> Option<f64> {
        self.idf.get(token).copied()
    }

    pub fn unit_count(&self) -> usize {
        self.unit_count
    }

    /// Multiplies every idf by `factor`.
    pub fn scaled(&self, factor: f64) -> IdfTable {
        IdfTable {
            idf: self
                .idf
                .iter()
                .map(|(t, v)| (t.clone(), v * factor))
                .collect(),
            unit_count: self.unit_count,
        }
    }

    pub fn from_map(idf: HashMap<Token, f64>, unit_count: usize) -> IdfTable {
        IdfTable { idf, unit_count }
    }
}

/// `idf(w) = ln(N / df(w)) + 1`, so every idf is at least 1.
pub fn compute_idf<U: AsRef<[Token]>>(units: &[U]) -> Result<IdfTable> {
    if units.is_empty() {
        return Err(Error::EmptyUnitList);
    }
    let mut df: HashMap<&Token, usize> = HashMap::new();
    for unit in units {
        let distinct: HashSet<&Token> = unit.as_ref().iter().collect();
        for t in distinct {
            *df.entry(t).or_insert(0) += 1;
        }
    }
    let n = units.len() as f64;
    let idf = df
        .into_iter()
        .map(|(t, d)| (t.clone(), (n / d as f64).ln() + 1.0))
        .collect();
    Ok(IdfTable {
        idf,
        unit_count: units.len(),
    })
}
