use crate::error::{Error, Result};

/// A coordinate patch: the dimension and the names of its coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    names: Vec<String>,
}

impl Chart {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidChart("a chart needs at least one coordinate".into()));
        }
        if names.len() > super::MAX_DIM {
            return Err(Error::InvalidChart(format!(
                "at most {} coordinates are supported",
                super::MAX_DIM
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidChart(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidChart(format!("coordinate `{n}` repeated")));
            }
        }
        Ok(Chart { names })
    }

    /// Coordinates `x1, ..., xn`.
    pub fn indexed(dim: usize) -> Self {
        Chart::new((1..=dim).map(|i| format!("x{i}"))).expect("valid indexed chart")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
