use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Whether vertices or edges are removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Vertex,
    Edge,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Vertex => "vertex",
            Variant::Edge => "edge",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "vertex" => Ok(Variant::Vertex),
            "edge" => Ok(Variant::Edge),
            other => Err(Error::Parse {
                term: other.to_string(),
                reason: "expected `vertex` or `edge`".into(),
            }),
        }
    }
}

/// "k-component order s-connected" (vertex) or "s-edge connected" (edge)
/// on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Property {
    pub k: usize,
    pub s: usize,
    pub variant: Variant,
    pub n: usize,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.variant {
            Variant::Vertex => "connected",
            Variant::Edge => "edge connected",
        };
        write!(f, "{}-component order {}-{what} on {} vertices", self.k, self.s, self.n)
    }
}
