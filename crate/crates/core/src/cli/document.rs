//! JSON documents: braid input and normalized path output.
//!
//! ```json
//! {"version": 1, "strands": [[[0, 0], ...], [[1, 0], ...], ["inf", ...], [[2, 0], ...]]}
//! ```
//!
//! A sample is `[re, im]` or the string `"inf"`. Instead of `strands` a
//! document may carry a `loop` or `artin` word; exactly one payload is allowed.

use serde::{Deserialize, Serialize};

use crate::braid::SphericalBraid;
use crate::error::{Error, Result};
use crate::mobius::NormalizedPath;
use crate::point::RiemannPoint;
use crate::realize::{realize_artin, realize_loop};
use crate::word::{parse_artin, parse_loop};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sample {
    Point([f64; 2]),
    Tag(String),
}

impl Sample {
    pub fn from_point(p: &RiemannPoint) -> Sample {
        match p {
            RiemannPoint::Finite(z) => Sample::Point([z.re, z.im]),
            RiemannPoint::Infinity => Sample::Tag(String::from("inf")),
        }
    }

    fn to_point(&self) -> Result<RiemannPoint> {
        match self {
            Sample::Point([re, im]) => RiemannPoint::finite(*re, *im),
            Sample::Tag(t) if t == "inf" => Ok(RiemannPoint::Infinity),
            Sample::Tag(t) => Err(Error::Document(format!("unknown sample tag {t:?}"))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BraidDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "loop")]
    pub loop_word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub artin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<Vec<Vec<Sample>>>,
}

impl BraidDocument {
    pub fn from_braid(f: &SphericalBraid) -> Self {
        BraidDocument {
            version: FORMAT_VERSION,
            strands: Some(
                f.strands()
                    .iter()
                    .map(|s| s.iter().map(Sample::from_point).collect())
                    .collect(),
            ),
            ..Default::default()
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: BraidDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.version != FORMAT_VERSION {
            return Err(Error::Document(format!("unsupported version {}", doc.version)));
        }
        let payloads = [doc.loop_word.is_some(), doc.artin.is_some(), doc.strands.is_some()]
            .iter()
            .filter(|&&b| b)
            .count();
        if payloads != 1 {
            return Err(Error::Document(format!(
                "expected exactly one of \"loop\", \"artin\", \"strands\"; found {payloads}"
            )));
        }
        Ok(doc)
    }

    /// Builds the braid; words are realized with `samples` per letter or generator.
    pub fn to_braid(&self, samples: usize) -> Result<SphericalBraid> {
        if let Some(w) = &self.loop_word {
            return realize_loop(&parse_loop(w)?, samples);
        }
        if let Some(w) = &self.artin {
            return realize_artin(&parse_artin(w)?, samples);
        }
        let strands = self
            .strands
            .as_ref()
            .ok_or_else(|| Error::Document("document has no payload".into()))?;
        let strands = strands
            .iter()
            .map(|s| s.iter().map(Sample::to_point).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SphericalBraid::new(strands)
    }
}

/// Output of `normalize`: a braid document whose strands are `0`, `1`, `∞`
/// and the normalized curve, so it can be fed back to `invariants`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathDocument {
    pub version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub strands: Vec<Vec<Sample>>,
    /// Windings of the curve about 0 and 1.
    pub winding: [i64; 2],
}

impl PathDocument {
    pub fn new(path: &NormalizedPath, winding: [i64; 2], name: Option<String>) -> Self {
        let n = path.len();
        let constant = |p: RiemannPoint| vec![Sample::from_point(&p); n];
        PathDocument {
            version: FORMAT_VERSION,
            name,
            strands: vec![
                constant(RiemannPoint::ZERO),
                constant(RiemannPoint::ONE),
                constant(RiemannPoint::Infinity),
                path.points().iter().map(|z| Sample::Point([z.re, z.im])).collect(),
            ],
            winding,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_samples_decode() {
        let text = r#"{"version":1,"strands":[
            [[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]],
            [[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0]],
            ["inf","inf","inf","inf","inf","inf","inf","inf"],
            [[2,0],[2,0],[2,0],[2,0],[2,0],[2,0],[2,0],[2,0]]]}"#;
        let b = BraidDocument::parse(text).unwrap().to_braid(512).unwrap();
        assert_eq!(b.len(), 8);
        assert_eq!(b.configuration(3)[2], RiemannPoint::Infinity);
    }

    #[test]
    fn exactly_one_payload() {
        assert!(BraidDocument::parse(r#"{"version":1}"#).is_err());
        assert!(BraidDocument::parse(r#"{"version":1,"loop":"x","artin":"s1^2"}"#).is_err());
        assert!(BraidDocument::parse(r#"{"version":2,"loop":"x"}"#).is_err());
        assert!(BraidDocument::parse(r#"{"version":1,"loop":"[x,y]"}"#).is_ok());
    }

    #[test]
    fn bad_tag_rejected() {
        let doc = BraidDocument {
            version: 1,
            strands: Some(vec![vec![Sample::Tag("nan".into()); 8]; 4]),
            ..Default::default()
        };
        assert!(matches!(doc.to_braid(32), Err(Error::Document(_))));
    }

    #[test]
    fn braid_round_trips_bit_exactly() {
        let f = realize_loop(&parse_loop("[x,y]").unwrap(), 32).unwrap();
        let json = serde_json::to_string(&BraidDocument::from_braid(&f)).unwrap();
        let g = BraidDocument::parse(&json).unwrap().to_braid(32).unwrap();
        assert_eq!(f, g);
    }
}
