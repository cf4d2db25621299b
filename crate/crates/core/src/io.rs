//! JSON file formats: wedge instances, stabbing instances, GeomBase
//! instances, piercing families, and result reports.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algorithms::IntersectionResult;
use crate::error::{Error, Result};
use crate::geom::{AntiSegment, DoubleWedge, Element, Point, Segment, Transversal};

/// `{"wedges": [...], "seed": n}`; the seed is recorded by generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeInstance {
    pub wedges: Vec<DoubleWedge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// `{"greens": [...], "reds": [...], "purples": [...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub greens: Vec<Segment>,
    pub reds: Vec<AntiSegment>,
    pub purples: Vec<AntiSegment>,
}

impl FamilyFile {
    pub fn elements(&self) -> Vec<Element> {
        self.greens
            .iter()
            .cloned()
            .map(Element::Segment)
            .chain(
                self.reds
                    .iter()
                    .chain(&self.purples)
                    .cloned()
                    .map(Element::Anti),
            )
            .collect()
    }
}

/// Parses any of the formats above, mapping failures to [`Error::Parse`].
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// The result object with a leading `"status": "nonempty" | "empty"`.
pub fn intersect_report(r: &IntersectionResult) -> Value {
    let mut v = json!({ "status": if r.is_empty() { "empty" } else { "nonempty" } });
    if let (Value::Object(out), Value::Object(rest)) =
        (&mut v, serde_json::to_value(r).expect("serializable"))
    {
        out.extend(rest);
    }
    v
}

pub fn decide_report(witness: Option<&Point>) -> Value {
    json!({
        "status": if witness.is_some() { "nonempty" } else { "empty" },
        "witness": witness,
    })
}

pub fn stab_report(line: Option<&Transversal>) -> Value {
    json!({
        "status": if line.is_some() { "found" } else { "none" },
        "witness_line": line,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::intersect_general;
    use crate::constructions::make_nonagon_family;
    use crate::geom::Line;

    #[test]
    fn wedge_instance_round_trip() {
        let d = DoubleWedge::bowtie(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        let inst = WedgeInstance {
            wedges: vec![d],
            seed: None,
        };
        let text = to_json(&inst);
        assert!(!text.contains("seed"));
        assert_eq!(from_json::<WedgeInstance>(&text).unwrap(), inst);
        assert!(matches!(
            from_json::<WedgeInstance>("{"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn family_round_trip() {
        let f = make_nonagon_family(6).unwrap();
        let text = to_json(&f);
        let back: FamilyFile = from_json(&text).unwrap();
        assert_eq!(back.elements(), f.elements());
        assert!(text.contains("\"anti\": true"));
    }

    #[test]
    fn reports() {
        let d = DoubleWedge::bowtie(Line::new(1, 0), Line::new(-1, 0), true).unwrap();
        let v = intersect_report(&intersect_general(&[d]));
        assert_eq!(v["status"], "nonempty");
        assert_eq!(v["component_count"], 1);
        assert_eq!(v["algorithm"], "general");
        assert_eq!(
            stab_report(None),
            json!({"status": "none", "witness_line": null})
        );
    }
}
