use serde::{Deserialize, Serialize};

use super::{CremonaPair, MapError, RationalMap, Space};
use crate::polycore::{parse_polynomial, parse_rational, Ring};

/// Serialized form of a [`RationalMap`]; coordinates use the canonical
/// text grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMapJson {
    pub chart: String,
    pub target_chart: String,
    pub source_vars: Vec<String>,
    pub target_vars: Vec<String>,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CremonaPairJson {
    pub forward: RationalMapJson,
    pub inverse: RationalMapJson,
    pub delta: u32,
    pub delta_prime: u32,
    pub fundamental_factor: String,
    pub verified: bool,
}

impl RationalMap {
    pub fn to_json(&self) -> RationalMapJson {
        let ring = self.ring();
        let names = |s: &Space| s.coords.iter().map(|&v| ring.name(v)).collect();
        RationalMapJson {
            chart: ring.name(self.source().chart),
            target_chart: ring.name(self.target().chart),
            source_vars: names(self.source()),
            target_vars: names(self.target()),
            coords: self.coords().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(ring: &Ring, json: &RationalMapJson) -> Result<RationalMap, MapError> {
        let source = Space::named(ring, &json.chart, &json.source_vars)?;
        let target = Space::named(ring, &json.target_chart, &json.target_vars)?;
        let coords = json
            .coords
            .iter()
            .map(|s| parse_rational(ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        RationalMap::new(ring, source, target, coords)
    }
}

impl CremonaPair {
    pub fn to_json(&self) -> CremonaPairJson {
        CremonaPairJson {
            forward: self.forward.to_json(),
            inverse: self.inverse.to_json(),
            delta: self.delta,
            delta_prime: self.delta_prime,
            fundamental_factor: self.fundamental_factor.to_string(),
            verified: self.verified,
        }
    }

    pub fn from_json(ring: &Ring, json: &CremonaPairJson) -> Result<CremonaPair, MapError> {
        Ok(CremonaPair {
            forward: RationalMap::from_json(ring, &json.forward)?,
            inverse: RationalMap::from_json(ring, &json.inverse)?,
            delta: json.delta,
            delta_prime: json.delta_prime,
            fundamental_factor: parse_polynomial(ring, &json.fundamental_factor)?,
            verified: json.verified,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::verify_cremona;

    #[test]
    fn pair_round_trips_through_json() {
        let ring = Ring::new();
        let x = Space::named(&ring, "x_0", &["x_1", "x_2"]).unwrap();
        let y = Space::named(&ring, "y_0", &["y_1", "y_2"]).unwrap();
        let f = RationalMap::new(
            &ring,
            x.clone(),
            y.clone(),
            vec![parse_rational(&ring, "1/x_1").unwrap(), parse_rational(&ring, "x_2/x_1").unwrap()],
        )
        .unwrap();
        let g = RationalMap::new(
            &ring,
            y,
            x,
            vec![parse_rational(&ring, "1/y_1").unwrap(), parse_rational(&ring, "y_2/y_1").unwrap()],
        )
        .unwrap();
        let pair = verify_cremona(&f, &g).unwrap();
        let text = serde_json::to_string(&pair.to_json()).unwrap();
        let back: CremonaPairJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CremonaPair::from_json(&ring, &back).unwrap(), pair);
        assert_eq!(back.forward.coords[1], "(x_2)/(x_1)");
    }
}
