//! Polynomial JSON encoding:
//! `{"algebra": "quaternion" | "octonion" | {"clifford": m}, "coeffs": [[..], ..]}`
//! with each coefficient a flat component array (length 4, 8 or `2^m`).
//! Degree is implicit (list length − 1 after trimming).

use serde::{Deserialize, Serialize};

use crate::hypercomplex::{CliffordElement, Octonion, Quaternion};
use crate::slicepoly::SlicePolynomial;
use crate::{Error, Result};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
enum AlgebraField {
    Named(String),
    Clifford { clifford: usize },
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct PolyJson {
    algebra: AlgebraField,
    coeffs: Vec<Vec<f64>>,
}

/// A polynomial over any of the three algebras, for callers (the CLI, the
/// bindings) that dispatch on a runtime algebra tag.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPolynomial {
    Quaternion(SlicePolynomial<Quaternion>),
    Octonion(SlicePolynomial<Octonion>),
    Clifford(SlicePolynomial<CliffordElement>),
}

impl AnyPolynomial {
    pub fn degree(&self) -> Option<usize> {
        match self {
            AnyPolynomial::Quaternion(p) => p.degree(),
            AnyPolynomial::Octonion(p) => p.degree(),
            AnyPolynomial::Clifford(p) => p.degree(),
        }
    }

    fn to_json(&self) -> PolyJson {
        match self {
            AnyPolynomial::Quaternion(p) => PolyJson {
                algebra: AlgebraField::Named("quaternion".into()),
                coeffs: p.coeffs().iter().map(|c| c.components().to_vec()).collect(),
            },
            AnyPolynomial::Octonion(p) => PolyJson {
                algebra: AlgebraField::Named("octonion".into()),
                coeffs: p.coeffs().iter().map(|c| c.components().to_vec()).collect(),
            },
            AnyPolynomial::Clifford(p) => PolyJson {
                algebra: AlgebraField::Clifford {
                    clifford: p.coeffs()[0].signature(),
                },
                coeffs: p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect(),
            },
        }
    }

    fn from_json(raw: PolyJson) -> Result<Self> {
        match raw.algebra {
            AlgebraField::Named(name) if name == "quaternion" => {
                let coeffs = raw
                    .coeffs
                    .iter()
                    .map(|c| {
                        let arr: [f64; 4] = c
                            .as_slice()
                            .try_into()
                            .map_err(|_| Error::invalid("quaternion coefficient needs 4 components"))?;
                        Ok(Quaternion::from_components(arr))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(AnyPolynomial::Quaternion(SlicePolynomial::new(coeffs)?))
            }
            AlgebraField::Named(name) if name == "octonion" => {
                let coeffs = raw
                    .coeffs
                    .iter()
                    .map(|c| {
                        let arr: [f64; 8] = c
                            .as_slice()
                            .try_into()
                            .map_err(|_| Error::invalid("octonion coefficient needs 8 components"))?;
                        Ok(Octonion::new(arr))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(AnyPolynomial::Octonion(SlicePolynomial::new(coeffs)?))
            }
            AlgebraField::Named(name) => Err(Error::invalid(format!("unknown algebra '{name}'"))),
            AlgebraField::Clifford { clifford: m } => {
                let coeffs = raw
                    .coeffs
                    .into_iter()
                    .map(|c| CliffordElement::new(m, c))
                    .collect::<Result<Vec<_>>>()?;
                Ok(AnyPolynomial::Clifford(SlicePolynomial::new(coeffs)?))
            }
        }
    }
}

impl Serialize for AnyPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AnyPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        AnyPolynomial::from_json(raw).map_err(serde::de::Error::custom)
    }
}

impl From<SlicePolynomial<Quaternion>> for AnyPolynomial {
    fn from(p: SlicePolynomial<Quaternion>) -> Self {
        AnyPolynomial::Quaternion(p)
    }
}

impl From<SlicePolynomial<Octonion>> for AnyPolynomial {
    fn from(p: SlicePolynomial<Octonion>) -> Self {
        AnyPolynomial::Octonion(p)
    }
}

impl From<SlicePolynomial<CliffordElement>> for AnyPolynomial {
    fn from(p: SlicePolynomial<CliffordElement>) -> Self {
        AnyPolynomial::Clifford(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::Algebra;

    #[test]
    fn quaternion_round_trip() {
        let p = SlicePolynomial::new(vec![
            Quaternion::K,
            Quaternion::I.add(&Quaternion::J).neg(),
            Quaternion::ONE,
        ])
        .unwrap();
        let any = AnyPolynomial::from(p.clone());
        let text = serde_json::to_string(&any).unwrap();
        assert!(text.starts_with(r#"{"algebra":"quaternion","coeffs":[[0.0,0.0,0.0,1.0],"#));
        let back: AnyPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, AnyPolynomial::Quaternion(p));
    }

    #[test]
    fn clifford_round_trip() {
        let e1 = CliffordElement::basis_vector(2, 0).unwrap();
        let p = SlicePolynomial::new(vec![e1.one_like(), e1]).unwrap();
        let any = AnyPolynomial::from(p);
        let text = serde_json::to_string(&any).unwrap();
        assert!(text.contains(r#""algebra":{"clifford":2}"#));
        let back: AnyPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, any);
    }

    #[test]
    fn rejects_bad_input() {
        let bad: std::result::Result<AnyPolynomial, _> =
            serde_json::from_str(r#"{"algebra":"frobenius","coeffs":[[1,0,0,0]]}"#);
        assert!(bad.is_err());
        let bad: std::result::Result<AnyPolynomial, _> =
            serde_json::from_str(r#"{"algebra":"quaternion","coeffs":[[1,0,0]]}"#);
        assert!(bad.is_err());
    }
}
