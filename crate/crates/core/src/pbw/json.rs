//! JSON schema for presentations.
//!
//! ```json
//! {
//!   "params": ["q"],
//!   "aliases": [{ "name": "Q", "value": "q^2" }],
//!   "generators": ["x", "y"],
//!   "rules": [
//!     { "left": "y", "right": "x", "swap": "q^-1",
//!       "corrections": [{ "coeff": "1", "word": [] }] }
//!   ],
//!   "weights": [[1, 0], [0, 1]]
//! }
//! ```
//!
//! Each rule reads `left*right = swap*right*left + Σ coeff*word`, with `left`
//! after `right` in the generator order. Scalars use the expression grammar.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Monomial, PbwError, Presentation, Rule};
use crate::expr::parse_scalar;
use crate::scalar::ParamSpace;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AliasJson {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CorrectionJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RuleJson {
    pub left: String,
    pub right: String,
    pub swap: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub corrections: Vec<CorrectionJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub params: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<AliasJson>,
    pub generators: Vec<String>,
    pub rules: Vec<RuleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Vec<i64>>>,
}

impl PresentationJson {
    pub fn from_presentation(p: &Presentation) -> Self {
        let space = p.space();
        let gens = p.generators();
        let rules = p
            .rules()
            .map(|((u, v), r)| RuleJson {
                left: gens[u].clone(),
                right: gens[v].clone(),
                swap: r.swap.display(space).to_string(),
                corrections: r
                    .corrections
                    .iter()
                    .map(|(c, m)| CorrectionJson {
                        coeff: c.display(space).to_string(),
                        word: m.word().iter().map(|&g| gens[g].clone()).collect(),
                    })
                    .collect(),
            })
            .collect();
        let aliases = space
            .aliases()
            .map(|(name, e)| AliasJson {
                name: name.to_string(),
                value: crate::scalar::Scalar::monomial(e.to_vec(), num_traits::One::one()).display(space).to_string(),
            })
            .collect();
        PresentationJson {
            params: space.names().to_vec(),
            aliases,
            generators: gens.to_vec(),
            rules,
            weights: p.weights().map(<[_]>::to_vec),
        }
    }

    pub fn param_space(&self) -> Result<ParamSpace, PbwError> {
        let mut space = ParamSpace::new(self.params.iter().cloned())?;
        for a in &self.aliases {
            let value = parse_scalar(&a.value, &space).map_err(|e| PbwError::Json(e.to_string()))?;
            let (e, _) = value
                .as_unit()
                .filter(|(_, c)| num_traits::One::is_one(*c))
                .ok_or_else(|| PbwError::Json(format!("alias `{}` must be a parameter monomial", a.name)))?;
            space = space.with_alias(&a.name, e.to_vec())?;
        }
        Ok(space)
    }

    pub fn build(&self) -> Result<Arc<Presentation>, PbwError> {
        let space = Arc::new(self.param_space()?);
        let index = |name: &str| {
            self.generators.iter().position(|g| g == name).ok_or_else(|| PbwError::UnknownGenerator(name.to_string()))
        };
        let n = self.generators.len();
        let mut rules = BTreeMap::new();
        for r in &self.rules {
            let (u, v) = (index(&r.left)?, index(&r.right)?);
            let swap = parse_scalar(&r.swap, &space).map_err(|e| PbwError::Json(e.to_string()))?;
            let mut corrections = Vec::new();
            for c in &r.corrections {
                let coeff = parse_scalar(&c.coeff, &space).map_err(|e| PbwError::Json(e.to_string()))?;
                let word = c.word.iter().map(|g| index(g)).collect::<Result<Vec<_>, _>>()?;
                corrections.push((coeff, Monomial::from_word(n, &word)));
            }
            if rules.insert((u, v), Rule { swap, corrections }).is_some() {
                return Err(PbwError::Json(format!("duplicate rule for ({}, {})", r.left, r.right)));
            }
        }
        Presentation::new(space, self.generators.clone(), rules, self.weights.clone())
    }
}

impl Presentation {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PresentationJson::from_presentation(self)).expect("serializable")
    }

    pub fn from_json_str(text: &str) -> Result<Arc<Presentation>, PbwError> {
        let parsed: PresentationJson = serde_json::from_str(text).map_err(|e| PbwError::Json(e.to_string()))?;
        parsed.build()
    }
}
