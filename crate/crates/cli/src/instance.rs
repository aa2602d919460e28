//! Instance files: JSON documents describing an algebra, its weights, a
//! representation and lattice data. Every scalar is a string.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use solvcohom_core::arith::{ExactMatrix, GaussianRational, Parity, PeriodSymbols};
use solvcohom_core::lattice::LatticeData;
use solvcohom_core::lie::{Bracket, GroundMode, LieAlgebraData, RepresentationData};
use solvcohom_core::weights::{Weight, WeightAssignment};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Derham,
    Dolbeault,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Derham => "derham",
            Kind::Dolbeault => "dolbeault",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub kind: Kind,
    pub algebra: AlgebraBlock,
    pub weights: WeightsBlock,
    pub representation: RepresentationBlock,
    #[serde(default)]
    pub lattice: LatticeBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub ground: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub basis: Vec<String>,
    /// `[left, right, out, coefficient]`: `[X_left, X_right]` has
    /// `coefficient·X_out` among its terms.
    #[serde(default)]
    pub brackets: Vec<[String; 4]>,
    pub nilradical: Vec<String>,
    #[serde(default)]
    pub complement: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugation: Option<Vec<[String; 2]>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightsBlock {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub infer: bool,
    /// Basis name to covector on the complement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationBlock {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub adjoint: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub trivial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// Basis name to the rows of `dρ(X)`; missing names act by zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<BTreeMap<String, Vec<Vec<String>>>>,
    /// One covector per representation basis vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeBlock {
    #[serde(default)]
    pub symbols: Vec<SymbolDecl>,
    #[serde(default)]
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolDecl {
    pub name: String,
    pub parity: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepForm {
    Adjoint,
    Trivial,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub kind: Kind,
    pub algebra: LieAlgebraData,
    pub representation: RepresentationData,
    pub rep_form: RepForm,
    /// `None` when the weights are to be inferred.
    pub weights: Option<WeightAssignment>,
    pub lattice: LatticeData,
}

impl Instance {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| CliError::Parse {
            at: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        file.compile()
    }

    /// Weights from the file, or inferred from the algebra and representation.
    pub fn resolved_weights(&self) -> Result<WeightAssignment, CliError> {
        match &self.weights {
            Some(w) => Ok(w.clone()),
            None => Ok(solvcohom_core::weights::infer_weights(&self.algebra, &self.representation)?),
        }
    }

    /// Names of the representation basis.
    pub fn rep_basis_names(&self) -> Vec<String> {
        match self.rep_form {
            RepForm::Adjoint => self.algebra.basis_names().to_vec(),
            _ => (1..=self.representation.dim()).map(|k| format!("e{k}")).collect(),
        }
    }

    /// The canonical file form of this instance.
    pub fn to_file(&self) -> InstanceFile {
        let g = &self.algebra;
        let names = g.basis_names();
        let name = |i: usize| names[i].clone();
        let covector = |w: &Weight| w.coords().iter().map(ToString::to_string).collect::<Vec<_>>();
        let conjugation = g.conjugation().map(|sigma| {
            sigma
                .iter()
                .enumerate()
                .filter(|&(j, &s)| j <= s)
                .map(|(j, &s)| [name(j), name(s)])
                .collect()
        });
        let algebra = AlgebraBlock {
            ground: g.ground().to_string(),
            dim: Some(g.dim()),
            basis: names.to_vec(),
            brackets: g
                .brackets()
                .iter()
                .map(|b| [name(b.left), name(b.right), name(b.out), b.coeff.to_string()])
                .collect(),
            nilradical: g.nilradical().iter().map(|&i| name(i)).collect(),
            complement: g.complement().iter().map(|&i| name(i)).collect(),
            conjugation,
        };
        let weights = match &self.weights {
            None => WeightsBlock { infer: true, algebra: None },
            Some(w) => WeightsBlock {
                infer: false,
                algebra: Some(w.algebra.iter().enumerate().map(|(i, c)| (name(i), covector(c))).collect()),
            },
        };
        let representation = match self.rep_form {
            RepForm::Adjoint => RepresentationBlock { adjoint: true, ..Default::default() },
            RepForm::Trivial => RepresentationBlock {
                trivial: true,
                dim: Some(self.representation.dim()),
                ..Default::default()
            },
            RepForm::Explicit => RepresentationBlock {
                dim: Some(self.representation.dim()),
                matrices: Some(
                    self.representation
                        .matrices()
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| !m.is_zero())
                        .map(|(i, m)| {
                            let rows = (0..m.rows())
                                .map(|r| m.row(r).iter().map(ToString::to_string).collect())
                                .collect();
                            (name(i), rows)
                        })
                        .collect(),
                ),
                weights: self.weights.as_ref().map(|w| w.rep.iter().map(covector).collect()),
                ..Default::default()
            },
        };
        let lattice = LatticeBlock {
            symbols: self
                .lattice
                .symbols
                .iter()
                .map(|(n, p)| SymbolDecl { name: n.to_string(), parity: p.to_string() })
                .collect(),
            generators: self
                .lattice
                .generators
                .iter()
                .map(|d| d.iter().map(ToString::to_string).collect())
                .collect(),
        };
        InstanceFile { kind: self.kind, algebra, weights, representation, lattice }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("instance serializes")
    }
}

fn err(at: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Parse { at: at.into(), message: message.into() }
}

fn scalar(at: &str, s: &str) -> Result<GaussianRational, CliError> {
    s.parse().map_err(|e| err(at, format!("{e}")))
}

fn covector(at: &str, values: &[String], len: usize) -> Result<Weight, CliError> {
    if values.len() != len {
        return Err(err(at, format!("expected {len} coordinates, found {}", values.len())));
    }
    values
        .iter()
        .enumerate()
        .map(|(q, s)| scalar(&format!("{at}[{q}]"), s))
        .collect::<Result<Vec<_>, _>>()
        .map(Weight::new)
}

impl InstanceFile {
    pub fn compile(&self) -> Result<Instance, CliError> {
        let a = &self.algebra;
        let ground = match a.ground.as_str() {
            "real-complexified" => GroundMode::RealComplexified,
            "complex" => GroundMode::Complex,
            other => {
                return Err(err(
                    "algebra.ground",
                    format!("unknown ground mode {other:?}, expected \"real-complexified\" or \"complex\""),
                ))
            }
        };
        let n = a.basis.len();
        if let Some(d) = a.dim {
            if d != n {
                return Err(err("algebra.dim", format!("dim {d} but {n} basis names")));
            }
        }
        let mut index = BTreeMap::new();
        for (i, b) in a.basis.iter().enumerate() {
            if index.insert(b.as_str(), i).is_some() {
                return Err(err(format!("algebra.basis[{i}]"), format!("duplicate basis name {b:?}")));
            }
        }
        let lookup = |at: String, s: &str| -> Result<usize, CliError> {
            index.get(s).copied().ok_or_else(|| err(at, format!("unknown basis name {s:?}")))
        };
        let brackets = a
            .brackets
            .iter()
            .enumerate()
            .map(|(t, [l, r, o, c])| {
                let at = |k: usize| format!("algebra.brackets[{t}][{k}]");
                Ok(Bracket::new(lookup(at(0), l)?, lookup(at(1), r)?, lookup(at(2), o)?, scalar(&at(3), c)?))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let indices = |field: &str, list: &[String]| -> Result<Vec<usize>, CliError> {
            list.iter().enumerate().map(|(t, s)| lookup(format!("algebra.{field}[{t}]"), s)).collect()
        };
        let nilradical = indices("nilradical", &a.nilradical)?;
        let complement = indices("complement", &a.complement)?;
        let conjugation = match &a.conjugation {
            None => None,
            Some(pairs) => {
                let mut sigma: Vec<usize> = (0..n).collect();
                for (t, [x, y]) in pairs.iter().enumerate() {
                    let at = |k: usize| format!("algebra.conjugation[{t}][{k}]");
                    let (i, j) = (lookup(at(0), x)?, lookup(at(1), y)?);
                    sigma[i] = j;
                    sigma[j] = i;
                }
                Some(sigma)
            }
        };
        let g = LieAlgebraData::new(a.basis.clone(), brackets, nilradical, complement, conjugation, ground)
            .map_err(|e| err("algebra", e.to_string()))?;
        let c = g.complement().len();

        let r = &self.representation;
        let forms = [r.adjoint, r.trivial, r.matrices.is_some()].iter().filter(|&&b| b).count();
        if forms != 1 {
            return Err(err(
                "representation",
                "give exactly one of \"adjoint\": true, \"trivial\": true or \"matrices\"",
            ));
        }
        let (representation, rep_form) = if r.adjoint {
            if r.dim.is_some_and(|d| d != n) {
                return Err(err("representation.dim", "adjoint representation has the algebra's dimension"));
            }
            (RepresentationData::adjoint(&g), RepForm::Adjoint)
        } else if r.trivial {
            (RepresentationData::trivial(&g, r.dim.unwrap_or(1)), RepForm::Trivial)
        } else {
            let given = r.matrices.as_ref().expect("checked above");
            let m = r.dim.ok_or_else(|| err("representation.dim", "explicit matrices need \"dim\""))?;
            let mut mats = vec![ExactMatrix::zeros(m, m); n];
            for (key, rows) in given {
                let i = lookup(format!("representation.matrices.{key}"), key)?;
                if rows.len() != m || rows.iter().any(|row| row.len() != m) {
                    return Err(err(format!("representation.matrices.{key}"), format!("expected a {m}x{m} matrix")));
                }
                let parsed = rows
                    .iter()
                    .enumerate()
                    .map(|(ri, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(ci, s)| scalar(&format!("representation.matrices.{key}[{ri}][{ci}]"), s))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                mats[i] = ExactMatrix::from_rows(parsed);
            }
            (RepresentationData::new(m, mats), RepForm::Explicit)
        };
        if r.weights.is_some() && rep_form != RepForm::Explicit {
            return Err(err("representation.weights", "weights are only given for explicit matrices"));
        }

        let w = &self.weights;
        let weights = match (w.infer, &w.algebra) {
            (true, None) => {
                if r.weights.is_some() {
                    return Err(err("representation.weights", "weights are inferred; remove this field"));
                }
                None
            }
            (false, Some(table)) => {
                let mut alg = vec![Weight::zero(c); n];
                for (key, values) in table {
                    let i = lookup(format!("weights.algebra.{key}"), key)?;
                    alg[i] = covector(&format!("weights.algebra.{key}"), values, c)?;
                }
                let rep = match rep_form {
                    RepForm::Adjoint => alg.clone(),
                    RepForm::Trivial => vec![Weight::zero(c); representation.dim()],
                    RepForm::Explicit => {
                        let list = r.weights.as_ref().ok_or_else(|| {
                            err("representation.weights", "declared algebra weights need representation weights")
                        })?;
                        if list.len() != representation.dim() {
                            return Err(err(
                                "representation.weights",
                                format!("expected {} covectors", representation.dim()),
                            ));
                        }
                        list.iter()
                            .enumerate()
                            .map(|(k, v)| covector(&format!("representation.weights[{k}]"), v, c))
                            .collect::<Result<Vec<_>, _>>()?
                    }
                };
                Some(WeightAssignment::new(alg, rep))
            }
            _ => return Err(err("weights", "give either \"infer\": true or an \"algebra\" table")),
        };

        let mut symbols = PeriodSymbols::new();
        for (t, s) in self.lattice.symbols.iter().enumerate() {
            let parity = match s.parity.as_str() {
                "real" => Parity::Real,
                "imaginary" => Parity::Imaginary,
                other => {
                    return Err(err(
                        format!("lattice.symbols[{t}].parity"),
                        format!("unknown parity {other:?}, expected \"real\" or \"imaginary\""),
                    ))
                }
            };
            symbols
                .declare(&s.name, parity)
                .map_err(|e| err(format!("lattice.symbols[{t}].name"), e.to_string()))?;
        }
        let generators = self
            .lattice
            .generators
            .iter()
            .enumerate()
            .map(|(t, gen)| {
                gen.iter()
                    .enumerate()
                    .map(|(q, s)| {
                        symbols.parse(s).map_err(|e| err(format!("lattice.generators[{t}][{q}]"), e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;

        Ok(Instance {
            kind: self.kind,
            algebra: g,
            representation,
            rep_form,
            weights,
            lattice: LatticeData::new(symbols, generators),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEISENBERG: &str = r#"{
        "kind": "derham",
        "algebra": {
            "ground": "real-complexified",
            "basis": ["X", "Y", "Z"],
            "brackets": [["X", "Y", "Z", "1"]],
            "nilradical": ["X", "Y", "Z"]
        },
        "weights": {"infer": true},
        "representation": {"trivial": true}
    }"#;

    #[test]
    fn parses_a_minimal_instance() {
        let inst = Instance::parse(HEISENBERG).unwrap();
        assert_eq!(inst.algebra.dim(), 3);
        assert_eq!(inst.representation.dim(), 1);
        assert!(inst.weights.is_none());
        assert!(inst.lattice.generators.is_empty());
    }

    #[test]
    fn round_trip() {
        let inst = Instance::parse(HEISENBERG).unwrap();
        assert_eq!(Instance::parse(&inst.to_json()).unwrap(), inst);
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        match Instance::parse("{\"kind\": \"derham\",\n  \"algebra\": [}") {
            Err(CliError::Parse { at, .. }) => assert!(at.starts_with("line 2"), "{at}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn semantic_errors_carry_a_path() {
        let bad = HEISENBERG.replace("[\"X\", \"Y\", \"Z\", \"1\"]", "[\"X\", \"W\", \"Z\", \"1\"]");
        match Instance::parse(&bad) {
            Err(CliError::Parse { at, .. }) => assert_eq!(at, "algebra.brackets[0][1]"),
            other => panic!("unexpected {other:?}"),
        }
        let bad = HEISENBERG.replace("\"1\"]]", "\"1/0\"]]");
        match Instance::parse(&bad) {
            Err(CliError::Parse { at, .. }) => assert_eq!(at, "algebra.brackets[0][3]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn representation_needs_exactly_one_form() {
        let bad = HEISENBERG.replace("{\"trivial\": true}", "{\"trivial\": true, \"adjoint\": true}");
        assert!(matches!(Instance::parse(&bad), Err(CliError::Parse { .. })));
    }
}
