//! JSON documents written by the command-line tool. Exact rationals are
//! `"p/q"` strings and coefficient arrays are constant-first; the field
//! names are listed in `docs/schema.md`.

use besselw::algebra::rational::format_rational;
use besselw::morse::{deformed_potential_unchecked, predicted_energies, SeedRole};
use besselw::oracle::SpectrumReport;
use besselw::{
    certify_admissible, parse_rational, AdmissibilityCertificate, DeformationSpec, MorseParam,
    Polynomial, Rational, SeedSet, Sign,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelDocument {
    pub spec: SpecEcho,
    /// Absent when the spec is not admissible.
    pub potential: Option<PotentialDoc>,
    pub levels: Vec<usize>,
    pub spectrum: Vec<String>,
    pub certificate: CertificateDoc,
    pub samples: Vec<SampleDoc>,
    pub oracle: Option<OracleDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub a: String,
    pub pairs: Vec<usize>,
    pub virtuals: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialDoc {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub ok: bool,
    pub wronskian_positive_roots: Option<usize>,
    pub wronskian_degree: Option<usize>,
    pub pairs_juxtaposed: bool,
    pub bound_check: Vec<IndexCheckDoc>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexCheckDoc {
    pub index: usize,
    pub role: String,
    pub ok: bool,
}

/// Exact potential value at a rational point `y = e^x`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleDoc {
    pub y: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub computed: Vec<f64>,
    pub raw: Vec<f64>,
    pub extrapolated: bool,
    pub max_abs_err: f64,
    pub node_counts: Vec<usize>,
    pub numerator_roots: Vec<usize>,
    pub pass: bool,
    pub diagnostics: Vec<String>,
}

pub fn rationals(cs: &[Rational]) -> Vec<String> {
    cs.iter().map(format_rational).collect()
}

pub fn poly_strings(p: &Polynomial) -> Vec<String> {
    rationals(p.coeffs())
}

impl From<&AdmissibilityCertificate> for CertificateDoc {
    fn from(c: &AdmissibilityCertificate) -> Self {
        CertificateDoc {
            ok: c.ok,
            wronskian_positive_roots: c.wronskian_positive_roots,
            wronskian_degree: c.wronskian_degree,
            pairs_juxtaposed: c.pairs_juxtaposed,
            bound_check: c
                .bound_check
                .iter()
                .map(|b| IndexCheckDoc {
                    index: b.index,
                    role: match b.role {
                        SeedRole::Pair => "pair".into(),
                        SeedRole::Virtual => "virtual".into(),
                    },
                    ok: b.ok,
                })
                .collect(),
            notes: c.notes.clone(),
        }
    }
}

impl OracleDoc {
    pub fn new(r: &SpectrumReport, grid: &besselw::Grid) -> Self {
        OracleDoc {
            x_min: grid.x_min(),
            x_max: grid.x_max(),
            points: grid.points(),
            computed: r.computed.clone(),
            raw: r.raw.clone(),
            extrapolated: r.extrapolated,
            max_abs_err: r.max_abs_err,
            node_counts: r.node_counts.clone(),
            numerator_roots: r.numerator_roots.clone(),
            pass: r.pass,
            diagnostics: r.diagnostics.clone(),
        }
    }
}

/// Points where the exact potential is recorded.
pub fn sample_points() -> Vec<Rational> {
    ["1/2", "1", "2"]
        .iter()
        .map(|s| parse_rational(s).expect("literal"))
        .collect()
}

impl ModelDocument {
    /// Certifies the spec and, when admissible, records its potential,
    /// spectrum and exact samples.
    pub fn build(spec: &DeformationSpec) -> Self {
        let cert = certify_admissible(spec);
        let potential = if cert.ok {
            deformed_potential_unchecked(spec).ok()
        } else {
            None
        };
        let samples = potential
            .as_ref()
            .map(|v| {
                sample_points()
                    .into_iter()
                    .filter_map(|y| {
                        v.eval(&y).map(|val| SampleDoc {
                            y: format_rational(&y),
                            value: format_rational(&val),
                        })
                    })
                    .collect()
            })
            .unwrap_or_default();
        let (levels, spectrum) = if cert.ok {
            (
                spec.surviving_levels(),
                rationals(&predicted_energies(spec)),
            )
        } else {
            (Vec::new(), Vec::new())
        };
        ModelDocument {
            spec: SpecEcho {
                a: format_rational(spec.param().a()),
                pairs: spec.pairs().indexes().to_vec(),
                virtuals: spec.virtuals().indexes().to_vec(),
            },
            potential: potential.map(|v| PotentialDoc {
                num: poly_strings(v.num()),
                den: poly_strings(v.den()),
            }),
            levels,
            spectrum,
            certificate: CertificateDoc::from(&cert),
            samples,
            oracle: None,
        }
    }

    /// Rebuilds the spec the document was made from.
    pub fn to_spec(&self, allow_threshold: bool) -> Result<DeformationSpec, CliError> {
        let a = parse_rational(&self.spec.a)?;
        let param = if allow_threshold {
            MorseParam::with_threshold(a)
        } else {
            MorseParam::new(a)?
        };
        Ok(DeformationSpec::new(
            param,
            SeedSet::from_unsorted(Sign::Minus, self.spec.pairs.clone())?,
            SeedSet::from_unsorted(Sign::Minus, self.spec.virtuals.clone())?,
        )?)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn render_line(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(s)?)
    }
}
