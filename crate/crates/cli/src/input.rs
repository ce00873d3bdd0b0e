//! The JSON input file shared by all subcommands.

use std::path::Path;
use std::sync::Arc;

use hopf_core::group::{GroupElt, GroupEltRecord, Mat2};
use hopf_core::hopf::{HopfSurface, SurfaceSpec};
use hopf_core::scalars::{EigenBasis, GaussRat, ScalarRecord};
use hopf_core::sections::Bundle;
use hopf_core::verify::VerifyConfig;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    #[serde(default)]
    pub surface: Option<SurfaceSpec>,
    #[serde(default)]
    pub n: Option<usize>,
    /// Hyperresonant parameter lists `a₁..a_N`.
    #[serde(default)]
    pub params: Vec<Vec<GaussRat>>,
    /// Eigendirections on a homothety.
    #[serde(default)]
    pub directions: Vec<[GaussRat; 2]>,
    #[serde(default)]
    pub verify: Option<VerifyConfig>,
    /// Group element for `normal-form`.
    #[serde(default)]
    pub element: Option<GroupEltRecord>,
    /// Bundle datum for `sections`.
    #[serde(default)]
    pub bundle: Option<BundleSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BundleSpec {
    Line(ScalarRecord),
    Projective([[ScalarRecord; 2]; 2]),
}

pub fn read_spec(path: &Path) -> Result<SpecFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    serde_json::from_str(&text)
        .map_err(|e| format!("{}:{}:{}: {}", path.display(), e.line(), e.column(), e))
}

impl SpecFile {
    pub fn surface(&self) -> Result<HopfSurface, String> {
        let spec = self
            .surface
            .as_ref()
            .ok_or("spec has no \"surface\" entry")?;
        spec.build().map_err(|e| format!("surface: {}", e))
    }

    pub fn element(&self, basis: &Arc<EigenBasis>) -> Result<GroupElt, String> {
        let rec = self
            .element
            .as_ref()
            .ok_or("spec has no \"element\" entry")?;
        GroupElt::from_record(basis, rec).map_err(|e| format!("element: {}", e))
    }

    pub fn bundle(&self, basis: &Arc<EigenBasis>) -> Result<Bundle, String> {
        let err = |e: &dyn std::fmt::Display| format!("bundle: {}", e);
        match self.bundle.as_ref().ok_or("spec has no \"bundle\" entry")? {
            BundleSpec::Line(a) => Ok(Bundle::Line(a.to_scalar(basis).map_err(|e| err(&e))?)),
            BundleSpec::Projective(g) => {
                let s = |x: &ScalarRecord| x.to_scalar(basis).map_err(|e| err(&e));
                let m = Mat2::new([[s(&g[0][0])?, s(&g[0][1])?], [s(&g[1][0])?, s(&g[1][1])?]])
                    .map_err(|e| err(&e))?;
                Ok(Bundle::Projective(m))
            }
        }
    }
}
