use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, ValueEnum};
use matroid_kl::matroid::{
    boolean, complete_bipartite_2n, fan, figure_one, projective_geometry, thagomizer, uniform,
    v_matroid, wheel, whirl,
};
use matroid_kl::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Uniform,
    Boolean,
    /// `U_{k-1,h} ⊕ U_{1,n-h}`
    V,
    FigureOne,
    Thagomizer,
    /// `K_{2,n}`
    K2n,
    Fan,
    Wheel,
    Whirl,
    /// Projective geometry `PG(r, q)`
    Pg,
}

/// Where the matroid comes from: exactly one of a named family, a file, or inline JSON.
#[derive(Args, Clone, Debug, Default)]
pub struct SourceArgs {
    #[arg(long, value_enum, group = "source")]
    pub family: Option<Family>,
    /// Matroid JSON `{"n","bases"}` or graph JSON `{"vertices","edges"}` in a file.
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,
    /// Matroid or graph JSON given inline.
    #[arg(long, group = "source")]
    pub matroid: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub q: Option<u32>,
}

fn need<T: Copy>(v: Option<T>, name: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| anyhow!("family {family:?} needs --{name}"))
}

impl SourceArgs {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.file.is_some() || self.matroid.is_some()
    }

    /// A short human label for reports.
    pub fn label(&self) -> String {
        if let Some(f) = self.family {
            let params: Vec<String> = [("k", self.k), ("h", self.h), ("n", self.n), ("r", self.r)]
                .iter()
                .filter_map(|(name, v)| v.map(|v| format!("{name}={v}")))
                .chain(self.q.map(|q| format!("q={q}")))
                .collect();
            format!("{f:?}({})", params.join(","))
        } else if let Some(p) = &self.file {
            p.display().to_string()
        } else {
            "inline".to_string()
        }
    }

    pub fn load(&self) -> Result<Matroid> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            return Ok(Matroid::from_json_str(&text)?);
        }
        if let Some(text) = &self.matroid {
            return Ok(Matroid::from_json_str(text)?);
        }
        let Some(family) = self.family else {
            bail!("give a matroid with --family, --file or --matroid");
        };
        let m = match family {
            Family::Uniform => uniform(need(self.k, "k", family)?, need(self.n, "n", family)?)?,
            Family::Boolean => {
                let n = need(self.n, "n", family)?;
                if n > matroid_kl::subset::MAX_ELEMENTS {
                    return Err(matroid_kl::Error::GroundSetTooLarge {
                        n,
                        cap: matroid_kl::subset::MAX_ELEMENTS,
                    }
                    .into());
                }
                boolean(n)
            }
            Family::V => v_matroid(
                need(self.k, "k", family)?,
                need(self.h, "h", family)?,
                need(self.n, "n", family)?,
            )?,
            Family::FigureOne => figure_one(),
            Family::Thagomizer => thagomizer(need(self.n, "n", family)?)?,
            Family::K2n => complete_bipartite_2n(need(self.n, "n", family)?)?,
            Family::Fan => fan(need(self.n, "n", family)?)?,
            Family::Wheel => wheel(need(self.n, "n", family)?)?,
            Family::Whirl => whirl(need(self.n, "n", family)?)?,
            Family::Pg => {
                projective_geometry(need(self.r, "r", family)?, need(self.q, "q", family)?)?
            }
        };
        Ok(m)
    }
}
