use bmw_core::qgroup::{Family, LieType};
use bmw_core::repr::decomp::{check_hypotheses, minimal_n};
use bmw_core::scalar::ScalarRing;
use bmw_core::{BmwError, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Parameters shared by every command.
#[derive(Args, Clone, Debug)]
pub struct JobArgs {
    /// Lie type of the quantum group.
    #[arg(long = "type", value_enum)]
    pub ty: TypeArg,
    /// Rank; 0 picks the smallest n for which the tensor representation is faithful.
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    /// Number of strands.
    #[arg(long)]
    pub r: usize,
    /// Multiplicative order of q²; 0 means q is generic.
    #[arg(long, default_value_t = 0)]
    pub e: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized property checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// A validated job.
#[derive(Clone, Copy, Debug)]
pub struct Job {
    pub ty: LieType,
    pub r: usize,
    pub ring: ScalarRing,
    pub format: Format,
    pub seed: u64,
}

impl JobArgs {
    pub fn resolve(&self) -> Result<Job> {
        let family = match self.ty {
            TypeArg::B => Family::B,
            TypeArg::C => Family::C,
            TypeArg::D => Family::D,
        };
        if self.r < 2 {
            return Err(BmwError::Usage(format!("r = {}: the algebra needs at least two strands", self.r)));
        }
        let n = if self.n == 0 { minimal_n(family, self.r) } else { self.n };
        let ty = LieType::new(family, n)?;
        check_hypotheses(&ty, self.r)?;
        let ring = ScalarRing::from_e(self.e)?;
        Ok(Job { ty, r: self.r, ring, format: self.format, seed: self.seed })
    }
}

impl Job {
    /// The echo of the job that heads every output: ϱ in `u` with `q = u²`,
    /// and the order `m` of `u = ζ_m` when specialized.
    pub fn params(&self) -> Value {
        let m = self.ring.cyclotomic_order();
        json!({
            "type": self.ty.family.to_string(),
            "n": self.ty.n,
            "r": self.r,
            "e": self.ring.e(),
            "rho": self.ty.varrho().to_string(),
            "cyclotomic_order": m,
            "u": m.map_or("u".to_string(), |m| format!("zeta_{m}")),
            "seed": self.seed,
        })
    }

    pub fn params_line(&self) -> String {
        let m = self.ring.cyclotomic_order().map_or("none".to_string(), |m| m.to_string());
        format!(
            "type={} n={} r={} e={} rho={} cyclotomic_order={} seed={}",
            self.ty.family,
            self.ty.n,
            self.r,
            self.ring.e(),
            self.ty.varrho(),
            m,
            self.seed
        )
    }
}
