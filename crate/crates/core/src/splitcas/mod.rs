//! Split Casimir operators on g⊗n and their spectra on S_n modules.
//!
//! The measured quantity is the spectrum of Ĉ_(n) on the multiplicity space
//! of an S_n irrep R inside g⊗n. It is computed from exact trace moments of
//! integer block matrices (one per dominant weight) and a Vandermonde solve
//! against a supplied list of candidate eigenvalues.

pub mod blocks;
pub mod checks;
pub mod modular;
pub mod moments;
pub mod operator;
pub mod oracle;
pub mod symmetric;

pub use blocks::{Block, ModuleBlocks};
pub use moments::{annihilator_check, merge_candidates, AnnihilatorReport, Candidate, SpectrumError};
pub use operator::{OperatorError, SplitCasimirOperator};
pub use symmetric::{IsotypicProjector, Perm};

use crate::chevalley::LieAlgebra;
use crate::rational::{ser_q, Q};
use crate::udim::Module;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    #[serde(serialize_with = "ser_q")]
    pub eigenvalue: Q,
    pub labels: Vec<String>,
    pub dim: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleSpectrum {
    pub algebra: String,
    pub module: Module,
    pub entries: Vec<SpectrumEntry>,
}

impl ModuleSpectrum {
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.dim).sum()
    }

    /// Measured dimension at an eigenvalue (0 if absent).
    pub fn dim_at(&self, eigenvalue: &Q) -> u64 {
        self.entries.iter().find(|e| &e.eigenvalue == eigenvalue).map_or(0, |e| e.dim)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SplitcasError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// The blocks of one (algebra, module) pair, reusable for moments,
/// spectra and annihilator checks.
pub struct Measurement {
    pub algebra: String,
    pub blocks: ModuleBlocks,
}

impl Measurement {
    pub fn new(alg: &LieAlgebra, module: Module) -> Result<Measurement, OperatorError> {
        let op = SplitCasimirOperator::new(alg, module.degree())?;
        Ok(Measurement { algebra: alg.name.clone(), blocks: ModuleBlocks::build(&op, module) })
    }

    pub fn module(&self) -> Module {
        self.blocks.module
    }

    /// Moments on the multiplicity space, k = 0..=kmax.
    pub fn moments(&self, kmax: usize) -> Vec<Q> {
        moments::multiplicity_moments(&self.blocks, kmax)
    }

    /// Solves for multiplicities with kmax = #candidates + 3.
    pub fn spectrum(&self, candidates: &[Candidate]) -> Result<ModuleSpectrum, SpectrumError> {
        if candidates.is_empty() {
            return Err(SpectrumError::EmptyCandidates);
        }
        let tau = self.moments(candidates.len() + 3);
        let dims = moments::solve_multiplicities(candidates, &tau)?;
        Ok(ModuleSpectrum {
            algebra: self.algebra.clone(),
            module: self.module(),
            entries: candidates
                .iter()
                .zip(dims)
                .filter(|(_, m)| *m > 0)
                .map(|(c, dim)| SpectrumEntry { eigenvalue: c.eigenvalue.clone(), labels: c.labels.clone(), dim })
                .collect(),
        })
    }

    /// Π (Ĉ − λ) over the measured eigenvalues applied to random vectors.
    pub fn annihilator_check(&self, spectrum: &ModuleSpectrum, min_vectors: usize, seed: u64) -> AnnihilatorReport {
        let eig: Vec<Q> = spectrum.entries.iter().map(|e| e.eigenvalue.clone()).collect();
        annihilator_check(&self.blocks, &eig, min_vectors, seed)
    }
}

/// tr(P_R Ĉ^k) on g⊗n for k = 0..=kmax.
pub fn trace_moments(alg: &LieAlgebra, module: Module, kmax: usize) -> Result<Vec<Q>, OperatorError> {
    let m = Measurement::new(alg, module)?;
    let dim_r = Q::from_integer(symmetric::irrep_dim(module.partition()).into());
    Ok(m.moments(kmax).into_iter().map(|t| t * &dim_r).collect())
}

pub fn module_spectrum(alg: &LieAlgebra, module: Module, candidates: &[Candidate]) -> Result<ModuleSpectrum, SplitcasError> {
    Ok(Measurement::new(alg, module)?.spectrum(candidates)?)
}

/// CSV lines "k,trace" for a moment list.
pub fn moments_csv(moments: &[Q]) -> String {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["k", "trace"]).unwrap();
    for (k, t) in moments.iter().enumerate() {
        w.write_record([k.to_string(), crate::rational::fmt_q(t)]).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
