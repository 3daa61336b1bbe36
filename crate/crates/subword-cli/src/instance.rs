use crate::Failure;
use clap::Args;
use std::path::PathBuf;
use std::sync::Arc;
use subword_complex::{
    is_type_a, word_from_one_line, CoxeterMatrix, CoxeterSystem, Element, SubwordComplex, Word,
};

/// The instance every subcommand works on: a Coxeter system, the ambient
/// word Q, and the target element ρ.
#[derive(Args)]
pub struct InstanceArgs {
    /// Coxeter type label: A3, B4, D5, E6..E8, F4, G2, H3, H4, I2(5), ...
    #[arg(long = "type", value_name = "LABEL")]
    pub type_label: Option<String>,

    /// Coxeter matrix file: the rank on the first line, then the bond table
    #[arg(long, value_name = "FILE", conflicts_with = "type_label")]
    pub matrix: Option<PathBuf>,

    /// The word Q as space-separated generators, e.g. "s2 s3 s1 s3 s2"
    #[arg(long, value_name = "WORD")]
    pub word: String,

    /// Target ρ: a word ("s2 s3 s2 s1"), "w0", or a one-line permutation
    /// "[4,1,3,2]" (type A only)
    #[arg(long, value_name = "TARGET")]
    pub rho: String,
}

impl InstanceArgs {
    pub fn system(&self) -> Result<Arc<CoxeterSystem>, Failure> {
        let sys = match (&self.type_label, &self.matrix) {
            (Some(label), None) => {
                CoxeterSystem::from_type(label).map_err(|e| Failure::User(e.to_string()))?
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::User(format!("cannot read {}: {e}", path.display())))?;
                let matrix = CoxeterMatrix::parse(&text)
                    .map_err(|e| Failure::User(format!("{}: {e}", path.display())))?;
                CoxeterSystem::from_matrix(matrix).map_err(|e| Failure::User(e.to_string()))?
            }
            _ => {
                return Err(Failure::User(
                    "specify the Coxeter system with --type LABEL or --matrix FILE".into(),
                ))
            }
        };
        Ok(Arc::new(sys))
    }

    pub fn build(&self) -> Result<SubwordComplex, Failure> {
        let sys = self.system()?;
        let word: Word = self
            .word
            .parse()
            .map_err(|e: subword_complex::CoxeterError| Failure::User(e.to_string()))?;
        let target = parse_target(&sys, &self.rho)?;
        SubwordComplex::new(sys, word.letters().to_vec(), target)
            .map_err(|e| Failure::User(e.to_string()))
    }
}

fn parse_target(sys: &CoxeterSystem, text: &str) -> Result<Element, Failure> {
    let text = text.trim();
    if text == "w0" {
        return Ok(sys.longest_element());
    }
    if let Some(body) = text.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| Failure::User(format!("unclosed permutation {text:?}")))?;
        if !is_type_a(sys.matrix()) {
            return Err(Failure::User(
                "one-line permutation targets need a type A system".into(),
            ));
        }
        let perm: Vec<usize> = body
            .split(',')
            .map(|v| v.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::User(format!("bad permutation {text:?}: {e}")))?;
        if perm.len() != sys.rank() + 1 {
            return Err(Failure::User(format!(
                "the permutation must list 1..={} for rank {}",
                sys.rank() + 1,
                sys.rank()
            )));
        }
        let word = word_from_one_line(&perm).map_err(|e| Failure::User(e.to_string()))?;
        return sys
            .element_from_word(word.letters())
            .map_err(|e| Failure::Internal(e.to_string()));
    }
    let word: Word = text
        .parse()
        .map_err(|e: subword_complex::CoxeterError| Failure::User(e.to_string()))?;
    sys.element_from_word(word.letters())
        .map_err(|e| Failure::User(e.to_string()))
}
