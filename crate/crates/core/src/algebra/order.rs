use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::poly::RingDescriptor;

/// Lexicographic term orders on the grid ring.
///
/// Exponent vectors store auxiliary variables first, then the grid row-major.
/// The grid-only orders rank auxiliaries below every grid variable; only
/// [`TermOrder::BlockElimination`] ranks them on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TermOrder {
    /// `x_{1,1} ≻ x_{1,2} ≻ … ≻ x_{1,n} ≻ x_{2,1} ≻ …`
    #[default]
    LexRowMajor,
    /// `x_{1,1} ≻ x_{2,1} ≻ … ≻ x_{m,1} ≻ x_{1,2} ≻ …`
    LexColumnMajor,
    /// Auxiliaries above the grid, lex inside each block, grid row-major.
    BlockElimination,
}

impl TermOrder {
    pub fn name(self) -> &'static str {
        match self {
            TermOrder::LexRowMajor => "lex-row-major",
            TermOrder::LexColumnMajor => "lex-column-major",
            TermOrder::BlockElimination => "block-elimination",
        }
    }

    /// Storage indices from most to least significant variable.
    pub fn precedence(self, ring: &RingDescriptor) -> Vec<usize> {
        let aux = ring.aux;
        let grid_row: Vec<usize> = (aux..aux + ring.rows * ring.cols).collect();
        let aux_vars = 0..aux;
        match self {
            TermOrder::LexRowMajor => grid_row.into_iter().chain(aux_vars).collect(),
            TermOrder::LexColumnMajor => (0..ring.cols)
                .flat_map(|j| (0..ring.rows).map(move |i| aux + i * ring.cols + j))
                .chain(aux_vars)
                .collect(),
            TermOrder::BlockElimination => aux_vars.chain(grid_row).collect(),
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex-row-major" => Ok(TermOrder::LexRowMajor),
            "lex-column-major" => Ok(TermOrder::LexColumnMajor),
            "block-elimination" => Ok(TermOrder::BlockElimination),
            _ => Err(format!(
                "unknown term order {s:?} (expected lex-row-major, lex-column-major or block-elimination)"
            )),
        }
    }
}
