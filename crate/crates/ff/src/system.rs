//! Linear systems with named unknowns.

use crate::error::{FfError, Result};
use crate::field::{Elem, FieldSpec};
use crate::matrix::Matrix;

/// Names an unknown as entry `(row, col)` of the unknown matrix block `block`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Unknown {
    pub block: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub coeffs: Matrix,
    pub rhs: Vec<Elem>,
    pub vars: Vec<Unknown>,
}

impl LinearSystem {
    pub fn new(coeffs: Matrix, rhs: Vec<Elem>, vars: Vec<Unknown>) -> Result<Self> {
        if coeffs.rows() != rhs.len() {
            return Err(FfError::DimensionMismatch(format!(
                "{} equations but {} right-hand side entries",
                coeffs.rows(),
                rhs.len()
            )));
        }
        if coeffs.cols() != vars.len() {
            return Err(FfError::DimensionMismatch(format!(
                "{} columns but {} named unknowns",
                coeffs.cols(),
                vars.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = vars.iter().find(|v| !seen.insert(**v)) {
            return Err(FfError::DimensionMismatch(format!("unknown {dup:?} named twice")));
        }
        Ok(LinearSystem { coeffs, rhs, vars })
    }

    pub fn num_unknowns(&self) -> usize {
        self.coeffs.cols()
    }

    pub fn num_equations(&self) -> usize {
        self.coeffs.rows()
    }

    /// One solution with free variables set to zero, or `None` if inconsistent.
    pub fn solve(&self, f: &FieldSpec) -> Result<Option<Vec<Elem>>> {
        self.coeffs.solve(f, &self.rhs)
    }

    /// Whether `x` satisfies every equation exactly.
    pub fn is_solution(&self, f: &FieldSpec, x: &[Elem]) -> bool {
        x.len() == self.num_unknowns() && self.coeffs.mul_vec(f, x) == self.rhs
    }
}

/// Row-at-a-time assembly of a dense system from sparse equations.
#[derive(Debug)]
pub struct SystemBuilder {
    vars: Vec<Unknown>,
    data: Vec<Elem>,
    rhs: Vec<Elem>,
}

impl SystemBuilder {
    pub fn new(vars: Vec<Unknown>) -> Self {
        SystemBuilder { vars, data: Vec::new(), rhs: Vec::new() }
    }

    /// Appends `sum coeff * x[index] = rhs`; repeated indices accumulate.
    pub fn push(&mut self, f: &FieldSpec, terms: &[(usize, Elem)], rhs: Elem) {
        let n = self.vars.len();
        let start = self.data.len();
        self.data.resize(start + n, 0);
        let row = &mut self.data[start..];
        for &(j, c) in terms {
            row[j] = f.add(row[j], c);
        }
        self.rhs.push(rhs);
    }

    pub fn num_equations(&self) -> usize {
        self.rhs.len()
    }

    pub fn finish(self) -> LinearSystem {
        let rows = self.rhs.len();
        let coeffs = Matrix::from_vec(rows, self.vars.len(), self.data).expect("rows have full width");
        LinearSystem::new(coeffs, self.rhs, self.vars).expect("builder keeps shapes consistent")
    }
}
