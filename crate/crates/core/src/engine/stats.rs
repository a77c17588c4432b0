use super::Algo;

/// One selection round: a degree batch on the matrix path, or a run of
/// consecutive pairs of equal degree on the polynomial path.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RoundStats {
    pub degree: u32,
    pub pairs: usize,
    pub rejected_syz: usize,
    pub rejected_rew: usize,
    pub rows: usize,
    pub cols: usize,
    pub new: usize,
    pub zero: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatrixDims {
    pub rows: usize,
    pub cols: usize,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunStats {
    pub algo: Algo,
    pub n_vars: usize,
    pub deg_limit: u32,
    pub rounds: Vec<RoundStats>,
    pub mutants_appended: usize,
    /// Largest matrix by entry count, ties going to the higher degree.
    pub max_matrix: MatrixDims,
    /// Highest degree among pairs that survived the criteria.
    pub max_degree: u32,
    pub basis_size: usize,
    pub reduced_basis_size: usize,
    pub wall_ms: u128,
}

impl RunStats {
    pub(crate) fn new(algo: Algo, n_vars: usize, deg_limit: u32) -> Self {
        RunStats {
            algo,
            n_vars,
            deg_limit,
            rounds: Vec::new(),
            mutants_appended: 0,
            max_matrix: MatrixDims::default(),
            max_degree: 0,
            basis_size: 0,
            reduced_basis_size: 0,
            wall_ms: 0,
        }
    }

    pub(crate) fn note_matrix(&mut self, rows: usize, cols: usize, degree: u32) {
        let cur = &self.max_matrix;
        if (rows * cols, degree) > (cur.rows * cur.cols, cur.degree) {
            self.max_matrix = MatrixDims { rows, cols, degree };
        }
    }

    /// Equal apart from wall time.
    pub fn same_counts(&self, other: &RunStats) -> bool {
        RunStats {
            wall_ms: 0,
            algo: Algo::Gvw,
            ..self.clone()
        } == RunStats {
            wall_ms: 0,
            algo: Algo::Gvw,
            ..other.clone()
        }
    }
}
