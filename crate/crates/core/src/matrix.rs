//! Dense linear algebra over F_p: reduced row echelon forms, ranks, null
//! spaces, and row-space membership. Everything downstream identifies a code
//! with the RREF of its generators, which makes equality and duality cheap.

use crate::arith::PrimeField;
use crate::cyclic::FpPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn new(field: PrimeField, ncols: usize, rows: Vec<Vec<u32>>) -> Self {
        let p = field.p();
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "row width mismatch");
                r.into_iter().map(|x| x % p).collect()
            })
            .collect();
        FpMatrix { field, ncols, rows }
    }

    pub fn empty(field: PrimeField, ncols: usize) -> Self {
        FpMatrix {
            field,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0; n];
                r[i] = 1;
                r
            })
            .collect();
        FpMatrix {
            field,
            ncols: n,
            rows,
        }
    }

    pub fn from_cyclic_shifts(poly: &FpPoly) -> Self {
        let n = poly.n();
        let rows = (0..n).map(|i| poly.shifted(i)).collect();
        FpMatrix {
            field: poly.field(),
            ncols: n,
            rows,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field;
        let (nrows, ncols) = (self.rows.len(), self.ncols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(pr) = (r..nrows).find(|&i| self.rows[i][c] != 0) else {
                continue;
            };
            self.rows.swap(r, pr);
            let inv = f.inv(self.rows[r][c]).expect("pivot non-zero");
            if inv != 1 {
                for x in self.rows[r].iter_mut() {
                    *x = f.mul(*x, inv);
                }
            }
            for i in 0..nrows {
                if i != r && self.rows[i][c] != 0 {
                    let fac = self.rows[i][c];
                    for j in 0..ncols {
                        let t = f.mul(fac, self.rows[r][j]);
                        self.rows[i][j] = f.sub(self.rows[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// RREF with zero rows dropped: the canonical representative of the row
    /// space. Two matrices span the same space iff their canonical forms are
    /// equal.
    pub fn canonical(&self) -> FpMatrix {
        let mut m = self.clone();
        m.rref();
        m.rows.retain(|r| r.iter().any(|&x| x != 0));
        m
    }

    pub fn rank(&self) -> usize {
        self.canonical().nrows()
    }

    /// Basis of the right null space { x : G x^T = 0 }.
    pub fn nullspace(&self) -> FpMatrix {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        m.rows.truncate(pivots.len());
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0; self.ncols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.rows[r][fc]);
                }
                v
            })
            .collect();
        FpMatrix {
            field: f,
            ncols: self.ncols,
            rows,
        }
    }

    /// Is `word` in the row space?
    pub fn row_space_contains(&self, word: &[u32]) -> bool {
        assert_eq!(word.len(), self.ncols);
        let f = self.field;
        let canon = self.canonical();
        let mut w: Vec<u32> = word.iter().map(|&x| x % f.p()).collect();
        for row in &canon.rows {
            let pivot = row.iter().position(|&x| x != 0).expect("no zero rows");
            if w[pivot] != 0 {
                let fac = w[pivot];
                for j in 0..self.ncols {
                    w[j] = f.sub(w[j], f.mul(fac, row[j]));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stacked(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.ncols, other.ncols);
        assert_eq!(self.field, other.field);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        FpMatrix {
            field: self.field,
            ncols: self.ncols,
            rows,
        }
    }

    /// Applies the column relocation `j -> perm[j]` to every row.
    pub fn permute_cols(&self, perm: &[usize]) -> FpMatrix {
        assert_eq!(perm.len(), self.ncols);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![0; self.ncols];
                for (j, &x) in r.iter().enumerate() {
                    out[perm[j]] = x;
                }
                out
            })
            .collect();
        FpMatrix {
            field: self.field,
            ncols: self.ncols,
            rows,
        }
    }

    pub fn same_row_space(&self, other: &FpMatrix) -> bool {
        self.field == other.field
            && self.ncols == other.ncols
            && self.canonical() == other.canonical()
    }
}
