//! Dense matrices over Z_N with the Gaussian-elimination kit (rank, nullity,
//! inverse, determinant) used by the coordinate maps and the fixed-point
//! counters.

use crate::field::{Field, FieldElem};

/// Row-major matrix over Z_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> ModMatrix {
        ModMatrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> ModMatrix {
        let mut m = ModMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> ModMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = ModMatrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.elem(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.field.elem(self.data[i * self.cols + j] as i64)
    }

    /// Raw row-major entries, for hot loops that bypass `FieldElem`.
    pub fn raw(&self) -> &[u64] {
        &self.data
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        assert_eq!(v.modulus(), self.field.modulus());
        self.data[i * self.cols + j] = v.value();
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        assert_eq!(self.field, other.field);
        let m = self.field.modulus();
        let mut out = ModMatrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = (*cell + a * other.data[k * other.cols + j]) % m;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let m = self.field.modulus();
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = (acc + self.data[i * self.cols + j] * v[j]) % m;
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut out = ModMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn neg(&self) -> ModMatrix {
        let m = self.field.modulus();
        let mut out = self.clone();
        for v in &mut out.data {
            *v = (m - *v) % m;
        }
        out
    }

    pub fn sub(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let m = self.field.modulus();
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + m - *b) % m;
        }
        out
    }

    /// Sub-block [r0..r0+h) × [c0..c0+w).
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> ModMatrix {
        let mut out = ModMatrix::zeros(self.field, h, w);
        for i in 0..h {
            for j in 0..w {
                out.data[i * w + j] = self.data[(r0 + i) * self.cols + c0 + j];
            }
        }
        out
    }

    /// Row-echelon rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let m = self.field.modulus();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| a[r * cols + col] != 0);
            let Some(p) = pivot else { continue };
            a.swap_chunks(p, rank, cols);
            let inv = self
                .field
                .elem(a[rank * cols + col] as i64)
                .inv()
                .expect("pivot is nonzero")
                .value();
            for j in col..cols {
                a[rank * cols + j] = a[rank * cols + j] * inv % m;
            }
            for r in 0..rows {
                if r != rank && a[r * cols + col] != 0 {
                    let factor = a[r * cols + col];
                    for j in col..cols {
                        let sub = factor * a[rank * cols + j] % m;
                        a[r * cols + j] = (a[r * cols + j] + m - sub) % m;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// A basis of the right kernel, each vector of length `cols`.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let m = self.field.modulus();
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivot_col_of_row = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| a[r * cols + col] != 0);
            let Some(p) = pivot else { continue };
            a.swap_chunks(p, rank, cols);
            let inv = self
                .field
                .elem(a[rank * cols + col] as i64)
                .inv()
                .expect("pivot is nonzero")
                .value();
            for j in col..cols {
                a[rank * cols + j] = a[rank * cols + j] * inv % m;
            }
            for r in 0..rows {
                if r != rank && a[r * cols + col] != 0 {
                    let factor = a[r * cols + col];
                    for j in col..cols {
                        let sub = factor * a[rank * cols + j] % m;
                        a[r * cols + j] = (a[r * cols + j] + m - sub) % m;
                    }
                }
            }
            pivot_col_of_row.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        free_cols
            .iter()
            .map(|&fc| {
                let mut v = vec![0; cols];
                v[fc] = 1;
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    // x_pc = -a[r][fc] with the row normalized
                    v[pc] = (m - a[r * cols + fc]) % m;
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix; None if singular.
    pub fn inverse(&self) -> Option<ModMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let m = self.field.modulus();
        let mut a = self.data.clone();
        let mut inv = ModMatrix::identity(self.field, n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0)?;
            a.swap_chunks(pivot, col, n);
            inv.swap_chunks(pivot, col, n);
            let piv_inv = self
                .field
                .elem(a[col * n + col] as i64)
                .inv()
                .expect("pivot is nonzero")
                .value();
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * piv_inv % m;
                inv[col * n + j] = inv[col * n + j] * piv_inv % m;
            }
            for r in 0..n {
                if r != col && a[r * n + col] != 0 {
                    let factor = a[r * n + col];
                    for j in 0..n {
                        let s1 = factor * a[col * n + j] % m;
                        a[r * n + j] = (a[r * n + j] + m - s1) % m;
                        let s2 = factor * inv[col * n + j] % m;
                        inv[r * n + j] = (inv[r * n + j] + m - s2) % m;
                    }
                }
            }
        }
        Some(ModMatrix {
            rows: n,
            cols: n,
            field: self.field,
            data: inv,
        })
    }

    /// Determinant by elimination.
    pub fn det(&self) -> FieldElem {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let m = self.field.modulus();
        let mut a = self.data.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return self.field.zero();
            };
            if pivot != col {
                a.swap_chunks(pivot, col, n);
                det = -det;
            }
            let piv = self.field.elem(a[col * n + col] as i64);
            det = det * piv;
            let piv_inv = piv.inv().expect("pivot is nonzero").value();
            for r in col + 1..n {
                if a[r * n + col] != 0 {
                    let factor = a[r * n + col] * piv_inv % m;
                    for j in col..n {
                        let s = factor * a[col * n + j] % m;
                        a[r * n + j] = (a[r * n + j] + m - s) % m;
                    }
                }
            }
        }
        det
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, r1: usize, r2: usize, width: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, r1: usize, r2: usize, width: usize) {
        if r1 == r2 {
            return;
        }
        for j in 0..width {
            self.swap(r1 * width + j, r2 * width + j);
        }
    }
}
