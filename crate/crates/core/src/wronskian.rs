//! Two-directional Wronskians and the tau functions built from them.
//!
//! Indices are 0-based throughout; `minor` takes the indices to delete.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{CacheError, MatrixError};
use crate::exactalg::{parse, GaussianRational, LaurentPoly};
use crate::operators::{apply_l, DiffOp};
use crate::verifier::CheckReport;

/// Square matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl SymMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    /// Copy with row `i` multiplied by `c`.
    pub fn scale_row(&self, i: usize, c: &GaussianRational) -> Self {
        let mut out = self.clone();
        for j in 0..self.dim {
            out.entries[i * self.dim + j] = self.get(i, j).scale(c);
        }
        out
    }

    pub fn max_terms(&self) -> usize {
        self.entries.iter().map(LaurentPoly::len).max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetAlgorithm {
    /// One-step fraction-free (Bareiss) elimination.
    #[default]
    FractionFree,
    /// Laplace expansion with memoised minors.
    Cofactor,
}

/// `ψ = t·(x-y)/2 + t⁻¹·(x+y)/2`, i.e. `px - iqy` with
/// `p = (t+t⁻¹)/2`, `q = (t-t⁻¹)/(2i)`.
pub fn build_psi() -> LaurentPoly {
    let half = GaussianRational::ratio(1, 2);
    let v = (&LaurentPoly::x() - &LaurentPoly::y()).scale(&half);
    let u = (&LaurentPoly::x() + &LaurentPoly::y()).scale(&half);
    &(&LaurentPoly::t() * &v) + &(&LaurentPoly::t_pow(-1) * &u)
}

/// `entry(i, j) = L_+^i L_-^j seed`. Column 0 is built down with `L_+`,
/// then each row is extended to the right with `L_-`.
pub fn wronskian_matrix(seed: &LaurentPoly, n: usize) -> SymMatrix {
    let mut first_col = Vec::with_capacity(n);
    if n > 0 {
        first_col.push(seed.clone());
    }
    for i in 1..n {
        let next = apply_l(DiffOp::LPlus, &first_col[i - 1]);
        first_col.push(next);
    }
    let rows: Vec<Vec<LaurentPoly>> = first_col
        .into_par_iter()
        .map(|head| {
            let mut row = Vec::with_capacity(n);
            row.push(head);
            for j in 1..n {
                let next = apply_l(DiffOp::LMinus, &row[j - 1]);
                row.push(next);
            }
            row
        })
        .collect();
    SymMatrix::from_rows(rows)
}

pub fn determinant(m: &SymMatrix, algo: DetAlgorithm) -> Result<LaurentPoly, MatrixError> {
    match algo {
        DetAlgorithm::FractionFree => bareiss(m),
        DetAlgorithm::Cofactor => Ok(cofactor(m)),
    }
}

fn bareiss(m: &SymMatrix) -> Result<LaurentPoly, MatrixError> {
    let n = m.dim();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LaurentPoly::zero()),
            }
        }
        let pivot = a[k][k].clone();
        let pivot_row = a[k].clone();
        let updated: Result<Vec<Vec<LaurentPoly>>, MatrixError> = a[k + 1..]
            .par_iter()
            .map(|row| {
                (k + 1..n)
                    .into_par_iter()
                    .map(|j| {
                        let num = &(&row[j] * &pivot) - &(&row[k] * &pivot_row[j]);
                        num.exact_div(&prev)
                            .map_err(|source| MatrixError::Inconsistent { step: k, source })
                    })
                    .collect()
            })
            .collect();
        for (offset, new_tail) in updated?.into_iter().enumerate() {
            let row = &mut a[k + 1 + offset];
            for (j, v) in new_tail.into_iter().enumerate() {
                row[k + 1 + j] = v;
            }
            row[k] = LaurentPoly::zero();
        }
        prev = pivot;
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

fn cofactor(m: &SymMatrix) -> LaurentPoly {
    let n = m.dim();
    if n == 0 {
        return LaurentPoly::one();
    }
    assert!(n < 64, "cofactor expansion limited to dimension < 64");
    // memo[mask] = det of the bottom |mask| rows restricted to columns in mask
    let mut memo: HashMap<u64, LaurentPoly> = HashMap::new();
    memo.insert(0, LaurentPoly::one());
    for size in 1..=n {
        let row = n - size;
        let masks: Vec<u64> = (0u64..(1u64 << n))
            .filter(|mask| mask.count_ones() as usize == size)
            .collect();
        let computed: Vec<(u64, LaurentPoly)> = masks
            .par_iter()
            .map(|&mask| {
                let mut acc = LaurentPoly::zero();
                let mut position = 0;
                for j in 0..n {
                    if mask & (1 << j) == 0 {
                        continue;
                    }
                    let sub = &memo[&(mask & !(1 << j))];
                    let term = m.get(row, j) * sub;
                    if position % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                    position += 1;
                }
                (mask, acc)
            })
            .collect();
        memo.extend(computed);
    }
    memo.remove(&((1u64 << n) - 1)).expect("full mask computed")
}

/// Leading principal minors of orders `1..=dim`. Fraction-free elimination
/// produces these as its successive pivots; a zero pivot falls back to
/// independent determinants for the remaining orders.
pub fn leading_principal_minors(m: &SymMatrix) -> Result<Vec<LaurentPoly>, MatrixError> {
    let n = m.dim();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    let mut a = m.rows();
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        out.push(pivot.clone());
        if k == n - 1 {
            break;
        }
        if pivot.is_zero() {
            for order in k + 2..=n {
                let idx: Vec<usize> = (order..n).collect();
                out.push(determinant(
                    &minor(m, &idx, &idx)?,
                    DetAlgorithm::FractionFree,
                )?);
            }
            break;
        }
        let pivot_row = a[k].clone();
        let updated: Result<Vec<Vec<LaurentPoly>>, MatrixError> = a[k + 1..]
            .par_iter()
            .map(|row| {
                (k + 1..n)
                    .into_par_iter()
                    .map(|j| {
                        let num = &(&row[j] * &pivot) - &(&row[k] * &pivot_row[j]);
                        num.exact_div(&prev)
                            .map_err(|source| MatrixError::Inconsistent { step: k, source })
                    })
                    .collect()
            })
            .collect();
        for (offset, new_tail) in updated?.into_iter().enumerate() {
            let row = &mut a[k + 1 + offset];
            for (j, v) in new_tail.into_iter().enumerate() {
                row[k + 1 + j] = v;
            }
        }
        prev = pivot;
    }
    Ok(out)
}

fn check_index_set(set: &[usize], dim: usize) -> Result<(), MatrixError> {
    for (k, &i) in set.iter().enumerate() {
        if i >= dim {
            return Err(MatrixError::IndexOutOfRange { index: i, dim });
        }
        if set[..k].contains(&i) {
            return Err(MatrixError::DuplicateIndex(i));
        }
    }
    Ok(())
}

/// Submatrix with the listed rows and columns deleted.
pub fn minor(m: &SymMatrix, rows: &[usize], cols: &[usize]) -> Result<SymMatrix, MatrixError> {
    if rows.len() != cols.len() {
        return Err(MatrixError::ShapeMismatch {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    check_index_set(rows, m.dim())?;
    check_index_set(cols, m.dim())?;
    let kept_rows: Vec<usize> = (0..m.dim()).filter(|i| !rows.contains(i)).collect();
    let kept_cols: Vec<usize> = (0..m.dim()).filter(|j| !cols.contains(j)).collect();
    Ok(SymMatrix::from_rows(
        kept_rows
            .iter()
            .map(|&i| kept_cols.iter().map(|&j| m.get(i, j).clone()).collect())
            .collect(),
    ))
}

/// Translates the 1-based minor notation `D[i..; j..]` to [`minor`].
pub fn minor_one_based(
    m: &SymMatrix,
    rows: &[usize],
    cols: &[usize],
) -> Result<SymMatrix, MatrixError> {
    let shift = |set: &[usize]| -> Result<Vec<usize>, MatrixError> {
        set.iter()
            .map(|&i| {
                i.checked_sub(1).ok_or(MatrixError::IndexOutOfRange {
                    index: i,
                    dim: m.dim(),
                })
            })
            .collect()
    };
    minor(m, &shift(rows)?, &shift(cols)?)
}

/// `τ_0 = 1, τ_1, …, τ_n` for the given seed.
pub fn tau_sequence(seed: &LaurentPoly, n: usize) -> Result<Vec<LaurentPoly>, MatrixError> {
    let m = wronskian_matrix(seed, n);
    let mut out = vec![LaurentPoly::one()];
    out.extend(leading_principal_minors(&m)?);
    Ok(out)
}

/// The cached sequences `τ_n`, `g_n = τ_n` and
/// `f_n = τ_{n-1}|_{ψ → L_+L_-ψ}` for `n = 0..=n_max`, with `f_0 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TauFamily {
    n_max: usize,
    psi: LaurentPoly,
    tau: Vec<LaurentPoly>,
    g: Vec<LaurentPoly>,
    f: Vec<LaurentPoly>,
}

impl TauFamily {
    pub fn build(n_max: usize) -> Result<Self, MatrixError> {
        assert!(n_max >= 1, "n_max must be at least 1");
        let psi = build_psi();
        let big = wronskian_matrix(&psi, n_max);
        let mut tau = vec![LaurentPoly::one()];
        tau.extend(leading_principal_minors(&big)?);
        // f_n is the (n-1)-th leading minor of the matrix with row 0 and
        // column 0 removed.
        let shifted = minor(&big, &[0], &[0])?;
        let mut f = vec![LaurentPoly::zero(), LaurentPoly::one()];
        f.extend(leading_principal_minors(&shifted)?);
        Ok(Self {
            n_max,
            psi,
            g: tau.clone(),
            tau,
            f,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn psi(&self) -> &LaurentPoly {
        &self.psi
    }

    pub fn tau(&self, n: usize) -> &LaurentPoly {
        &self.tau[n]
    }

    pub fn g(&self, n: usize) -> &LaurentPoly {
        &self.g[n]
    }

    pub fn f(&self, n: usize) -> &LaurentPoly {
        &self.f[n]
    }

    pub fn get(&self, kind: FamilyKind, n: usize) -> &LaurentPoly {
        match kind {
            FamilyKind::Tau => self.tau(n),
            FamilyKind::G => self.g(n),
            FamilyKind::F => self.f(n),
        }
    }

    /// `g̃_n^{(m)}`: the coefficient of `t^m` in `g_n` (zero out of range).
    pub fn g_coeff(&self, n: usize, m: i32) -> LaurentPoly {
        self.g[n].coeff_of_t(m)
    }

    pub fn f_coeff(&self, n: usize, m: i32) -> LaurentPoly {
        self.f[n].coeff_of_t(m)
    }

    pub fn write_cache<W: Write>(&self, mut out: W) -> Result<(), CacheError> {
        writeln!(out, "# hv tau cache v1 n_max={}", self.n_max)?;
        for kind in [FamilyKind::Tau, FamilyKind::G, FamilyKind::F] {
            for n in 0..=self.n_max {
                writeln!(out, "{} n={}: {}", kind.key(), n, self.get(kind, n))?;
            }
        }
        Ok(())
    }

    pub fn to_cache_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_cache(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("cache text is utf-8")
    }

    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        let file = std::fs::File::create(path)?;
        let mut w = std::io::BufWriter::new(file);
        self.write_cache(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, CacheError> {
        let file = std::fs::File::open(path)?;
        Self::read_cache(std::io::BufReader::new(file))
    }

    pub fn read_cache<R: BufRead>(input: R) -> Result<Self, CacheError> {
        let mut n_max: Option<usize> = None;
        let mut entries: HashMap<(FamilyKind, usize), LaurentPoly> = HashMap::new();
        for (idx, line) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(v) = rest
                    .split_whitespace()
                    .find_map(|w| w.strip_prefix("n_max="))
                {
                    n_max = Some(v.parse().map_err(|_| CacheError::Format {
                        line: line_no,
                        message: format!("bad n_max '{v}'"),
                    })?);
                }
                continue;
            }
            let format_err = |message: String| CacheError::Format {
                line: line_no,
                message,
            };
            let (header, body) = line
                .split_once(':')
                .ok_or_else(|| format_err("missing ':' after header".into()))?;
            let mut parts = header.split_whitespace();
            let kind = parts
                .next()
                .and_then(FamilyKind::from_key)
                .ok_or_else(|| format_err(format!("unknown header '{header}'")))?;
            let n: usize = parts
                .next()
                .and_then(|p| p.strip_prefix("n="))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format_err(format!("bad index in header '{header}'")))?;
            let poly = parse(body).map_err(|source| CacheError::Parse {
                line: line_no,
                source,
            })?;
            entries.insert((kind, n), poly);
        }
        let n_max = match n_max {
            Some(v) => v,
            None => entries.keys().map(|(_, n)| *n).max().unwrap_or(0),
        };
        if n_max < 1 {
            return Err(CacheError::Format {
                line: 0,
                message: "cache holds no tau functions".into(),
            });
        }
        let mut take = |kind: FamilyKind| -> Result<Vec<LaurentPoly>, CacheError> {
            (0..=n_max)
                .map(|n| {
                    entries
                        .remove(&(kind, n))
                        .ok_or_else(|| CacheError::Format {
                            line: 0,
                            message: format!("missing entry {} n={n}", kind.key()),
                        })
                })
                .collect()
        };
        let tau = take(FamilyKind::Tau)?;
        let g = take(FamilyKind::G)?;
        let f = take(FamilyKind::F)?;
        Ok(Self {
            n_max,
            psi: tau[1].clone(),
            tau,
            g,
            f,
        })
    }

    /// Term counts of `τ_1..τ_{n_max}`.
    pub fn term_counts(&self) -> Vec<usize> {
        self.tau[1..].iter().map(LaurentPoly::len).collect()
    }

    /// One-line summary per member, for diagnostics.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for n in 0..=self.n_max {
            let _ = writeln!(
                s,
                "n={n}: tau {} terms, f {} terms",
                self.tau[n].len(),
                self.f[n].len()
            );
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Tau,
    G,
    F,
}

impl FamilyKind {
    pub fn key(self) -> &'static str {
        match self {
            FamilyKind::Tau => "tau",
            FamilyKind::G => "g",
            FamilyKind::F => "f",
        }
    }

    pub fn from_key(s: &str) -> Option<Self> {
        match s {
            "tau" => Some(FamilyKind::Tau),
            "g" => Some(FamilyKind::G),
            "f" => Some(FamilyKind::F),
            _ => None,
        }
    }
}

/// Desnanot-Jacobi check on the `(n+1)×(n+1)` Wronskian of `ψ`:
/// `D[n;n]·D[n+1;n+1] - D[n+1;n]·D[n;n+1] - D·D[n,n+1;n,n+1] = 0`
/// (1-based minor notation).
pub fn jacobi_identity_check(n: usize) -> Result<CheckReport, MatrixError> {
    let started = Instant::now();
    let m = wronskian_matrix(&build_psi(), n + 1);
    let det = |rows: &[usize], cols: &[usize]| -> Result<LaurentPoly, MatrixError> {
        determinant(
            &minor_one_based(&m, rows, cols)?,
            DetAlgorithm::FractionFree,
        )
    };
    let d = determinant(&m, DetAlgorithm::FractionFree)?;
    let lhs = &det(&[n], &[n])? * &det(&[n + 1], &[n + 1])?;
    let mut rhs = &det(&[n + 1], &[n])? * &det(&[n], &[n + 1])?;
    rhs += &(&d * &det(&[n, n + 1], &[n, n + 1])?);
    Ok(CheckReport::from_sides(
        "jacobi", n as u32, None, &lhs, &rhs, started,
    ))
}
