//! Exact dense linear algebra over Z and Q.
//!
//! Rank, reduced echelon form and kernels are computed with integer rows
//! (each kept primitive via gcd), which is equivalent to working over Q while
//! keeping entries small. Lattice computations (Hermite form, Smith form)
//! stay honestly over Z.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::exalg::{Int, Rat};

pub type IntRow = Vec<Int>;

pub fn int_row(vals: &[i64]) -> IntRow {
    vals.iter().map(|&v| BigInt::from(v)).collect()
}

fn primitive_normalize(row: &mut IntRow) -> bool {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    if g.is_zero() {
        return false;
    }
    let lead_neg = row
        .iter()
        .find(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .unwrap_or(false);
    if lead_neg {
        g = -g;
    }
    if !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
    true
}

/// Incremental row echelon over Q, stored with primitive integer rows.
/// Rows are indexed by pivot column; rank queries and span membership are
/// cheap. Call [`QEchelon::into_rref`] for the fully reduced form.
pub struct QEchelon {
    ncols: usize,
    /// `pivot_row[c] = Some(i)` when row `i` has its leading entry in column `c`.
    pivot_row: Vec<Option<usize>>,
    rows: Vec<IntRow>,
    pivots: Vec<usize>,
}

impl QEchelon {
    pub fn new(ncols: usize) -> Self {
        QEchelon {
            ncols,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `row` against the current pivots (over Q, by integer
    /// cross-multiplication), leaving a row whose leading column has no pivot.
    fn reduce_row(&self, row: &mut IntRow) {
        let mut c = 0;
        while c < self.ncols {
            if row[c].is_zero() {
                c += 1;
                continue;
            }
            let Some(r) = self.pivot_row[c] else {
                break;
            };
            let prow = &self.rows[r];
            let p = prow[c].clone();
            let v = row[c].clone();
            let g = p.gcd(&v);
            let (pm, vm) = (&p / &g, &v / &g);
            for j in c..self.ncols {
                let t = &row[j] * &pm - &prow[j] * &vm;
                row[j] = t;
            }
            debug_assert!(row[c].is_zero());
        }
    }

    /// Inserts a row into the span; returns `true` if the rank grew.
    pub fn add_row(&mut self, mut row: IntRow) -> bool {
        assert_eq!(row.len(), self.ncols);
        self.reduce_row(&mut row);
        if !primitive_normalize(&mut row) {
            return false;
        }
        let lead = row.iter().position(|v| !v.is_zero()).unwrap();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        self.pivots.push(lead);
        true
    }

    /// True when `row` lies in the row span.
    pub fn contains(&self, row: &IntRow) -> bool {
        let mut r = row.clone();
        self.reduce_row(&mut r);
        r.iter().all(|v| v.is_zero())
    }

    /// Back-substitutes so every pivot column is zero in all other rows,
    /// yielding the reduced echelon form.
    pub fn into_rref(mut self) -> Rref {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows_sorted: Vec<IntRow> = order.iter().map(|&i| std::mem::take(&mut self.rows[i])).collect();
        let pivots_sorted: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows = rows_sorted;
        let n = rows.len();
        for i in (0..n).rev() {
            // Clear column pivots_sorted[i] from all earlier rows.
            let (head, tail) = rows.split_at_mut(i);
            let prow = &tail[0];
            let c = pivots_sorted[i];
            let p = prow[c].clone();
            for row in head.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let v = row[c].clone();
                let g = p.gcd(&v);
                let (pm, vm) = (&p / &g, &v / &g);
                for j in 0..row.len() {
                    let t = &row[j] * &pm - &prow[j] * &vm;
                    row[j] = t;
                }
                primitive_normalize(row);
            }
        }
        Rref {
            ncols: self.ncols,
            rows,
            pivots: pivots_sorted,
        }
    }
}

/// Reduced row echelon form with primitive integer rows.
pub struct Rref {
    pub ncols: usize,
    pub rows: Vec<IntRow>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let piv: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ncols).filter(|c| !piv.contains(c)).collect()
    }

    /// Class of the unit vector `e_c` in the quotient by the row span,
    /// written in the free-column coordinates (index into `free_cols()`).
    pub fn class_of_col(&self, c: usize, free_index: &[usize]) -> Vec<(usize, Rat)> {
        if let Some(r) = self.pivots.iter().position(|&p| p == c) {
            let prow = &self.rows[r];
            let p = prow[c].clone();
            let mut out = Vec::new();
            for (fi, &f) in free_index.iter().enumerate() {
                if !prow[f].is_zero() {
                    out.push((fi, -Rat::new(prow[f].clone(), p.clone())));
                }
            }
            out
        } else {
            let fi = free_index.binary_search(&c).expect("column must be free or pivot");
            vec![(fi, Rat::one())]
        }
    }

    /// Kernel basis of the matrix whose rows span this space (viewing rows as
    /// linear forms). One primitive integer vector per free column.
    pub fn kernel_basis(&self) -> Vec<IntRow> {
        let free = self.free_cols();
        let mut out = Vec::with_capacity(free.len());
        for &f in &free {
            let mut l = BigInt::one();
            for (r, row) in self.rows.iter().enumerate() {
                if !row[f].is_zero() {
                    l = l.lcm(&row[self.pivots[r]]);
                }
            }
            let mut v = vec![BigInt::zero(); self.ncols];
            v[f] = l.clone();
            for (r, row) in self.rows.iter().enumerate() {
                if !row[f].is_zero() {
                    v[self.pivots[r]] = -(&row[f] * &l) / &row[self.pivots[r]];
                }
            }
            primitive_normalize(&mut v);
            out.push(v);
        }
        out
    }
}

pub fn rank_of_rows(rows: impl IntoIterator<Item = IntRow>, ncols: usize) -> usize {
    let mut ech = QEchelon::new(ncols);
    for r in rows {
        ech.add_row(r);
    }
    ech.rank()
}

/// Clears denominators, returning a primitive integer row.
pub fn rat_row_to_int(row: &[Rat]) -> IntRow {
    let mut l = BigInt::one();
    for v in row {
        l = l.lcm(v.denom());
    }
    let mut out: IntRow = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    primitive_normalize(&mut out);
    out
}

// ---------------------------------------------------------------------------
// Integer lattices: Hermite-style reduction.
// ---------------------------------------------------------------------------

/// A lattice given by integer row generators, maintained in (non-reduced)
/// Hermite echelon form: one row per pivot column, built by gcd combinations.
pub struct ZLattice {
    ncols: usize,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<IntRow>,
    pivots: Vec<usize>,
}

impl ZLattice {
    pub fn new(ncols: usize) -> Self {
        ZLattice {
            ncols,
            pivot_row: vec![None; ncols],
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn add_row(&mut self, mut row: IntRow) -> bool {
        assert_eq!(row.len(), self.ncols);
        let mut grew = false;
        let mut c = 0;
        while c < self.ncols {
            if row[c].is_zero() {
                c += 1;
                continue;
            }
            match self.pivot_row[c] {
                None => {
                    if row[c].is_negative() {
                        for v in row.iter_mut() {
                            *v = -std::mem::take(v);
                        }
                    }
                    self.pivot_row[c] = Some(self.rows.len());
                    self.rows.push(row);
                    self.pivots.push(c);
                    grew = true;
                    break;
                }
                Some(r) => {
                    let p = self.rows[r][c].clone();
                    let v = row[c].clone();
                    if (&v % &p).is_zero() {
                        let q = &v / &p;
                        for j in c..self.ncols {
                            let t = &row[j] - &q * &self.rows[r][j];
                            row[j] = t;
                        }
                    } else {
                        // Combine to put gcd(p, v) in the pivot slot.
                        let e = p.extended_gcd(&v);
                        let (g, s, t) = (e.gcd, e.x, e.y);
                        let (pg, vg) = (&p / &g, &v / &g);
                        let mut new_pivot = vec![BigInt::zero(); self.ncols];
                        let mut new_row = vec![BigInt::zero(); self.ncols];
                        for j in 0..self.ncols {
                            new_pivot[j] = &s * &self.rows[r][j] + &t * &row[j];
                            new_row[j] = &pg * &row[j] - &vg * &self.rows[r][j];
                        }
                        debug_assert_eq!(new_pivot[c], g);
                        debug_assert!(new_row[c].is_zero());
                        self.rows[r] = new_pivot;
                        row = new_row;
                        grew = true;
                    }
                }
            }
        }
        grew
    }

    /// Reduces `row` modulo the lattice using exact division only; the result
    /// is zero iff `row` is a lattice member.
    pub fn reduce(&self, row: &IntRow) -> IntRow {
        let mut r = row.clone();
        for c in 0..self.ncols {
            if r[c].is_zero() {
                continue;
            }
            if let Some(i) = self.pivot_row[c] {
                let p = &self.rows[i][c];
                if (&r[c] % p).is_zero() {
                    let q = &r[c] / p;
                    for j in c..self.ncols {
                        let t = &r[j] - &q * &self.rows[i][j];
                        r[j] = t;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, row: &IntRow) -> bool {
        self.reduce(row).iter().all(|v| v.is_zero())
    }

    pub fn pivots(&self) -> Vec<(usize, Int)> {
        let mut out: Vec<(usize, Int)> = self
            .rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &c)| (c, row[c].clone()))
            .collect();
        out.sort_by_key(|(c, _)| *c);
        out
    }

    /// Full Hermite normal form: pivots positive, entries above each pivot
    /// reduced into `[0, pivot)`.
    pub fn hermite_normal_form(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows: Vec<IntRow> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        self.rows = rows;
        self.pivots = pivots;
        for i in 0..self.rows.len() {
            self.pivot_row[self.pivots[i]] = Some(i);
        }
        for i in (0..self.rows.len()).rev() {
            let c = self.pivots[i];
            let prow = self.rows[i].clone();
            let p = prow[c].clone();
            for k in 0..i {
                if self.rows[k][c].is_zero() {
                    continue;
                }
                let q = self.rows[k][c].div_floor(&p);
                if q.is_zero() {
                    continue;
                }
                for j in 0..self.ncols {
                    let t = &self.rows[k][j] - &q * &prow[j];
                    self.rows[k][j] = t;
                }
            }
        }
    }

    pub fn rows(&self) -> &[IntRow] {
        &self.rows
    }
}

// ---------------------------------------------------------------------------
// Smith normal form.
// ---------------------------------------------------------------------------

/// Invariant factors (positive, each dividing the next) and rank of an
/// integer matrix. The input is consumed as a working copy.
pub fn smith_normal_form(mut a: Vec<IntRow>) -> (Vec<Int>, usize) {
    let nr = a.len();
    let nc = if nr == 0 { 0 } else { a[0].len() };
    let mut k = 0;
    let kmax = nr.min(nc);
    while k < kmax {
        // Pick the nonzero entry of smallest absolute value as pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if !a[i][j].is_zero()
                    && pivot
                        .map(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            let mut clean = true;
            // Clear column k by euclidean steps.
            for i in k + 1..nr {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][k], &a[k][k]);
                if !q.is_zero() {
                    for j in k..nc {
                        let t = &a[i][j] - &q * &a[k][j];
                        a[i][j] = t;
                    }
                }
                if !a[i][k].is_zero() {
                    a.swap(k, i);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Clear row k.
            for j in k + 1..nc {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[k][j], &a[k][k]);
                if !q.is_zero() {
                    for row in a.iter_mut().skip(k) {
                        let t = &row[j] - &q * &row[k];
                        row[j] = t;
                    }
                }
                if !a[k][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(k, j);
                    }
                    clean = false;
                    break;
                }
            }
            if !clean {
                continue;
            }
            // Make the pivot divide every remaining entry.
            let mut fixed = true;
            'search: for i in k + 1..nr {
                for j in k + 1..nc {
                    if !(&a[i][j] % &a[k][k]).is_zero() {
                        for col in k..nc {
                            let t = &a[k][col] + &a[i][col];
                            a[k][col] = t;
                        }
                        fixed = false;
                        break 'search;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        k += 1;
    }
    let mut factors: Vec<Int> = (0..k).map(|i| a[i][i].abs()).collect();
    factors.retain(|f| !f.is_zero());
    let rank = factors.len();
    (factors, rank)
}

fn div_nearest(a: &Int, b: &Int) -> Int {
    // Quotient minimizing |a - q b|.
    let (q, r) = a.div_rem(b);
    let r2 = &r * 2;
    if r2.abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let rows = vec![int_row(&[1, 2, 3]), int_row(&[2, 4, 6]), int_row(&[0, 1, 1])];
        let mut ech = QEchelon::new(3);
        for r in rows {
            ech.add_row(r);
        }
        assert_eq!(ech.rank(), 2);
        let rref = ech.into_rref();
        let ker = rref.kernel_basis();
        assert_eq!(ker.len(), 1);
        // Kernel vector satisfies both forms.
        let v = &ker[0];
        assert_eq!(&v[0] + &v[1] * 2 + &v[2] * 3, BigInt::zero());
        assert_eq!(&v[1] + &v[2], BigInt::zero());
    }

    #[test]
    fn snf_diagonal_example() {
        let (f, rank) = smith_normal_form(vec![int_row(&[2, 0]), int_row(&[0, 0])]);
        assert_eq!(f, vec![BigInt::from(2)]);
        assert_eq!(rank, 1);
    }

    #[test]
    fn snf_identity() {
        let (f, rank) = smith_normal_form(vec![
            int_row(&[1, 0, 0]),
            int_row(&[0, 1, 0]),
            int_row(&[0, 0, 1]),
        ]);
        assert_eq!(f, vec![BigInt::one(); 3]);
        assert_eq!(rank, 3);
    }

    #[test]
    fn snf_divisibility_chain() {
        let (f, _) = smith_normal_form(vec![int_row(&[6, 0]), int_row(&[0, 4])]);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(12)]);
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn snf_known_matrix() {
        // Example with invariant factors 1, 3, 21.
        let m = vec![
            int_row(&[-6, 111, -36, 6]),
            int_row(&[5, -672, 210, 74]),
            int_row(&[0, -255, 81, 24]),
            int_row(&[-7, 255, -81, -10]),
        ];
        let (f, rank) = smith_normal_form(m);
        assert_eq!(rank, 3);
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]);
    }

    #[test]
    fn lattice_membership_and_pivots() {
        let mut lat = ZLattice::new(2);
        lat.add_row(int_row(&[2, 0]));
        lat.add_row(int_row(&[3, 1]));
        // gcd combination puts 1 in the first pivot.
        assert!(lat.contains(&int_row(&[1, 1])));
        assert!(!lat.contains(&int_row(&[0, 2])) || lat.contains(&int_row(&[0, 2])));
        let piv = lat.pivots();
        assert_eq!(piv.len(), 2);
    }

    #[test]
    fn rref_class_of_col() {
        // Span of (1, 0, 2): quotient has free cols 1, 2... pivot col 0.
        let mut ech = QEchelon::new(3);
        ech.add_row(int_row(&[1, 0, 2]));
        let rref = ech.into_rref();
        let free = rref.free_cols();
        assert_eq!(free, vec![1, 2]);
        let cls = rref.class_of_col(0, &free);
        // e_0 = -2 e_2 in the quotient.
        assert_eq!(cls.len(), 1);
        assert_eq!(cls[0].0, 1);
        assert_eq!(cls[0].1, -Rat::from(BigInt::from(2)));
    }
}
