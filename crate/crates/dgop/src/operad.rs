//! Common interface for dg operads with chosen bases, plus the exhaustive
//! axiom-verification harness.
//!
//! All basis elements at arity `n` carry the input labels `1..=n`; a
//! composition `a o_i b` uses the standard order-preserving relabeling in
//! which `b`'s inputs occupy positions `i..i+n-1` of the result. Group
//! actions are left actions: relabeling by `phi` sends letter `k` to
//! `phi[k-1]`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::exalg::{neg_one_pow, Label};
use crate::lincomb::Lin;
use crate::par;

pub trait Operad: Sync {
    type B: Clone + Ord + Hash + Debug + Display + Send + Sync;

    fn name(&self) -> &str;
    fn symmetric(&self) -> bool;
    /// `true` when the differential raises homological dimension.
    fn cochain(&self) -> bool;
    fn basis(&self, arity: usize) -> Vec<Self::B>;
    fn arity_of(&self, b: &Self::B) -> usize;
    fn hdim(&self, b: &Self::B) -> usize;
    fn unit(&self) -> Self::B;
    /// Composition at slot `i` of `a` (`1 <= i <= arity(a)`), standard relabeling.
    fn compose_basis(&self, a: &Self::B, i: Label, b: &Self::B) -> Lin<Self::B>;
    fn diff_basis(&self, b: &Self::B) -> Lin<Self::B>;
    /// Applies the bijection `phi` (as a left action) to the input labels.
    fn relabel_basis(&self, b: &Self::B, phi: &[Label]) -> (Self::B, i8);
}

pub fn compose<O: Operad>(op: &O, a: &Lin<O::B>, i: Label, b: &Lin<O::B>) -> Lin<O::B> {
    a.map(|x| b.map(|y| op.compose_basis(x, i, y)))
}

pub fn diff<O: Operad>(op: &O, a: &Lin<O::B>) -> Lin<O::B> {
    a.map(|x| op.diff_basis(x))
}

pub fn relabel<O: Operad>(op: &O, a: &Lin<O::B>, phi: &[Label]) -> Lin<O::B> {
    a.map(|x| {
        let (y, s) = op.relabel_basis(x, phi);
        Lin::basis(y).scale_i8(s)
    })
}

/// All permutations of `1..=n` as label maps.
pub fn permutations(n: usize) -> Vec<Vec<Label>> {
    let mut out = Vec::new();
    let mut cur: Vec<Label> = (1..=n as Label).collect();
    fn rec(k: usize, cur: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for j in k..cur.len() {
            cur.swap(k, j);
            rec(k + 1, cur, out);
            cur.swap(k, j);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// The label map of the composite induced by relabeling the factors:
/// `relabel(a o_i b, pi) = relabel(a, sigma) o_{sigma(i)} relabel(b, rho)`.
pub fn induced_composite_relabel(
    m: usize,
    n: usize,
    i: Label,
    sigma: &[Label],
    rho: &[Label],
) -> Vec<Label> {
    let si = sigma[(i - 1) as usize];
    let mut pi = vec![0; m + n - 1];
    for u in 1..=(m + n - 1) as Label {
        let img = if u < i {
            let k = u;
            let sk = sigma[(k - 1) as usize];
            if sk < si {
                sk
            } else {
                sk + n as Label - 1
            }
        } else if u <= i + n as Label - 1 {
            let j = u - i + 1;
            si + rho[(j - 1) as usize] - 1
        } else {
            let k = u - n as Label + 1;
            let sk = sigma[(k - 1) as usize];
            if sk < si {
                sk
            } else {
                sk + n as Label - 1
            }
        };
        pi[(u - 1) as usize] = img;
    }
    pi
}

// ---------------------------------------------------------------------------
// Axiom harness
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub cases: u64,
    /// A reproducible witness for the first failure, in basis-element notation.
    pub failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub operad: String,
    pub max_total_arity: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }
}

fn merge_failures(mut results: Vec<(u64, Option<String>)>) -> (u64, Option<String>) {
    let mut cases = 0;
    let mut failures: Vec<String> = Vec::new();
    for (c, f) in results.drain(..) {
        cases += c;
        if let Some(w) = f {
            failures.push(w);
        }
    }
    failures.sort();
    (cases, failures.into_iter().next())
}

pub fn check_operad_axioms<O: Operad>(op: &O, max_total_arity: usize) -> AxiomReport {
    check_operad_axioms_opts(op, max_total_arity, true)
}

/// Exhaustive check of the dg-operad axioms over all basis tuples with total
/// arity at most `max_total_arity`. `parallel` selects rayon vs sequential
/// execution (identical results either way).
pub fn check_operad_axioms_opts<O: Operad>(
    op: &O,
    max_total_arity: usize,
    parallel: bool,
) -> AxiomReport {
    let bound = max_total_arity;
    let mut bases: Vec<Vec<O::B>> = Vec::new();
    for n in 0..=bound {
        bases.push(if n == 0 { Vec::new() } else { op.basis(n) });
    }

    let mut checks = Vec::new();
    checks.push(check_units(op, bound, &bases, parallel));
    checks.push(check_seq_assoc(op, bound, &bases, parallel));
    checks.push(check_par_assoc(op, bound, &bases, parallel));
    if op.symmetric() {
        checks.push(check_equivariance(op, bound, &bases, parallel));
    }
    checks.push(check_chain_map(op, bound, &bases, parallel));
    checks.push(check_d_squared(op, bound, &bases, parallel));

    AxiomReport {
        operad: op.name().to_string(),
        max_total_arity,
        checks,
    }
}

fn check_units<O: Operad>(op: &O, bound: usize, bases: &[Vec<O::B>], parallel: bool) -> AxiomCheck {
    let unit = op.unit();
    let mut items = Vec::new();
    for n in 1..=bound.saturating_sub(1) {
        for b in &bases[n] {
            items.push(b.clone());
        }
    }
    let results = par::map_vec(&items, parallel, |b| {
        let n = op.arity_of(b);
        let mut cases = 0u64;
        let mut failure = None;
        // unit o_1 b = b
        let lhs = op.compose_basis(&unit, 1, b);
        cases += 1;
        if lhs != Lin::basis(b.clone()) {
            failure = Some(format!("unit o_1 {b} = {lhs} (expected {b})"));
        }
        // b o_i unit = b
        for i in 1..=n as Label {
            let lhs = op.compose_basis(b, i, &unit);
            cases += 1;
            if failure.is_none() && lhs != Lin::basis(b.clone()) {
                failure = Some(format!("{b} o_{i} unit = {lhs} (expected {b})"));
            }
        }
        (cases, failure)
    });
    let (cases, failure) = merge_failures(results);
    AxiomCheck { axiom: "unit".into(), cases, failure }
}

fn arity_triples(bound: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for na in 1..=bound {
        for nb in 1..=bound {
            for nc in 1..=bound {
                if na + nb + nc <= bound {
                    v.push((na, nb, nc));
                }
            }
        }
    }
    v
}

fn check_seq_assoc<O: Operad>(
    op: &O,
    bound: usize,
    bases: &[Vec<O::B>],
    parallel: bool,
) -> AxiomCheck {
    let mut items: Vec<(O::B, O::B, O::B)> = Vec::new();
    for (na, nb, nc) in arity_triples(bound) {
        for a in &bases[na] {
            for b in &bases[nb] {
                for c in &bases[nc] {
                    items.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    let results = par::map_vec(&items, parallel, |(a, b, c)| {
        let (m, n) = (op.arity_of(a), op.arity_of(b));
        let mut cases = 0u64;
        let mut failure = None;
        for i in 1..=m as Label {
            let ab = op.compose_basis(a, i, b);
            for j in i..=(i + n as Label - 1) {
                // j lands inside b's inputs.
                let lhs = compose(op, &ab, j, &Lin::basis(c.clone()));
                let bc = op.compose_basis(b, j - i + 1, c);
                let rhs = compose(op, &Lin::basis(a.clone()), i, &bc);
                cases += 1;
                if failure.is_none() && lhs != rhs {
                    failure = Some(format!(
                        "seq assoc fails: ({a} o_{i} {b}) o_{j} {c}: lhs={lhs} rhs={rhs}"
                    ));
                }
            }
        }
        (cases, failure)
    });
    let (cases, failure) = merge_failures(results);
    AxiomCheck { axiom: "sequential-associativity".into(), cases, failure }
}

fn check_par_assoc<O: Operad>(
    op: &O,
    bound: usize,
    bases: &[Vec<O::B>],
    parallel: bool,
) -> AxiomCheck {
    let mut items: Vec<(O::B, O::B, O::B)> = Vec::new();
    for (na, nb, nc) in arity_triples(bound) {
        if na < 2 {
            continue;
        }
        for a in &bases[na] {
            for b in &bases[nb] {
                for c in &bases[nc] {
                    items.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    let results = par::map_vec(&items, parallel, |(a, b, c)| {
        let (m, n, p) = (op.arity_of(a), op.arity_of(b), op.arity_of(c));
        let sign = neg_one_pow(op.hdim(b) * op.hdim(c));
        let mut cases = 0u64;
        let mut failure = None;
        for i in 1..=m as Label {
            let ab = op.compose_basis(a, i, b);
            for jp in 1..=m as Label {
                if jp == i {
                    continue;
                }
                // Slot jp of a corresponds to slot j of a o_i b.
                let j = if jp < i { jp } else { jp + n as Label - 1 };
                let lhs = compose(op, &ab, j, &Lin::basis(c.clone()));
                let ac = op.compose_basis(a, jp, c);
                // After inserting c at jp, slot i of a sits at i or i+p-1.
                let i2 = if jp < i { i + p as Label - 1 } else { i };
                let rhs = compose(op, &ac, i2, &Lin::basis(b.clone())).scale_i8(sign);
                cases += 1;
                if failure.is_none() && lhs != rhs {
                    failure = Some(format!(
                        "par assoc fails: a={a} b={b} c={c} i={i} j'={jp}: lhs={lhs} rhs={rhs}"
                    ));
                }
            }
        }
        (cases, failure)
    });
    let (cases, failure) = merge_failures(results);
    AxiomCheck { axiom: "parallel-associativity".into(), cases, failure }
}

fn check_equivariance<O: Operad>(
    op: &O,
    bound: usize,
    bases: &[Vec<O::B>],
    parallel: bool,
) -> AxiomCheck {
    let mut items: Vec<(O::B, O::B)> = Vec::new();
    for na in 1..bound {
        for nb in 1..=(bound - na) {
            for a in &bases[na] {
                for b in &bases[nb] {
                    items.push((a.clone(), b.clone()));
                }
            }
        }
    }
    let results = par::map_vec(&items, parallel, |(a, b)| {
        let (m, n) = (op.arity_of(a), op.arity_of(b));
        let mut cases = 0u64;
        let mut failure = None;
        for sigma in permutations(m) {
            for rho in permutations(n) {
                let (sa, ssign) = op.relabel_basis(a, &sigma);
                let (rb, rsign) = op.relabel_basis(b, &rho);
                for i in 1..=m as Label {
                    let si = sigma[(i - 1) as usize];
                    let lhs = op.compose_basis(&sa, si, &rb).scale_i8(ssign * rsign);
                    let pi = induced_composite_relabel(m, n, i, &sigma, &rho);
                    let rhs = relabel(op, &op.compose_basis(a, i, b), &pi);
                    cases += 1;
                    if failure.is_none() && lhs != rhs {
                        failure = Some(format!(
                            "equivariance fails: a={a} b={b} i={i} sigma={sigma:?} rho={rho:?}: lhs={lhs} rhs={rhs}"
                        ));
                    }
                }
            }
        }
        (cases, failure)
    });
    let (cases, failure) = merge_failures(results);
    AxiomCheck { axiom: "equivariance".into(), cases, failure }
}

fn check_chain_map<O: Operad>(
    op: &O,
    bound: usize,
    bases: &[Vec<O::B>],
    parallel: bool,
) -> AxiomCheck {
    let mut items: Vec<(O::B, O::B)> = Vec::new();
    for na in 1..bound {
        for nb in 1..=(bound - na) {
            for a in &bases[na] {
                for b in &bases[nb] {
                    items.push((a.clone(), b.clone()));
                }
            }
        }
    }
    let results = par::map_vec(&items, parallel, |(a, b)| {
        let m = op.arity_of(a);
        let sa = neg_one_pow(op.hdim(a));
        let mut cases = 0u64;
        let mut failure = None;
        for i in 1..=m as Label {
            let ab = op.compose_basis(a, i, b);
            let lhs = diff(op, &ab);
            let da = op.diff_basis(a);
            let db = op.diff_basis(b);
            let mut rhs = compose(op, &da, i, &Lin::basis(b.clone()));
            rhs.add_assign(&compose(op, &Lin::basis(a.clone()), i, &db).scale_i8(sa));
            cases += 1;
            if failure.is_none() && lhs != rhs {
                failure = Some(format!(
                    "chain map fails: a={a} b={b} i={i}: d(aob)={lhs} rhs={rhs}"
                ));
            }
        }
        (cases, failure)
    });
    let (cases, failure) = merge_failures(results);
    AxiomCheck { axiom: "chain-map".into(), cases, failure }
}

fn check_d_squared<O: Operad>(
    op: &O,
    bound: usize,
    bases: &[Vec<O::B>],
    parallel: bool,
) -> AxiomCheck {
    let mut items: Vec<O::B> = Vec::new();
    for n in 1..=bound {
        items.extend(bases[n].iter().cloned());
    }
    let results = par::map_vec(&items, parallel, |b| {
        let dd = diff(op, &op.diff_basis(b));
        if dd.is_zero() {
            (1u64, None)
        } else {
            (1u64, Some(format!("d^2({b}) = {dd} != 0")))
        }
    });
    let (cases, failure) = merge_failures(results);
    AxiomCheck { axiom: "d-squared".into(), cases, failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_count_and_order() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![1, 2, 3]);
        assert_eq!(p[5], vec![3, 2, 1]);
    }
}
