//! Rewriting PBW monomial vectors `b v_r` into combinations of admissible
//! monomial vectors.
//!
//! Everything rests on the coefficient identities of `x_i(z) x_j(z) = 0`
//! (`i <= j`): for every total depth `M`,
//! `sum_{a + b = M} x_i(-a) x_j(-b) = 0` on `W(Lambda_r)`, where terms with
//! a factor `x_i(-a)`, `a <= delta_{i <= r}`, vanish on `v_r`.
//!
//! Two independent reductions are provided. [`straighten_by_rewriting`]
//! follows the spanning argument step by step, always replacing the least
//! offending monomial by strictly greater ones. [`straighten_by_elimination`]
//! assembles every relation of a `(weight, degree)` sector and row-reduces.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{pbw_monomials, Factor, Monomial, Setup, Violation, WeightVector};
use crate::error::{Error, Result};
use crate::linalg::rref;

/// Finite linear combination of monomials with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinComb {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, c: &BigRational) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// JSON-facing form: one entry per term, coefficient as `"p/q"`.
    pub fn to_entries(&self) -> Vec<TermEntry> {
        self.terms
            .iter()
            .map(|(m, c)| TermEntry {
                coefficient: format_ratio(c),
                monomial: m.to_string(),
            })
            .collect()
    }
}

impl FromIterator<(Monomial, BigRational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut v = LinComb::zero();
        for (m, c) in iter {
            v.add_term(m, c);
        }
        v
    }
}

/// Plain rendering, e.g. `-2 · x1(-3) x1(-1)`; the empty monomial prints as `1`.
impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mono = if m.is_one() { "1".to_string() } else { m.to_string() };
            if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag} · {mono}")?;
            }
        }
        Ok(())
    }
}

/// One term of a serialized combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermEntry {
    pub coefficient: String,
    pub monomial: String,
}

/// Always `p/q`, with `q >= 1` and the fraction reduced.
pub fn format_ratio(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::MalformedCoefficient(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Rebuilds a combination from its serialized entries.
pub fn lincomb_from_entries(entries: &[TermEntry], setup: &Setup) -> Result<LinComb> {
    let mut v = LinComb::zero();
    for e in entries {
        let m = crate::combinatorics::parse_monomial(&e.monomial, setup)?;
        v.add_term(m, parse_ratio(&e.coefficient)?);
    }
    Ok(v)
}

/// Whether `x_color(-depth)` kills `v_r`, i.e. `depth <= delta_{color <= r}`.
/// Depth may be zero or negative for transient factors.
pub fn factor_annihilates(color: usize, depth: i64, setup: &Setup) -> bool {
    depth <= i64::from(setup.delta(color))
}

/// Whether some factor of `b` kills `v_r`; by commutativity it can be moved
/// next to `v_r`.
pub fn annihilates(b: &Monomial, setup: &Setup) -> bool {
    b.factors()
        .iter()
        .any(|f| factor_annihilates(f.color, i64::from(f.depth), setup))
}

/// `context * sum_{a+b=M} x_i(-a) x_j(-b)` with `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub colors: (usize, usize),
    pub total_depth: u32,
    pub context: Monomial,
}

/// The surviving terms of a relation instance on `v_r`. For `i < j` each
/// ordered split has coefficient 1; for `i == j` an unordered split `a != b`
/// has coefficient 2 and the square term coefficient 1.
pub fn relation_terms(rel: &RelationInstance, setup: &Setup) -> LinComb {
    let (i, j) = rel.colors;
    assert!(i <= j, "relation colors must satisfy i <= j");
    let m_total = i64::from(rel.total_depth);
    let mut out = LinComb::zero();
    // a: depth of color i; b = M - a: depth of color j
    for a in 1..m_total {
        let b = m_total - a;
        if i == j && a < b {
            continue;
        }
        if factor_annihilates(i, a, setup) || factor_annihilates(j, b, setup) {
            continue;
        }
        let coeff = if i == j && a != b { 2 } else { 1 };
        let m = rel
            .context
            .mul_factors(&[Factor::new(i, a as u32), Factor::new(j, b as u32)]);
        out.add_term(m, BigRational::from_integer(coeff.into()));
    }
    out
}

/// One replacement performed during rewriting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub source: Monomial,
    pub violation: Violation,
    pub targets: Vec<Monomial>,
}

/// Rewriting engine with a per-instance memo of straightened monomials.
pub struct Straightener {
    setup: Setup,
    memo: HashMap<Monomial, LinComb>,
    trace: Option<Vec<RewriteStep>>,
}

impl Straightener {
    pub fn new(setup: Setup) -> Self {
        Self {
            setup,
            memo: HashMap::new(),
            trace: None,
        }
    }

    /// Like [`Straightener::new`], additionally recording every rewrite.
    pub fn with_trace(setup: Setup) -> Self {
        Self {
            trace: Some(Vec::new()),
            ..Self::new(setup)
        }
    }

    pub fn trace(&self) -> &[RewriteStep] {
        self.trace.as_deref().unwrap_or(&[])
    }

    pub fn straighten(&mut self, v: &LinComb) -> LinComb {
        let mut pending: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in v.iter() {
            add_pending(&mut pending, m.clone(), c.clone());
        }
        let mut done = LinComb::zero();
        while let Some((b, c)) = pending.pop_first() {
            if annihilates(&b, &self.setup) {
                continue;
            }
            if b.is_admissible(&self.setup) {
                done.add_term(b, c);
                continue;
            }
            for (t, x) in self.rewrite(&b).iter() {
                add_pending(&mut pending, t.clone(), x * &c);
            }
        }
        done
    }

    pub fn straighten_monomial(&mut self, b: &Monomial) -> LinComb {
        if let Some(v) = self.memo.get(b) {
            return v.clone();
        }
        let v = self.straighten(&LinComb::monomial(b.clone()));
        self.memo.insert(b.clone(), v.clone());
        v
    }

    /// Expresses a non-admissible, non-annihilating `b` through strictly
    /// greater monomials of the same degree and weight.
    fn rewrite(&mut self, b: &Monomial) -> LinComb {
        let violation = b
            .first_violation(&self.setup)
            .expect("rewrite called on an admissible monomial");
        let out = match violation {
            Violation::Difference {
                color,
                deeper,
                shallower,
            } => self.rewrite_difference(b, color, deeper, shallower),
            Violation::Initial { color, depth, .. } => self.rewrite_initial(b, color, depth),
        };
        if let Some(trace) = self.trace.as_mut() {
            trace.push(RewriteStep {
                source: b.clone(),
                violation,
                targets: out.monomials().cloned().collect(),
            });
        }
        out
    }

    /// Solves `sum_{a+c=m+m'} x_j(-a) x_j(-c) = 0` for the balanced pair.
    fn rewrite_difference(&self, b: &Monomial, color: usize, m: u32, m_prime: u32) -> LinComb {
        let rest = b
            .without(&[Factor::new(color, m), Factor::new(color, m_prime)])
            .expect("violating pair is present");
        let total = m + m_prime;
        let own = if m == m_prime { 1 } else { 2 };
        let mut out = LinComb::zero();
        for c in 1..m_prime {
            let a = total - c;
            if factor_annihilates(color, i64::from(c), &self.setup) {
                continue;
            }
            let coeff = BigRational::new(BigInt::from(-2), BigInt::from(own));
            out.add_term(
                rest.mul_factors(&[Factor::new(color, a), Factor::new(color, c)]),
                coeff,
            );
        }
        out
    }

    /// Initial condition fails for the smallest depth `m` of color `j`.
    /// With `x_k(-n)` the smallest factor among colors `< j` and
    /// `b = b_2 x_j(-m) x_k(-n) b_1'`, the relation
    /// `sum_{a+c=m+n} x_j(-a) x_k(-c) = 0` gives terms with `a > m` that are
    /// already greater than `b`; the terms with `a < m` contain the shorter
    /// monomial `x_j(-a) b_1'`, which is straightened recursively first.
    fn rewrite_initial(&mut self, b: &Monomial, j: usize, m: u32) -> LinComb {
        let smaller: Vec<Factor> = b.factors().iter().copied().filter(|f| f.color < j).collect();
        let Some(&x_k) = smaller.first() else {
            // only possible when x_j(-m) itself annihilates
            return LinComb::zero();
        };
        let (k, n) = (x_k.color, x_k.depth);
        let b1_rest = Monomial::from_factors(smaller[1..].to_vec());
        let b2 = Monomial::from_factors(
            b.factors()
                .iter()
                .copied()
                .filter(|f| f.color >= j)
                .collect(),
        )
        .without(&[Factor::new(j, m)])
        .expect("x_j(-m) is present");

        let total = m + n;
        let mut out = LinComb::zero();
        let minus_one = -BigRational::one();
        for a in 1..total {
            let c = total - a;
            if a == m
                || factor_annihilates(j, i64::from(a), &self.setup)
                || factor_annihilates(k, i64::from(c), &self.setup)
            {
                continue;
            }
            if a > m {
                let t = b2
                    .mul(&b1_rest)
                    .mul_factors(&[Factor::new(j, a), Factor::new(k, c)]);
                out.add_term(t, minus_one.clone());
            } else {
                let sub = b1_rest.mul_factors(&[Factor::new(j, a)]);
                let prefix = b2.mul_factors(&[Factor::new(k, c)]);
                let reduced = self.straighten_monomial(&sub);
                for (g, coeff) in reduced.iter() {
                    out.add_term(prefix.mul(g), -coeff);
                }
            }
        }
        out
    }
}

fn add_pending(pending: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match pending.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Rewrites `v` into admissible monomials following the spanning argument.
pub fn straighten_by_rewriting(v: &LinComb, setup: &Setup) -> LinComb {
    Straightener::new(*setup).straighten(v)
}

/// Relation matrix of one `(weight, degree)` sector, row-reduced with the
/// admissible monomials as free parameters.
#[derive(Debug, Clone)]
pub struct SectorReducer {
    setup: Setup,
    weight: WeightVector,
    degree: u32,
    /// Non-annihilating PBW monomials; non-admissible ones first.
    columns: Vec<Monomial>,
    admissible_count: usize,
    relation_rank: usize,
    /// Normal form of every non-admissible column.
    normal_forms: HashMap<Monomial, LinComb>,
}

impl SectorReducer {
    pub fn build(setup: &Setup, weight: &WeightVector, degree: u32) -> Result<Self> {
        weight.check_rank(setup)?;
        let all: Vec<Monomial> = pbw_monomials(weight, degree)
            .into_iter()
            .filter(|m| !annihilates(m, setup))
            .collect();
        let (admissible, mut columns): (Vec<Monomial>, Vec<Monomial>) =
            all.into_iter().partition(|m| m.is_admissible(setup));
        let first_admissible = columns.len();
        let admissible_count = admissible.len();
        columns.extend(admissible);
        let index: HashMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(k, m)| (m, k)).collect();

        let mut rows = Vec::new();
        let rank = setup.rank();
        for i in 1..=rank {
            for j in i..=rank {
                let pair = {
                    let mut w = WeightVector::unit(rank, i);
                    w.0[j - 1] += 1;
                    w
                };
                let Some(ctx_weight) = weight.checked_sub(&pair) else {
                    continue;
                };
                for total in 2..=degree {
                    for context in pbw_monomials(&ctx_weight, degree - total) {
                        let rel = RelationInstance {
                            colors: (i, j),
                            total_depth: total,
                            context,
                        };
                        let terms = relation_terms(&rel, setup);
                        let mut row = vec![BigRational::zero(); columns.len()];
                        let mut nonzero = false;
                        for (m, c) in terms.iter() {
                            // columns omit monomials that vanish on v_r
                            if let Some(&k) = index.get(m) {
                                row[k] = c.clone();
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            rows.push(row);
                        }
                    }
                }
            }
        }

        let (reduced, pivots) = rref(rows, columns.len());
        let mut normal_forms = HashMap::new();
        for (row, &p) in reduced.iter().zip(&pivots) {
            if p >= first_admissible {
                return Err(Error::Inconsistent(format!(
                    "admissible monomial {} is forced to be dependent",
                    columns[p]
                )));
            }
            let mut nf = LinComb::zero();
            for (k, c) in row.iter().enumerate() {
                if k == p || c.is_zero() {
                    continue;
                }
                if k < first_admissible {
                    return Err(Error::Inconsistent(format!(
                        "{} is not reduced to admissible monomials",
                        columns[p]
                    )));
                }
                nf.add_term(columns[k].clone(), -c);
            }
            normal_forms.insert(columns[p].clone(), nf);
        }
        if pivots.len() != first_admissible {
            return Err(Error::Inconsistent(format!(
                "relations leave {} non-admissible monomials free in sector {weight}/{degree}",
                first_admissible - pivots.len()
            )));
        }
        Ok(Self {
            setup: *setup,
            weight: weight.clone(),
            degree,
            columns,
            admissible_count,
            relation_rank: pivots.len(),
            normal_forms,
        })
    }

    pub fn admissible_count(&self) -> usize {
        self.admissible_count
    }

    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    /// Number of non-annihilating PBW monomials in the sector.
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Normal form of a combination supported in this sector.
    pub fn reduce(&self, v: &LinComb) -> Result<LinComb> {
        let mut out = LinComb::zero();
        for (m, c) in v.iter() {
            if m.degree() != self.degree || m.weight(self.setup.rank()) != self.weight {
                return Err(Error::Inconsistent(format!(
                    "{m} is outside sector {}/{}",
                    self.weight, self.degree
                )));
            }
            if annihilates(m, &self.setup) {
                continue;
            }
            match self.normal_forms.get(m) {
                Some(nf) => out.add_scaled(nf, c),
                None => out.add_term(m.clone(), c.clone()),
            }
        }
        Ok(out)
    }
}

/// Reference reduction: per sector exact elimination over all relations.
pub fn straighten_by_elimination(v: &LinComb, setup: &Setup) -> Result<LinComb> {
    let mut by_sector: BTreeMap<(u32, WeightVector), LinComb> = BTreeMap::new();
    for (m, c) in v.iter() {
        by_sector
            .entry((m.degree(), m.weight(setup.rank())))
            .or_default()
            .add_term(m.clone(), c.clone());
    }
    let mut out = LinComb::zero();
    for ((degree, weight), part) in by_sector {
        let reducer = SectorReducer::build(setup, &weight, degree)?;
        out.add_scaled(&reducer.reduce(&part)?, &BigRational::one());
    }
    Ok(out)
}
