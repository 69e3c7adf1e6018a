//! Exact model of `V_P = M(1) ⊗ C[P]` for the `A_l` weight lattice and the
//! vertex operators `x_alpha(z) = Y(e^alpha, z)`.
//!
//! Heisenberg generators are the simple roots `alpha_i(-n)`, `n >= 1`, with
//! `[alpha_i(m), alpha_j(n)] = m A_ij delta_{m+n,0}` (`A` the Cartan matrix).
//! A Fock state is a monomial in these generators tensored with `e^lambda`,
//! `lambda = beta + omega_r` with `beta` in root coordinates.
//!
//! On `f ⊗ e^mu` the operator `x_alpha(m)` is the coefficient of `z^{-m-1}` in
//! `eps(alpha, mu) z^<alpha,mu> E^-(-alpha, z) E^+(-alpha, z) f ⊗ e^{alpha+mu}`.
//! `E^+(-alpha, z)` is the substitution
//! `alpha_j(-n) -> alpha_j(-n) - <alpha, alpha_j> z^{-n}`, and `E^-(-alpha, z)`
//! multiplies by `exp(sum_n alpha(-n) z^n / n)`. Both have finitely many terms
//! in each degree, so the action is exact.
//!
//! Degrees of Fock states count Heisenberg modes only; the `<lambda,lambda>/2`
//! offset of `e^lambda` is not included.

mod cache;
mod coef;
mod rank;
mod relations;

pub use cache::{SectorCache, SectorKey, SectorRecord};
pub use rank::{graded_rank, graded_rank_with_cache, sector_rank, sector_rank_cached, RankTriple};
pub use relations::{verify_relations, RelationConfig, RelationFailure, RelationKind, RelationReport};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Monomial, Setup};
use coef::Coef;

/// Heisenberg monomial: sorted multiset of `(direction, mode)` standing for
/// `alpha_direction(-mode)`, directions 1-based.
pub type HeisMonomial = Vec<(usize, u32)>;

/// `beta + omega_sector` with `beta` in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub q: Vec<i64>,
    pub sector: usize,
}

impl LatticePoint {
    pub fn new(q: Vec<i64>, sector: usize) -> Self {
        Self { q, sector }
    }

    /// `omega_sector` itself.
    pub fn fundamental(rank: usize, sector: usize) -> Self {
        Self {
            q: vec![0; rank],
            sector,
        }
    }

    fn shifted(&self, a: &[i64]) -> Self {
        Self {
            q: self.q.iter().zip(a).map(|(x, y)| x + y).collect(),
            sector: self.sector,
        }
    }
}

/// Basis element of `V_P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockState {
    pub heis: HeisMonomial,
    pub lattice: LatticePoint,
}

impl FockState {
    pub fn degree(&self) -> u32 {
        self.heis.iter().map(|&(_, n)| n).sum()
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.heis.is_empty() {
            f.write_str("1")?;
        }
        for (k, (i, n)) in self.heis.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "a{i}(-{n})")?;
        }
        let q: Vec<String> = self.lattice.q.iter().map(i64::to_string).collect();
        write!(f, " ⊗ e^[{}|w{}]", q.join(","), self.lattice.sector)
    }
}

/// Finite rational combination of Fock states.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<FockState, Coef>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(state: FockState) -> Self {
        let mut v = Self::zero();
        v.add(state, Coef::one());
        v
    }

    pub fn add_term(&mut self, state: FockState, c: BigRational) {
        self.add(state, Coef::from_big(&c));
    }

    fn add(&mut self, state: FockState, c: Coef) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(state) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FockVector, c: &BigRational) {
        self.add_scaled_coef(other, &Coef::from_big(c));
    }

    fn add_scaled_coef(&mut self, other: &FockVector, c: &Coef) {
        for (s, x) in &other.terms {
            self.add(s.clone(), x.mul(c));
        }
    }

    /// `self += other`, consuming `other`.
    pub fn absorb(&mut self, other: FockVector) {
        if self.terms.is_empty() {
            self.terms = other.terms;
            return;
        }
        for (s, x) in other.terms {
            self.add(s, x);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> FockVector {
        let mut v = FockVector::zero();
        v.add_scaled(self, c);
        v
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

    pub fn coeff(&self, s: &FockState) -> BigRational {
        self.terms.get(s).map_or_else(BigRational::zero, Coef::to_big)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockState, BigRational)> + '_ {
        self.terms.iter().map(|(s, c)| (s, c.to_big()))
    }

    pub fn states(&self) -> impl Iterator<Item = &FockState> {
        self.terms.keys()
    }

    /// `Some(c)` with `self == c * other`, `c != 0`, when both are nonzero
    /// and proportional.
    pub fn ratio_to(&self, other: &FockVector) -> Option<BigRational> {
        let (s, x) = self.terms.iter().next()?;
        let y = other.terms.get(s)?;
        let c = x.to_big() / y.to_big();
        (self.terms.len() == other.terms.len() && *self == other.scaled(&c)).then_some(c)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (s, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {s}")?;
        }
        Ok(())
    }
}

/// Signs `eps(alpha_i, alpha_j)` extended bimultiplicatively to `Q x Q`,
/// and to `Q x P` by `eps(alpha, beta + omega_r) = eps(alpha, beta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    /// `negative[i][j]` iff `eps(alpha_{i+1}, alpha_{j+1}) = -1`.
    negative: Vec<Vec<bool>>,
}

impl CocycleTable {
    /// `eps(alpha_i, alpha_j) = (-1)^{<alpha_i, alpha_j>}` for `i > j`, else 1.
    pub fn standard(rank: usize) -> Self {
        let cartan = cartan_matrix(rank);
        let negative = (0..rank)
            .map(|i| (0..rank).map(|j| i > j && cartan[i][j] % 2 != 0).collect())
            .collect();
        Self { negative }
    }

    /// Overrides one generator value; used for negative controls.
    pub fn with_value(mut self, i: usize, j: usize, sign: i32) -> Self {
        self.negative[i - 1][j - 1] = sign < 0;
        self
    }

    pub fn value(&self, i: usize, j: usize) -> i32 {
        if self.negative[i - 1][j - 1] {
            -1
        } else {
            1
        }
    }

    /// `eps(a, b)` for root-coordinate vectors.
    pub fn eval(&self, a: &[i64], b: &[i64]) -> i32 {
        let mut parity = 0i64;
        for (i, row) in self.negative.iter().enumerate() {
            for (j, &neg) in row.iter().enumerate() {
                if neg {
                    parity += a[i] * b[j];
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn cartan_matrix(rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

type Poly = Vec<(HeisMonomial, Coef)>;

/// Heisenberg parts grouped by lattice point and then by a degree index.
type Pooled = BTreeMap<LatticePoint, Vec<BTreeMap<HeisMonomial, Coef>>>;

fn add_to(map: &mut BTreeMap<HeisMonomial, Coef>, key: &HeisMonomial, c: Coef) {
    match map.get_mut(key) {
        Some(slot) => *slot = slot.add(&c),
        None => {
            map.insert(key.clone(), c);
        }
    }
}

/// Annihilation remainders of `v` by lattice point and removed degree.
fn remainders(v: &FockVector, coupling: &[i64]) -> Pooled {
    let mut pooled = Pooled::new();
    for (state, coeff) in &v.terms {
        let by_k = pooled.entry(state.lattice.clone()).or_default();
        for (rest, k, c) in annihilation_terms(&state.heis, coupling) {
            let k = k as usize;
            if by_k.len() <= k {
                by_k.resize_with(k + 1, BTreeMap::new);
            }
            add_to(&mut by_k[k], &rest, coeff.mul(&c));
        }
    }
    pooled
}

/// Vertex operators on `V_P` for one rank.
pub struct Oracle {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cocycle: CocycleTable,
    /// Coefficients of `exp(sum_n alpha(-n) z^n / n)` per root, grown on demand.
    creation: RwLock<HashMap<Vec<i64>, Arc<Vec<Poly>>>>,
}

impl Oracle {
    pub fn new(rank: usize) -> Self {
        Self::with_cocycle(rank, CocycleTable::standard(rank))
    }

    pub fn with_cocycle(rank: usize, cocycle: CocycleTable) -> Self {
        Self {
            rank,
            cartan: cartan_matrix(rank),
            cocycle,
            creation: RwLock::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cocycle_table(&self) -> &CocycleTable {
        &self.cocycle
    }

    /// `gamma_i = alpha_i + ... + alpha_l` in root coordinates.
    pub fn gamma(&self, color: usize) -> Vec<i64> {
        (1..=self.rank).map(|k| i64::from(k >= color)).collect()
    }

    /// `<a, b>` for root-coordinate vectors.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += a[i] * self.cartan[i][j] * b[j];
            }
        }
        s
    }

    /// `<a, lambda>` for `a` in `Q` and `lambda` in `P`.
    pub fn pairing(&self, a: &[i64], lambda: &LatticePoint) -> i64 {
        let omega = if lambda.sector > 0 {
            a[lambda.sector - 1]
        } else {
            0
        };
        self.form(a, &lambda.q) + omega
    }

    /// `eps(a, lambda)`.
    pub fn cocycle(&self, a: &[i64], lambda: &LatticePoint) -> i32 {
        self.cocycle.eval(a, &lambda.q)
    }

    /// `v_r = 1 ⊗ e^{omega_r}`.
    pub fn highest_weight_vector(&self, r: usize) -> FockVector {
        FockVector::basis(FockState {
            heis: Vec::new(),
            lattice: LatticePoint::fundamental(self.rank, r),
        })
    }

    fn creation_table(&self, a: &[i64], max_p: usize) -> Arc<Vec<Poly>> {
        if let Some(t) = self.creation.read().expect("creation cache").get(a) {
            if t.len() > max_p {
                return Arc::clone(t);
            }
        }
        let table = Arc::new(creation_polys(a, max_p.max(8)));
        self.creation
            .write()
            .expect("creation cache")
            .insert(a.to_vec(), Arc::clone(&table));
        table
    }

    /// `x_alpha(m)` for each `m` in `modes`, with `alpha` given in root
    /// coordinates; returns one vector per mode, in order.
    pub fn apply_root_modes(&self, a: &[i64], modes: &[i64], v: &FockVector) -> Vec<FockVector> {
        let jobs: Vec<(usize, i64, usize)> = modes.iter().enumerate().map(|(k, &m)| (k, m, 0)).collect();
        self.apply_root_batch(a, &[v], &jobs, modes.len())
    }

    /// For each output slot, `sum x_alpha(m) inputs[u]` over the jobs
    /// `(slot, m, u)` aimed at it.
    ///
    /// `E^+` does not see the creation part, so annihilation remainders are
    /// pooled by the creation degree they need, across all states and jobs of
    /// a slot, before multiplying by the `E^-` coefficients.
    pub fn apply_root_batch(
        &self,
        a: &[i64],
        inputs: &[&FockVector],
        jobs: &[(usize, i64, usize)],
        slots: usize,
    ) -> Vec<FockVector> {
        let coupling: Vec<i64> = (0..self.rank)
            .map(|j| (0..self.rank).map(|i| a[i] * self.cartan[i][j]).sum())
            .collect();
        let mut out = vec![FockVector::zero(); slots];
        let mut used = vec![false; inputs.len()];
        for &(_, _, u) in jobs {
            used[u] = true;
        }
        // remainders of each input: lattice point -> removed degree -> rest
        let removed: Vec<Pooled> = inputs
            .iter()
            .zip(&used)
            .map(|(v, &u)| if u { remainders(v, &coupling) } else { BTreeMap::new() })
            .collect();
        // per slot: lattice point -> creation degree -> rest
        let mut gathered: Vec<Pooled> = vec![BTreeMap::new(); slots];
        let mut max_p = 0usize;
        for &(slot, m, u) in jobs {
            for (lattice, by_k) in &removed[u] {
                let e = -m - 1 - self.pairing(a, lattice);
                let by_p = gathered[slot].entry(lattice.clone()).or_default();
                for (k, rests) in by_k.iter().enumerate() {
                    let p = e + k as i64;
                    if p < 0 || rests.is_empty() {
                        continue;
                    }
                    let p = p as usize;
                    if by_p.len() <= p {
                        by_p.resize_with(p + 1, BTreeMap::new);
                    }
                    max_p = max_p.max(p);
                    for (rest, c) in rests {
                        add_to(&mut by_p[p], rest, c.clone());
                    }
                }
            }
        }
        let table = self.creation_table(a, max_p);
        let mut key = Vec::new();
        for (slot, lattices) in gathered.into_iter().enumerate() {
            for (lattice, by_p) in lattices {
                let sign = Coef::int(i64::from(self.cocycle(a, &lattice)));
                let target = lattice.shifted(a);
                let mut acc: BTreeMap<HeisMonomial, Coef> = BTreeMap::new();
                for (p, rests) in by_p.iter().enumerate() {
                    for (rest, c) in rests {
                        if c.is_zero() {
                            continue;
                        }
                        for (h, sc) in &table[p] {
                            merge_into(&mut key, rest, h);
                            add_to(&mut acc, &key, c.mul(sc));
                        }
                    }
                }
                let image = FockVector {
                    terms: acc
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(heis, c)| {
                            let state = FockState {
                                heis,
                                lattice: target.clone(),
                            };
                            (state, c.mul(&sign))
                        })
                        .collect(),
                };
                out[slot].absorb(image);
            }
        }
        out
    }

    pub fn apply_root(&self, a: &[i64], m: i64, v: &FockVector) -> FockVector {
        self.apply_root_modes(a, &[m], v).pop().expect("one mode")
    }

    /// `x_i(m) v` for color `i`.
    pub fn apply_x(&self, color: usize, m: i64, v: &FockVector) -> FockVector {
        self.apply_root(&self.gamma(color), m, v)
    }

    /// `b v_r`, factors applied right to left.
    pub fn apply_monomial(&self, b: &Monomial, setup: &Setup) -> FockVector {
        let mut v = self.highest_weight_vector(setup.module());
        for f in b.factors().iter().rev() {
            v = self.apply_x(f.color, -i64::from(f.depth), &v);
            if v.is_zero() {
                break;
            }
        }
        v
    }

    /// Applies a rational combination of monomials to `v_r`.
    pub fn apply_lincomb(&self, v: &crate::straightening::LinComb, setup: &Setup) -> FockVector {
        let mut out = FockVector::zero();
        for (m, c) in v.iter() {
            out.add_scaled(&self.apply_monomial(m, setup), c);
        }
        out
    }

    /// `omega_r + omega_j = c + omega_s` with `c` in `Q`; returns `(c, s)`.
    pub fn omega_sum(&self, r: usize, j: usize) -> (Vec<i64>, usize) {
        let n = self.rank + 1;
        let s = (r + j) % n;
        // (A^{-1})_{ik} = min(i,k) (n - max(i,k)) / n, omega_0 = 0
        let inv = |i: usize, k: usize| -> i64 {
            if k == 0 {
                0
            } else {
                (i.min(k) * (n - i.max(k))) as i64
            }
        };
        let c = (1..=self.rank)
            .map(|i| {
                let num = inv(i, r) + inv(i, j) - inv(i, s);
                assert_eq!(num % n as i64, 0, "omega sum leaves the root lattice");
                num / n as i64
            })
            .collect();
        (c, s)
    }

    /// Simple current `e^{omega_j}`: the bare shift `mu -> mu + omega_j`.
    pub fn simple_current(&self, j: usize, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (state, c) in &v.terms {
            let (shift, s) = self.omega_sum(state.lattice.sector, j);
            let lattice = LatticePoint {
                q: state.lattice.q.iter().zip(&shift).map(|(x, y)| x + y).collect(),
                sector: s,
            };
            out.add(
                FockState {
                    heis: state.heis.clone(),
                    lattice,
                },
                c.clone(),
            );
        }
        out
    }

    /// The sign `eps(gamma_i, omega_j)` seen from sector `r`: with the bare
    /// shift, `x_i(m) e^{omega_j} = sign * e^{omega_j} x_i(m + delta_{i<=j})`
    /// on `L(Lambda_r)`, where `sign = eps(gamma_i, omega_r + omega_j - omega_s)`.
    pub fn simple_current_sign(&self, color: usize, j: usize, r: usize) -> i32 {
        let (c, _) = self.omega_sum(r, j);
        self.cocycle.eval(&self.gamma(color), &c)
    }
}

/// Coefficients of `z^p`, `p <= max_p`, in `exp(sum_n alpha(-n) z^n / n)`,
/// via `p S_p = sum_{n=1}^p alpha(-n) S_{p-n}`.
fn creation_polys(a: &[i64], max_p: usize) -> Vec<Poly> {
    let mut table: Vec<Poly> = Vec::with_capacity(max_p + 1);
    table.push(vec![(Vec::new(), Coef::one())]);
    for p in 1..=max_p {
        let mut acc: BTreeMap<HeisMonomial, Coef> = BTreeMap::new();
        for n in 1..=p {
            for (mono, c) in &table[p - n] {
                for (i, &ai) in a.iter().enumerate() {
                    if ai == 0 {
                        continue;
                    }
                    let mut m = mono.clone();
                    let pos = m.partition_point(|&v| v < (i + 1, n as u32));
                    m.insert(pos, (i + 1, n as u32));
                    let x = c.mul(&Coef::int(ai));
                    let e = acc.entry(m).or_insert_with(Coef::zero);
                    *e = e.add(&x);
                }
            }
        }
        let inv_p = Coef::ratio(1, p as i64);
        table.push(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, c.mul(&inv_p)))
                .collect(),
        );
    }
    table
}

/// Expansion of `E^+(-alpha, z)` on a Heisenberg monomial: triples
/// `(remaining monomial, k, coefficient of z^{-k})`.
fn annihilation_terms(heis: &HeisMonomial, coupling: &[i64]) -> Vec<(HeisMonomial, u32, Coef)> {
    // group into (variable, multiplicity)
    let mut groups: Vec<((usize, u32), u32)> = Vec::new();
    for &v in heis {
        match groups.last_mut() {
            Some((w, e)) if *w == v => *e += 1,
            _ => groups.push((v, 1)),
        }
    }
    let mut out = vec![(Vec::new(), 0u32, BigInt::one())];
    for &((dir, mode), mult) in &groups {
        let c = -coupling[dir - 1];
        let mut next = Vec::new();
        for (rest, k, coeff) in &out {
            let max_t = if c == 0 { 0 } else { mult };
            let mut binom = BigInt::one();
            let mut power = BigInt::one();
            for t in 0..=max_t {
                if t > 0 {
                    binom = binom * BigInt::from(mult - t + 1) / BigInt::from(t);
                    power *= c;
                }
                let mut r = rest.clone();
                r.extend(std::iter::repeat_n((dir, mode), (mult - t) as usize));
                next.push((r, k + mode * t, coeff * &binom * &power));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(r, k, c)| (r, k, Coef::from_big(&BigRational::from_integer(c))))
        .collect()
}

fn merge_into(out: &mut HeisMonomial, a: &[(usize, u32)], b: &[(usize, u32)]) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// All Heisenberg monomials of degree exactly `degree` in `rank` directions.
pub fn heisenberg_monomials(rank: usize, degree: u32) -> Vec<HeisMonomial> {
    fn rec(
        rank: usize,
        left: u32,
        min: (usize, u32),
        cur: &mut HeisMonomial,
        out: &mut Vec<HeisMonomial>,
    ) {
        if left == 0 {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        for mode in min.1..=left {
            let first_dir = if mode == min.1 { min.0 } else { 1 };
            for dir in first_dir..=rank {
                cur.push((dir, mode));
                rec(rank, left - mode, (dir, mode), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(rank, degree, (1, 1), &mut Vec::new(), &mut out);
    out
}
