//! Exhaustive checks of the operator identities on low-degree Fock states.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{heisenberg_monomials, FockState, FockVector, LatticePoint, Oracle};

/// Bounds for [`verify_relations`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationConfig {
    /// Largest total depth `M` in `sum_{a+b=M} x_i(-a) x_j(-b)`.
    pub max_total_depth: u32,
    /// Largest Fock degree of the test states.
    pub max_fock_degree: u32,
    /// Test states sit at `omega_r + sum n_i gamma_i` with `sum n_i <= radius`.
    pub lattice_radius: u32,
}

impl RelationConfig {
    pub fn new(max_total_depth: u32, max_fock_degree: u32) -> Self {
        Self {
            max_total_depth,
            max_fock_degree,
            lattice_radius: 1,
        }
    }

    /// Mode window for the commutation checks.
    fn modes(&self) -> Vec<i64> {
        (-(i64::from(self.max_total_depth) / 2)..=1).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum RelationKind {
    /// `x_i(z)^2 = 0`
    Square { color: usize },
    /// `x_i(z) x_j(z) = 0`, `i < j`
    Interaction { i: usize, j: usize },
    /// `x_i(m) x_j(n) = x_j(n) x_i(m)`
    Commutativity { i: usize, j: usize },
    /// `x_i(m) v_r = 0` for `m >= -delta_{i<=r}`, and not for `m = -1 - delta`
    Annihilation { color: usize, module: usize },
    /// `x_i(m) e^{omega_j} = eps e^{omega_j} x_i(m + delta_{i<=j})`
    SimpleCurrent { color: usize, current: usize },
    /// `x_r(-1) v_{r-1} = C e^{omega_l} v_r` with `C != 0`
    Init2 { module: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub kind: RelationKind,
    /// The test state, or the highest weight vector involved.
    pub state: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub rank: usize,
    /// Number of identity instances evaluated.
    pub checks: u64,
    /// Measured constants `C` of `x_r(-1) v_{r-1} = C e^{omega_l} v_r`, as `p/q`.
    pub init2_constants: Vec<(usize, String)>,
    pub failure: Option<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Shallow {
    color: usize,
    gamma: Vec<i64>,
    a_min: i64,
    images: Vec<FockVector>,
}

struct Checker<'a> {
    oracle: &'a Oracle,
    config: RelationConfig,
    checks: u64,
}

type Outcome = Result<(), RelationFailure>;

fn fail(kind: RelationKind, state: &FockState, detail: String) -> Outcome {
    Err(RelationFailure {
        kind,
        state: state.to_string(),
        detail,
    })
}

/// Checks every identity on all states `f ⊗ e^{beta + omega_r}` with
/// `deg f <= max_fock_degree`, `r = 0..=l` and `beta` in the lattice window,
/// plus the highest weight conditions. Stops at the first counterexample.
pub fn verify_relations(oracle: &Oracle, config: RelationConfig) -> RelationReport {
    let mut checker = Checker {
        oracle,
        config,
        checks: 0,
    };
    let mut constants = Vec::new();
    let failure = checker.run(&mut constants).err();
    RelationReport {
        rank: oracle.rank(),
        checks: checker.checks,
        init2_constants: constants,
        failure,
    }
}

impl Checker<'_> {
    fn run(&mut self, constants: &mut Vec<(usize, String)>) -> Outcome {
        let rank = self.oracle.rank();
        for r in 0..=rank {
            self.check_annihilation(r)?;
        }
        for r in 1..=rank {
            let c = self.check_init2(r)?;
            constants.push((r, crate::straightening::format_ratio(&c)));
        }
        let points = lattice_window(rank, self.config.lattice_radius);
        for r in 0..=rank {
            for q in &points {
                for d in 0..=self.config.max_fock_degree {
                    for heis in heisenberg_monomials(rank, d) {
                        let state = FockState {
                            heis,
                            lattice: LatticePoint::new(q.clone(), r),
                        };
                        self.check_state(&state)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn check_annihilation(&mut self, r: usize) -> Outcome {
        let o = self.oracle;
        let v = o.highest_weight_vector(r);
        let state = v.states().next().expect("basis vector").clone();
        for color in 1..=o.rank() {
            let delta = i64::from(color <= r);
            let kind = RelationKind::Annihilation { color, module: r };
            let modes: Vec<i64> = (-delta - 1..=i64::from(self.config.max_total_depth)).collect();
            let images = o.apply_root_modes(&o.gamma(color), &modes, &v);
            for (m, img) in modes.iter().zip(&images) {
                self.checks += 1;
                let expect_zero = *m >= -delta;
                if img.is_zero() != expect_zero {
                    return fail(
                        kind,
                        &state,
                        format!("x_{color}({m}) v_{r} = {img}, expected zero: {expect_zero}"),
                    );
                }
            }
        }
        Ok(())
    }

    fn check_init2(&mut self, r: usize) -> Result<BigRational, RelationFailure> {
        let o = self.oracle;
        self.checks += 1;
        let lhs = o.apply_x(r, -1, &o.highest_weight_vector(r - 1));
        let rhs = o.simple_current(o.rank(), &o.highest_weight_vector(r));
        match lhs.ratio_to(&rhs) {
            Some(c) if !c.is_zero() => Ok(c),
            _ => {
                let state = o.highest_weight_vector(r - 1).states().next().cloned().expect("basis");
                Err(RelationFailure {
                    kind: RelationKind::Init2 { module: r },
                    state: state.to_string(),
                    detail: format!("lhs = {lhs}, rhs = {rhs}"),
                })
            }
        }
    }

    fn check_state(&mut self, state: &FockState) -> Outcome {
        let rank = self.oracle.rank();
        let w = FockVector::basis(state.clone());
        let shallow: Vec<Shallow> = (1..=rank).map(|c| self.shallow(state, &w, c)).collect();
        for j in 1..=rank {
            for i in 1..=j {
                self.check_vanishing_product(state, &shallow[i - 1], &shallow[j - 1])?;
            }
        }
        for i in 1..=rank {
            for j in i + 1..=rank {
                self.check_commutativity(state, &w, i, j)?;
            }
        }
        for i in 1..=rank {
            for j in 1..=rank {
                self.check_simple_current(state, &w, i, j)?;
            }
        }
        Ok(())
    }

    /// `x_c(-a) w` for `a_min <= a <= M_max / 2`. In normal-ordered form the
    /// exponents of `x_c(z)` on `w` are bounded below by `<gamma_c, mu> - deg w`,
    /// so every term `x_i(-a) x_j(-b) w` of a relation with `a < a_min(i)` or
    /// `b < a_min(j)` vanishes.
    fn shallow(&self, state: &FockState, w: &FockVector, color: usize) -> Shallow {
        let o = self.oracle;
        let gamma = o.gamma(color);
        let a_min = 1 + o.pairing(&gamma, &state.lattice) - i64::from(state.degree());
        let top = i64::from(self.config.max_total_depth) / 2;
        let modes: Vec<i64> = (a_min..=top).map(|a| -a).collect();
        let images = o.apply_root_modes(&gamma, &modes, w);
        Shallow {
            color,
            gamma,
            a_min,
            images,
        }
    }

    /// `sum_{a+b=M} x_i(-a) x_j(-b) w = 0` for `2 <= M <= M_max`, `i <= j`.
    /// Each term is evaluated with its shallower factor applied first, which
    /// keeps intermediate Fock degrees near `deg w + M/2`; for `a < b` this
    /// reverses the written order, which is harmless since the factors commute
    /// (checked separately).
    fn check_vanishing_product(&mut self, state: &FockState, si: &Shallow, sj: &Shallow) -> Outcome {
        let o = self.oracle;
        let m_max = i64::from(self.config.max_total_depth);
        let mut sums = vec![FockVector::zero(); m_max.max(1) as usize + 1];
        // jobs applying `then` at depth `t - d` to `first` at depth `d`
        let jobs = |first: &Shallow, then: &Shallow, strict: bool| -> Vec<(usize, i64, usize)> {
            let mut jobs = Vec::new();
            for (k, v) in first.images.iter().enumerate() {
                let d = first.a_min + k as i64;
                if v.is_zero() {
                    continue;
                }
                for t in 2..=m_max {
                    let e = t - d;
                    if e >= then.a_min && if strict { e > d } else { e >= d } {
                        jobs.push((t as usize, d - t, k));
                    }
                }
            }
            jobs
        };
        let slots = m_max.max(1) as usize + 1;
        // terms with b <= a: x_j(-b) first; with a < b: x_i(-a) first
        for (first, then, strict) in [(sj, si, false), (si, sj, true)] {
            let inputs: Vec<&FockVector> = first.images.iter().collect();
            let images = o.apply_root_batch(&then.gamma, &inputs, &jobs(first, then, strict), slots);
            for (acc, img) in sums.iter_mut().zip(images) {
                acc.absorb(img);
            }
        }
        let (i, j) = (si.color, sj.color);
        for (t, acc) in sums.iter().enumerate().skip(2) {
            self.checks += 1;
            if !acc.is_zero() {
                let kind = if i == j {
                    RelationKind::Square { color: i }
                } else {
                    RelationKind::Interaction { i, j }
                };
                return fail(kind, state, format!("M = {t}: {acc}"));
            }
        }
        Ok(())
    }

    fn check_commutativity(&mut self, state: &FockState, w: &FockVector, i: usize, j: usize) -> Outcome {
        let o = self.oracle;
        let modes = self.config.modes();
        let (gi, gj) = (o.gamma(i), o.gamma(j));
        let xi = o.apply_root_modes(&gi, &modes, w);
        let xj = o.apply_root_modes(&gj, &modes, w);
        // ij[n][m] = x_i(m) x_j(n) w, ji[m][n] = x_j(n) x_i(m) w
        let ij: Vec<Vec<FockVector>> = xj.iter().map(|v| o.apply_root_modes(&gi, &modes, v)).collect();
        let ji: Vec<Vec<FockVector>> = xi.iter().map(|v| o.apply_root_modes(&gj, &modes, v)).collect();
        for (a, m) in modes.iter().enumerate() {
            for (b, n) in modes.iter().enumerate() {
                self.checks += 1;
                if ij[b][a] != ji[a][b] {
                    return fail(
                        RelationKind::Commutativity { i, j },
                        state,
                        format!(
                            "x_{i}({m}) x_{j}({n}) w = {} but x_{j}({n}) x_{i}({m}) w = {}",
                            ij[b][a], ji[a][b]
                        ),
                    );
                }
            }
        }
        Ok(())
    }

    fn check_simple_current(&mut self, state: &FockState, w: &FockVector, i: usize, j: usize) -> Outcome {
        let o = self.oracle;
        let modes = self.config.modes();
        let gi = o.gamma(i);
        let delta = i64::from(i <= j);
        let sign = o.simple_current_sign(i, j, state.lattice.sector);
        let lhs = o.apply_root_modes(&gi, &modes, &o.simple_current(j, w));
        let shifted: Vec<i64> = modes.iter().map(|m| m + delta).collect();
        let inner = o.apply_root_modes(&gi, &shifted, w);
        let c = BigRational::from_integer(sign.into());
        for ((m, l), v) in modes.iter().zip(&lhs).zip(&inner) {
            self.checks += 1;
            let rhs = o.simple_current(j, v).scaled(&c);
            if *l != rhs {
                return fail(
                    RelationKind::SimpleCurrent { color: i, current: j },
                    state,
                    format!("m = {m}: lhs = {l}, rhs = {rhs}"),
                );
            }
        }
        Ok(())
    }
}

/// Root-lattice parts `sum n_i gamma_i`, `n_i >= 0`, `sum n_i <= radius`,
/// in simple-root coordinates: the charges carried by `b v_r`.
fn lattice_window(rank: usize, radius: u32) -> Vec<Vec<i64>> {
    fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == rank {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(rank, left - x, cur, out);
            cur.pop();
        }
    }
    let mut charges = Vec::new();
    rec(rank, radius, &mut Vec::new(), &mut charges);
    // gamma_i = alpha_i + ... + alpha_l, so q_k = n_1 + ... + n_k
    charges
        .into_iter()
        .map(|n| {
            n.iter()
                .scan(0i64, |acc, &x| {
                    *acc += i64::from(x);
                    Some(*acc)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::CocycleTable;

    #[test]
    fn window_sizes() {
        assert_eq!(lattice_window(2, 1), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(lattice_window(3, 1).len(), 4);
        assert_eq!(lattice_window(1, 2), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(lattice_window(2, 0), vec![vec![0, 0]]);
    }

    #[test]
    fn rank_one_passes() {
        let report = verify_relations(&Oracle::new(1), RelationConfig::new(6, 4));
        assert!(report.passed(), "{:?}", report.failure);
        assert_eq!(report.init2_constants.len(), 1);
    }

    #[test]
    fn rank_two_passes() {
        let report = verify_relations(&Oracle::new(2), RelationConfig::new(6, 3));
        assert!(report.passed(), "{:?}", report.failure);
    }

    #[test]
    fn corrupted_cocycle_fails() {
        let bad = CocycleTable::standard(2).with_value(2, 1, 1);
        let report = verify_relations(&Oracle::with_cocycle(2, bad), RelationConfig::new(6, 2));
        let failure = report.failure.expect("corrupted cocycle must be detected");
        assert_eq!(failure.kind, RelationKind::Interaction { i: 1, j: 2 });
    }
}
