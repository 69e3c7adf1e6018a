//! Monomials in the commuting operators `x_i(-m)`, their reverse
//! lexicographic order, gradings, and the admissible (particle) monomials.
//!
//! Colors are numbered `1..=rank`; color `i` stands for the root
//! `gamma_i = alpha_i + ... + alpha_rank`. A monomial is kept in canonical
//! order: read left to right, colors descend from `rank` to `1` and within
//! one color depths descend, so the leftmost factor is the smallest one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rank `l` of `sl(l+1)` together with the index `r` of the level 1 module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Setup {
    rank: usize,
    module: usize,
}

impl Setup {
    pub fn new(rank: usize, module: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank);
        }
        if module > rank {
            return Err(Error::ModuleOutOfRange { module, rank });
        }
        Ok(Self { rank, module })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn module(&self) -> usize {
        self.module
    }

    /// `delta_{i <= r}`: whether color `i` pairs nontrivially with `omega_r`.
    pub fn delta(&self, color: usize) -> u32 {
        u32::from(color <= self.module)
    }

    /// All setups with the given rank, `r = 0..=rank`.
    pub fn all_modules(rank: usize) -> Result<Vec<Setup>> {
        (0..=rank).map(|r| Setup::new(rank, r)).collect()
    }
}

/// The operator `x_color(-depth)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub color: usize,
    pub depth: u32,
}

impl Factor {
    pub fn new(color: usize, depth: u32) -> Self {
        Self { color, depth }
    }
}

/// `x_i(n) < x_j(m)` iff `i > j`, or `i == j` and `n < m`.
impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .color
            .cmp(&self.color)
            .then_with(|| other.depth.cmp(&self.depth))
    }
}

impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}(-{})", self.color, self.depth)
    }
}

/// Multiplicities `(n_1, ..., n_l)` of the colors in a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<u32>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Multiplicity of `color` (1-based).
    pub fn get(&self, color: usize) -> u32 {
        self.0[color - 1]
    }

    pub fn length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn check_rank(&self, setup: &Setup) -> Result<()> {
        if self.rank() != setup.rank() {
            return Err(Error::WeightLength {
                expected: setup.rank(),
                found: self.rank(),
            });
        }
        Ok(())
    }

    /// Componentwise difference, `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &WeightVector) -> Option<WeightVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(WeightVector)
    }

    /// Weight of a single factor of `color`.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut n = vec![0; rank];
        n[color - 1] = 1;
        Self(n)
    }

    /// All weights of the given rank with total length `<= max_length`,
    /// in lexicographic order.
    pub fn all_up_to_length(rank: usize, max_length: u32) -> Vec<WeightVector> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rank);
        fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<WeightVector>) {
            if cur.len() == rank {
                out.push(WeightVector(cur.clone()));
                return;
            }
            for n in 0..=left {
                cur.push(n);
                rec(rank, left - n, cur, out);
                cur.pop();
            }
        }
        rec(rank, max_length, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeightVector(Vec::new()));
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::MalformedWeight(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }
}

/// Degree, weight and length of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    pub degree: u32,
    pub weight: WeightVector,
    pub length: u32,
}

/// A product of commuting factors, stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<Factor>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    /// Canonicalizes a multiset of factors, checking colors against `setup`.
    pub fn new(factors: impl IntoIterator<Item = Factor>, setup: &Setup) -> Result<Self> {
        let factors: Vec<Factor> = factors.into_iter().collect();
        for f in &factors {
            if f.color == 0 || f.color > setup.rank() {
                return Err(Error::ColorOutOfRange {
                    color: f.color,
                    rank: setup.rank(),
                });
            }
            if f.depth == 0 {
                return Err(Error::NonPositiveDepth(f.color));
            }
        }
        Ok(Self::from_factors(factors))
    }

    /// Canonicalizes without range checks. Callers guarantee depths are
    /// positive and colors nonzero.
    pub(crate) fn from_factors(mut factors: Vec<Factor>) -> Self {
        factors.sort_unstable();
        Self { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.depth).sum()
    }

    pub fn weight(&self, rank: usize) -> WeightVector {
        let mut n = vec![0; rank];
        for f in &self.factors {
            n[f.color - 1] += 1;
        }
        WeightVector(n)
    }

    pub fn grading(&self, rank: usize) -> Grading {
        Grading {
            degree: self.degree(),
            weight: self.weight(rank),
            length: self.factors.len() as u32,
        }
    }

    /// Depths of `color` in ascending order (rightmost factor first).
    pub fn depths(&self, color: usize) -> Vec<u32> {
        self.factors
            .iter()
            .rev()
            .filter(|f| f.color == color)
            .map(|f| f.depth)
            .collect()
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.len() + other.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        Self::from_factors(factors)
    }

    pub fn mul_factors(&self, extra: &[Factor]) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(extra);
        Self::from_factors(factors)
    }

    /// Removes one copy of each listed factor; `None` if one is missing.
    pub fn without(&self, remove: &[Factor]) -> Option<Monomial> {
        let mut factors = self.factors.clone();
        for r in remove {
            let pos = factors.iter().position(|f| f == r)?;
            factors.remove(pos);
        }
        Some(Monomial { factors })
    }

    /// Reverse lexicographic comparison: factor sequences are read from
    /// the right, and a proper extension to the left is greater.
    pub fn compare(&self, other: &Monomial) -> Ordering {
        self.factors.iter().rev().cmp(other.factors.iter().rev())
    }

    /// Difference and initial conditions for `setup`.
    pub fn is_admissible(&self, setup: &Setup) -> bool {
        self.first_violation(setup).is_none()
    }

    /// The rightmost position at which the monomial breaks the initial or
    /// difference conditions. Positions are scanned from the largest factor
    /// towards the smallest; for each color the smallest depth is checked
    /// against the initial condition before its neighbours are checked
    /// against the difference condition.
    pub fn first_violation(&self, setup: &Setup) -> Option<Violation> {
        let mut smaller_colors = 0u32;
        let mut idx = self.factors.len();
        while idx > 0 {
            let color = self.factors[idx - 1].color;
            let mut start = idx;
            while start > 0 && self.factors[start - 1].color == color {
                start -= 1;
            }
            // factors[start..idx] all have `color`; the last one has the smallest depth
            let run = &self.factors[start..idx];
            let smallest = run[run.len() - 1].depth;
            let bound = 1 + smaller_colors + setup.delta(color);
            if smallest < bound {
                return Some(Violation::Initial {
                    color,
                    depth: smallest,
                    bound,
                });
            }
            for w in run.windows(2).rev() {
                let (deeper, shallower) = (w[0].depth, w[1].depth);
                if deeper < shallower + 2 {
                    return Some(Violation::Difference {
                        color,
                        deeper,
                        shallower,
                    });
                }
            }
            smaller_colors += run.len() as u32;
            idx = start;
        }
        None
    }
}

/// Where a monomial fails to be admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// Smallest depth of `color` is below `1 + #smaller colors + delta`.
    Initial { color: usize, depth: u32, bound: u32 },
    /// Consecutive depths `shallower <= deeper <= shallower + 1` of one color.
    Difference {
        color: usize,
        deeper: u32,
        shallower: u32,
    },
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Parses whitespace separated `x<I>(-<M>)` tokens in any order.
pub fn parse_monomial(text: &str, setup: &Setup) -> Result<Monomial> {
    let factors = text
        .split_whitespace()
        .map(parse_factor)
        .collect::<Result<Vec<_>>>()?;
    Monomial::new(factors, setup)
}

fn parse_factor(token: &str) -> Result<Factor> {
    let bad = || Error::MalformedToken(token.to_string());
    let rest = token.strip_prefix('x').ok_or_else(bad)?;
    let open = rest.find('(').ok_or_else(bad)?;
    let color: usize = rest[..open].parse().map_err(|_| bad())?;
    let inner = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let depth: i64 = inner.parse().map_err(|_| bad())?;
    if depth >= 0 {
        return Err(Error::NonPositiveDepth(color));
    }
    let depth = u32::try_from(-depth).map_err(|_| bad())?;
    Ok(Factor { color, depth })
}

/// Degree of the smallest admissible monomial of weight `weight`:
/// `sum n_i^2 + sum_{i<j} n_i n_j + sum_{i<=r} n_i`.
pub fn min_degree(weight: &WeightVector, setup: &Setup) -> u64 {
    let n: Vec<u64> = weight.0.iter().map(|&x| u64::from(x)).collect();
    let mut total = 0u64;
    let mut prefix = 0u64;
    for (idx, &ni) in n.iter().enumerate() {
        total += ni * ni + prefix * ni;
        if idx < setup.module() {
            total += ni;
        }
        prefix += ni;
    }
    total
}

/// All weights with `min_degree <= cap`, in lexicographic order.
pub fn weights_within(setup: &Setup, cap: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(setup.rank());
    fn rec(setup: &Setup, cap: u64, cur: &mut Vec<u32>, out: &mut Vec<WeightVector>) {
        if cur.len() == setup.rank() {
            out.push(WeightVector(cur.clone()));
            return;
        }
        let mut n = 0u32;
        loop {
            cur.push(n);
            let mut padded = cur.clone();
            padded.resize(setup.rank(), 0);
            // min_degree is monotone in every entry
            if min_degree(&WeightVector(padded), setup) > cap {
                cur.pop();
                break;
            }
            rec(setup, cap, cur, out);
            cur.pop();
            n += 1;
        }
    }
    rec(setup, cap, &mut cur, &mut out);
    out
}

/// Partitions into exactly `parts` parts, each part `>= min_part`,
/// consecutive parts differing by at least `gap`, total `<= max_total`.
/// Each partition is returned in ascending order.
pub fn gap_partitions(parts: u32, min_part: u32, gap: u32, max_total: u32) -> Vec<Vec<u32>> {
    fn rec(
        left: u32,
        min_part: u32,
        gap: u32,
        budget: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        // the remaining parts use at least left*p + gap*left*(left-1)/2
        let tail = gap * left * (left - 1) / 2;
        let mut p = min_part;
        while left * p + tail <= budget {
            cur.push(p);
            rec(left - 1, p + gap, gap, budget - p, cur, out);
            cur.pop();
            p += 1;
        }
    }
    let mut out = Vec::new();
    rec(parts, min_part.max(1), gap, max_total, &mut Vec::new(), &mut out);
    out
}

fn product_over_colors(per_color: &[Vec<Vec<u32>>], cap: u32, exact: Option<u32>) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut chosen: Vec<Factor> = Vec::new();
    fn rec(
        per_color: &[Vec<Vec<u32>>],
        color: usize,
        used: u32,
        cap: u32,
        exact: Option<u32>,
        chosen: &mut Vec<Factor>,
        out: &mut Vec<Monomial>,
    ) {
        if color > per_color.len() {
            if exact.is_none_or(|d| d == used) {
                out.push(Monomial::from_factors(chosen.clone()));
            }
            return;
        }
        for parts in &per_color[color - 1] {
            let s: u32 = parts.iter().sum();
            if used + s > cap {
                continue;
            }
            let before = chosen.len();
            chosen.extend(parts.iter().map(|&d| Factor::new(color, d)));
            rec(per_color, color + 1, used + s, cap, exact, chosen, out);
            chosen.truncate(before);
        }
    }
    rec(per_color, 1, 0, cap, exact, &mut chosen, &mut out);
    out
}

/// Admissible monomials of weight `weight` and degree `<= cap`, sorted by
/// degree and then by `compare`.
pub fn admissible_of_weight(setup: &Setup, weight: &WeightVector, cap: u32) -> Vec<Monomial> {
    let mut smaller = 0u32;
    let mut per_color = Vec::with_capacity(setup.rank());
    for color in 1..=setup.rank() {
        let n = weight.get(color);
        let bound = 1 + smaller + setup.delta(color);
        per_color.push(gap_partitions(n, bound, 2, cap));
        smaller += n;
    }
    let mut out = product_over_colors(&per_color, cap, None);
    sort_by_degree(&mut out);
    out
}

/// All PBW monomials (depths `>= 1`, no conditions) of the given weight and
/// exact degree, ascending under `compare`.
pub fn pbw_monomials(weight: &WeightVector, degree: u32) -> Vec<Monomial> {
    let per_color: Vec<Vec<Vec<u32>>> = weight
        .0
        .iter()
        .map(|&n| gap_partitions(n, 1, 0, degree))
        .collect();
    let mut out = product_over_colors(&per_color, degree, Some(degree));
    out.sort();
    out
}

fn sort_by_degree(monomials: &mut [Monomial]) {
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.compare(b)));
}

/// Admissible monomials of degree `<= cap`, grouped by `(weight, degree)`.
/// Groups are ordered by degree, then weight; within a group by `compare`.
pub fn enumerate_admissible(
    setup: &Setup,
    cap: u32,
    weight: Option<&WeightVector>,
) -> Result<Vec<Sector>> {
    let weights = match weight {
        Some(w) => {
            w.check_rank(setup)?;
            vec![w.clone()]
        }
        None => weights_within(setup, u64::from(cap)),
    };
    let mut groups: BTreeMap<(u32, WeightVector), Vec<Monomial>> = BTreeMap::new();
    for w in weights {
        for m in admissible_of_weight(setup, &w, cap) {
            groups.entry((m.degree(), w.clone())).or_default().push(m);
        }
    }
    Ok(groups
        .into_iter()
        .map(|((degree, weight), monomials)| Sector {
            weight,
            degree,
            monomials,
        })
        .collect())
}

/// Monomials of one `(weight, degree)` sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub weight: WeightVector,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(l: usize, r: usize) -> Setup {
        Setup::new(l, r).unwrap()
    }

    fn mono(s: &str, st: &Setup) -> Monomial {
        parse_monomial(s, st).unwrap()
    }

    #[test]
    fn canonical_order() {
        let s = setup(2, 0);
        let m = Monomial::new(
            [Factor::new(1, 1), Factor::new(1, 4), Factor::new(2, 3)],
            &s,
        )
        .unwrap();
        assert_eq!(m.to_string(), "x2(-3) x1(-4) x1(-1)");
        assert!(Monomial::new([], &s).unwrap().is_one());
        let sq = Monomial::new([Factor::new(1, 2), Factor::new(1, 2)], &s).unwrap();
        assert_eq!(sq.to_string(), "x1(-2) x1(-2)");
    }

    #[test]
    fn construction_errors() {
        let s = setup(2, 0);
        assert!(matches!(
            Monomial::new([Factor::new(3, 1)], &s),
            Err(Error::ColorOutOfRange { .. })
        ));
        assert!(matches!(
            Monomial::new([Factor::new(1, 0)], &s),
            Err(Error::NonPositiveDepth(1))
        ));
        assert!(Setup::new(0, 0).is_err());
        assert!(Setup::new(2, 3).is_err());
        assert!(parse_monomial("x1(2)", &s).is_err());
        assert!(parse_monomial("y1(-2)", &s).is_err());
        assert!(parse_monomial("x1(-2", &s).is_err());
        assert!(parse_monomial("x3(-1)", &s).is_err());
    }

    #[test]
    fn grading_examples() {
        let s = setup(2, 0);
        let g = Monomial::one().grading(2);
        assert_eq!((g.degree, g.weight.0, g.length), (0, vec![0, 0], 0));
        let g = mono("x2(-3) x1(-4) x1(-1)", &s).grading(2);
        assert_eq!((g.degree, g.weight.0, g.length), (8, vec![2, 1], 3));
        let s1 = setup(1, 0);
        let g = mono("x1(-2) x1(-2)", &s1).grading(1);
        assert_eq!((g.degree, g.weight.0, g.length), (4, vec![2], 2));
    }

    #[test]
    fn compare_examples() {
        let s = setup(2, 0);
        let c = |a: &str, b: &str| mono(a, &s).compare(&mono(b, &s));
        assert_eq!(c("x1(-2)", "x1(-1)"), Ordering::Less);
        assert_eq!(c("x2(-1)", "x1(-5)"), Ordering::Less);
        assert_eq!(c("x1(-3) x1(-1)", "x1(-2) x1(-2)"), Ordering::Greater);
        assert_eq!(c("x2(-5) x1(-1)", "x1(-1)"), Ordering::Greater);
        assert_eq!(c("x1(-1) x2(-2)", "x2(-2) x1(-1)"), Ordering::Equal);
    }

    #[test]
    fn admissibility_examples() {
        let s = setup(2, 1);
        assert!(mono("x1(-2)", &s).is_admissible(&s));
        assert!(!mono("x1(-1)", &s).is_admissible(&s));
        let s = setup(1, 0);
        assert!(mono("x1(-3) x1(-1)", &s).is_admissible(&s));
        assert!(!mono("x1(-2) x1(-1)", &s).is_admissible(&s));
        let s = setup(2, 0);
        assert!(mono("x2(-2) x1(-1)", &s).is_admissible(&s));
        assert!(!mono("x2(-1) x1(-1)", &s).is_admissible(&s));
    }

    #[test]
    fn violation_is_rightmost() {
        let s = setup(2, 0);
        // color 1 has a DC violation, color 2 an IC violation; color 1 is to the right
        let m = mono("x2(-1) x1(-2) x1(-1)", &s);
        assert_eq!(
            m.first_violation(&s),
            Some(Violation::Difference {
                color: 1,
                deeper: 2,
                shallower: 1
            })
        );
        let m = mono("x2(-2) x2(-1) x1(-3) x1(-1)", &s);
        assert_eq!(
            m.first_violation(&s),
            Some(Violation::Initial {
                color: 2,
                depth: 1,
                bound: 3
            })
        );
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_degree(&WeightVector(vec![0, 0]), &setup(2, 0)), 0);
        assert_eq!(min_degree(&WeightVector(vec![1, 1]), &setup(2, 0)), 3);
        for n in 0..=6u32 {
            let expected = u64::from(n * n + n);
            assert_eq!(min_degree(&WeightVector(vec![n]), &setup(1, 1)), expected);
        }
    }

    #[test]
    fn enumeration_examples() {
        let s = setup(1, 0);
        let sectors = enumerate_admissible(&s, 4, None).unwrap();
        let flat: Vec<String> = sectors
            .iter()
            .flat_map(|sec| sec.monomials.iter().map(|m| m.to_string()))
            .collect();
        assert_eq!(
            flat,
            vec!["", "x1(-1)", "x1(-2)", "x1(-3)", "x1(-4)", "x1(-3) x1(-1)"]
        );

        let s = setup(2, 0);
        let w = WeightVector(vec![1, 1]);
        let sectors = enumerate_admissible(&s, 5, Some(&w)).unwrap();
        let counts: Vec<(u32, usize)> = sectors.iter().map(|x| (x.degree, x.monomials.len())).collect();
        assert_eq!(counts, vec![(3, 1), (4, 2), (5, 3)]);
        let deg5: Vec<String> = sectors[2].monomials.iter().map(|m| m.to_string()).collect();
        assert_eq!(deg5, vec!["x2(-2) x1(-3)", "x2(-3) x1(-2)", "x2(-4) x1(-1)"]);

        for r in 0..=2 {
            let s = setup(2, r);
            let sectors = enumerate_admissible(&s, 0, None).unwrap();
            assert_eq!(sectors.len(), 1);
            assert_eq!(sectors[0].monomials, vec![Monomial::one()]);
        }
        assert!(enumerate_admissible(&s, 3, Some(&WeightVector(vec![1]))).is_err());
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("1, 2,0".parse::<WeightVector>().unwrap().0, vec![1, 2, 0]);
        assert!("1,a".parse::<WeightVector>().is_err());
    }

    #[test]
    fn pbw_count_matches_partitions() {
        // partitions of 6 into exactly 3 parts: 4+1+1, 3+2+1, 2+2+2
        assert_eq!(pbw_monomials(&WeightVector(vec![3]), 6).len(), 3);
        // two colors, one factor each, total 4: (1,3),(2,2),(3,1)
        assert_eq!(pbw_monomials(&WeightVector(vec![1, 1]), 4).len(), 3);
    }
}
