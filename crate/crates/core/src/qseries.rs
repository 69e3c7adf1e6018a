//! Truncated power series in `q` with exact integer coefficients, and the
//! graded characters built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{admissible_of_weight, min_degree, weights_within, Setup, WeightVector};
use crate::error::{Error, Result};

/// A power series known exactly modulo `q^(order + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exp`, or the zero series when `exp > order`.
    pub fn monomial(exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::one();
        }
        s
    }

    /// Series from leading coefficients; missing ones are zero, extra
    /// ones beyond `order` are dropped.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exponent of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplication by `q^k`; the result is known to order `order + k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// First exponent at which the two series differ, up to the smaller order.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<usize> {
        let t = self.order().min(other.order());
        (0..=t).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// `self / divisor`; the divisor must have a nonzero constant term.
    pub fn div_by_unit(&self, divisor: &QSeries) -> Result<QSeries> {
        let c0 = &divisor.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let t = self.order().min(divisor.order());
        let mut out: Vec<BigInt> = Vec::with_capacity(t + 1);
        for n in 0..=t {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let d = &divisor.coeffs[k];
                if !d.is_zero() {
                    acc -= d * &out[n - k];
                }
            }
            // exact over Z only when c0 is a unit; otherwise the division is not integral
            if !(&acc % c0).is_zero() {
                return Err(Error::NonUnitDivisor);
            }
            out.push(acc / c0);
        }
        Ok(Self { coeffs: out })
    }

    fn zip_with(&self, other: &QSeries, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> QSeries {
        let t = self.order().min(other.order());
        Self {
            coeffs: (0..=t).map(|k| f(&self.coeffs[k], &other.coeffs[k])).collect(),
        }
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let t = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(t + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Wire form: nonzero `(exponent, coefficient)` pairs plus the order.
/// Coefficients are decimal strings so arbitrarily large values survive.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    terms: Vec<(usize, String)>,
}

impl From<QSeries> for SeriesRepr {
    fn from(s: QSeries) -> Self {
        SeriesRepr {
            order: s.order(),
            terms: s
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.to_string()))
                .collect(),
        }
    }
}

impl TryFrom<SeriesRepr> for QSeries {
    type Error = Error;
    fn try_from(r: SeriesRepr) -> Result<Self> {
        let mut s = QSeries::zero(r.order);
        for (k, c) in r.terms {
            if k > r.order {
                return Err(Error::MalformedCoefficient(format!("exponent {k} beyond order {}", r.order)));
            }
            s.coeffs[k] = c.parse().map_err(|_| Error::MalformedCoefficient(c.clone()))?;
        }
        Ok(s)
    }
}

/// `(1-q)(1-q^2)...(1-q^n)` to order `order`.
pub fn pochhammer(n: usize, order: usize) -> QSeries {
    let mut acc = QSeries::one(order);
    for k in 1..=n {
        if k > order {
            // (1 - q^k) is 1 modulo q^(order+1)
            break;
        }
        let mut factor = QSeries::one(order);
        factor.coeffs[k] = BigInt::from(-1);
        acc = &acc * &factor;
    }
    acc
}

/// Closed product form `q^min_degree / ((q)_{n_1} ... (q)_{n_l})`.
pub fn fermionic_character(setup: &Setup, weight: &WeightVector, order: usize) -> Result<QSeries> {
    weight.check_rank(setup)?;
    let shift = min_degree(weight, setup);
    if shift > order as u64 {
        return Ok(QSeries::zero(order));
    }
    let mut denom = QSeries::one(order);
    for &n in &weight.0 {
        denom = &denom * &pochhammer(n as usize, order);
    }
    QSeries::monomial(shift as usize, order).div_by_unit(&denom)
}

/// Counts admissible monomials of the given weight degree by degree.
pub fn enumerative_character(setup: &Setup, weight: &WeightVector, order: usize) -> Result<QSeries> {
    weight.check_rank(setup)?;
    let mut s = QSeries::zero(order);
    let cap = u32::try_from(order).unwrap_or(u32::MAX);
    for m in admissible_of_weight(setup, weight, cap) {
        s.coeffs[m.degree() as usize] += 1;
    }
    Ok(s)
}

/// Which side of the character identity to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterMethod {
    Fermionic,
    Enumerative,
}

/// Per-weight characters of one module, truncated at a common order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct CharacterTable {
    pub setup: Setup,
    pub order: usize,
    pub entries: BTreeMap<WeightVector, QSeries>,
}

impl CharacterTable {
    pub fn total(&self) -> QSeries {
        self.entries
            .values()
            .fold(QSeries::zero(self.order), |acc, s| &acc + s)
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    rank: usize,
    module: usize,
    order: usize,
    entries: BTreeMap<String, QSeries>,
}

impl From<CharacterTable> for TableRepr {
    fn from(t: CharacterTable) -> Self {
        TableRepr {
            rank: t.setup.rank(),
            module: t.setup.module(),
            order: t.order,
            entries: t.entries.into_iter().map(|(w, s)| (w.to_string(), s)).collect(),
        }
    }
}

impl TryFrom<TableRepr> for CharacterTable {
    type Error = Error;
    fn try_from(r: TableRepr) -> Result<Self> {
        let setup = Setup::new(r.rank, r.module)?;
        let mut entries = BTreeMap::new();
        for (k, s) in r.entries {
            let w: WeightVector = k.parse()?;
            w.check_rank(&setup)?;
            entries.insert(w, s);
        }
        Ok(CharacterTable {
            setup,
            order: r.order,
            entries,
        })
    }
}

/// Sum of the characters over every weight with `min_degree <= order`.
/// Weights beyond that bound contribute nothing below `q^(order+1)`, so the
/// truncated sum is exact.
pub fn full_character(
    setup: &Setup,
    order: usize,
    method: CharacterMethod,
) -> Result<(QSeries, CharacterTable)> {
    let mut entries = BTreeMap::new();
    for w in weights_within(setup, order as u64) {
        let s = match method {
            CharacterMethod::Fermionic => fermionic_character(setup, &w, order)?,
            CharacterMethod::Enumerative => enumerative_character(setup, &w, order)?,
        };
        entries.insert(w, s);
    }
    let table = CharacterTable {
        setup: *setup,
        order,
        entries,
    };
    Ok((table.total(), table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(coeffs: &[i64], order: usize) -> QSeries {
        QSeries::from_coeffs(coeffs.iter().copied(), order)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(0, 5), QSeries::one(5));
        assert_eq!(pochhammer(2, 3), s(&[1, -1, -1, 1], 3));
        assert_eq!(pochhammer(3, 6), s(&[1, -1, -1, 0, 1, 1, -1], 6));
    }

    #[test]
    fn arithmetic_examples() {
        let a = s(&[1, 1], 2);
        let b = s(&[1, -1], 2);
        assert_eq!(&a * &b, s(&[1, 0, -1], 2));
        let one = QSeries::one(3);
        assert_eq!(one.div_by_unit(&s(&[1, -1], 3)).unwrap(), s(&[1, 1, 1, 1], 3));
        let one = QSeries::one(4);
        assert_eq!(
            one.div_by_unit(&pochhammer(2, 4)).unwrap(),
            s(&[1, 1, 2, 2, 3], 4)
        );
    }

    #[test]
    fn mixed_orders_take_minimum() {
        let a = QSeries::one(5);
        let b = s(&[1, 2], 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.div_by_unit(&b).unwrap().order(), 3);
    }

    #[test]
    fn division_requires_unit() {
        let a = QSeries::one(3);
        assert!(matches!(a.div_by_unit(&s(&[0, 1], 3)), Err(Error::NonUnitDivisor)));
        assert!(matches!(a.div_by_unit(&s(&[2, 1], 3)), Err(Error::NonUnitDivisor)));
    }

    #[test]
    fn fermionic_examples() {
        let st = Setup::new(2, 0).unwrap();
        assert_eq!(
            fermionic_character(&st, &WeightVector(vec![0, 0]), 4).unwrap(),
            QSeries::one(4)
        );
        let st1 = Setup::new(1, 0).unwrap();
        assert_eq!(
            fermionic_character(&st1, &WeightVector(vec![1]), 4).unwrap(),
            s(&[0, 1, 1, 1, 1], 4)
        );
        assert_eq!(
            fermionic_character(&st, &WeightVector(vec![1, 1]), 6).unwrap(),
            s(&[0, 0, 0, 1, 2, 3, 4], 6)
        );
        // min_degree beyond the order
        assert!(fermionic_character(&st, &WeightVector(vec![2, 2]), 6)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn enumerative_examples() {
        let st = Setup::new(1, 0).unwrap();
        assert_eq!(
            enumerative_character(&st, &WeightVector(vec![2]), 6).unwrap(),
            s(&[0, 0, 0, 0, 1, 1, 2], 6)
        );
        let st = Setup::new(1, 1).unwrap();
        assert_eq!(
            enumerative_character(&st, &WeightVector(vec![1]), 4).unwrap(),
            s(&[0, 0, 1, 1, 1], 4)
        );
        assert_eq!(
            enumerative_character(&st, &WeightVector(vec![0]), 4).unwrap(),
            QSeries::one(4)
        );
    }

    #[test]
    fn full_character_examples() {
        let st = Setup::new(1, 0).unwrap();
        let (total, table) = full_character(&st, 6, CharacterMethod::Fermionic).unwrap();
        assert_eq!(total, s(&[1, 1, 1, 1, 2, 2, 3], 6));
        assert_eq!(table.entries.len(), 3);
        let st = Setup::new(1, 1).unwrap();
        let (total, _) = full_character(&st, 6, CharacterMethod::Enumerative).unwrap();
        assert_eq!(total, s(&[1, 0, 1, 1, 1, 1, 2], 6));
        for r in 0..=3 {
            let st = Setup::new(3, r).unwrap();
            let (total, _) = full_character(&st, 0, CharacterMethod::Fermionic).unwrap();
            assert_eq!(total, QSeries::one(0));
        }
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 1, 0, -2], 3).to_string(), "1 + q - 2q^3 + O(q^4)");
        assert_eq!(QSeries::zero(2).to_string(), "0 + O(q^3)");
    }

    #[test]
    fn json_round_trip() {
        let st = Setup::new(2, 1).unwrap();
        let (_, table) = full_character(&st, 8, CharacterMethod::Fermionic).unwrap();
        let text = serde_json::to_string(&table).unwrap();
        assert!(text.contains("\"1,1\""));
        let back: CharacterTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back, table);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
