//! Truth-value lattices and interpretations.
//!
//! Two lattices share one vocabulary: the three-valued `F < F* < T` and the
//! four-valued `F < F* < T* < T`. Each carries two orders. The truth order
//! `≤` is total and drives evaluation. The minimality order `⪯` is partial
//! and drives answer-set minimality: `F` sits below everything, `T*` below
//! `T`, and `F*` is incomparable with both `T*` and `T`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use indexmap::IndexSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::syntax::Literal;

/// A truth value of one of the two lattices.
///
/// The derived `Ord` of implementors is the truth order `≤`.
pub trait TruthValue:
    Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const FALSE: Self;
    /// `F*`, "impossible to make true".
    const FSTAR: Self;
    const TRUE: Self;
    /// Every value, ascending in `≤`.
    const ALL: &'static [Self];

    /// Strict minimality order `≺`.
    fn precedes(self, other: Self) -> bool;

    fn preceq(self, other: Self) -> bool {
        self == other || self.precedes(other)
    }

    /// Position in [`TruthValue::ALL`].
    fn rank(self) -> usize;

    fn from_rank(rank: usize) -> Self {
        Self::ALL[rank]
    }
}

/// Ordered disjunction on truth values: `v` when `u` is `F*`, `u` otherwise.
pub fn times<V: TruthValue>(u: V, v: V) -> V {
    if u == V::FSTAR {
        v
    } else {
        u
    }
}

/// Three-valued truth: `F < F* < T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truth3 {
    F,
    FStar,
    T,
}

/// Four-valued truth: `F < F* < T* < T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truth4 {
    F,
    FStar,
    TStar,
    T,
}

impl TruthValue for Truth3 {
    const FALSE: Self = Truth3::F;
    const FSTAR: Self = Truth3::FStar;
    const TRUE: Self = Truth3::T;
    const ALL: &'static [Self] = &[Truth3::F, Truth3::FStar, Truth3::T];

    fn precedes(self, other: Self) -> bool {
        matches!(
            (self, other),
            (Truth3::F, Truth3::T) | (Truth3::F, Truth3::FStar)
        )
    }

    fn rank(self) -> usize {
        self as usize
    }
}

impl TruthValue for Truth4 {
    const FALSE: Self = Truth4::F;
    const FSTAR: Self = Truth4::FStar;
    const TRUE: Self = Truth4::T;
    const ALL: &'static [Self] = &[Truth4::F, Truth4::FStar, Truth4::TStar, Truth4::T];

    fn precedes(self, other: Self) -> bool {
        matches!(
            (self, other),
            (Truth4::F, Truth4::FStar)
                | (Truth4::F, Truth4::TStar)
                | (Truth4::F, Truth4::T)
                | (Truth4::TStar, Truth4::T)
        )
    }

    fn rank(self) -> usize {
        self as usize
    }
}

impl From<Truth3> for Truth4 {
    fn from(v: Truth3) -> Self {
        match v {
            Truth3::F => Truth4::F,
            Truth3::FStar => Truth4::FStar,
            Truth3::T => Truth4::T,
        }
    }
}

impl TryFrom<Truth4> for Truth3 {
    type Error = Truth4;

    fn try_from(v: Truth4) -> Result<Self, Truth4> {
        match v {
            Truth4::F => Ok(Truth3::F),
            Truth4::FStar => Ok(Truth3::FStar),
            Truth4::T => Ok(Truth3::T),
            Truth4::TStar => Err(v),
        }
    }
}

fn symbol4(v: Truth4) -> &'static str {
    match v {
        Truth4::F => "F",
        Truth4::FStar => "F*",
        Truth4::TStar => "T*",
        Truth4::T => "T",
    }
}

impl fmt::Display for Truth4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(symbol4(*self))
    }
}

impl fmt::Display for Truth3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(symbol4((*self).into()))
    }
}

/// Error returned when a string is not a truth-value symbol.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{0}` is not a truth value (expected one of T, T*, F*, F)")]
pub struct BadTruthValue(pub String);

impl FromStr for Truth4 {
    type Err = BadTruthValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "F" => Ok(Truth4::F),
            "F*" => Ok(Truth4::FStar),
            "T*" => Ok(Truth4::TStar),
            "T" => Ok(Truth4::T),
            other => Err(BadTruthValue(other.to_string())),
        }
    }
}

impl FromStr for Truth3 {
    type Err = BadTruthValue;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v: Truth4 = s.parse()?;
        Truth3::try_from(v).map_err(|_| BadTruthValue(s.to_string()))
    }
}

macro_rules! serde_via_str {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_str!(Truth3);
serde_via_str!(Truth4);

/// The ordered literal universe of an interpretation.
pub type Sigma = Arc<IndexSet<Literal>>;

/// A total assignment of truth values to the literals of `sigma`.
#[derive(Clone)]
pub struct Interpretation<V> {
    sigma: Sigma,
    values: Vec<V>,
}

pub type Interpretation3 = Interpretation<Truth3>;
pub type Interpretation4 = Interpretation<Truth4>;

impl<V: TruthValue> Interpretation<V> {
    pub fn new(sigma: Sigma, values: Vec<V>) -> Result<Self, Error> {
        if sigma.len() != values.len() {
            return Err(Error::ArityMismatch {
                expected: sigma.len(),
                found: values.len(),
            });
        }
        Ok(Self { sigma, values })
    }

    /// Every literal mapped to `value`.
    pub fn constant(sigma: Sigma, value: V) -> Self {
        let values = vec![value; sigma.len()];
        Self { sigma, values }
    }

    pub fn from_fn(sigma: Sigma, mut f: impl FnMut(&Literal) -> V) -> Self {
        let values = sigma.iter().map(&mut f).collect();
        Self { sigma, values }
    }

    /// Builds an interpretation from explicit pairs. Every literal of
    /// `sigma` must be assigned exactly once.
    pub fn from_pairs<'a>(
        sigma: Sigma,
        pairs: impl IntoIterator<Item = (&'a Literal, V)>,
    ) -> Result<Self, Error> {
        let mut values: Vec<Option<V>> = vec![None; sigma.len()];
        for (lit, v) in pairs {
            let i = sigma
                .get_index_of(lit)
                .ok_or_else(|| Error::UnknownLiteral(lit.clone()))?;
            if values[i].replace(v).is_some() {
                return Err(Error::DuplicateLiteral(lit.clone()));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::MissingLiteral(sigma[i].clone())))
            .collect::<Result<_, _>>()?;
        Ok(Self { sigma, values })
    }

    /// Decodes candidate number `index` of the `|V|^|Σ|` enumeration. The
    /// first literal of `sigma` is the least significant digit.
    pub fn from_index(sigma: Sigma, mut index: u64) -> Self {
        let base = V::ALL.len() as u64;
        let values = (0..sigma.len())
            .map(|_| {
                let v = V::from_rank((index % base) as usize);
                index /= base;
                v
            })
            .collect();
        Self { sigma, values }
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, lit: &Literal) -> Option<V> {
        self.sigma.get_index_of(lit).map(|i| self.values[i])
    }

    /// Like [`Interpretation::get`], but a literal outside the domain is an
    /// error.
    pub fn value(&self, lit: &Literal) -> Result<V, Error> {
        self.get(lit)
            .ok_or_else(|| Error::UnknownLiteral(lit.clone()))
    }

    pub fn set(&mut self, lit: &Literal, value: V) -> Result<(), Error> {
        let i = self
            .sigma
            .get_index_of(lit)
            .ok_or_else(|| Error::UnknownLiteral(lit.clone()))?;
        self.values[i] = value;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Literal, V)> + '_ {
        self.sigma.iter().zip(self.values.iter().copied())
    }

    /// Literals mapped to `value`, in domain order.
    pub fn literals_with(&self, value: V) -> impl Iterator<Item = &Literal> + '_ {
        self.iter()
            .filter(move |(_, v)| *v == value)
            .map(|(l, _)| l)
    }

    pub fn same_domain(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sigma, &other.sigma) || *self.sigma == *other.sigma
    }

    fn pointwise(&self, other: &Self, rel: impl Fn(V, V) -> bool) -> Result<bool, Error> {
        if !self.same_domain(other) {
            return Err(Error::DomainMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| rel(a, b)))
    }

    /// Pointwise truth order `self ≤ other`.
    pub fn leq(&self, other: &Self) -> Result<bool, Error> {
        self.pointwise(other, |a, b| a <= b)
    }

    /// `self ≤ other` and the two differ somewhere.
    pub fn lt(&self, other: &Self) -> Result<bool, Error> {
        Ok(self.leq(other)? && self.values != other.values)
    }

    /// Pointwise minimality order `self ⪯ other`.
    pub fn preceq(&self, other: &Self) -> Result<bool, Error> {
        self.pointwise(other, |a, b| a.preceq(b))
    }

    /// `self ⪯ other` and the two differ somewhere.
    pub fn prec(&self, other: &Self) -> Result<bool, Error> {
        Ok(self.preceq(other)? && self.values != other.values)
    }

    /// `self(L) < other(L)` at every literal. This is the literal,
    /// everywhere-strict reading of `<`; the solver uses [`Interpretation::lt`].
    pub fn lt_everywhere(&self, other: &Self) -> Result<bool, Error> {
        self.pointwise(other, |a, b| a < b)
    }

    /// `self(L) ≺ other(L)` at every literal.
    pub fn prec_everywhere(&self, other: &Self) -> Result<bool, Error> {
        self.pointwise(other, |a, b| a.precedes(b))
    }

    /// Every interpretation `N` with `N ≤ self` pointwise, `self` included.
    pub fn truth_downset(&self) -> impl Iterator<Item = Self> + '_ {
        self.downset_by(|v| V::ALL.iter().copied().filter(|&w| w <= v).collect())
    }

    /// Every interpretation `N` with `N ⪯ self` pointwise, `self` included.
    pub fn preceq_downset(&self) -> impl Iterator<Item = Self> + '_ {
        self.downset_by(|v| V::ALL.iter().copied().filter(|&w| w.preceq(v)).collect())
    }

    fn downset_by(&self, below: impl Fn(V) -> Vec<V>) -> impl Iterator<Item = Self> + '_ {
        let choices: Vec<Vec<V>> = self.values.iter().map(|&v| below(v)).collect();
        let total: usize = choices.iter().map(Vec::len).product();
        (0..total).map(move |mut idx| {
            let values = choices
                .iter()
                .map(|c| {
                    let v = c[idx % c.len()];
                    idx /= c.len();
                    v
                })
                .collect();
            Self {
                sigma: self.sigma.clone(),
                values,
            }
        })
    }
}

impl Interpretation3 {
    /// The same assignment read in the four-valued logic.
    pub fn to_four(&self) -> Interpretation4 {
        Interpretation {
            sigma: self.sigma.clone(),
            values: self.values.iter().map(|&v| v.into()).collect(),
        }
    }
}

impl Interpretation4 {
    /// The three-valued reading, or `None` when some literal is `T*`.
    pub fn to_three(&self) -> Option<Interpretation3> {
        let values = self
            .values
            .iter()
            .map(|&v| Truth3::try_from(v).ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Interpretation {
            sigma: self.sigma.clone(),
            values,
        })
    }
}

impl<V: TruthValue> PartialEq for Interpretation<V> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.same_domain(other)
    }
}

impl<V: TruthValue> Eq for Interpretation<V> {}

impl<V: TruthValue> Hash for Interpretation<V> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl<V: TruthValue> fmt::Display for Interpretation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (lit, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{lit}={v}")?;
        }
        f.write_str("}")
    }
}

impl<V: TruthValue> fmt::Debug for Interpretation<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
