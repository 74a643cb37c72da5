//! Polyvector fields and differential forms on an affine chart.
//!
//! Both live in one keyed representation, [`Exterior`], where a key is a
//! strictly increasing index set and the coefficient is a rational function.
//! The variance (tangent vs. cotangent) is a type-level tag only.
//!
//! Sign conventions are fixed here and used everywhere downstream:
//!
//! * the odd derivative `∂/∂θ_i` is a *left* derivative: on the key `I` it
//!   contributes `(-1)^{#{j ∈ I : j < i}}`;
//! * `i(α)` for a 1-form is `Σ α_i ∂/∂θ_i`, and for `dx_j∧dx_k` (`j < k`) it
//!   is `∂/∂θ_j ∘ ∂/∂θ_k`.

mod chart;
mod index_set;
mod star;

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

pub use chart::Chart;
pub use index_set::IndexSet;
pub use star::{star, star_inverse};

use crate::error::{Error, Result};
use crate::ring::RationalFunction;

/// Largest supported chart dimension (keys are bitmasks).
pub const MAX_DIM: usize = 32;

/// Type tag for polyvector fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tangent;

/// Type tag for differential forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cotangent;

pub trait Variance: Copy + Eq + fmt::Debug {
    /// Prefix used when rendering basis symbols (`Dx` / `dx`).
    const PREFIX: &'static str;
}

impl Variance for Tangent {
    const PREFIX: &'static str = "D";
}

impl Variance for Cotangent {
    const PREFIX: &'static str = "d";
}

/// Element of the exterior algebra over the chart's function field.
#[derive(Clone, PartialEq, Eq)]
pub struct Exterior<V> {
    chart: Arc<Chart>,
    terms: BTreeMap<IndexSet, RationalFunction>,
    _variance: PhantomData<V>,
}

pub type Multivector = Exterior<Tangent>;
pub type DifferentialForm = Exterior<Cotangent>;

impl<V: Variance> Exterior<V> {
    pub fn zero(chart: &Arc<Chart>) -> Self {
        Exterior {
            chart: Arc::clone(chart),
            terms: BTreeMap::new(),
            _variance: PhantomData,
        }
    }

    /// Grade-0 element.
    pub fn scalar(chart: &Arc<Chart>, f: RationalFunction) -> Self {
        Self::term(chart, IndexSet::EMPTY, f)
    }

    pub fn term(chart: &Arc<Chart>, key: IndexSet, coefficient: RationalFunction) -> Self {
        let mut out = Self::zero(chart);
        out.add_term(key, coefficient);
        out
    }

    /// The basis element `∂_{i_1}∧…` (or `dx_{i_1}∧…`) for a sorted key.
    pub fn basis(chart: &Arc<Chart>, key: IndexSet) -> Self {
        Self::term(chart, key, RationalFunction::one(chart.dim()))
    }

    /// `∂_i` or `dx_i`.
    pub fn unit(chart: &Arc<Chart>, index: usize) -> Self {
        Self::basis(chart, IndexSet::single(index))
    }

    pub fn from_terms(
        chart: &Arc<Chart>,
        terms: impl IntoIterator<Item = (IndexSet, RationalFunction)>,
    ) -> Self {
        let mut out = Self::zero(chart);
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn dim(&self) -> usize {
        self.chart.dim()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: IndexSet) -> RationalFunction {
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.dim()))
    }

    /// Coefficient of `∂_i` (or `dx_i`).
    pub fn component(&self, index: usize) -> RationalFunction {
        self.coefficient(IndexSet::single(index))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(p)` when every stored key has size `p`; zero counts as pure of
    /// any requested grade but reports `None` here.
    pub fn pure_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|k| k.len());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    /// True when the value is zero or of pure grade `p`.
    pub fn is_of_grade(&self, p: usize) -> bool {
        self.terms.keys().all(|k| k.len() == p)
    }

    pub fn grade_split(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (k, c) in &self.terms {
            out.entry(k.len())
                .or_insert_with(|| Self::zero(&self.chart))
                .terms
                .insert(*k, c.clone());
        }
        out
    }

    pub fn grade_part(&self, p: usize) -> Self {
        Exterior {
            chart: Arc::clone(&self.chart),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.len() == p)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            _variance: PhantomData,
        }
    }

    /// True when every coefficient is a polynomial.
    pub fn has_polynomial_coefficients(&self) -> bool {
        self.terms.values().all(RationalFunction::is_polynomial)
    }

    pub(crate) fn add_term(&mut self, key: IndexSet, c: RationalFunction) {
        assert_eq!(c.dim(), self.dim(), "coefficient lives on another chart");
        assert!(key.max_index() < self.dim() as i32, "key outside chart");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn same_chart(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.chart, &other.chart) || *self.chart == *other.chart
    }

    fn check_chart(&self, other: &Self) -> Result<()> {
        if self.same_chart(other) {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Multiplies every coefficient by `f`.
    pub fn scale(&self, f: &RationalFunction) -> Self {
        if f.is_zero() {
            return Self::zero(&self.chart);
        }
        Exterior {
            chart: Arc::clone(&self.chart),
            terms: self.terms.iter().map(|(k, c)| (*k, c * f)).collect(),
            _variance: PhantomData,
        }
    }

    /// Exterior product. The sign of a merged pair of keys is the parity of
    /// the permutation that sorts the concatenation.
    pub fn try_wedge(&self, other: &Self) -> Result<Self> {
        self.check_chart(other)?;
        let mut out = Self::zero(&self.chart);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if let Some((key, negative)) = ka.merge(*kb) {
                    let c = ca * cb;
                    out.add_term(key, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.try_wedge(other).expect("chart mismatch")
    }

    /// Left odd derivative `∂/∂θ_i` (0-based `i`).
    pub fn odd_partial(&self, index: usize) -> Result<Self> {
        if index >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            });
        }
        Ok(self.odd_partial_unchecked(index))
    }

    pub(crate) fn odd_partial_unchecked(&self, index: usize) -> Self {
        let mut out = Self::zero(&self.chart);
        for (k, c) in &self.terms {
            if let Some((rest, negative)) = k.remove(index) {
                out.add_term(rest, if negative { -c } else { c.clone() });
            }
        }
        out
    }

    /// Applies `∂/∂x_i` to every coefficient.
    pub fn coefficient_partial(&self, index: usize) -> Result<Self> {
        let mut out = Self::zero(&self.chart);
        for (k, c) in &self.terms {
            out.add_term(*k, c.partial(index)?);
        }
        Ok(out)
    }

    pub fn map_coefficients(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        Self::from_terms(&self.chart, self.terms.iter().map(|(k, c)| (*k, f(c))))
    }
}

/// Contraction `i(α)` of a 1- or 2-form into a multivector.
///
/// For a 1-form `i(α) = Σ α_i ∂/∂θ_i`; for a 2-form
/// `i(β) = Σ_{j<k} β_{jk} ∂/∂θ_j ∘ ∂/∂θ_k`.
pub fn contract_form(alpha: &DifferentialForm, u: &Multivector) -> Result<Multivector> {
    if !Arc::ptr_eq(alpha.chart(), u.chart()) && **alpha.chart() != **u.chart() {
        return Err(Error::ChartMismatch);
    }
    let mut out = Multivector::zero(u.chart());
    if alpha.is_zero() {
        return Ok(out);
    }
    match alpha.pure_grade() {
        Some(1) => {
            for (k, a) in alpha.terms() {
                let i = k.min_index();
                out = &out + &u.odd_partial_unchecked(i).scale(a);
            }
        }
        Some(2) => {
            for (key, b) in alpha.terms() {
                let (j, k) = key.pair();
                let inner = u.odd_partial_unchecked(k).odd_partial_unchecked(j);
                out = &out + &inner.scale(b);
            }
        }
        _ => return Err(Error::UnsupportedFormGrade),
    }
    Ok(out)
}

/// Exterior derivative `d(f dx_I) = Σ_i ∂_i f dx_i ∧ dx_I`.
pub fn exterior_derivative(omega: &DifferentialForm) -> DifferentialForm {
    let chart = omega.chart();
    let mut out = DifferentialForm::zero(chart);
    for (k, c) in omega.terms() {
        for i in 0..chart.dim() {
            if let Some((key, negative)) = IndexSet::single(i).merge(*k) {
                let d = c.partial(i).expect("index within chart");
                out.add_term(key, if negative { -d } else { d });
            }
        }
    }
    out
}

/// `d f` for a function.
pub fn differential(chart: &Arc<Chart>, f: &RationalFunction) -> DifferentialForm {
    exterior_derivative(&DifferentialForm::scalar(chart, f.clone()))
}

impl<V: Variance> fmt::Debug for Exterior<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            for i in k.iter() {
                write!(f, "{}{}", V::PREFIX, self.chart.name(i))?;
            }
        }
        Ok(())
    }
}

impl<'a, V: Variance> Add<&'a Exterior<V>> for &'a Exterior<V> {
    type Output = Exterior<V>;
    fn add(self, rhs: &'a Exterior<V>) -> Exterior<V> {
        self.try_add(rhs).expect("chart mismatch")
    }
}

impl<'a, V: Variance> Sub<&'a Exterior<V>> for &'a Exterior<V> {
    type Output = Exterior<V>;
    fn sub(self, rhs: &'a Exterior<V>) -> Exterior<V> {
        self.try_sub(rhs).expect("chart mismatch")
    }
}

impl<V: Variance> Neg for &Exterior<V> {
    type Output = Exterior<V>;
    fn neg(self) -> Exterior<V> {
        Exterior {
            chart: Arc::clone(&self.chart),
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
            _variance: PhantomData,
        }
    }
}

impl<V: Variance> Neg for Exterior<V> {
    type Output = Exterior<V>;
    fn neg(self) -> Exterior<V> {
        -&self
    }
}
