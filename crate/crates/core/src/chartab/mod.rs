//! Exact ordinary character tables.
//!
//! Tables are computed by Dixon's modular method and every value is lifted
//! to `Q(ζ_e)`, `e` the exponent. Nothing floating-point is used for
//! decisions; both orthogonality relations are re-checked exactly before a
//! table is returned.

mod cyclotomic;
mod dixon;
mod modp;
mod report;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use modp::dixon_prime;
pub use report::{CharTableReport, ClassHeader};

use crate::permgroup::{conjugacy_classes, ConjClassSet, Group};

/// Largest group order accepted by [`character_table`].
pub const MAX_TABLE_ORDER: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartabError {
    #[error("group of order {0} exceeds the character-table bound {MAX_TABLE_ORDER}")]
    GroupTooLarge(usize),
    #[error("eigenspace splitting failed: {0}")]
    SplitFailure(String),
    #[error("lifting failed: {0}")]
    LiftingFailure(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("class function has {got} values, table has {expected} classes")]
    LengthMismatch { expected: usize, got: usize },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("power map unavailable for k = {0}")]
    PowerMapUnavailable(i64),
    #[error("group has no central involution")]
    NoCentralInvolution,
    #[error("central involution acts by {0}, not by a scalar ±1")]
    NotScalar(String),
    #[error("group mismatch: table is for order {table}, group has order {group}")]
    GroupMismatch { table: usize, group: usize },
}

/// Values on the conjugacy classes, in the table's class order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct CharTable {
    label: String,
    order: usize,
    classes: ConjClassSet,
    /// `power_classes[k][c]`: class of `g^k`, `g ∈ c`, for `0 <= k < e`.
    power_classes: Vec<Vec<usize>>,
    field: CyclotomicField,
    prime: u64,
    irreducibles: Vec<ClassFunction>,
}

/// Computes and verifies the character table of `group`.
pub fn character_table(group: &Group) -> Result<CharTable, ChartabError> {
    if group.order() > MAX_TABLE_ORDER {
        return Err(ChartabError::GroupTooLarge(group.order()));
    }
    let classes = conjugacy_classes(group);
    let e = group.exponent();
    let power_classes: Vec<Vec<usize>> = (0..e).map(|k| (0..classes.len()).map(|c| classes.class_of(group.pow(classes.rep(c), k as u64))).collect()).collect();
    let field = CyclotomicField::new(e);
    let modular = dixon::modular_characters(group, &classes)?;
    let mut irreducibles = (0..classes.len())
        .map(|i| dixon::lift_character(&field, &modular, i, &classes, &power_classes).map(ClassFunction::new))
        .collect::<Result<Vec<_>, _>>()?;
    let one = field.one();
    irreducibles.sort_by(|a, b| {
        let trivial = |x: &ClassFunction| !x.values.iter().all(|v| *v == one);
        let degree = |x: &ClassFunction| field.as_rational(&x.values[0]);
        (trivial(a), degree(a), a).cmp(&(trivial(b), degree(b), b))
    });
    let table = CharTable { label: group.label().to_string(), order: group.order(), classes, power_classes, field, prime: modular.prime, irreducibles };
    table.verify()?;
    Ok(table)
}

impl CharTable {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &ConjClassSet {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn character(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    /// `χ(1)` as an integer, when it is one.
    pub fn degree_of(&self, chi: &ClassFunction) -> Option<i64> {
        self.field.as_rational(&chi.values[0]).filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64())
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| self.degree_of(c).unwrap_or(0) as u64).collect()
    }

    /// Class of `g^k` for `g` in `class`.
    pub fn power_class(&self, class: usize, k: i64) -> Result<usize, ChartabError> {
        if k <= 0 {
            return Err(ChartabError::PowerMapUnavailable(k));
        }
        Ok(self.power_classes[(k as usize) % self.field.order()][class])
    }

    /// A class function with integer values.
    pub fn integer_class_function(&self, values: &[i64]) -> Result<ClassFunction, ChartabError> {
        self.check_len(values.len())?;
        Ok(ClassFunction::new(values.iter().map(|&v| self.field.integer(v)).collect()))
    }

    fn check_len(&self, got: usize) -> Result<(), ChartabError> {
        if got != self.class_count() {
            return Err(ChartabError::LengthMismatch { expected: self.class_count(), got });
        }
        Ok(())
    }

    /// `⟨χ, ψ⟩ = (1/|G|) Σ_C |C| χ(g_C) conj(ψ(g_C))`.
    pub fn inner_product(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic, ChartabError> {
        self.check_len(chi.len())?;
        self.check_len(psi.len())?;
        let f = &self.field;
        let mut acc = f.zero();
        for (c, (a, b)) in chi.values.iter().zip(&psi.values).enumerate() {
            let term = f.mul(a, &f.conj(b));
            acc = f.add(&acc, &f.scale(&term, &BigRational::from_integer(self.classes.size(c).into())));
        }
        Ok(f.scale(&acc, &BigRational::new(1.into(), self.order.into())))
    }

    /// Pointwise product.
    pub fn tensor(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<ClassFunction, ChartabError> {
        self.check_len(chi.len())?;
        self.check_len(psi.len())?;
        Ok(ClassFunction::new(chi.values.iter().zip(&psi.values).map(|(a, b)| self.field.mul(a, b)).collect()))
    }

    /// `g ↦ χ(g^k)`.
    pub fn frobenius_twist(&self, chi: &ClassFunction, k: i64) -> Result<ClassFunction, ChartabError> {
        self.check_len(chi.len())?;
        (0..self.class_count()).map(|c| Ok(chi.values[self.power_class(c, k)?].clone())).collect::<Result<_, _>>().map(ClassFunction::new)
    }

    fn square_part(&self, chi: &ClassFunction, sign: i64) -> Result<ClassFunction, ChartabError> {
        let sq = self.tensor(chi, chi)?;
        let psi2 = self.frobenius_twist(chi, 2)?;
        let half = BigRational::new(1.into(), 2.into());
        let f = &self.field;
        Ok(ClassFunction::new(
            sq.values
                .iter()
                .zip(&psi2.values)
                .map(|(a, b)| f.scale(&if sign > 0 { f.add(a, b) } else { f.sub(a, b) }, &half))
                .collect(),
        ))
    }

    /// `(χ² + ψ²χ)/2`.
    pub fn sym_square(&self, chi: &ClassFunction) -> Result<ClassFunction, ChartabError> {
        self.square_part(chi, 1)
    }

    /// `(χ² - ψ²χ)/2`.
    pub fn alt_square(&self, chi: &ClassFunction) -> Result<ClassFunction, ChartabError> {
        self.square_part(chi, -1)
    }

    /// Character of the natural action of `group` (fixed points).
    pub fn permutation_character(&self, group: &Group) -> Result<ClassFunction, ChartabError> {
        if group.order() != self.order {
            return Err(ChartabError::GroupMismatch { table: self.order, group: group.order() });
        }
        let values: Vec<i64> = self.classes.reps().iter().map(|&r| group.element(r).fixed_points() as i64).collect();
        self.integer_class_function(&values)
    }

    /// Multiplicities of the irreducibles in `chi`; fails unless they are
    /// non-negative integers reproducing `chi` exactly.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<u64>, ChartabError> {
        let mut mult = Vec::with_capacity(self.irreducibles.len());
        for (i, irr) in self.irreducibles.iter().enumerate() {
            let ip = self.inner_product(chi, irr)?;
            let r = self.field.as_rational(&ip).ok_or_else(|| ChartabError::NotACharacter(format!("⟨χ, χ{i}⟩ is irrational")))?;
            if !r.is_integer() || r.is_negative() {
                return Err(ChartabError::NotACharacter(format!("⟨χ, χ{i}⟩ = {r}")));
            }
            mult.push(r.to_integer().to_u64().unwrap_or(u64::MAX));
        }
        let f = &self.field;
        let mut rebuilt = vec![f.zero(); self.class_count()];
        for (m, irr) in mult.iter().zip(&self.irreducibles) {
            let m = BigRational::from_integer((*m).into());
            for (acc, v) in rebuilt.iter_mut().zip(&irr.values) {
                *acc = f.add(acc, &f.scale(v, &m));
            }
        }
        if rebuilt != chi.values {
            return Err(ChartabError::NotACharacter("not in the span of the irreducibles".into()));
        }
        Ok(mult)
    }

    /// Sign by which the (first) central involution acts on an
    /// irreducible representation: `χ(z)/χ(1)`.
    pub fn center_action(&self, chi: &ClassFunction) -> Result<i8, ChartabError> {
        self.check_len(chi.len())?;
        let z = (0..self.class_count()).find(|&c| self.classes.size(c) == 1 && self.classes.element_order(c) == 2).ok_or(ChartabError::NoCentralInvolution)?;
        let f = &self.field;
        let ratio = match (f.as_rational(&chi.values[z]), f.as_rational(&chi.values[0])) {
            (Some(a), Some(d)) if !d.is_zero() => a / d,
            _ => return Err(ChartabError::NotScalar(f.format(&chi.values[z]))),
        };
        if ratio.is_one() {
            Ok(1)
        } else if ratio == -BigRational::one() {
            Ok(-1)
        } else {
            Err(ChartabError::NotScalar(ratio.to_string()))
        }
    }

    /// Re-checks the table exactly: degrees, integrality, and both
    /// orthogonality relations.
    pub fn verify(&self) -> Result<(), ChartabError> {
        let fail = |m: String| Err(ChartabError::VerificationFailure(m));
        let r = self.class_count();
        if self.irreducibles.len() != r {
            return fail(format!("{} characters for {r} classes", self.irreducibles.len()));
        }
        let f = &self.field;
        if self.irreducibles[0].values.iter().any(|v| *v != f.one()) {
            return fail("first character is not trivial".into());
        }
        let degrees = self.degrees();
        if degrees.iter().map(|d| d * d).sum::<u64>() != self.order as u64 || degrees.iter().any(|&d| d == 0 || !(self.order as u64).is_multiple_of(d)) {
            return fail(format!("degrees {degrees:?}"));
        }
        if let Some(i) = self.irreducibles.iter().position(|c| !c.values.iter().all(Cyclotomic::is_algebraic_integer_form)) {
            return fail(format!("character {i} has non-integral coordinates"));
        }
        for i in 0..r {
            for j in i..r {
                let ip = self.inner_product(&self.irreducibles[i], &self.irreducibles[j])?;
                if ip != f.integer(i64::from(i == j)) {
                    return fail(format!("⟨χ{i}, χ{j}⟩ = {}", f.format(&ip)));
                }
            }
        }
        let conj: Vec<Vec<Cyclotomic>> = self.irreducibles.iter().map(|c| c.values.iter().map(|v| f.conj(v)).collect()).collect();
        for a in 0..r {
            for b in a..r {
                let mut acc = f.zero();
                for (chi, chi_bar) in self.irreducibles.iter().zip(&conj) {
                    acc = f.add(&acc, &f.mul(&chi.values[a], &chi_bar[b]));
                }
                let expected = if a == b { (self.order / self.classes.size(a)) as i64 } else { 0 };
                if acc != f.integer(expected) {
                    return fail(format!("column relation for classes {a}, {b}: {}", f.format(&acc)));
                }
            }
        }
        Ok(())
    }

    pub fn report(&self) -> CharTableReport {
        CharTableReport::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{construct_group, GroupLabel};

    fn table(label: GroupLabel) -> (Group, CharTable) {
        let g = construct_group(&label).unwrap();
        let t = character_table(&g).unwrap();
        (g, t)
    }

    fn sorted(mut v: Vec<u64>) -> Vec<u64> {
        v.sort_unstable();
        v
    }

    #[test]
    fn a5_table() {
        let (g, t) = table(GroupLabel::A5);
        assert_eq!(t.prime(), 151);
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        let perm = t.permutation_character(&g).unwrap();
        let f = t.field();
        let v = ClassFunction::new(perm.values().iter().map(|x| f.sub(x, &f.one())).collect());
        assert_eq!(t.decompose(&v).unwrap(), vec![0, 0, 0, 1, 0]);
        let sym = t.sym_square(&v).unwrap();
        let ints: Vec<i64> = sym.values().iter().map(|x| f.as_rational(x).unwrap().to_integer().to_i64().unwrap()).collect();
        assert_eq!(ints, vec![10, 2, 1, 0, 0]);
        assert_eq!(t.decompose(&sym).unwrap(), vec![1, 0, 0, 1, 1]);
    }

    #[test]
    fn sl25_table_and_center() {
        let (_, t) = table(GroupLabel::Sl25);
        assert_eq!(t.prime(), 241);
        assert_eq!(sorted(t.degrees()), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
        for chi in t.irreducibles() {
            let d = t.degree_of(chi).unwrap();
            let s = t.center_action(chi).unwrap();
            if d == 2 || d == 6 {
                assert_eq!(s, -1);
            }
            if d == 3 || d == 5 || d == 1 {
                assert_eq!(s, 1);
            }
        }
    }

    #[test]
    fn abelian_and_small_tables() {
        for (label, classes) in [(GroupLabel::Abelian(vec![5, 5]), 25), (GroupLabel::S4, 5), (GroupLabel::G16, 10), (GroupLabel::G32, 14), (GroupLabel::S4xZ2, 10)] {
            let (_, t) = table(label);
            assert_eq!(t.class_count(), classes);
            t.verify().unwrap();
        }
    }

    #[test]
    fn twist_and_errors() {
        let (_, t) = table(GroupLabel::S4);
        let chi = t.character(3).clone();
        assert_eq!(t.frobenius_twist(&chi, 1).unwrap(), chi);
        assert_eq!(t.frobenius_twist(&chi, 0).unwrap_err(), ChartabError::PowerMapUnavailable(0));
        assert!(matches!(t.integer_class_function(&[1, 2]), Err(ChartabError::LengthMismatch { .. })));
        assert_eq!(t.center_action(&chi).unwrap_err(), ChartabError::NoCentralInvolution);
        let bad = t.integer_class_function(&[1, 0, 0, 0, 0]).unwrap();
        assert!(matches!(t.decompose(&bad), Err(ChartabError::NotACharacter(_))));
    }
}
