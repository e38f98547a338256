//! Characters of `S_N = S_{N_1} × … × S_{N_n}`: Murnaghan–Nakayama tables,
//! class sizes, inner products, Young-subgroup induction and restriction,
//! and the sign-twisted Kronecker multiplicities of `Λ^p(V_1 ⊗ … ⊗ V_n)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::Permutation;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::partitions::{cartesian, NPartition, Partition};

/// Largest symmetric group whose character table may be requested.
pub const MAX_TABLE_DEGREE: u32 = 24;

/// A conjugacy class of `S_N`: one cycle-type partition per factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Vec<Partition>);

impl CycleType {
    pub fn new(components: Vec<Partition>) -> Self {
        CycleType(components)
    }

    pub fn identity(sizes: &[u32]) -> Self {
        CycleType(sizes.iter().map(|&n| Partition::column(n)).collect())
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.0.iter().map(Partition::size).collect()
    }

    /// All classes of `S_N` in canonical order.
    pub fn all(sizes: &[u32]) -> Vec<CycleType> {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&n| Partition::all(n)).collect();
        cartesian(&lists).into_iter().map(CycleType).collect()
    }

    /// Order of the centraliser, `Π_i z_{ρ^i}`.
    pub fn centralizer_order(&self) -> BigInt {
        self.0.iter().map(z).product()
    }

    /// Number of elements in the class.
    pub fn class_size(&self) -> BigInt {
        self.0.iter().map(|r| factorial(r.size()) / z(r)).product()
    }

    /// Sign of any element of the class on the product of sign characters.
    pub fn sign(&self) -> i64 {
        let odd = self.0.iter().map(|r| r.size() as usize - r.len()).sum::<usize>() % 2;
        if odd == 0 {
            1
        } else {
            -1
        }
    }

    /// Canonical representative, one permutation per factor.
    pub fn representative(&self) -> Vec<Permutation> {
        self.0.iter().map(Permutation::from_cycle_type).collect()
    }

    /// The class of `g × id` inside a larger group, adding fixed points.
    pub fn with_fixed_points(&self, sizes: &[u32]) -> Result<CycleType> {
        if sizes.len() != self.0.len() {
            return Err(size_err(&self.sizes(), sizes));
        }
        let mut out = Vec::with_capacity(sizes.len());
        for (r, &n) in self.0.iter().zip(sizes) {
            if n < r.size() {
                return Err(size_err(&self.sizes(), sizes));
            }
            let mut parts = r.parts().to_vec();
            parts.extend(core::iter::repeat_n(1, (n - r.size()) as usize));
            out.push(Partition::new(parts)?);
        }
        Ok(CycleType(out))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn size_err(expected: &[u32], found: &[u32]) -> Error {
    Error::SizeMismatch {
        expected: format!("{expected:?}"),
        found: format!("{found:?}"),
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `z_ρ = Π_k k^{m_k} m_k!`.
pub fn z(rho: &Partition) -> BigInt {
    let mut out = BigInt::one();
    for (k, &m) in rho.multiplicities().iter().enumerate() {
        out *= BigInt::from(k as u32 + 1).pow(m) * factorial(m);
    }
    out
}

/// Number of elements of the class `ρ`.
pub fn class_size(rho: &CycleType) -> BigInt {
    rho.class_size()
}

/// A rational-valued class function on `S_N`, stored densely over the
/// classes in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    sizes: Vec<u32>,
    lists: Vec<Vec<Partition>>,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn zero(sizes: &[u32]) -> Self {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&n| Partition::all(n)).collect();
        let len = lists.iter().map(Vec::len).product();
        ClassFunction {
            sizes: sizes.to_vec(),
            lists,
            values: vec![BigRational::zero(); len],
        }
    }

    pub fn from_fn(sizes: &[u32], mut f: impl FnMut(&CycleType) -> BigRational) -> Self {
        let mut out = Self::zero(sizes);
        for (i, ct) in CycleType::all(sizes).iter().enumerate() {
            out.values[i] = f(ct);
        }
        out
    }

    /// Fallible variant of [`from_fn`](Self::from_fn).
    pub fn try_from_fn(sizes: &[u32], mut f: impl FnMut(&CycleType) -> Result<BigRational>) -> Result<Self> {
        let mut out = Self::zero(sizes);
        for (i, ct) in CycleType::all(sizes).iter().enumerate() {
            out.values[i] = f(ct)?;
        }
        Ok(out)
    }

    /// Values listed in the order of [`CycleType::all`].
    pub fn from_values(sizes: &[u32], values: Vec<BigRational>) -> Result<Self> {
        let mut out = Self::zero(sizes);
        if values.len() != out.values.len() {
            return Err(Error::SizeMismatch {
                expected: format!("{} class values", out.values.len()),
                found: format!("{}", values.len()),
            });
        }
        out.values = values;
        Ok(out)
    }

    pub fn trivial(sizes: &[u32]) -> Self {
        Self::from_fn(sizes, |_| BigRational::one())
    }

    /// Product of the sign characters of the factors.
    pub fn sign(sizes: &[u32]) -> Self {
        Self::from_fn(sizes, |ct| BigRational::from_integer(ct.sign().into()))
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn classes(&self) -> Vec<CycleType> {
        CycleType::all(&self.sizes)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    fn index(&self, ct: &CycleType) -> Result<usize> {
        if ct.0.len() != self.sizes.len() {
            return Err(size_err(&self.sizes, &ct.sizes()));
        }
        let mut idx = 0;
        for (list, p) in self.lists.iter().zip(&ct.0) {
            let i = list.binary_search(p).map_err(|_| size_err(&self.sizes, &ct.sizes()))?;
            idx = idx * list.len() + i;
        }
        Ok(idx)
    }

    pub fn value(&self, ct: &CycleType) -> Result<&BigRational> {
        self.index(ct).map(|i| &self.values[i])
    }

    pub fn set(&mut self, ct: &CycleType, v: BigRational) -> Result<()> {
        let i = self.index(ct)?;
        self.values[i] = v;
        Ok(())
    }

    /// Value at the identity, the degree of a character.
    pub fn degree(&self) -> BigRational {
        self.values[0].clone()
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(BigRational::is_integer)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.sizes != other.sizes {
            return Err(size_err(&self.sizes, &other.sizes));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        let mut out = self.clone();
        for a in &mut out.values {
            *a *= c;
        }
        out
    }

    /// Pointwise product (the character of the inner tensor product).
    pub fn pointwise(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            *a *= b;
        }
        Ok(out)
    }

    /// `⟨χ, ψ⟩ = |G|⁻¹ Σ_ρ |ρ| χ(ρ) ψ(ρ)`; characters of symmetric groups
    /// are real, so no conjugation is needed.
    pub fn inner(&self, other: &ClassFunction) -> Result<BigRational> {
        self.check_same(other)?;
        let mut total = BigRational::zero();
        for ((ct, a), b) in self.classes().iter().zip(&self.values).zip(&other.values) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            total += a * b / BigRational::from_integer(ct.centralizer_order());
        }
        Ok(total)
    }
}

// Ways to remove a rim hook of length r, with the sign (-1)^height.
fn rim_hooks(lambda: &Partition, r: u32) -> Vec<(Partition, i64)> {
    let l = lambda.len();
    let beta: Vec<u32> = (0..l).map(|i| lambda.part(i) + (l - 1 - i) as u32).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(k, &x)| x - (l - 1 - k) as u32).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts).expect("rim hook removal leaves a partition"), sign));
    }
    out
}

#[derive(Clone, Debug)]
struct Table {
    parts: Vec<Partition>,
    // χ_λ(ρ) at values[λ_index * len + ρ_index]
    values: Vec<i64>,
}

impl Table {
    fn index(&self, p: &Partition) -> usize {
        self.parts.binary_search(p).expect("partition of the table's degree")
    }

    fn get(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[self.index(lambda) * self.parts.len() + self.index(rho)]
    }
}

/// Character tables of `S_0, …, S_max`, computed once by the
/// Murnaghan–Nakayama rule and then read-only.
#[derive(Clone, Debug)]
pub struct CharacterTables {
    tables: Vec<Table>,
}

impl CharacterTables {
    pub fn new(max_n: u32) -> Result<Self> {
        if max_n > MAX_TABLE_DEGREE {
            return Err(Error::ResourceCap {
                what: "character table degree",
                needed: u64::from(max_n),
                cap: u64::from(MAX_TABLE_DEGREE),
            });
        }
        let mut tables: Vec<Table> = Vec::with_capacity(max_n as usize + 1);
        tables.push(Table {
            parts: vec![Partition::empty()],
            values: vec![1],
        });
        for n in 1..=max_n {
            let parts = Partition::all(n);
            let len = parts.len();
            let mut values = vec![0i64; len * len];
            for (li, lambda) in parts.iter().enumerate() {
                for (ri, rho) in parts.iter().enumerate() {
                    let r = rho.first();
                    let rest = Partition::new(rho.parts()[1..].to_vec()).expect("suffix of a partition");
                    let sub = &tables[(n - r) as usize];
                    values[li * len + ri] = rim_hooks(lambda, r).iter().map(|(mu, s)| s * sub.get(mu, &rest)).sum();
                }
            }
            tables.push(Table { parts, values });
        }
        Ok(CharacterTables { tables })
    }

    /// Tables large enough for every factor of `sizes`.
    pub fn for_sizes(sizes: &[u32]) -> Result<Self> {
        Self::new(sizes.iter().copied().max().unwrap_or(0))
    }

    pub fn max_degree(&self) -> u32 {
        self.tables.len() as u32 - 1
    }

    fn table(&self, n: u32) -> Result<&Table> {
        self.tables.get(n as usize).ok_or(Error::ResourceCap {
            what: "character table degree",
            needed: u64::from(n),
            cap: u64::from(self.max_degree()),
        })
    }

    /// `χ_λ(ρ)`.
    pub fn chi(&self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch {
                expected: format!("|λ| = {}", lambda.size()),
                found: format!("|ρ| = {}", rho.size()),
            });
        }
        Ok(self.table(lambda.size())?.get(lambda, rho))
    }

    /// `Π_i χ_{λ^i}(ρ^i)`.
    pub fn chi_product(&self, lambda: &NPartition, rho: &CycleType) -> Result<i64> {
        if lambda.arity() != rho.0.len() {
            return Err(size_err(&lambda.sizes(), &rho.sizes()));
        }
        let mut out = 1i64;
        for (l, r) in lambda.components().iter().zip(&rho.0) {
            out = out
                .checked_mul(self.chi(l, r)?)
                .ok_or_else(|| Error::Precondition("character value overflows i64".into()))?;
        }
        Ok(out)
    }

    /// The irreducible character `[λ¹]⊗…⊗[λⁿ]` as a class function.
    pub fn irreducible(&self, lambda: &NPartition) -> Result<ClassFunction> {
        ClassFunction::try_from_fn(&lambda.sizes(), |ct| {
            Ok(BigRational::from_integer(self.chi_product(lambda, ct)?.into()))
        })
    }

    /// Multiplicities `⟨χ, χ_λ⟩` for every `λ`, possibly negative.
    ///
    /// The sum over classes is contracted one factor at a time, so the cost
    /// is `Π p(N_i) · Σ p(N_i)` rather than the square of the class count.
    pub fn decompose_virtual(&self, chi: &ClassFunction) -> Result<BTreeMap<NPartition, i64>> {
        let sizes = chi.sizes.clone();
        let dims: Vec<usize> = chi.lists.iter().map(Vec::len).collect();
        let mut tensor = chi.values.clone();
        for (axis, &n) in sizes.iter().enumerate() {
            let table = self.table(n)?;
            let len = dims[axis];
            let inner: usize = dims[axis + 1..].iter().product();
            let outer: usize = dims[..axis].iter().product();
            let weights: Vec<BigRational> = table
                .parts
                .iter()
                .map(|rho| BigRational::new(BigInt::one(), z(rho)))
                .collect();
            let mut next = vec![BigRational::zero(); tensor.len()];
            for o in 0..outer {
                for li in 0..len {
                    for ri in 0..len {
                        let c = table.values[li * len + ri];
                        if c == 0 {
                            continue;
                        }
                        let w = &weights[ri] * BigRational::from_integer(c.into());
                        for s in 0..inner {
                            let src = &tensor[(o * len + ri) * inner + s];
                            if !src.is_zero() {
                                next[(o * len + li) * inner + s] += &w * src;
                            }
                        }
                    }
                }
            }
            tensor = next;
        }
        let mut out = BTreeMap::new();
        for (lambda, m) in NPartition::all(&sizes).into_iter().zip(tensor) {
            if m.is_zero() {
                continue;
            }
            if !m.is_integer() {
                return Err(Error::NonIntegerMultiplicity {
                    lambda: format!("{lambda}"),
                    value: format!("{m}"),
                });
            }
            let v = m.to_integer().to_i64().ok_or_else(|| Error::NonIntegerMultiplicity {
                lambda: format!("{lambda}"),
                value: format!("{m}"),
            })?;
            out.insert(lambda, v);
        }
        Ok(out)
    }

    /// Decomposition of a genuine character into irreducibles.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Decomposition> {
        let mut d = Decomposition::new(chi.sizes.clone());
        for (lambda, m) in self.decompose_virtual(chi)? {
            if m < 0 {
                return Err(Error::NegativeMultiplicity {
                    lambda: format!("{lambda}"),
                    value: format!("{m}"),
                });
            }
            d.insert(lambda, m as u64)?;
        }
        Ok(d)
    }

    /// Character of a decomposition, `Σ m_λ χ_λ`.
    pub fn character_of(&self, dec: &Decomposition) -> Result<ClassFunction> {
        let mut out = ClassFunction::zero(dec.sizes());
        for (lambda, m) in dec.terms() {
            let chi = self.irreducible(lambda)?;
            out = out.add(&chi.scale(&BigRational::from_integer(m.into())))?;
        }
        Ok(out)
    }

    /// `Ind_{S_N × S_{N'−N}}^{S_{N'}} (χ ⊠ [filler])`.
    ///
    /// Per factor, `Ind f(ρ') = Σ_{ρ ∪ σ = ρ'} Π_k C(m_k(ρ'), m_k(ρ)) f(ρ, σ)`,
    /// where the sum runs over splittings of the cycles of `ρ'`.
    pub fn induce(&self, chi: &ClassFunction, into: &[u32], filler: &NPartition) -> Result<ClassFunction> {
        let sizes = chi.sizes.clone();
        if into.len() != sizes.len() || filler.arity() != sizes.len() {
            return Err(size_err(&sizes, into));
        }
        for i in 0..sizes.len() {
            if into[i] < sizes[i] || filler.components()[i].size() != into[i] - sizes[i] {
                return Err(Error::SizeMismatch {
                    expected: format!("filler sizes {:?}", into.iter().zip(&sizes).map(|(a, b)| a.saturating_sub(*b)).collect::<Vec<_>>()),
                    found: format!("{:?}", filler.sizes()),
                });
            }
        }
        ClassFunction::try_from_fn(into, |target| {
            let per_factor: Vec<Vec<(Partition, Partition, BigInt)>> = target
                .0
                .iter()
                .zip(&sizes)
                .map(|(r, &n)| splittings(r, n))
                .collect();
            let mut total = BigRational::zero();
            for combo in cartesian(&per_factor) {
                let mut coeff = BigInt::one();
                let mut rho = Vec::with_capacity(combo.len());
                let mut filler_value = 1i64;
                for (i, (a, b, c)) in combo.iter().enumerate() {
                    coeff *= c;
                    rho.push(a.clone());
                    filler_value *= self.chi(&filler.components()[i], b)?;
                }
                if filler_value == 0 {
                    continue;
                }
                let v = chi.value(&CycleType(rho))?;
                total += v * BigRational::from_integer(coeff * filler_value);
            }
            Ok(total)
        })
    }

    /// Restriction to `S_N ⊂ S_{N'}`, the subgroup fixing the last
    /// `N'_i − N_i` points of each factor.
    pub fn restrict(&self, chi: &ClassFunction, to: &[u32]) -> Result<ClassFunction> {
        restrict(chi, to)
    }

    /// `(1/p!) Σ_{σ ∈ S_p} sgn(σ) Π_i χ_{μ^i}(σ)`: the multiplicity of
    /// `S_{μ¹}V₁ ⊗ … ⊗ S_{μⁿ}Vₙ` inside `Λ^p(V₁ ⊗ … ⊗ Vₙ)`.
    pub fn sign_kronecker_multiplicity(&self, mus: &[Partition]) -> Result<u64> {
        let Some(p) = mus.first().map(Partition::size) else {
            return Err(Error::Precondition("at least one partition is required".into()));
        };
        if mus.iter().any(|m| m.size() != p) {
            return Err(Error::SizeMismatch {
                expected: format!("all partitions of {p}"),
                found: format!("{:?}", mus.iter().map(Partition::size).collect::<Vec<_>>()),
            });
        }
        let mut total = BigRational::zero();
        for rho in Partition::all(p) {
            let sign: i64 = if (p as usize - rho.len()).is_multiple_of(2) { 1 } else { -1 };
            let mut prod = BigInt::from(sign);
            for mu in mus {
                prod *= self.chi(mu, &rho)?;
            }
            total += BigRational::new(prod, z(&rho));
        }
        if !total.is_integer() || total.is_negative() {
            return Err(Error::NonIntegerMultiplicity {
                lambda: format!("{}", NPartition::new(mus.to_vec())),
                value: format!("{total}"),
            });
        }
        total
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::Precondition("multiplicity overflows u64".into()))
    }
}

// Splittings of the cycles of `target` into a part of size n and the rest,
// with the number of ways to choose which cycles go to the first part.
fn splittings(target: &Partition, n: u32) -> Vec<(Partition, Partition, BigInt)> {
    let mult = target.multiplicities();
    let mut out = Vec::new();
    let mut chosen = vec![0u32; mult.len()];
    split_rec(&mult, 0, n, &mut chosen, &mut out);
    out
}

fn split_rec(mult: &[u32], k: usize, remaining: u32, chosen: &mut Vec<u32>, out: &mut Vec<(Partition, Partition, BigInt)>) {
    if k == mult.len() {
        if remaining == 0 {
            let mut a = Vec::new();
            let mut b = Vec::new();
            let mut coeff = BigInt::one();
            for (j, (&m, &c)) in mult.iter().zip(chosen.iter()).enumerate().rev() {
                let len = j as u32 + 1;
                a.extend(core::iter::repeat_n(len, c as usize));
                b.extend(core::iter::repeat_n(len, (m - c) as usize));
                coeff *= binomial(m, c);
            }
            out.push((
                Partition::new(a).expect("descending cycle lengths"),
                Partition::new(b).expect("descending cycle lengths"),
                coeff,
            ));
        }
        return;
    }
    let len = k as u32 + 1;
    for c in 0..=mult[k] {
        if c * len > remaining {
            break;
        }
        chosen[k] = c;
        split_rec(mult, k + 1, remaining - c * len, chosen, out);
    }
    chosen[k] = 0;
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `χ_λ(ρ)` from a table built for this degree.
pub fn irreducible_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    CharacterTables::new(lambda.size().max(rho.size()))?.chi(lambda, rho)
}

/// Decomposition of a genuine character.
pub fn decompose(chi: &ClassFunction) -> Result<Decomposition> {
    CharacterTables::for_sizes(chi.sizes())?.decompose(chi)
}

/// Restriction to the subgroup fixing the trailing points:
/// `Res χ(ρ) = χ(ρ ∪ 1^{N'−N})`.
pub fn restrict(chi: &ClassFunction, to: &[u32]) -> Result<ClassFunction> {
    if to.len() != chi.sizes.len() || to.iter().zip(&chi.sizes).any(|(a, b)| a > b) {
        return Err(size_err(&chi.sizes, to));
    }
    let big = chi.sizes.clone();
    ClassFunction::try_from_fn(to, |ct| Ok(chi.value(&ct.with_fixed_points(&big)?)?.clone()))
}

/// Induction from a Young subgroup, see [`CharacterTables::induce`].
pub fn induce(chi: &ClassFunction, into: &[u32], filler: &NPartition) -> Result<ClassFunction> {
    CharacterTables::for_sizes(into)?.induce(chi, into, filler)
}

/// See [`CharacterTables::sign_kronecker_multiplicity`].
pub fn sign_kronecker_multiplicity(mus: &[Partition]) -> Result<u64> {
    let p = mus.first().map_or(0, Partition::size);
    CharacterTables::new(p)?.sign_kronecker_multiplicity(mus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn np(s: &str) -> NPartition {
        s.parse().unwrap()
    }

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(irreducible_character(&p("(1,1)"), &p("(2)")).unwrap(), -1);
        for rho in Partition::all(5) {
            assert_eq!(irreducible_character(&p("(5)"), &rho).unwrap(), 1);
        }
        assert_eq!(irreducible_character(&p("(2,1)"), &p("(1,1,1)")).unwrap(), 2);
        assert_eq!(irreducible_character(&p("(2,1)"), &p("(3)")).unwrap(), -1);
        assert!(irreducible_character(&p("(2,1)"), &p("(2)")).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(CycleType::new(vec![p("(2)")]).class_size(), BigInt::from(1));
        assert_eq!(CycleType::new(vec![p("(2,1)")]).class_size(), BigInt::from(3));
        assert_eq!(CycleType::new(vec![p("(3)"), p("(2)")]).class_size(), BigInt::from(2));
    }

    #[test]
    fn identity_column_is_dimension() {
        let t = CharacterTables::new(8).unwrap();
        for n in 0..=8 {
            for lambda in Partition::all(n) {
                assert_eq!(t.chi(&lambda, &Partition::column(n)).unwrap() as u128, lambda.dimension());
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        let t = CharacterTables::new(8).unwrap();
        for n in 1..=8 {
            let irr: Vec<ClassFunction> = Partition::all(n)
                .into_iter()
                .map(|l| t.irreducible(&NPartition::new(vec![l])).unwrap())
                .collect();
            for (i, a) in irr.iter().enumerate() {
                for (j, b) in irr.iter().enumerate() {
                    assert_eq!(a.inner(b).unwrap(), q(i64::from(i == j)));
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        let t = CharacterTables::new(8).unwrap();
        for n in 1..=8 {
            let parts = Partition::all(n);
            for r1 in &parts {
                for r2 in &parts {
                    let s: i64 = parts.iter().map(|l| t.chi(l, r1).unwrap() * t.chi(l, r2).unwrap()).sum();
                    let expected = if r1 == r2 { z(r1) } else { BigInt::zero() };
                    assert_eq!(BigInt::from(s), expected);
                }
            }
        }
    }

    #[test]
    fn regular_character_of_s2() {
        let reg = ClassFunction::from_fn(&[2], |ct| if ct.components()[0] == p("(1,1)") { q(2) } else { q(0) });
        let d = decompose(&reg).unwrap();
        assert_eq!(d.to_string(), "[(1,1)] + [(2)]");
    }

    #[test]
    fn permutation_character_of_s3() {
        let perm = ClassFunction::from_fn(&[3], |ct| q(ct.components()[0].parts().iter().filter(|&&x| x == 1).count() as i64));
        let d = decompose(&perm).unwrap();
        assert_eq!(d.to_string(), "[(2,1)] + [(3)]");
    }

    #[test]
    fn induce_example() {
        let t = CharacterTables::new(3).unwrap();
        let chi = t.irreducible(&np("(1,1)x(1,1)")).unwrap();
        let filler = np("(1)x()");
        let ind = t.induce(&chi, &[3, 2], &filler).unwrap();
        assert_eq!(t.decompose(&ind).unwrap().to_string(), "[(1,1,1)x(1,1)] + [(2,1)x(1,1)]");
    }

    #[test]
    fn induce_to_itself_is_identity() {
        let t = CharacterTables::new(4).unwrap();
        let chi = t.irreducible(&np("(2,1)x(3,1)")).unwrap();
        let same = t.induce(&chi, &[3, 4], &np("()x()")).unwrap();
        assert_eq!(same, chi);
    }

    #[test]
    fn induce_trivial_gives_two_row_shapes() {
        let t = CharacterTables::new(5).unwrap();
        let ind = t.induce(&ClassFunction::trivial(&[2]), &[5], &np("(3)")).unwrap();
        assert_eq!(t.decompose(&ind).unwrap().to_string(), "[(3,2)] + [(4,1)] + [(5)]");
    }

    #[test]
    fn restrict_examples() {
        let t = CharacterTables::new(3).unwrap();
        let chi = t
            .irreducible(&np("(1,1,1)x(2,1)"))
            .unwrap()
            .add(&t.irreducible(&np("(2,1)x(1,1,1)")).unwrap())
            .unwrap();
        let res = restrict(&chi, &[3, 2]).unwrap();
        assert_eq!(
            t.decompose(&res).unwrap().to_string(),
            "[(1,1,1)x(1,1)] + [(1,1,1)x(2)] + [(2,1)x(1,1)]"
        );
        let res = restrict(&t.irreducible(&np("(3)x(1,1,1)")).unwrap(), &[3, 2]).unwrap();
        assert_eq!(t.decompose(&res).unwrap().to_string(), "[(3)x(1,1)]");
        let triv = restrict(&ClassFunction::trivial(&[4, 2]), &[2, 1]).unwrap();
        assert_eq!(triv, ClassFunction::trivial(&[2, 1]));
    }

    #[test]
    fn sign_kronecker_examples() {
        assert_eq!(sign_kronecker_multiplicity(&[p("(2)"), p("(1,1)")]).unwrap(), 1);
        assert_eq!(sign_kronecker_multiplicity(&[p("(2)"), p("(2)")]).unwrap(), 0);
        assert_eq!(sign_kronecker_multiplicity(&[p("(1,1)")]).unwrap(), 1);
        assert_eq!(sign_kronecker_multiplicity(&[p("(2,1)"), p("(2,1)")]).unwrap(), 1);
    }

    #[test]
    fn virtual_decomposition_keeps_signs() {
        let t = CharacterTables::new(2).unwrap();
        let chi = ClassFunction::trivial(&[2]).sub(&ClassFunction::sign(&[2])).unwrap();
        let v = t.decompose_virtual(&chi).unwrap();
        assert_eq!(v.get(&np("(2)")), Some(&1));
        assert_eq!(v.get(&np("(1,1)")), Some(&-1));
        assert!(matches!(t.decompose(&chi), Err(Error::NegativeMultiplicity { .. })));
    }

    #[test]
    fn non_integer_multiplicity_is_reported() {
        let chi = ClassFunction::from_fn(&[2], |_| q(1)).scale(&BigRational::new(1.into(), 3.into()));
        assert!(matches!(decompose(&chi), Err(Error::NonIntegerMultiplicity { .. })));
    }
}
