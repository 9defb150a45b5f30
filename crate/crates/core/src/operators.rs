//! EPR and GHZ^k class operators.
//!
//! Every operator is a Kronecker product over all subsystems. Active
//! subsystems carry a single embedded Pauli block at their lambda pair
//! (`σ_y` for the two π/2 subsystems, `σ_x` for the remaining π
//! subsystems); inactive subsystems carry the identity.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_complex::Complex64;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::multilinear::{kron_all, multi_index, ComplexMatrix};
use crate::povm::PhaseKind;

/// Number of subsystem indices a [`ClassLabel`] can address (`0..31`).
pub const MAX_SUBSYSTEMS: usize = 31;

const GHZ_FLAG: u32 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    Epr,
    Ghz,
}

/// One element of the MEGS: an EPR pair or a GHZ^k subset.
///
/// Packed into one word: bit `j < 31` is set when subsystem `j` is active,
/// bit 31 marks GHZ. Ordering is by kind, then subset size, then
/// lexicographic order of the sorted index list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassLabel(pub(crate) u32);

impl ClassLabel {
    pub fn new(kind: ClassKind, subset: &[usize]) -> Result<Self> {
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "subset {subset:?} must be sorted and distinct"
            )));
        }
        if let Some(&j) = subset.iter().find(|&&j| j >= MAX_SUBSYSTEMS) {
            return Err(Error::domain(format!(
                "subsystem index {j} exceeds the supported maximum {}",
                MAX_SUBSYSTEMS - 1
            )));
        }
        let members = subset.iter().fold(0u32, |acc, &j| acc | 1 << j);
        Self::from_mask(kind, members)
    }

    pub fn epr(a: usize, b: usize) -> Result<Self> {
        Self::new(ClassKind::Epr, &[a, b])
    }

    pub fn ghz(subset: &[usize]) -> Result<Self> {
        Self::new(ClassKind::Ghz, subset)
    }

    pub(crate) fn from_mask(kind: ClassKind, members: u32) -> Result<Self> {
        let size = members.count_ones();
        match kind {
            ClassKind::Epr if size != 2 => Err(Error::domain(format!(
                "an EPR label needs exactly 2 subsystems, got {size}"
            ))),
            ClassKind::Ghz if size < 3 => Err(Error::domain(format!(
                "a GHZ label needs at least 3 subsystems, got {size}"
            ))),
            _ => Ok(Self::from_mask_unchecked(kind, members)),
        }
    }

    /// Caller guarantees the size matches the kind and bit 31 is clear.
    pub(crate) fn from_mask_unchecked(kind: ClassKind, members: u32) -> Self {
        match kind {
            ClassKind::Epr => ClassLabel(members),
            ClassKind::Ghz => ClassLabel(members | GHZ_FLAG),
        }
    }

    pub fn kind(&self) -> ClassKind {
        if self.0 & GHZ_FLAG == 0 {
            ClassKind::Epr
        } else {
            ClassKind::Ghz
        }
    }

    /// Sorted subsystem indices.
    pub fn subset(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        let mut bits = self.mask();
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        out
    }

    pub fn size(&self) -> usize {
        self.mask().count_ones() as usize
    }

    pub fn contains(&self, j: usize) -> bool {
        j < MAX_SUBSYSTEMS && self.0 & (1 << j) != 0
    }

    /// Active subsystems as a bitmask.
    pub fn mask(&self) -> u32 {
        self.0 & !GHZ_FLAG
    }

    /// Checks that every index is below `m` and that GHZ subsets fit.
    pub fn validate_for(&self, m: usize) -> Result<()> {
        let highest = 31 - self.mask().leading_zeros() as usize;
        if highest >= m {
            return Err(Error::domain(format!(
                "label {self} refers to subsystem {highest} but the system has {m} subsystems"
            )));
        }
        Ok(())
    }

    /// Applies a subsystem relabeling: index `j` becomes `map[j]`.
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        let mut subset = Vec::with_capacity(self.size());
        for j in self.subset() {
            let &to = map
                .get(j)
                .ok_or_else(|| Error::domain(format!("relabeling has no entry for {j}")))?;
            subset.push(to);
        }
        subset.sort_unstable();
        Self::new(self.kind(), &subset)
    }
}

impl Ord for ClassLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind()
            .cmp(&other.kind())
            .then(self.size().cmp(&other.size()))
            .then_with(|| {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                    // lowest differing index belongs to self
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for ClassLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ClassKind::Epr => write!(f, "EPR(")?,
            ClassKind::Ghz => write!(f, "GHZ{}(", self.size())?,
        }
        write!(f, "{})", self.subset().iter().join(","))
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    /// Parses `EPR(a,b)`, `GHZk(i,j,...)` or `GHZ(i,j,...)`, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse class label {s:?}"));
        let s_trim = s.trim();
        let open = s_trim.find('(').ok_or_else(bad)?;
        let body = s_trim[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let head = s_trim[..open].trim().to_ascii_uppercase();
        let subset: Vec<usize> = body
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if head == "EPR" {
            return Self::new(ClassKind::Epr, &subset);
        }
        let size = head.strip_prefix("GHZ").ok_or_else(bad)?;
        if !size.is_empty() && size.parse::<usize>().map_err(|_| bad())? != subset.len() {
            return Err(Error::domain(format!(
                "label {s:?} declares GHZ{size} but lists {} subsystems",
                subset.len()
            )));
        }
        Self::new(ClassKind::Ghz, &subset)
    }
}

/// One `(k, l)` pair with `k < l` per active subsystem, in subset order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaIndex {
    pairs: Vec<(usize, usize)>,
}

impl LambdaIndex {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        LambdaIndex { pairs }
    }

    /// `(0, 1)` on every one of `n` active subsystems.
    pub fn first(n: usize) -> Self {
        LambdaIndex {
            pairs: vec![(0, 1); n],
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn validate(&self, dims: &[usize], subset: &[usize]) -> Result<()> {
        if self.pairs.len() != subset.len() {
            return Err(Error::domain(format!(
                "lambda has {} pairs but {} subsystems are active",
                self.pairs.len(),
                subset.len()
            )));
        }
        for (&j, &(k, l)) in subset.iter().zip(&self.pairs) {
            if !(k < l && l < dims[j]) {
                return Err(Error::domain(format!(
                    "lambda pair ({k},{l}) is invalid for subsystem {j} of dimension {}",
                    dims[j]
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LambdaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.pairs.iter().map(|(k, l)| format!("({k},{l})"));
        write!(f, "{}", parts.format(";"))
    }
}

/// A constructed class operator on the full Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassOperator {
    matrix: ComplexMatrix,
    dims: Vec<usize>,
    label: ClassLabel,
    lambda: LambdaIndex,
    pi_half_pair: (usize, usize),
}

impl ClassOperator {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn label(&self) -> ClassLabel {
        self.label
    }

    pub fn lambda(&self) -> &LambdaIndex {
        &self.lambda
    }

    /// The two subsystems carrying π/2 blocks. Equals the pair for EPR.
    pub fn pi_half_pair(&self) -> (usize, usize) {
        self.pi_half_pair
    }
}

/// Embedded Pauli block at `(k, l)`: `σ_y` for π/2, `σ_x` for π.
pub fn elementary_block(dim: usize, pair: (usize, usize), kind: PhaseKind) -> Result<ComplexMatrix> {
    let (k, l) = pair;
    if !(k < l && l < dim) {
        return Err(Error::domain(format!(
            "pair ({k},{l}) is invalid for dimension {dim}"
        )));
    }
    let mut m = ComplexMatrix::zeros(dim, dim);
    match kind {
        PhaseKind::HalfPi => {
            m[(k, l)] = Complex64::new(0.0, -1.0);
            m[(l, k)] = Complex64::new(0.0, 1.0);
        }
        PhaseKind::Pi => {
            m[(k, l)] = Complex64::new(1.0, 0.0);
            m[(l, k)] = Complex64::new(1.0, 0.0);
        }
    }
    Ok(m)
}

fn check_dims(dims: &[usize]) -> Result<()> {
    if dims.len() < 2 {
        return Err(Error::domain(format!(
            "class operators need at least 2 subsystems, got {}",
            dims.len()
        )));
    }
    if let Some((j, &n)) = dims.iter().enumerate().find(|(_, &n)| n < 2) {
        return Err(Error::domain(format!("subsystem {j} has dimension {n} < 2")));
    }
    Ok(())
}

fn build(
    dims: &[usize],
    label: ClassLabel,
    pi_half_pair: (usize, usize),
    lambda: LambdaIndex,
    cfg: &Config,
) -> Result<ClassOperator> {
    let subset = label.subset();
    lambda.validate(dims, &subset)?;
    let mut active = subset.iter().zip(lambda.pairs()).peekable();
    let mut factors = Vec::with_capacity(dims.len());
    for (j, &n) in dims.iter().enumerate() {
        match active.next_if(|(&s, _)| s == j) {
            Some((_, &pair)) => {
                let kind = if j == pi_half_pair.0 || j == pi_half_pair.1 {
                    PhaseKind::HalfPi
                } else {
                    PhaseKind::Pi
                };
                factors.push(elementary_block(n, pair, kind)?);
            }
            None => factors.push(ComplexMatrix::identity(n)),
        }
    }
    Ok(ClassOperator {
        matrix: kron_all(&factors, cfg.dense_cap)?,
        dims: dims.to_vec(),
        label,
        lambda,
        pi_half_pair,
    })
}

/// EPR operator: `σ_y`-type blocks on `r1` and `r2`, identity elsewhere.
pub fn epr_operator(
    dims: &[usize],
    pair: (usize, usize),
    lambda: LambdaIndex,
    cfg: &Config,
) -> Result<ClassOperator> {
    check_dims(dims)?;
    let label = ClassLabel::epr(pair.0, pair.1)?;
    label.validate_for(dims.len())?;
    build(dims, label, pair, lambda, cfg)
}

/// GHZ^k operator on `subset`: `σ_y`-type blocks on `pi_half_pair`,
/// `σ_x`-type blocks on the other members, identity elsewhere.
pub fn ghz_operator(
    dims: &[usize],
    subset: &[usize],
    pi_half_pair: (usize, usize),
    lambda: LambdaIndex,
    cfg: &Config,
) -> Result<ClassOperator> {
    check_dims(dims)?;
    let label = ClassLabel::ghz(subset)?;
    label.validate_for(dims.len())?;
    let (a, b) = pi_half_pair;
    if !(a < b && label.contains(a) && label.contains(b)) {
        return Err(Error::domain(format!(
            "pi/2 pair ({a},{b}) must be an ordered pair inside {label}"
        )));
    }
    build(dims, label, pi_half_pair, lambda, cfg)
}

/// Strict upper and lower triangles `(U, L)` of an EPR operator.
pub fn split_anti_diagonal(op: &ClassOperator) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if op.label.kind() != ClassKind::Epr {
        return Err(Error::domain(format!(
            "upper/lower split applies to EPR operators, got {}",
            op.label
        )));
    }
    Ok((op.matrix.strict_upper(), op.matrix.strict_lower()))
}

/// Index of the sign component an entry `(row, col)` belongs to, or `None`
/// when the entry is not an off-diagonal flip on every active subsystem.
///
/// Each active subsystem contributes `+φ` when its row index is below its
/// column index and `−φ` otherwise. A signature and its negation share one
/// component; components are numbered by the signs of the 2nd..k-th
/// members relative to the first (bit set = opposite sign, first member is
/// the most significant bit).
pub(crate) fn sign_component_of(
    row: usize,
    col: usize,
    dims: &[usize],
    subset: &[usize],
    lambda: &LambdaIndex,
) -> Result<Option<usize>> {
    let a = multi_index(row, dims)?;
    let b = multi_index(col, dims)?;
    let mut active = subset.iter().zip(lambda.pairs()).peekable();
    let mut first_plus = None;
    let mut idx = 0usize;
    for j in 0..dims.len() {
        match active.next_if(|(&s, _)| s == j) {
            Some((_, &(k, l))) => {
                let plus = match (a[j], b[j]) {
                    (x, y) if x == k && y == l => true,
                    (x, y) if x == l && y == k => false,
                    _ => return Ok(None),
                };
                match first_plus {
                    None => first_plus = Some(plus),
                    Some(f) => idx = (idx << 1) | usize::from(f != plus),
                }
            }
            None if a[j] != b[j] => return Ok(None),
            None => {}
        }
    }
    Ok(Some(idx))
}

/// Splits a GHZ operator into `2^{k−1}` Hermitian components grouped by
/// joint-phase sign signature. The components sum to the operator exactly.
pub fn split_sign_components(op: &ClassOperator) -> Result<Vec<ComplexMatrix>> {
    if op.label.kind() != ClassKind::Ghz {
        return Err(Error::domain(format!(
            "sign split applies to GHZ operators, got {} (use the upper/lower split)",
            op.label
        )));
    }
    let subset = op.label.subset();
    let n = op.matrix.rows();
    let mut parts = vec![ComplexMatrix::zeros(n, n); 1 << (subset.len() - 1)];
    for (i, j, z) in op.matrix.nonzeros() {
        let idx = sign_component_of(i, j, &op.dims, &subset, &op.lambda)?
            .ok_or_else(|| Error::domain("operator is not in single-pair form"))?;
        parts[idx][(i, j)] = z;
    }
    Ok(parts)
}

/// All `(k, l)` pairs with `k < l < dim`, lexicographic.
pub fn index_pairs(dim: usize) -> Vec<(usize, usize)> {
    (0..dim).tuple_combinations().collect()
}

/// The `(pi_half_pair, lambda)` choices for a label, in enumeration order.
pub fn operator_choices(dims: &[usize], label: ClassLabel) -> Result<Vec<((usize, usize), LambdaIndex)>> {
    check_dims(dims)?;
    label.validate_for(dims.len())?;
    let subset = label.subset();
    let placements: Vec<(usize, usize)> = match label.kind() {
        ClassKind::Epr => vec![(subset[0], subset[1])],
        ClassKind::Ghz => subset.iter().copied().tuple_combinations().collect(),
    };
    let lambdas: Vec<LambdaIndex> = subset
        .iter()
        .map(|&j| index_pairs(dims[j]))
        .multi_cartesian_product()
        .map(LambdaIndex::new)
        .collect();
    Ok(placements
        .into_iter()
        .cartesian_product(lambdas)
        .collect())
}

/// Number of operators [`enumerate_class_operators`] returns.
pub fn class_operator_count(dims: &[usize], label: ClassLabel) -> Result<usize> {
    check_dims(dims)?;
    label.validate_for(dims.len())?;
    let k = label.size();
    let lambdas: usize = label
        .subset()
        .iter()
        .map(|&j| dims[j] * (dims[j] - 1) / 2)
        .product();
    let placements = match label.kind() {
        ClassKind::Epr => 1,
        ClassKind::Ghz => k * (k - 1) / 2,
    };
    Ok(placements * lambdas)
}

/// Builds a single operator for a label from one enumeration choice.
pub fn class_operator(
    dims: &[usize],
    label: ClassLabel,
    pi_half_pair: (usize, usize),
    lambda: LambdaIndex,
    cfg: &Config,
) -> Result<ClassOperator> {
    match label.kind() {
        ClassKind::Epr => {
            let s = label.subset();
            if pi_half_pair != (s[0], s[1]) {
                return Err(Error::domain(format!(
                    "EPR operator pair must be ({},{}), got {pi_half_pair:?}",
                    s[0], s[1]
                )));
            }
            epr_operator(dims, pi_half_pair, lambda, cfg)
        }
        ClassKind::Ghz => ghz_operator(dims, &label.subset(), pi_half_pair, lambda, cfg),
    }
}

/// Every operator belonging to `label`, ordered by `(pi_half_pair, lambda)`.
pub fn enumerate_class_operators(dims: &[usize], label: ClassLabel, cfg: &Config) -> Result<Vec<ClassOperator>> {
    operator_choices(dims, label)?
        .into_iter()
        .map(|(pair, lambda)| class_operator(dims, label, pair, lambda, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::kron;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sx() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]])
    }

    fn sy() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
    }

    fn kr(fs: &[ComplexMatrix]) -> ComplexMatrix {
        fs.iter().skip(1).fold(fs[0].clone(), |acc, f| kron(&acc, f, 4096).unwrap())
    }

    #[test]
    fn elementary_block_examples() {
        assert_eq!(elementary_block(2, (0, 1), PhaseKind::Pi).unwrap(), sx());
        assert_eq!(elementary_block(2, (0, 1), PhaseKind::HalfPi).unwrap(), sy());
        let b = elementary_block(3, (0, 2), PhaseKind::Pi).unwrap();
        let nz: Vec<_> = b.nonzeros().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(nz, vec![(0, 2), (2, 0)]);
        assert!(elementary_block(3, (2, 1), PhaseKind::Pi).is_err());
        assert!(elementary_block(3, (1, 3), PhaseKind::Pi).is_err());
    }

    #[test]
    fn epr_examples() {
        let cfg = Config::default();
        let op = epr_operator(&[2, 2], (0, 1), LambdaIndex::first(2), &cfg).unwrap();
        assert_eq!(op.matrix(), &kr(&[sy(), sy()]));
        let op3 = epr_operator(&[2, 2, 2], (0, 1), LambdaIndex::first(2), &cfg).unwrap();
        assert_eq!(op3.matrix(), &kr(&[sy(), sy(), ComplexMatrix::identity(2)]));
        let q = epr_operator(&[3, 3], (0, 1), LambdaIndex::first(2), &cfg).unwrap();
        assert_eq!(q.matrix().rows(), 9);
        assert_eq!(q.matrix().nnz(), 4);
        assert!(q.matrix().nonzeros().all(|(_, _, z)| z.norm() == 1.0));
    }

    #[test]
    fn epr_rejects_bad_input() {
        let cfg = Config::default();
        assert!(epr_operator(&[2, 2], (1, 0), LambdaIndex::first(2), &cfg).is_err());
        assert!(epr_operator(&[2, 2], (0, 2), LambdaIndex::first(2), &cfg).is_err());
        assert!(epr_operator(&[2, 2], (0, 1), LambdaIndex::first(3), &cfg).is_err());
        assert!(epr_operator(&[2, 2], (0, 1), LambdaIndex::new(vec![(0, 1), (0, 2)]), &cfg).is_err());
        assert!(epr_operator(&[2], (0, 1), LambdaIndex::first(2), &cfg).is_err());
    }

    #[test]
    fn split_anti_diagonal_examples() {
        let cfg = Config::default();
        let op = epr_operator(&[2, 2], (0, 1), LambdaIndex::first(2), &cfg).unwrap();
        let (u, l) = split_anti_diagonal(&op).unwrap();
        assert_eq!(u.nnz(), 2);
        assert_eq!(u[(0, 3)], c(-1.0, 0.0));
        assert_eq!(u[(1, 2)], c(1.0, 0.0));
        assert_eq!(l, u.conj_transpose());
        assert_eq!(&u + &l, *op.matrix());

        let op3 = epr_operator(&[2, 2, 2], (0, 1), LambdaIndex::first(2), &cfg).unwrap();
        let (u3, _) = split_anti_diagonal(&op3).unwrap();
        assert_eq!(u3.nnz(), 4);
        assert!(u3.nonzeros().all(|(i, j, _)| j > i));
    }

    #[test]
    fn ghz_examples() {
        let cfg = Config::default();
        let i2 = ComplexMatrix::identity(2);
        let a = ghz_operator(&[2, 2, 2], &[0, 1, 2], (0, 1), LambdaIndex::first(3), &cfg).unwrap();
        assert_eq!(a.matrix(), &kr(&[sy(), sy(), sx()]));
        let b = ghz_operator(&[2, 2, 2, 2], &[0, 1, 2], (0, 1), LambdaIndex::first(3), &cfg).unwrap();
        assert_eq!(b.matrix(), &kr(&[sy(), sy(), sx(), i2]));
        let d = ghz_operator(&[2, 2, 2], &[0, 1, 2], (1, 2), LambdaIndex::first(3), &cfg).unwrap();
        assert_eq!(d.matrix(), &kr(&[sx(), sy(), sy()]));
        assert_eq!(a.matrix().nnz(), 8);
    }

    #[test]
    fn ghz_rejects_bad_input() {
        let cfg = Config::default();
        assert!(ghz_operator(&[2, 2, 2], &[0, 1], (0, 1), LambdaIndex::first(2), &cfg).is_err());
        assert!(ghz_operator(&[2, 2, 2, 2], &[0, 1, 2], (0, 3), LambdaIndex::first(3), &cfg).is_err());
        assert!(ghz_operator(&[2, 2, 2], &[0, 1, 2], (1, 0), LambdaIndex::first(3), &cfg).is_err());
    }

    #[test]
    fn sign_split_examples() {
        let cfg = Config::default();
        let op = ghz_operator(&[2, 2, 2], &[0, 1, 2], (0, 1), LambdaIndex::first(3), &cfg).unwrap();
        let parts = split_sign_components(&op).unwrap();
        assert_eq!(parts.len(), 4);
        let mut sum = ComplexMatrix::zeros(8, 8);
        for p in &parts {
            assert_eq!(p.nnz(), 2);
            assert!(p.is_hermitian(0.0));
            sum = &sum + p;
        }
        assert_eq!(&sum, op.matrix());

        let epr = epr_operator(&[2, 2], (0, 1), LambdaIndex::first(2), &cfg).unwrap();
        assert!(split_sign_components(&epr).is_err());
        assert!(split_anti_diagonal(&op).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let cfg = Config::default();
        let epr = ClassLabel::epr(0, 1).unwrap();
        assert_eq!(enumerate_class_operators(&[2, 2], epr, &cfg).unwrap().len(), 1);
        let ghz = ClassLabel::ghz(&[0, 1, 2]).unwrap();
        let ops = enumerate_class_operators(&[2, 2, 2], ghz, &cfg).unwrap();
        let pairs: Vec<_> = ops.iter().map(ClassOperator::pi_half_pair).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2)]);
        let q = enumerate_class_operators(&[3, 2], epr, &cfg).unwrap();
        let lambdas: Vec<_> = q.iter().map(|o| o.lambda().pairs()[0]).collect();
        assert_eq!(lambdas, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(enumerate_class_operators(&[2, 2], ghz, &cfg).is_err());
        assert_eq!(class_operator_count(&[3, 2, 3], ghz).unwrap(), 3 * 3 * 3);
    }

    #[test]
    fn label_ordering_and_text() {
        let mut v = [
            ClassLabel::ghz(&[1, 2, 3]).unwrap(),
            ClassLabel::ghz(&[0, 1, 2, 3]).unwrap(),
            ClassLabel::epr(1, 2).unwrap(),
            ClassLabel::ghz(&[0, 2, 3]).unwrap(),
            ClassLabel::epr(0, 3).unwrap(),
            ClassLabel::epr(0, 1).unwrap(),
        ];
        v.sort();
        let text: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            ["EPR(0,1)", "EPR(0,3)", "EPR(1,2)", "GHZ3(0,2,3)", "GHZ3(1,2,3)", "GHZ4(0,1,2,3)"]
        );
        for t in &text {
            assert_eq!(&t.parse::<ClassLabel>().unwrap().to_string(), t);
        }
        assert_eq!("ghz(0, 1, 2)".parse::<ClassLabel>().unwrap(), ClassLabel::ghz(&[0, 1, 2]).unwrap());
        assert!("GHZ4(0,1,2)".parse::<ClassLabel>().is_err());
        assert!("EPR(0,1,2)".parse::<ClassLabel>().is_err());
        assert!("EPR(1,0)".parse::<ClassLabel>().is_err());
        assert!("GHZ3(0,1)".parse::<ClassLabel>().is_err());
        assert!("XYZ(0,1)".parse::<ClassLabel>().is_err());
        assert!(ClassLabel::epr(0, 3).unwrap().validate_for(3).is_err());
    }
}
