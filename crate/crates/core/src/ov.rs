//! Orthogonal vectors: d-dimensional 0/1 vectors, the exhaustive decider,
//! and seeded instance generation.
//!
//! Two vectors are orthogonal when their coordinate-wise product is zero
//! everywhere, i.e. their supports are disjoint. An instance is two sets
//! `A` (size `n`) and `B` (size `m`) of equal dimension; the question is
//! whether some pair `(a, b)` in `A x B` is orthogonal.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A d-dimensional 0/1 vector, d >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    bits: Vec<bool>,
}

impl BitVector {
    pub fn new(bits: Vec<bool>) -> Result<BitVector> {
        if bits.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(BitVector { bits })
    }

    /// The all-zeros vector of dimension `d`.
    pub fn zero(d: usize) -> Result<BitVector> {
        BitVector::new(vec![false; d])
    }

    /// Builds a vector from the low `d` bits of `value`; bit `k` of the
    /// integer becomes coordinate `k`. Handy for exhaustive enumeration.
    pub fn from_index_bits(value: u64, d: usize) -> Result<BitVector> {
        BitVector::new((0..d).map(|k| value >> k & 1 == 1).collect())
    }

    pub fn dim(&self) -> usize {
        self.bits.len()
    }

    pub fn get(&self, k: usize) -> bool {
        self.bits[k]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<BitVector> {
        let bits = s
            .bytes()
            .map(|b| match b {
                b'0' => Ok(false),
                b'1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "invalid vector character {:?}",
                    other as char
                ))),
            })
            .collect::<Result<Vec<bool>>>()?;
        BitVector::new(bits)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// An ordered, non-empty list of vectors sharing one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    vectors: Vec<BitVector>,
}

impl VectorSet {
    pub fn new(vectors: Vec<BitVector>) -> Result<VectorSet> {
        let first = vectors.first().ok_or(Error::EmptySet)?;
        let d = first.dim();
        for v in &vectors {
            if v.dim() != d {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: v.dim(),
                });
            }
        }
        Ok(VectorSet { vectors })
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> &BitVector {
        &self.vectors[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BitVector> {
        self.vectors.iter()
    }
}

/// An OV instance: sets `A` and `B` of equal dimension.
///
/// `n >= m >= 2` is a requirement of the reduction constructions, not of the
/// instance itself; the builders enforce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvInstance {
    a: VectorSet,
    b: VectorSet,
}

impl OvInstance {
    pub fn new(a: VectorSet, b: VectorSet) -> Result<OvInstance> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: b.dim(),
            });
        }
        Ok(OvInstance { a, b })
    }

    pub fn a(&self) -> &VectorSet {
        &self.a
    }

    pub fn b(&self) -> &VectorSet {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }
}

fn orthogonal_bits(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !(x && y))
}

/// True iff `a[k] * b[k] = 0` for every coordinate `k`.
pub fn is_orthogonal(a: &BitVector, b: &BitVector) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(orthogonal_bits(a.bits(), b.bits()))
}

/// Exhaustive O(nmd) search; returns the first orthogonal pair in
/// lexicographic `(i, j)` order, or `None` when the instance has none.
pub fn ov_bruteforce(inst: &OvInstance) -> Option<(usize, usize)> {
    for (i, a) in inst.a.iter().enumerate() {
        for (j, b) in inst.b.iter().enumerate() {
            if orthogonal_bits(a.bits(), b.bits()) {
                return Some((i, j));
            }
        }
    }
    None
}

fn random_bits(rng: &mut impl Rng, d: usize) -> Vec<bool> {
    (0..d).map(|_| rng.gen()).collect()
}

/// Generates an OV instance with a guaranteed answer, deterministically in
/// `seed`.
///
/// Vectors are sampled with each bit independently 1 with probability 1/2.
/// For `planted = true`, one random `(a_i, b_j)` is overwritten with a
/// disjoint-support pair; further accidental pairs are permitted. For
/// `planted = false`, accidental orthogonal pairs are destroyed: when some
/// coordinate is 1 in every A-vector, each offending B-vector is resampled
/// with a 1 forced there; otherwise each offending pair gets a shared 1 at a
/// random coordinate (adding 1s never creates new orthogonal pairs). The
/// result is re-verified with [`ov_bruteforce`] either way.
pub fn generate_instance(
    n: usize,
    m: usize,
    d: usize,
    planted: bool,
    seed: u64,
) -> Result<OvInstance> {
    if m < 2 || n < m {
        return Err(Error::InvalidParams(format!(
            "instance generation requires n >= m >= 2, got n={n}, m={m}"
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParams("dimension must be at least 1".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a: Vec<Vec<bool>> = (0..n).map(|_| random_bits(&mut rng, d)).collect();
    let mut b: Vec<Vec<bool>> = (0..m).map(|_| random_bits(&mut rng, d)).collect();

    if planted {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..m);
        let planted_a = random_bits(&mut rng, d);
        let planted_b: Vec<bool> = planted_a.iter().map(|&bit| !bit && rng.gen()).collect();
        a[i] = planted_a;
        b[j] = planted_b;
    } else {
        let all_ones_coord = (0..d).find(|&k| a.iter().all(|row| row[k]));
        if let Some(k) = all_ones_coord {
            for row_b in b.iter_mut() {
                if a.iter().any(|row_a| orthogonal_bits(row_a, row_b)) {
                    *row_b = random_bits(&mut rng, d);
                    row_b[k] = true;
                }
            }
        } else {
            for row_a in a.iter_mut() {
                for row_b in b.iter_mut() {
                    if orthogonal_bits(row_a, row_b) {
                        let k = rng.gen_range(0..d);
                        row_a[k] = true;
                        row_b[k] = true;
                    }
                }
            }
        }
    }

    let instance = OvInstance::new(
        VectorSet::new(a.into_iter().map(BitVector::new).collect::<Result<_>>()?)?,
        VectorSet::new(b.into_iter().map(BitVector::new).collect::<Result<_>>()?)?,
    )?;

    let has_pair = ov_bruteforce(&instance).is_some();
    if has_pair != planted {
        return Err(Error::InternalInvariant(format!(
            "generated instance answer {has_pair} does not match planted={planted}"
        )));
    }
    Ok(instance)
}

/// Parses the plain-text instance format: a `n m d` header line, then `n`
/// A-vector lines and `m` B-vector lines as length-d 0/1 strings.
pub fn parse_instance(bytes: &[u8]) -> Result<OvInstance> {
    let content = std::str::from_utf8(bytes)
        .map_err(|_| Error::Parse("instance file is not valid UTF-8".into()))?;
    let mut lines = content.lines().map(str::trim_end);

    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse(format!(
            "header must be `n m d`, got {header:?}"
        )));
    }
    let parse_field = |name: &str, field: &str| -> Result<usize> {
        field
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid {name} in header: {field:?}")))
    };
    let n = parse_field("n", fields[0])?;
    let m = parse_field("m", fields[1])?;
    let d = parse_field("d", fields[2])?;
    if n < 1 || m < 1 || d < 1 {
        return Err(Error::Parse(format!(
            "header values must be positive, got n={n} m={m} d={d}"
        )));
    }

    let mut read_set = |count: usize, label: &str| -> Result<VectorSet> {
        let mut vectors = Vec::with_capacity(count);
        for row in 0..count {
            let line = lines.next().ok_or_else(|| {
                Error::Parse(format!("missing {label}-vector line {}", row + 1))
            })?;
            let v: BitVector = line.parse()?;
            if v.dim() != d {
                return Err(Error::Parse(format!(
                    "{label}-vector line {} has length {}, expected {d}",
                    row + 1,
                    v.dim()
                )));
            }
            vectors.push(v);
        }
        VectorSet::new(vectors)
    };
    let a = read_set(n, "A")?;
    let b = read_set(m, "B")?;

    if let Some(extra) = lines.find(|l| !l.is_empty()) {
        return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
    }
    OvInstance::new(a, b)
}

/// The inverse of [`parse_instance`]; byte-identical for identical instances.
pub fn serialize_instance(inst: &OvInstance) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(&format!("{} {} {}\n", inst.n(), inst.m(), inst.dim()));
    for v in inst.a.iter() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    for v in inst.b.iter() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out.into_bytes()
}
