//! Multi-indices and totally antisymmetric real tensors stored on strictly
//! increasing index tuples (1-based).

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::RealMatrix;

/// Strictly increasing list of 1-based indices into `1..=side`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(side: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.iter().any(|&i| i == 0 || i > side) {
            return Err(Error::BadIndex(format!("{indices:?} not within 1..={side}")));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadIndex(format!("{indices:?} is not strictly increasing")));
        }
        Ok(Self(indices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// `"m,k,[i1,i2,...]"`, the key format used by the `basis` dump.
    pub fn key(&self, m: usize) -> String {
        let inner: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        format!("{m},{},[{}]", self.0.len(), inner.join(","))
    }
}

/// All strictly increasing `k`-tuples over `1..=side`, lexicographic.
pub fn combinations(side: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    if k > side {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(MultiIndex(cur.clone()));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < side - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `indices` in place and returns the permutation sign, or 0 when an
/// index repeats.
pub fn sort_with_sign(indices: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

/// Grade-`k` totally antisymmetric tensor over `1..=side`. Only increasing
/// keys are stored; missing keys are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct AntisymTensor {
    side: usize,
    k: usize,
    values: BTreeMap<MultiIndex, f64>,
}

impl AntisymTensor {
    pub fn zeros(side: usize, k: usize) -> Self {
        Self {
            side,
            k,
            values: BTreeMap::new(),
        }
    }

    pub fn vector(values: &[f64]) -> Self {
        let mut t = Self::zeros(values.len(), 1);
        for (i, v) in values.iter().enumerate() {
            t.values.insert(MultiIndex(vec![i + 1]), *v);
        }
        t.prune();
        t
    }

    /// Build from `(indices, value)` pairs given in any order; odd permutations flip
    /// the sign. Repeated indices are rejected.
    pub fn from_entries(side: usize, k: usize, entries: &[(&[usize], f64)]) -> Result<Self> {
        let mut t = Self::zeros(side, k);
        for (idx, v) in entries {
            t.set(idx, *v)?;
        }
        Ok(t)
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn grade(&self) -> usize {
        self.k
    }

    pub fn set(&mut self, idx: &[usize], value: f64) -> Result<()> {
        if idx.len() != self.k {
            return Err(Error::GradeMismatch {
                expected: self.k,
                found: idx.len(),
            });
        }
        let mut sorted = idx.to_vec();
        let sign = sort_with_sign(&mut sorted);
        if sign == 0 {
            return Err(Error::BadIndex(format!("{idx:?} repeats an index")));
        }
        let key = MultiIndex::new(self.side, sorted)?;
        if value == 0.0 {
            self.values.remove(&key);
        } else {
            self.values.insert(key, sign as f64 * value);
        }
        Ok(())
    }

    /// Component for an arbitrary index tuple (antisymmetric extension).
    pub fn get(&self, idx: &[usize]) -> f64 {
        let mut sorted = idx.to_vec();
        let sign = sort_with_sign(&mut sorted);
        if sign == 0 {
            return 0.0;
        }
        self.values.get(&MultiIndex(sorted)).map_or(0.0, |v| sign as f64 * v)
    }

    pub fn get_sorted(&self, idx: &MultiIndex) -> f64 {
        self.values.get(idx).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, f64)> {
        self.values.iter().map(|(k, v)| (k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Σ over increasing tuples of the squared components.
    pub fn norm_sqr(&self) -> f64 {
        self.values.values().map(|v| v * v).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut t = self.clone();
        for v in t.values.values_mut() {
            *v *= s;
        }
        t.prune();
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.side, self.k), (other.side, other.k));
        let mut t = self.clone();
        for (k, v) in &other.values {
            *t.values.entry(k.clone()).or_insert(0.0) += v;
        }
        t.prune();
        t
    }

    /// Dense vector of a grade-1 tensor.
    pub fn to_vec(&self) -> Vec<f64> {
        (1..=self.side).map(|i| self.get(&[i])).collect()
    }

    /// Full antisymmetric matrix of a grade-2 tensor, `A[i][j] = G_{i+1,j+1}`.
    pub fn to_matrix(&self) -> Result<RealMatrix> {
        if self.k != 2 {
            return Err(Error::GradeMismatch {
                expected: 2,
                found: self.k,
            });
        }
        Ok(RealMatrix::from_fn(self.side, |i, j| self.get(&[i + 1, j + 1])))
    }

    /// Grade-2 tensor from the strict upper triangle of `a`.
    pub fn from_matrix(a: &RealMatrix) -> Self {
        let mut t = Self::zeros(a.dim(), 2);
        for i in 0..a.dim() {
            for j in i + 1..a.dim() {
                let v = a[(i, j)];
                if v != 0.0 {
                    t.values.insert(MultiIndex(vec![i + 1, j + 1]), v);
                }
            }
        }
        t
    }

    /// Number of independent components, C(side, k).
    pub fn slot_count(&self) -> usize {
        binomial(self.side, self.k)
    }

    fn prune(&mut self) {
        self.values.retain(|_, v| *v != 0.0);
    }
}

// JSON: {"side":4,"k":2,"entries":[{"idx":[1,2],"val":0.6}]}
#[derive(Serialize, Deserialize)]
struct EntryRepr {
    idx: Vec<usize>,
    val: f64,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    side: usize,
    k: usize,
    #[serde(default)]
    entries: Vec<EntryRepr>,
}

impl Serialize for AntisymTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorRepr {
            side: self.side,
            k: self.k,
            entries: self
                .iter()
                .map(|(i, val)| EntryRepr {
                    idx: i.indices().to_vec(),
                    val,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AntisymTensor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TensorRepr::deserialize(d)?;
        let mut t = AntisymTensor::zeros(repr.side, repr.k);
        for e in repr.entries {
            if e.idx.len() != repr.k {
                return Err(D::Error::custom(format!(
                    "index {:?} does not have grade {}",
                    e.idx, repr.k
                )));
            }
            t.set(&e.idx, e.val).map_err(D::Error::custom)?;
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count_and_order() {
        let c = combinations(4, 2);
        assert_eq!(c.len(), 6);
        assert_eq!(c[0].indices(), &[1, 2]);
        assert_eq!(c[5].indices(), &[3, 4]);
        assert_eq!(combinations(5, 0), vec![MultiIndex::empty()]);
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(combinations(n, k).len(), binomial(n, k));
            }
        }
    }

    #[test]
    fn antisymmetric_extension() {
        let t = AntisymTensor::from_entries(4, 2, &[(&[3, 1], 0.5)]).unwrap();
        assert_eq!(t.get(&[1, 3]), -0.5);
        assert_eq!(t.get(&[3, 1]), 0.5);
        assert_eq!(t.get(&[3, 3]), 0.0);
        let m = t.to_matrix().unwrap();
        assert_eq!(m[(0, 2)], -0.5);
        assert_eq!(AntisymTensor::from_matrix(&m), t);
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(MultiIndex::new(4, vec![2, 1]).is_err());
        assert!(MultiIndex::new(4, vec![1, 5]).is_err());
        assert!(MultiIndex::new(4, vec![0]).is_err());
        let mut t = AntisymTensor::zeros(4, 2);
        assert!(t.set(&[2, 2], 1.0).is_err());
        assert!(t.set(&[1], 1.0).is_err());
    }

    #[test]
    fn permutation_sign() {
        let mut v = [3, 1, 2];
        assert_eq!(sort_with_sign(&mut v), 1);
        let mut v = [2, 1, 3];
        assert_eq!(sort_with_sign(&mut v), -1);
        assert_eq!(v, [1, 2, 3]);
    }

    #[test]
    fn key_format() {
        assert_eq!(MultiIndex::new(4, vec![1, 3]).unwrap().key(2), "2,2,[1,3]");
        assert_eq!(MultiIndex::empty().key(1), "1,0,[]");
    }

    #[test]
    fn json_round_trip() {
        let t = AntisymTensor::from_entries(4, 2, &[(&[2, 1], 0.5), (&[3, 4], -0.25)]).unwrap();
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(
            text,
            r#"{"side":4,"k":2,"entries":[{"idx":[1,2],"val":-0.5},{"idx":[3,4],"val":-0.25}]}"#
        );
        assert_eq!(serde_json::from_str::<AntisymTensor>(&text).unwrap(), t);
    }
}
