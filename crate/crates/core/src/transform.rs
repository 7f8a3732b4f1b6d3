//! Total transformations of the vertex set `{1, .., n}` of a finite path,
//! composed left to right.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A total map on `{1, .., n}`, stored as its image list.
///
/// Entry `x - 1` holds the image of `x`; points and values are 1-based.
/// The text form is the bracketed image list: `"[1,1,2]"` is the map sending
/// 1 and 2 to 1, and 3 to 2.
///
/// Composition acts on the right: `x (f g) = (x f) g`, i.e. `f.compose(&g)`
/// applies `f` first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathTransformation {
    images: Vec<usize>,
}

impl PathTransformation {
    /// Builds a transformation from its image list.
    ///
    /// The list must be nonempty and every value must lie in `1..=n` where
    /// `n` is the list length.
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        if images.is_empty() {
            return Err(Error::EmptyDomain);
        }
        let n = images.len();
        for (idx, &value) in images.iter().enumerate() {
            if value < 1 || value > n {
                return Err(Error::ImageOutOfRange {
                    point: idx + 1,
                    value,
                    degree: n,
                });
            }
        }
        Ok(Self { images })
    }

    /// The identity map on `{1, .., n}`.
    ///
    /// Panics if `n == 0`; the domain must be nonempty.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "the domain of a transformation must be nonempty");
        Self {
            images: (1..=n).collect(),
        }
    }

    /// Number of vertices of the underlying path.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image of the point `x`.
    ///
    /// Panics unless `1 <= x <= n`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(
            x >= 1 && x <= self.degree(),
            "point {x} is outside 1..={}",
            self.degree()
        );
        self.images[x - 1]
    }

    /// The image list, one value per point.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` followed by `other`: `x (f g) = (x f) g`.
    ///
    /// Panics if the degrees differ; composing maps of different paths is a
    /// contract violation, not a recoverable condition.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "can only compose transformations of equal degree"
        );
        Self {
            images: self.images.iter().map(|&v| other.images[v - 1]).collect(),
        }
    }

    /// Sorted distinct image values.
    pub fn image_set(&self) -> Vec<usize> {
        let mut values = self.images.clone();
        values.sort_unstable();
        values.dedup();
        values
    }

    /// Size of the image.
    pub fn rank(&self) -> usize {
        self.image_set().len()
    }

    /// True iff `x <= y` implies `x f <= y f`; checking adjacent points
    /// suffices.
    pub fn is_order_preserving(&self) -> bool {
        self.images.windows(2).all(|w| w[0] <= w[1])
    }

    /// True iff the map is a bijection of `{1, .., n}`.
    pub fn is_bijective(&self) -> bool {
        self.rank() == self.degree()
    }

    /// The partition of `{1, .., n}` into fibers.
    pub fn kernel(&self) -> KernelPartition {
        let mut fibers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (idx, &value) in self.images.iter().enumerate() {
            fibers.entry(value).or_default().push(idx + 1);
        }
        let mut blocks: Vec<Vec<usize>> = fibers.into_values().collect();
        blocks.sort_by_key(|block| block[0]);
        KernelPartition {
            degree: self.degree(),
            blocks,
        }
    }
}

impl fmt::Display for PathTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, value) in self.images.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{value}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for PathTransformation {
    type Err = Error;

    /// Parses the bracketed image list, e.g. `"[1,1,2]"`.
    ///
    /// Whitespace around brackets, commas and numbers is allowed. Errors
    /// carry the byte offset of the offending token.
    fn from_str(text: &str) -> Result<Self, Error> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;

        fn skip_ws(bytes: &[u8], pos: &mut usize) {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        }
        fn fail(position: usize, message: &str) -> Error {
            Error::Parse {
                position,
                message: message.to_string(),
            }
        }

        skip_ws(bytes, &mut pos);
        if pos >= bytes.len() || bytes[pos] != b'[' {
            return Err(fail(pos, "expected '['"));
        }
        pos += 1;
        skip_ws(bytes, &mut pos);
        if pos < bytes.len() && bytes[pos] == b']' {
            return Err(fail(pos, "empty transformation"));
        }

        let mut entries: Vec<(usize, usize)> = Vec::new();
        loop {
            skip_ws(bytes, &mut pos);
            let start = pos;
            if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                return Err(fail(pos, "expected an integer"));
            }
            let mut value = 0usize;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(usize::from(bytes[pos] - b'0')))
                    .ok_or_else(|| fail(start, "integer too large"))?;
                pos += 1;
            }
            entries.push((start, value));
            skip_ws(bytes, &mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(fail(pos, "expected ',' or ']'")),
            }
        }
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(fail(pos, "unexpected trailing input"));
        }

        let n = entries.len();
        for &(start, value) in &entries {
            if value < 1 || value > n {
                return Err(Error::Parse {
                    position: start,
                    message: format!("image {value} is outside 1..={n}"),
                });
            }
        }
        Ok(Self {
            images: entries.into_iter().map(|(_, value)| value).collect(),
        })
    }
}

/// The partition of `{1, .., n}` into the fibers of a transformation.
///
/// Blocks are sorted by minimum element and each block is sorted, so two
/// transformations have the same kernel iff their partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KernelPartition {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

impl KernelPartition {
    /// Number of points partitioned.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The blocks, sorted by minimum element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks; equals the rank of the originating map.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// True iff every block of `self` lies inside one block of `coarser`.
    pub fn refines(&self, coarser: &KernelPartition) -> bool {
        if self.degree != coarser.degree {
            return false;
        }
        let mut block_of = vec![0usize; self.degree + 1];
        for (idx, block) in coarser.blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = idx;
            }
        }
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&x| block_of[x] == block_of[block[0]]))
    }
}

impl fmt::Display for KernelPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, block) in self.blocks.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (jdx, x) in block.iter().enumerate() {
                if jdx > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}
