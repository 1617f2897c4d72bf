//! Full transformations of `{1, ..., n}`.

use std::fmt;

use crate::error::{Error, Result};

/// A map from `{1..degree}` to itself, stored 0-based.
///
/// Products compose left to right: `f.then(g)` sends `x` to `g(f(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u32>,
}

impl Transformation {
    /// Build from 1-based images, as written in `(2 3 2)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let images = images
            .iter()
            .map(|&x| {
                if x == 0 || x > degree {
                    Err(Error::ImageOutOfRange { image: x, degree })
                } else {
                    Ok((x - 1) as u32)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Transformation { images })
    }

    /// Parse the compact digit form used for labels, e.g. `"232"`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let images = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or(Error::ImageOutOfRange {
                        image: 0,
                        degree: s.len(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(&images)
    }

    pub fn identity(degree: usize) -> Self {
        Transformation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of the 1-based point `x`.
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn rank(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        for &x in &self.images {
            seen[x as usize] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }

    /// Left-to-right product: apply `self` first, then `other`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    /// Label form: digits for degree up to 9, comma separated otherwise.
    pub fn label(&self) -> String {
        if self.degree() <= 9 {
            self.images
                .iter()
                .map(|&x| char::from(b'1' + x as u8))
                .collect()
        } else {
            self.images()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}
