use serde::{Deserialize, Serialize};

use super::SectionError;

/// `V_{s,r}`: the locus in `P^{r-1} x P^{r-1}` cut by `Σ_{s<i<=r} z_i w_i = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "ShapeRepr", try_from = "ShapeRepr")]
pub struct VShape {
    s: usize,
    r: usize,
}

impl VShape {
    pub fn new(s: usize, r: usize) -> Result<Self, SectionError> {
        if s > r || r == 0 {
            return Err(SectionError::BadShape { s, r });
        }
        Ok(VShape { s, r })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `-1` for the empty shape `(0, 1)`.
    pub fn dim(&self) -> i64 {
        let r = self.r as i64;
        match (self.s, self.r) {
            (0, 1) => -1,
            (s, r_) if s == r_ => 2 * r - 2,
            _ => 2 * r - 3,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.dim() < 0
    }
}

pub fn v_shape_dim(s: usize, r: usize) -> Result<i64, SectionError> {
    VShape::new(s, r).map(|v| v.dim())
}

#[derive(Serialize, Deserialize)]
struct ShapeRepr {
    s: usize,
    r: usize,
    dim: i64,
}

impl From<VShape> for ShapeRepr {
    fn from(v: VShape) -> Self {
        ShapeRepr {
            s: v.s,
            r: v.r,
            dim: v.dim(),
        }
    }
}

impl TryFrom<ShapeRepr> for VShape {
    type Error = String;

    fn try_from(x: ShapeRepr) -> Result<Self, String> {
        let v = VShape::new(x.s, x.r).map_err(|e| e.to_string())?;
        if v.dim() != x.dim {
            return Err(format!(
                "dim {} does not match (s, r) = ({}, {})",
                x.dim, x.s, x.r
            ));
        }
        Ok(v)
    }
}
