//! Minimal dense tensor engine.
//!
//! Row-major contiguous layout; every operation used by the recurrence
//! comes with a hand-written analytic backward, verified against the
//! central-difference oracle in [`finitediff`].

pub mod conv;
pub mod elementwise;
pub mod finitediff;
pub mod io;

use std::fmt;

use num_traits::Float;
use rand::Rng;

use crate::error::{Result, StmnError};

/// On-disk scalar type codes for the tensor file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DType {
    F32 = 0,
    F64 = 1,
}

impl DType {
    pub fn from_code(code: u8) -> Result<Self> {
        match code {
            0 => Ok(DType::F32),
            1 => Ok(DType::F64),
            _ => Err(StmnError::Format(format!("unknown dtype code {code}"))),
        }
    }
}

/// Scalar types the engine runs on. f32 is the training/eval precision,
/// f64 is reserved for gradient-oracle comparisons.
pub trait Scalar: Float + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const DTYPE: DType;
    const BYTES: usize;

    fn cast(v: f64) -> Self;
    fn to_f64(self) -> f64;
    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;
}

impl Scalar for f32 {
    const DTYPE: DType = DType::F32;
    const BYTES: usize = 4;

    fn cast(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f32::from_le_bytes([bytes[0], bytes[1], bytes[2], bytes[3]])
    }
}

impl Scalar for f64 {
    const DTYPE: DType = DType::F64;
    const BYTES: usize = 8;

    fn cast(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f64::from_le_bytes([
            bytes[0], bytes[1], bytes[2], bytes[3], bytes[4], bytes[5], bytes[6], bytes[7],
        ])
    }
}

/// Dense N-dimensional array, row-major contiguous.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    dims: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(dims: Vec<usize>, data: Vec<T>) -> Result<Self> {
        if dims.iter().any(|&d| d == 0) {
            return Err(StmnError::Shape(format!("zero extent in dims {dims:?}")));
        }
        let n: usize = dims.iter().product();
        if n != data.len() {
            return Err(StmnError::Shape(format!(
                "dims {:?} imply {} elements, got {}",
                dims,
                n,
                data.len()
            )));
        }
        Ok(Self { dims, data })
    }

    pub fn zeros(dims: &[usize]) -> Self {
        let n: usize = dims.iter().product();
        Self {
            dims: dims.to_vec(),
            data: vec![T::zero(); n],
        }
    }

    pub fn filled(dims: &[usize], v: T) -> Self {
        let n: usize = dims.iter().product();
        Self {
            dims: dims.to_vec(),
            data: vec![v; n],
        }
    }

    pub fn from_fn(dims: &[usize], mut f: impl FnMut(&[usize]) -> T) -> Self {
        let n: usize = dims.iter().product();
        let mut idx = vec![0usize; dims.len()];
        let mut data = Vec::with_capacity(n);
        for _ in 0..n {
            data.push(f(&idx));
            for ax in (0..dims.len()).rev() {
                idx[ax] += 1;
                if idx[ax] < dims[ax] {
                    break;
                }
                idx[ax] = 0;
            }
        }
        Self {
            dims: dims.to_vec(),
            data,
        }
    }

    pub fn random_uniform(dims: &[usize], lo: f64, hi: f64, rng: &mut impl Rng) -> Self {
        let n: usize = dims.iter().product();
        let data = (0..n)
            .map(|_| T::cast(rng.gen_range(lo..hi)))
            .collect();
        Self {
            dims: dims.to_vec(),
            data,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    /// Row-major strides for the current dims.
    pub fn strides(&self) -> Vec<usize> {
        let mut s = vec![1usize; self.dims.len()];
        for ax in (0..self.dims.len().saturating_sub(1)).rev() {
            s[ax] = s[ax + 1] * self.dims[ax + 1];
        }
        s
    }

    #[inline]
    pub fn at3(&self, h: usize, w: usize, d: usize) -> T {
        debug_assert_eq!(self.dims.len(), 3);
        self.data[(h * self.dims[1] + w) * self.dims[2] + d]
    }

    #[inline]
    pub fn set3(&mut self, h: usize, w: usize, d: usize, v: T) {
        debug_assert_eq!(self.dims.len(), 3);
        self.data[(h * self.dims[1] + w) * self.dims[2] + d] = v;
    }

    #[inline]
    pub fn at4(&self, a: usize, b: usize, c: usize, d: usize) -> T {
        debug_assert_eq!(self.dims.len(), 4);
        self.data[((a * self.dims[1] + b) * self.dims[2] + c) * self.dims[3] + d]
    }

    #[inline]
    pub fn set4(&mut self, a: usize, b: usize, c: usize, d: usize, v: T) {
        debug_assert_eq!(self.dims.len(), 4);
        self.data[((a * self.dims[1] + b) * self.dims[2] + c) * self.dims[3] + d] = v;
    }

    pub fn same_dims(&self, other: &Self) -> bool {
        self.dims == other.dims
    }

    /// Errors if any value is NaN or infinite. Ops call this on their
    /// outputs so non-finite values never escape an op boundary.
    pub fn check_finite(&self, ctx: &str) -> Result<()> {
        for &v in &self.data {
            if !v.is_finite() {
                return Err(StmnError::Contract(format!(
                    "non-finite value {v:?} in {ctx}"
                )));
            }
        }
        Ok(())
    }

    pub fn cast_to<U: Scalar>(&self) -> Tensor<U> {
        Tensor {
            dims: self.dims.clone(),
            data: self.data.iter().map(|&v| U::cast(v.to_f64())).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Tensor {
            dims: self.dims.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn sum(&self) -> T {
        let mut acc = T::zero();
        for &v in &self.data {
            acc = acc + v;
        }
        acc
    }

    pub fn max_abs(&self) -> T {
        let mut m = T::zero();
        for &v in &self.data {
            m = m.max(v.abs());
        }
        m
    }
}

pub(crate) fn require_same_dims<T: Scalar>(a: &Tensor<T>, b: &Tensor<T>, op: &str) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(StmnError::Shape(format!(
            "{op}: dims {:?} vs {:?}",
            a.dims(),
            b.dims()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strides_are_row_major() {
        let t = Tensor::<f32>::zeros(&[2, 3, 4]);
        assert_eq!(t.strides(), vec![12, 4, 1]);
        assert_eq!(t.len(), 24);
    }

    #[test]
    fn new_rejects_length_mismatch() {
        assert!(Tensor::<f32>::new(vec![2, 2], vec![0.0; 3]).is_err());
        assert!(Tensor::<f32>::new(vec![2, 0], vec![]).is_err());
    }

    #[test]
    fn from_fn_visits_row_major() {
        let t = Tensor::<f64>::from_fn(&[2, 2], |ix| (ix[0] * 10 + ix[1]) as f64);
        assert_eq!(t.data(), &[0.0, 1.0, 10.0, 11.0]);
    }

    #[test]
    fn check_finite_catches_nan() {
        let mut t = Tensor::<f32>::zeros(&[2]);
        t.data_mut()[1] = f32::NAN;
        assert!(t.check_finite("test").is_err());
    }
}
