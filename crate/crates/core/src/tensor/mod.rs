//! Dense-tensor and reverse-mode differentiation substrate.
//!
//! Exactly the layer set the encoder/decoder architecture needs, plus the
//! Adam optimizer, global gradient clipping, and a finite-difference
//! gradient checker. Tensors are row-major `H x W x C` with `f32` storage;
//! kernels are generic over the scalar type so the gradient checker can run
//! the same code in `f64`.

mod checkpoint;
mod gradcheck;
mod graph;
mod init;
mod kernels;
mod param;
mod scalar;

pub use checkpoint::{read_checkpoint, write_checkpoint, CHECKPOINT_MAGIC};
pub use gradcheck::{finite_diff_gradcheck, max_rel_error, GradProbeReport};
pub use graph::{forward, forward_backward, Layer, LayerGraph, Padding, Trace};
pub use init::{he_uniform, Initializer};
pub use kernels::{
    avg_pool2, bilinear_resize, bilinear_upsample2, conv2d, fully_connected, layer_norm,
    leaky_relu,
};
pub use param::{adam_step, clip_global_grad_norm, AdamState, ParamStore};
pub use scalar::Scalar;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Dense tensor: a shape and a flat row-major buffer of `f32`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f32>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Tensor {
        Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; shape.iter().product()],
        }
    }

    pub fn from_vec(shape: &[usize], data: Vec<f32>) -> Result<Tensor> {
        let expected: usize = shape.iter().product();
        if data.len() != expected {
            return Err(Error::shape(
                "Tensor::from_vec",
                format!("shape {:?} needs {} values, got {}", shape, expected, data.len()),
            ));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            data,
        })
    }

    pub fn scalar(v: f32) -> Tensor {
        Tensor {
            shape: vec![1],
            data: vec![v],
        }
    }

    pub fn full(shape: &[usize], v: f32) -> Tensor {
        Tensor {
            shape: shape.to_vec(),
            data: vec![v; shape.iter().product()],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f32] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f32] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f32> {
        self.data
    }

    /// Reinterprets the buffer under a new shape of identical volume.
    pub fn reshaped(mut self, shape: &[usize]) -> Result<Tensor> {
        let expected: usize = shape.iter().product();
        if expected != self.data.len() {
            return Err(Error::shape(
                "Tensor::reshaped",
                format!("cannot view {:?} as {:?}", self.shape, shape),
            ));
        }
        self.shape = shape.to_vec();
        Ok(self)
    }

    pub fn fill(&mut self, v: f32) {
        self.data.iter_mut().for_each(|x| *x = v);
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Convert to an `f64` buffer (for the high-precision execution path).
    pub fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&v| v as f64).collect()
    }
}

/// An image observation: `H x W x 3` tensor with values in `[0, 1]`.
pub type ImageTensor = Tensor;
