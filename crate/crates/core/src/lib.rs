//! Video object detection with an aligned spatial-temporal memory.
//!
//! The crate is organized around a small dense-tensor engine with
//! hand-written forward/backward kernels ([`tensor`]), the recurrent
//! memory cell and its ConvGRU baseline ([`stmm`]), correlation-based
//! memory alignment ([`matchtrans`]), a proposal/ROI detection head
//! ([`head`]), temporal detection linking ([`seqnms`]), a deterministic
//! synthetic-video generator ([`synthdata`]), and the training and
//! evaluation harness ([`harness`]).

pub mod checkpoint;
pub mod error;
pub mod harness;
pub mod head;
pub mod map;
pub mod matchtrans;
pub mod model;
pub mod seqnms;
pub mod stmm;
pub mod synthdata;
pub mod tensor;

pub use error::{Result, StmnError};
pub use tensor::Tensor;
