#[allow(unused_imports)]
pub(crate) use alloc::{boxed::Box, format, string::String, string::ToString, vec, vec::Vec};
#[allow(unused_imports)]
pub(crate) use num_traits::Float;

pub(crate) use crate::error::{Error, Result};
pub(crate) use num_complex::Complex64 as C64;
