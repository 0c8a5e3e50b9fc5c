pub mod alloc;
pub mod channel;
pub mod descent;
pub mod error;

pub use error::{Error, Result};
