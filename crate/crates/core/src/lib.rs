pub mod channel;
pub mod code;
pub mod decode;
pub mod error;
pub mod exec;
pub mod field;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
