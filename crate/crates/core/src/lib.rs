pub mod cli;
pub mod counting;
pub mod error;
pub mod hensel;
pub mod modmath;
pub mod oracle;
pub mod padic;

pub use error::{Error, Result, UnsupportedCase};
