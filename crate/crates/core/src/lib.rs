pub mod error;
pub mod factor;
pub mod poly;
pub mod scalar;
