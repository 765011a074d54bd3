pub mod error;
pub mod mittag_leffler;
pub mod quadrature;
pub mod result;
pub mod special;
pub mod wright;

pub use error::{Error, Result};
pub use mittag_leffler::MLParams;
pub use quadrature::{Decay, QuadResult};
pub use result::{EvalResult, Method};
pub use wright::{WrightKind, WrightParams};

pub const DEFAULT_TOL: f64 = 1e-10;
