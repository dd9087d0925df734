pub mod abgrp;
pub mod burncalc;
pub mod error;
pub mod grp;
pub mod io;
pub mod models;
pub mod symb;
pub mod zlat;

pub use error::{Error, Result};
