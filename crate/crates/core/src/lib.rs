pub mod algebra;
pub mod bignum;
pub mod chow;
pub mod io;
pub mod lab;
pub mod section;
