//! Exact zeta functions of finite quotients of the building of PGL(3) over a
//! local field: local plane geometry, complex ingestion and validation,
//! Hecke-type operators, loop enumeration and determinant formulas over the
//! integers.

pub mod cli;
pub mod complex;
pub mod enumerate;
pub mod exactalg;
pub mod ingest;
pub mod operators;
pub mod projgeom;
pub mod zeta;
