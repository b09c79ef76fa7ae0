//! IO side of the braidlink tools: the JSON catalog format, the SVG braid
//! diagram emitter, and the verification harness behind `braidlink verify`.
//! All the mathematics lives in `braidlink-core`.

pub mod catalog_file;
pub mod render;
pub mod verify;
