pub mod bench;
pub mod color;
pub mod driver;
pub mod error;
pub mod extend;
pub mod gen;
pub mod graph;
pub mod moves;
pub mod oracle;
pub mod paths;
pub mod trace;
