pub mod exactlin;
pub mod invariant_complex;
pub mod liealg;
pub mod torus_arena;
