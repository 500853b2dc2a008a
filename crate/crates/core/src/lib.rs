pub mod diagram;
pub mod exactmath;
pub mod formulas;
pub mod gcc;
pub mod invariants;
pub mod polygon;
pub mod rootsys;
pub mod verify;
