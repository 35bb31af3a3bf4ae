pub mod affine;
pub mod brandt;
pub mod sgp;
pub mod ranks;
pub mod verify;
