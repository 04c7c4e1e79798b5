pub mod cli;
pub mod facerules;
pub mod foldverify;
pub mod planegeom;
pub mod scalarfield;
pub mod solidbuilder;
