pub mod cli;
pub mod condense;
pub mod doublebox;
pub mod doubledimer;
pub mod hexlattice;
pub mod planepart;
pub mod qseries;
