pub mod categories;
pub mod diagram;
pub mod family;
pub mod fusion;
pub mod groups;
pub mod oplusplus;
pub mod wreath;
