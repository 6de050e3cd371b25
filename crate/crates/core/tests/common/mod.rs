pub mod oracle;
pub mod pappy_drawings;
