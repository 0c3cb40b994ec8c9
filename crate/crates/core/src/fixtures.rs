//! Bundled b-file prefixes.

use crate::bfile::BFile;

pub const A006769: &str = include_str!("../fixtures/b006769.txt");
pub const A006720: &str = include_str!("../fixtures/b006720.txt");
pub const A051138: &str = include_str!("../fixtures/b051138.txt");

pub fn load(id: &str) -> Option<BFile> {
    let text = match id {
        "A006769" => A006769,
        "A006720" => A006720,
        "A051138" => A051138,
        _ => return None,
    };
    Some(BFile::parse(text).expect("bundled fixture parses"))
}
