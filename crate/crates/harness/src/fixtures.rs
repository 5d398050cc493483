//! Curated instances shipped with the crate.

use crate::instance::InstanceFile;

/// `(file name, contents)` in the canonical curated order.
pub const FIXTURES: [(&str, &str); 7] = [
    ("r_a.json", include_str!("../fixtures/r_a.json")),
    ("r_b.json", include_str!("../fixtures/r_b.json")),
    ("r_c.json", include_str!("../fixtures/r_c.json")),
    ("r_d.json", include_str!("../fixtures/r_d.json")),
    ("m_a.json", include_str!("../fixtures/m_a.json")),
    ("m_b.json", include_str!("../fixtures/m_b.json")),
    ("ra_self.json", include_str!("../fixtures/ra_self.json")),
];

pub fn curated() -> Vec<InstanceFile> {
    FIXTURES
        .iter()
        .map(|(name, text)| InstanceFile::parse_str(text, name).expect("shipped fixtures parse"))
        .collect()
}

pub fn fixture(file_name: &str) -> Option<InstanceFile> {
    FIXTURES
        .iter()
        .find(|(name, _)| *name == file_name)
        .map(|(name, text)| InstanceFile::parse_str(text, name).expect("shipped fixtures parse"))
}
