#![allow(dead_code)]

use std::path::PathBuf;

use scrollforge::document::{Loaded, SpecDocument};

pub fn gallery_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../gallery")
}

/// Every shipped gallery document, sorted by file name.
pub fn gallery_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(gallery_dir())
        .expect("gallery directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

pub fn load(path: &PathBuf) -> Loaded {
    SpecDocument::from_path(path)
        .and_then(|d| d.load())
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn gallery_specs() -> Vec<(String, Loaded)> {
    gallery_files()
        .iter()
        .map(|p| {
            (
                p.file_stem().unwrap().to_string_lossy().into_owned(),
                load(p),
            )
        })
        .collect()
}
