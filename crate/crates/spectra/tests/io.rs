use std::io::Write;

use spectra::io::{read_graph6_file, ReadError};
use spectra_core::families::{complete_graph, cycle_graph};
use spectra_core::graph6;

fn file_with(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn triangle_file() {
    let f = file_with("Bw\n");
    let batch = read_graph6_file(f.path(), true).unwrap();
    assert_eq!(batch.graphs, [complete_graph(3).unwrap()]);
    assert!(batch.errors.is_empty());
}

#[test]
fn empty_file() {
    let f = file_with("");
    let batch = read_graph6_file(f.path(), true).unwrap();
    assert!(batch.graphs.is_empty() && batch.errors.is_empty());
}

#[test]
fn corrupt_line_lenient_and_strict() {
    let c5 = graph6::encode(&cycle_graph(5).unwrap());
    let f = file_with(&format!(">>graph6<<Bw\nnot graph6\n{c5}\n"));
    let batch = read_graph6_file(f.path(), false).unwrap();
    assert_eq!(batch.graphs, [complete_graph(3).unwrap(), cycle_graph(5).unwrap()]);
    assert_eq!(batch.errors.len(), 1);
    assert_eq!(batch.errors[0].line, 2);
    match read_graph6_file(f.path(), true) {
        Err(ReadError::Decode(e)) => assert_eq!(e.line, 2),
        other => panic!("{other:?}"),
    }
}

#[test]
fn missing_file() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(
        read_graph6_file(&dir.path().join("absent.g6"), false),
        Err(ReadError::Io(_))
    ));
}
