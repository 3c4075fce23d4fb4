//! Line-oriented graph6 input.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use spectra_core::error::Graph6Error;
use spectra_core::{graph6, Graph};
use thiserror::Error;

/// A line that failed to decode.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {error}")]
pub struct LineError {
    /// 1-based line number.
    pub line: usize,
    pub error: Graph6Error,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("read failed: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Decode(#[from] LineError),
}

/// Decodes graphs from a reader, one per line, in input order.
///
/// Blank lines are skipped. In strict mode the first malformed line is
/// yielded as an error and ends the stream; otherwise it is recorded in
/// [`Graph6Stream::errors`] and reading continues.
pub struct Graph6Stream<R> {
    lines: io::Lines<R>,
    line: usize,
    strict: bool,
    done: bool,
    errors: Vec<LineError>,
}

pub fn read_graph6_stream<R: BufRead>(reader: R, strict: bool) -> Graph6Stream<R> {
    Graph6Stream {
        lines: reader.lines(),
        line: 0,
        strict,
        done: false,
        errors: Vec::new(),
    }
}

impl<R> Graph6Stream<R> {
    /// Lines skipped so far in lenient mode.
    pub fn errors(&self) -> &[LineError] {
        &self.errors
    }

    pub fn into_errors(self) -> Vec<LineError> {
        self.errors
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph, ReadError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let text = match self.lines.next()? {
                Ok(t) => t,
                Err(e) => {
                    self.done = true;
                    return Some(Err(e.into()));
                }
            };
            self.line += 1;
            if text.trim().is_empty() {
                continue;
            }
            match graph6::decode(text.trim_end()) {
                Ok(g) => return Some(Ok(g)),
                Err(error) => {
                    let err = LineError { line: self.line, error };
                    if self.strict {
                        self.done = true;
                        return Some(Err(err.into()));
                    }
                    self.errors.push(err);
                }
            }
        }
        None
    }
}

/// Everything decodable from a file, with the skipped lines.
#[derive(Debug, Clone, Default)]
pub struct Graph6Batch {
    pub graphs: Vec<Graph>,
    pub errors: Vec<LineError>,
}

pub fn read_graph6_file(path: &Path, strict: bool) -> Result<Graph6Batch, ReadError> {
    let mut stream = read_graph6_stream(BufReader::new(File::open(path)?), strict);
    let graphs = stream.by_ref().collect::<Result<Vec<_>, _>>()?;
    Ok(Graph6Batch {
        graphs,
        errors: stream.into_errors(),
    })
}
