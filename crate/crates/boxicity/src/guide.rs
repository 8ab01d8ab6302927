//! Compiles every fenced code block in the guide chapters, so the book in
//! `book/` cannot drift away from the crate's API.

macro_rules! chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $path))]
        pub struct $name;
    };
}

chapter!(Introduction, "introduction.md");
chapter!(Graphs, "graphs.md");
chapter!(IntervalGraphs, "interval-graphs.md");
chapter!(Covers, "covers.md");
chapter!(Solvers, "solvers.md");
chapter!(Certificates, "certificates.md");
chapter!(BoxRepresentations, "box-representations.md");
chapter!(FoldedCovers, "folded-covers.md");
chapter!(AcyclicColorings, "acyclic-colorings.md");
chapter!(CommandLine, "command-line.md");
