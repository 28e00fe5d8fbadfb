//! Draws every member of the n = 7 diagram set as ASCII art. Inner
//! boundary runs are overdrawn with '=' and 'I'; each has even length,
//! which is exactly the membership condition.

use witt_diagrams::{recursive_enumerate, render_ascii, RenderSpec};

fn main() {
    let spec = RenderSpec::default();
    for diagram in recursive_enumerate(7).placed() {
        println!("{diagram}");
        print!("{}", render_ascii(&diagram, &spec));
        println!();
    }
}
