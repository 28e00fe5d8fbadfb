//! Enumerates even diagrams in rectangle frames, the analogue on ordinary
//! orthogonal Grassmannians, and shows that conjugation carries the d x e
//! set onto the e x d set.

use witt_diagrams::{make_diagram, rect_enumerate, render_ascii, Frame, RenderSpec};

fn main() {
    for (rows, cols) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)] {
        let members = rect_enumerate(rows, cols).unwrap();
        let labels: Vec<String> = members.iter().map(|p| p.to_string()).collect();
        println!(
            "{rows} x {cols}: {} members: {}",
            members.len(),
            labels.join(" ")
        );
        let transposed = rect_enumerate(cols, rows).unwrap();
        for member in &members {
            assert!(transposed.contains(&member.conjugate()));
        }
    }
    println!("\nconjugation swaps the frame's sides; the square sets are closed under it:");
    let spec = RenderSpec::default();
    for parts in [&[2_i64][..], &[1, 1]] {
        let diagram = make_diagram(Frame::rectangle(2, 2), parts).unwrap();
        println!("{diagram}");
        print!("{}", render_ascii(&diagram, &spec));
    }
}
