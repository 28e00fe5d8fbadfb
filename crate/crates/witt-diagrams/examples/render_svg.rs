//! Writes the n = 7 diagram set as an SVG gallery, then parses the
//! highlighted segments back out of the file and checks them against the
//! computed inner runs.

use witt_diagrams::{parse_inner_segments, recursive_enumerate, render_svg, RenderSpec};

fn main() {
    let set = recursive_enumerate(7);
    let spec = RenderSpec::default();
    let svg = render_svg(&set, &spec);

    let path = std::env::temp_dir().join("n7_gallery.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("wrote {} ({} bytes)", path.display(), svg.len());

    let parsed = parse_inner_segments(&svg, &spec);
    for (diagram, units) in set.placed().iter().zip(&parsed) {
        let expected: Vec<_> = diagram
            .inner_segment_runs()
            .iter()
            .flat_map(|run| run.unit_segments())
            .collect();
        assert_eq!(units, &expected);
        println!("{diagram}: {} highlighted unit segments", units.len());
    }
    println!("the picture round-trips to the computed inner runs");
}
