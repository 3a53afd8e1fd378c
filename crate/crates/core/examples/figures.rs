//! Writes the three figure datasets as CSV and SVG into a scratch directory.

use clifford_bloch::domains::{figure_data, Figure, FigureOptions};

fn main() -> clifford_bloch::Result<()> {
    let dir = std::env::temp_dir().join("clifford-bloch-figures");
    std::fs::create_dir_all(&dir)?;
    for (which, resolution) in [(Figure::Fig1, 101), (Figure::Fig2, 60), (Figure::Fig3, 60)] {
        let data = figure_data(which, resolution, FigureOptions::default())?;
        let stem = format!("{which:?}").to_lowercase();
        std::fs::write(dir.join(format!("{stem}.csv")), data.to_csv())?;
        std::fs::write(dir.join(format!("{stem}.svg")), data.to_svg())?;
        println!("{stem}: {} rows", data.row_count());
    }
    println!("written to {}", dir.display());
    Ok(())
}
