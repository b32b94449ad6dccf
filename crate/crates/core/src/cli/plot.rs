//! gnuplot scripts for the CSV files written by [`super::csv`].

use std::fmt::Write as _;
use std::path::Path;

use super::csv::{detect_kind, parse_sweep_csv, CsvKind};

const PREAMBLE: &str = "set datafile separator ','\n\
# header rows start with g, p or c\n\
set datafile commentschars '#gpc'\n\
set encoding utf8\n";

/// Builds a script rendering `csv_path` (whose contents are `csv_text`)
/// to a PNG next to it.
pub fn plot_script(csv_path: &Path, csv_text: &str) -> Result<String, String> {
    let kind = detect_kind(csv_text).ok_or("unrecognized CSV header")?;
    let csv = csv_path.display().to_string().replace('\'', "''");
    let png = csv_path.with_extension("png").display().to_string().replace('\'', "''");
    let mut s = String::new();
    s.push_str(PREAMBLE);
    writeln!(s, "set terminal pngcairo size 900,650").unwrap();
    writeln!(s, "set output '{png}'").unwrap();
    match kind {
        CsvKind::Sweep { .. } => {
            let blocks = parse_sweep_csv(csv_text)?;
            let styles = ["dt 1", "dt 3", "dt 2", "dt 4", "dt 5"];
            writeln!(s, "set xlabel 'γ'\nset ylabel '𝒩'\nset xrange [0:1]\nset key top right").unwrap();
            let series: Vec<String> = blocks
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let file = if i == 0 { format!("'{csv}'") } else { "''".to_string() };
                    format!(
                        "{file} index {i} using 1:2 with lines lw 2 {} title 'p = {}'",
                        styles[i % styles.len()],
                        b.p
                    )
                })
                .collect();
            writeln!(s, "plot {}", series.join(", \\\n     ")).unwrap();
        }
        CsvKind::Grid => {
            writeln!(
                s,
                "set xlabel 'γ'\nset ylabel 'p'\nset zlabel '𝒩' rotate\nset pm3d\nset hidden3d\n\
                 splot '{csv}' using 2:1:3 with pm3d notitle"
            )
            .unwrap();
        }
        CsvKind::Surface => {
            writeln!(
                s,
                "set xlabel 'c2'\nset ylabel 'c3'\nset zlabel '𝒩' rotate\nset pm3d\n\
                 splot '{csv}' using 1:2:3 with pm3d notitle"
            )
            .unwrap();
        }
    }
    Ok(s)
}
