// Frequency table of the exceptional pairs for small p1.

use cyclogap::survey::{classify, write_records, ExportFormat, SurveyConfig};

pub fn run_example() -> cyclogap::Result<()> {
    let cfg = SurveyConfig::default();
    println!("p1    #V   #V1  #V2  #V3");
    for p1 in [3, 5, 7, 11, 13] {
        let row = classify(p1, &cfg)?;
        let (v, v1, v2, v3) = row.counts();
        println!("{p1:2} {v:5} {v1:5} {v2:4} {v3:4}");
    }
    let row = classify(7, &cfg)?;
    let odd: Vec<_> = row
        .records
        .into_iter()
        .filter(|r| r.g as i64 != r.lambda)
        .collect();
    write_records(&odd, ExportFormat::Csv, std::io::stdout())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
