//! German text normalization, stage by stage and end to end.

use slt_core::normalize::{
    expand_dates, expand_numbers, spell_date_de, spell_number_de, AbbrevTable, NormConfig, Normalizer,
};

fn main() -> slt_core::Result<()> {
    let table = AbbrevTable::default();
    let input = "Am 24.12.2023 kostete das Ticket ca. 1.250 CHF, d.h. 3,5% mehr!";

    let abbrev = table.expand(input);
    println!("abbreviations: {abbrev}");
    let dates = expand_dates(&abbrev);
    println!("dates:         {dates}");
    println!("numbers:       {}", expand_numbers(&dates));

    let normalizer = Normalizer::new(table, NormConfig::FULL);
    println!("full pipeline: {}", normalizer.normalize(input));

    println!();
    for n in [0, 1, 17, 21, 101, 1001, 2024, 1_000_000, 2_500_000_001] {
        println!("{n:>13} -> {}", spell_number_de(n)?);
    }
    println!("{:>13} -> {}", "1.8.1291", spell_date_de(1, 8, 1291)?);
    Ok(())
}
