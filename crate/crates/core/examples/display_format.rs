//! Turns normalized model output back into display text.

use slt_core::itn::{contract_numbers_de, restore_display};

fn main() {
    let outputs = [
        "der zug hat fünfundzwanzig minuten verspätung",
        "im jahr zweitausendvierundzwanzig kamen eine million gäste. das ist ein rekord",
        "die inflation liegt bei zwei komma drei prozent",
        "ein hund und eine katze",
    ];
    for text in outputs {
        println!("{text}");
        println!("  numbers: {}", contract_numbers_de(text));
        println!("  display: {}", restore_display(text));
    }
}
