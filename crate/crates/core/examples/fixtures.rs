//! The named fixtures, including truncations of infinite examples.

use ordertop::labcli::fixtures;

fn main() {
    for f in fixtures::fixtures() {
        println!("{:<20} {}  {}", f.name, f.record.encode(), f.note);
        if let Some(banner) = f.banner() {
            println!("{:<20} note: {banner}", "");
        }
    }
}
