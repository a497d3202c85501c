//! Small reference frameworks used across tests, docs and the demo.

use crate::framework::ArgumentationFramework;

/// Eight arguments `a..h` with two self-attackers (`f`, `g`) and no stable
/// extension.
pub const EXAMPLE1_APX: &str = "\
arg(a).
arg(b).
arg(c).
arg(d).
arg(e).
arg(f).
arg(g).
arg(h).
att(a,b).
att(b,a).
att(b,c).
att(c,d).
att(d,e).
att(d,g).
att(e,c).
att(e,f).
att(f,f).
att(g,g).
att(g,h).
att(h,g).
";

pub fn example1() -> ArgumentationFramework {
    crate::io::parse_apx(EXAMPLE1_APX).expect("built-in example parses")
}
