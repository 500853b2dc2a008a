//! Parsed view of `tables.txt`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::exactmath::{parse_rational, Poly, Rational};

pub(crate) const RAW: &str = include_str!("tables.txt");

#[derive(Debug, Default)]
pub(crate) struct Tables {
    pub levels: HashMap<String, Vec<(u32, usize)>>,
    pub cf: HashMap<(String, usize), Poly>,
    pub ch: HashMap<(String, usize), Poly>,
    pub m_values: HashMap<String, Rational>,
}

fn fail(lineno: usize, line: &str) -> ! {
    panic!("tables.txt line {}: {line:?}", lineno + 1)
}

fn parse(raw: &str) -> Tables {
    let mut t = Tables::default();
    for (lineno, line) in raw.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let kind = words.next().unwrap_or_else(|| fail(lineno, line));
        let ty = words.next().unwrap_or_else(|| fail(lineno, line)).to_string();
        match kind {
            "levels" => {
                let entries = words
                    .map(|w| {
                        let (e, l) = w.split_once('@').unwrap_or_else(|| fail(lineno, line));
                        (e.parse().unwrap_or_else(|_| fail(lineno, line)), l.parse().unwrap_or_else(|_| fail(lineno, line)))
                    })
                    .collect();
                t.levels.insert(ty, entries);
            }
            "cf" | "ch" => {
                let k: usize = words.next().and_then(|w| w.parse().ok()).unwrap_or_else(|| fail(lineno, line));
                if words.next() != Some(":") {
                    fail(lineno, line);
                }
                let coeffs: Vec<String> = words.map(str::to_string).collect();
                let p = Poly::from_strings(&coeffs).unwrap_or_else(|_| fail(lineno, line));
                let map = if kind == "cf" { &mut t.cf } else { &mut t.ch };
                map.insert((ty, k), p);
            }
            "M" => {
                let v = parse_rational(words.next().unwrap_or_else(|| fail(lineno, line))).unwrap_or_else(|_| fail(lineno, line));
                t.m_values.insert(ty, v);
            }
            _ => fail(lineno, line),
        }
    }
    t
}

pub(crate) fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| parse(RAW))
}
