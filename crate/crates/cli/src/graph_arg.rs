//! Graph arguments: a symbolic name, a graph6 line, or a file holding one.

use anyhow::{anyhow, bail, Context, Result};
use arrowhead::{complete, cycle, matching, parse_graph6, path, petersen, star, Graph, MAX_ORDER};
use std::path::Path;

/// Parses `K5`, `P4`, `C5`, `S3` (the star with three leaves), `2K2` (a
/// matching), `E4` (edgeless) and `Petersen`; an underscore after the letter
/// is allowed (`K_5`). Returns `None` for anything else.
pub fn symbolic(name: &str) -> Option<Result<Graph>> {
    if name.eq_ignore_ascii_case("petersen") {
        return Some(Ok(petersen()));
    }
    let (copies, rest) = match name.find(|c: char| !c.is_ascii_digit()) {
        Some(0) => (None, name),
        Some(i) => (Some(&name[..i]), &name[i..]),
        None => return None,
    };
    let mut chars = rest.chars();
    let letter = chars.next()?;
    let number = chars.as_str().strip_prefix('_').unwrap_or(chars.as_str());
    if number.is_empty() || !number.bytes().all(|b| b.is_ascii_digit()) || !"KPCSE".contains(letter) {
        return None;
    }
    Some(build(copies, letter, number))
}

fn build(copies: Option<&str>, letter: char, number: &str) -> Result<Graph> {
    let n: usize = number.parse().context("vertex count")?;
    if let Some(k) = copies {
        let k: usize = k.parse().context("copy count")?;
        if letter != 'K' || n != 2 {
            bail!("only matchings kK2 are supported as multiples, got {k}{letter}{n}");
        }
        if 2 * k > MAX_ORDER {
            bail!("{k}K2 has more than {MAX_ORDER} vertices");
        }
        return Ok(matching(k));
    }
    let order = if letter == 'S' { n + 1 } else { n };
    if order > MAX_ORDER {
        bail!("{letter}{n} has more than {MAX_ORDER} vertices");
    }
    Ok(match letter {
        'K' => complete(n),
        'P' => path(n),
        'C' if n >= 3 => cycle(n),
        'C' => bail!("cycles need at least 3 vertices"),
        'S' => star(n),
        'E' => Graph::empty(n),
        _ => unreachable!("letter checked by the caller"),
    })
}

/// Resolves a graph argument. Symbolic names win over files, files over graph6.
pub fn parse_graph_arg(arg: &str) -> Result<Graph> {
    if let Some(g) = symbolic(arg) {
        return g;
    }
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let line = text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| anyhow!("{arg} is empty"))?;
        return parse_graph6(line).with_context(|| format!("parsing graph6 in {arg}"));
    }
    parse_graph6(arg).with_context(|| format!("`{arg}` is neither a known graph name, a file, nor valid graph6"))
}
