//! Built-in group registry and the textual group-spec grammar.
//!
//! Registered names: `S<n>`, `A<n>`, `D<n>` (dihedral of order 2n), `Q8`,
//! and `C<n>` (cyclic). A group spec is either a registered name or
//! `gens:<cycles>,<cycles>,...` with each generator in cycle notation; the
//! degree of a generator list is inferred from the largest point mentioned.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p] = points[(i + 1) % points.len()];
    }
    Permutation::from_images(images).expect("cycle is a bijection")
}

/// Builds a registered group by name.
pub fn group_by_name(name: &str, cap: usize) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownGroup(name.to_string());
    if name == "Q8" {
        let i = Permutation::parse("(0 2 1 3)(4 6 5 7)", 8).expect("fixed generator");
        let j = Permutation::parse("(0 4 1 5)(2 7 3 6)", 8).expect("fixed generator");
        return FiniteGroup::from_generators(&[i, j], cap);
    }
    if name.len() < 2 || !name.is_char_boundary(1) {
        return Err(unknown());
    }
    let (family, digits) = name.split_at(1);
    let n: usize = digits.parse().map_err(|_| unknown())?;
    match family {
        "S" => {
            if n == 0 {
                return Err(unknown());
            }
            if n == 1 {
                return Ok(FiniteGroup::trivial(1));
            }
            let gens = [cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())];
            FiniteGroup::from_generators(&gens, cap)
        }
        "A" => {
            if n < 3 {
                return Err(unknown());
            }
            let gens: Vec<Permutation> = (0..n - 2).map(|i| cycle(n, &[i, i + 1, i + 2])).collect();
            FiniteGroup::from_generators(&gens, cap)
        }
        "D" => {
            if n < 3 {
                return Err(unknown());
            }
            let rotation = cycle(n, &(0..n).collect::<Vec<_>>());
            let reflection =
                Permutation::from_images((0..n).map(|i| n - 1 - i).collect()).expect("bijection");
            FiniteGroup::from_generators(&[rotation, reflection], cap)
        }
        "C" => {
            if n == 0 {
                return Err(unknown());
            }
            if n == 1 {
                return Ok(FiniteGroup::trivial(1));
            }
            FiniteGroup::from_generators(&[cycle(n, &(0..n).collect::<Vec<_>>())], cap)
        }
        _ => Err(unknown()),
    }
}

/// Resolves a group spec: a registered name or `gens:(0 1),(0 1 2 3)`.
pub fn parse_group_spec(spec: &str, cap: usize) -> Result<FiniteGroup> {
    if let Some(list) = spec.strip_prefix("gens:") {
        let parts = split_generator_list(list)?;
        let degree = parts
            .iter()
            .flat_map(|s| s.chars().collect::<Vec<_>>())
            .fold((String::new(), 0usize), |(mut cur, max), ch| {
                if ch.is_ascii_digit() {
                    cur.push(ch);
                    (cur, max)
                } else {
                    let max = cur.parse::<usize>().map_or(max, |v| max.max(v + 1));
                    (String::new(), max)
                }
            })
            .1
            .max(1);
        let gens = parts
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_generators(&gens, cap)
    } else {
        group_by_name(spec, cap)
    }
}

/// Splits `"(0 1),(2 3)(4 5),e"` at commas that sit outside parentheses.
fn split_generator_list(list: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in list.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.checked_sub(1).ok_or_else(|| Error::Parse {
                    input: list.to_string(),
                    reason: "unbalanced parentheses".to_string(),
                })?;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    parts.push(cur);
    let parts: Vec<String> = parts
        .into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(Error::Parse {
            input: list.to_string(),
            reason: "no generators given".to_string(),
        });
    }
    Ok(parts)
}
