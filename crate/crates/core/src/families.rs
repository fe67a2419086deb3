//! The named matrix families used throughout the crate's tests and examples.

use std::fmt;
use std::str::FromStr;

use crate::digraph::{Cell, Digraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `J - I`: every edge except loops.
    Dn(usize),
    /// `[[I, 1], [1, 0]]` with `I` of order `n - 1`.
    En(usize),
    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0` plus a loop at every vertex.
    Cn(usize),
    /// `[[I, 1], [1, 1]]` with `I` of order `n - 1`.
    Fn(usize),
    /// `k x k` blocks of order `m`: identity on the diagonal, ones above, zeros below.
    Mkm(usize, usize),
    /// The identity digraph.
    In(usize),
    /// Directed path `0 -> 1 -> ... -> n-1` plus a loop at every vertex.
    PathLoops(usize),
    /// A fixed 5-vertex digraph containing `C_4` whose 4-leaf catch
    /// representations all need two branch points.
    Closing5,
}

pub const FAMILY_NAMES: [&str; 8] = ["Dn", "En", "Cn", "Fn", "Mkm", "In", "PathLoops", "Closing5"];

const CLOSING5: [&str; 5] = ["10010", "11001", "01101", "00111", "11111"];

impl Family {
    /// Looks a family up by name and checks the parameter count and range.
    pub fn new(name: &str, params: &[usize]) -> Result<Self> {
        let bad = |message: &str| Error::BadParameter {
            family: name.to_string(),
            message: message.to_string(),
        };
        let one = |min: usize| -> Result<usize> {
            match params {
                [n] if *n >= min => Ok(*n),
                [_] => Err(bad(&format!("order must be at least {min}"))),
                _ => Err(bad("expected exactly one parameter")),
            }
        };
        let family = match name {
            "Dn" => Family::Dn(one(1)?),
            "En" => Family::En(one(2)?),
            "Cn" => Family::Cn(one(1)?),
            "Fn" => Family::Fn(one(2)?),
            "In" => Family::In(one(1)?),
            "PathLoops" => Family::PathLoops(one(1)?),
            "Mkm" => match params {
                [k, m] if *k >= 1 && *m >= 1 => Family::Mkm(*k, *m),
                [_, _] => return Err(bad("k and m must be at least 1")),
                _ => return Err(bad("expected two parameters k m")),
            },
            "Closing5" => {
                if !params.is_empty() {
                    return Err(bad("takes no parameters"));
                }
                Family::Closing5
            }
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Dn(_) => "Dn",
            Family::En(_) => "En",
            Family::Cn(_) => "Cn",
            Family::Fn(_) => "Fn",
            Family::Mkm(..) => "Mkm",
            Family::In(_) => "In",
            Family::PathLoops(_) => "PathLoops",
            Family::Closing5 => "Closing5",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            Family::Dn(n)
            | Family::En(n)
            | Family::Cn(n)
            | Family::Fn(n)
            | Family::In(n)
            | Family::PathLoops(n) => n,
            Family::Mkm(k, m) => k * m,
            Family::Closing5 => 5,
        }
    }

    pub fn digraph(&self) -> Digraph {
        match *self {
            Family::Dn(n) => Digraph::from_fn(n, |u, v| u != v),
            Family::En(n) => Digraph::from_fn(n, |u, v| {
                let last = n - 1;
                match (u == last, v == last) {
                    (false, false) => u == v,
                    (true, true) => false,
                    _ => true,
                }
            }),
            Family::Fn(n) => Digraph::from_fn(n, |u, v| {
                let last = n - 1;
                u == v || u == last || v == last
            }),
            Family::Cn(n) => Digraph::from_fn(n, |u, v| v == u || v == (u + 1) % n),
            Family::Mkm(_, m) => Digraph::from_fn(self.order(), |u, v| {
                let (bu, bv) = (u / m, v / m);
                if bu == bv {
                    u == v
                } else {
                    bu < bv
                }
            }),
            Family::In(n) => Digraph::from_fn(n, |u, v| u == v),
            Family::PathLoops(n) => Digraph::from_fn(n, |u, v| v == u || v == u + 1),
            Family::Closing5 => Digraph::from_fn(5, |u, v| CLOSING5[u].as_bytes()[v] == b'1'),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Mkm(k, m) => write!(f, "Mkm({k},{m})"),
            Family::Closing5 => f.write_str("Closing5"),
            other => write!(f, "{}({})", other.name(), other.order()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `Name`, `Name:a` or `Name:a,b`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| Error::BadParameter {
                    family: name.to_string(),
                    message: format!("`{p}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Family::new(name, &params)
    }
}

/// Builds a family member by name, e.g. `gen_family("Mkm", &[2, 3])`.
pub fn gen_family(name: &str, params: &[usize]) -> Result<Digraph> {
    Ok(Family::new(name, params)?.digraph())
}

/// The zero cells of `C_n` that form an odd cycle in its conflict graph,
/// 0-indexed: `(i, i + ceil(n/2))` for the first `floor(n/2)` rows and
/// `(i, i + 1 - ceil(n/2))` for the remaining rows, columns taken mod `n`.
pub fn cycle_odd_cycle_cells(n: usize) -> Vec<Cell> {
    let half_up = n.div_ceil(2);
    let mut cells = Vec::with_capacity(n);
    // 1-indexed rows as in the usual display, shifted to 0-indexed cells.
    for i in 1..=n / 2 {
        cells.push((i - 1, (i + half_up - 1) % n));
    }
    for i in half_up..=n {
        cells.push((i - 1, (i + 1 - half_up + n - 1) % n));
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(d: &Digraph) -> String {
        d.to_matrix_text()
    }

    #[test]
    fn cycle_orientation() {
        assert_eq!(text(&gen_family("Cn", &[3]).unwrap()), "110\n011\n101\n");
    }

    #[test]
    fn block_matrix_m22() {
        assert_eq!(
            text(&gen_family("Mkm", &[2, 2]).unwrap()),
            "1011\n0111\n0010\n0001\n"
        );
    }

    #[test]
    fn closing_matrix_verbatim() {
        assert_eq!(
            text(&gen_family("Closing5", &[]).unwrap()),
            "10010\n11001\n01101\n00111\n11111\n"
        );
    }

    #[test]
    fn d_n_zeros_on_diagonal_only() {
        for n in 1..7 {
            let d = gen_family("Dn", &[n]).unwrap();
            let zeros: Vec<_> = d.zeros().iter().collect();
            assert_eq!(zeros, (0..n).map(|i| (i, i)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn f_n_and_e_n_differ_in_last_cell() {
        for n in 2..8 {
            let e = gen_family("En", &[n]).unwrap();
            let f = gen_family("Fn", &[n]).unwrap();
            for u in 0..n {
                for v in 0..n {
                    let differs = e.has_edge(u, v) != f.has_edge(u, v);
                    assert_eq!(differs, (u, v) == (n - 1, n - 1));
                }
            }
        }
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(matches!(
            gen_family("Xn", &[3]),
            Err(Error::UnknownFamily(_))
        ));
        assert!(gen_family("Dn", &[0]).is_err());
        assert!(gen_family("Mkm", &[2]).is_err());
        assert!(gen_family("Closing5", &[1]).is_err());
        assert!(gen_family("En", &[1]).is_err());
    }

    #[test]
    fn parse_from_str() {
        assert_eq!("Mkm:2,3".parse::<Family>().unwrap(), Family::Mkm(2, 3));
        assert_eq!("Closing5".parse::<Family>().unwrap(), Family::Closing5);
        assert!("Dn:x".parse::<Family>().is_err());
    }

    #[test]
    fn odd_cycle_cells_are_zeros() {
        for n in [5, 7, 9] {
            let c = Family::Cn(n).digraph();
            let cells = cycle_odd_cycle_cells(n);
            assert_eq!(cells.len(), n);
            for (r, col) in cells {
                assert!(!c.has_edge(r, col), "({r},{col}) is a one in C_{n}");
            }
        }
    }
}
