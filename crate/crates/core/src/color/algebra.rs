//! Finite color algebras: generators `x_1..x_n` whose pairwise products are a
//! generator or zero.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorAlgebra {
    name: String,
    names: Vec<String>,
    /// 0-based product table; `None` is zero.
    table: Vec<Vec<Option<usize>>>,
}

impl ColorAlgebra {
    /// Checks closure, commutativity and associativity (zero absorbing).
    /// Error messages use 1-based generator indices.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Validation("color algebra needs at least one generator".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {} of the product table has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(&Some(k)) = row.iter().find(|e| matches!(e, Some(k) if *k >= n)) {
                return Err(Error::Validation(format!(
                    "row {} refers to generator {}, only {n} exist",
                    i + 1,
                    k + 1
                )));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if table[i][j] != table[j][i] {
                    return Err(Error::Validation(format!(
                        "not commutative: x{0}·x{1} ≠ x{1}·x{0}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mul = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(a), Some(b)) => table[a][b],
            _ => None,
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = mul(table[i][j], Some(k));
                    let right = mul(Some(i), table[j][k]);
                    if left != right {
                        return Err(Error::Validation(format!(
                            "not associative at witness (x{}, x{}, x{}): (x{0}·x{1})·x{2} ≠ x{0}·(x{1}·x{2})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Ok(Self {
            name: name.into(),
            names,
            table,
        })
    }

    /// `A(n)`: orthogonal idempotents, `x_i² = x_i` and `x_i x_j = 0`.
    pub fn orthogonal(n: usize) -> Result<Self> {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i == j).then_some(i)).collect())
            .collect();
        Self::from_table(format!("an:{n}"), table)
    }

    /// Integral group ring of `Z/o_1 × … × Z/o_r`; element `(g_1, …, g_r)` has
    /// index `g_1 + o_1 (g_2 + o_2 (…))`, so index 0 is the identity.
    pub fn group_ring(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::Validation("group orders must be positive".into()));
        }
        let n: usize = orders.iter().product();
        let digits = |mut x: usize| {
            orders
                .iter()
                .map(|&o| {
                    let d = x % o;
                    x /= o;
                    d
                })
                .collect::<Vec<_>>()
        };
        let index = |ds: &[usize]| ds.iter().zip(orders).rev().fold(0, |acc, (&d, &o)| acc * o + d);
        let table = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let sum: Vec<usize> = da
                            .iter()
                            .zip(digits(b))
                            .zip(orders)
                            .map(|((x, y), o)| (x + y) % o)
                            .collect();
                        Some(index(&sum))
                    })
                    .collect()
            })
            .collect();
        let name = orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(",");
        Self::from_table(format!("group:{name}"), table)
    }

    /// Group ring of the Klein four-group with colors `1, a, b, c`.
    pub fn klein4() -> Self {
        let mut k = Self::group_ring(&[2, 2]).expect("valid group");
        k.name = "klein4".into();
        k.names = ["1", "a", "b", "c"].map(String::from).to_vec();
        k
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        let mut c = Self::group_ring(&[n])?;
        c.name = format!("cyclic:{n}");
        Ok(c)
    }

    /// `an:n`, `klein4`, `cyclic:n`, or `group:o1,o2,…`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let bad = || Error::Validation(format!("unknown algebra `{spec}`"));
        let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        match spec.split_once(':') {
            None if spec == "klein4" => Ok(Self::klein4()),
            Some(("an", n)) => Self::orthogonal(number(n)?),
            Some(("cyclic", n)) => Self::cyclic(number(n)?),
            Some(("group", orders)) => {
                let orders = orders.split(',').map(number).collect::<Result<Vec<_>>>()?;
                Self::group_ring(&orders)
            }
            _ => Err(bad()),
        }
    }

    /// Whitespace-separated `n` followed by `n²` entries, row-major; entries
    /// are 1-based generator indices or `0` for zero.
    pub fn parse_table(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(ln, line)| {
                let line = line.split('#').next().unwrap_or("");
                line.split_whitespace().map(move |t| (ln + 1, t))
            });
        let parse = |(line, t): (usize, &str)| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found `{t}`"),
            })
        };
        let n = parse(tokens.next().ok_or(Error::Parse {
            line: 1,
            message: "empty table".into(),
        })?)?;
        let mut table = vec![vec![None; n]; n];
        for (k, cell) in table.iter_mut().flatten().enumerate() {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: text.lines().count().max(1),
                message: format!("table ends after {k} of {} entries", n * n),
            })?;
            let (line, _) = tok;
            let v = parse(tok)?;
            if v > n {
                return Err(Error::Parse {
                    line,
                    message: format!("entry {v} exceeds generator count {n}"),
                });
            }
            *cell = v.checked_sub(1);
        }
        if let Some((line, t)) = tokens.next() {
            return Err(Error::Parse {
                line,
                message: format!("unexpected trailing entry `{t}`"),
            });
        }
        Self::from_table(name, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn color_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<Option<usize>>] {
        &self.table
    }

    /// Whether some product is zero.
    pub fn has_zero_products(&self) -> bool {
        self.table.iter().flatten().any(Option::is_none)
    }
}

impl fmt::Display for ColorAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size())?;
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|c| c.map_or(0, |k| k + 1).to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_two() {
        let a = ColorAlgebra::orthogonal(2).unwrap();
        assert_eq!(a.table(), &[vec![Some(0), None], vec![None, Some(1)]]);
    }

    #[test]
    fn klein_table() {
        let k = ColorAlgebra::klein4();
        let (one, a, b, c) = (0, 1, 2, 3);
        for x in 0..4 {
            assert_eq!(k.product(one, x), Some(x));
            assert_eq!(k.product(x, x), Some(one));
        }
        assert_eq!(k.product(a, b), Some(c));
        assert_eq!(k.product(a, c), Some(b));
        assert_eq!(k.product(b, c), Some(a));
        assert_eq!(k.color_name(c), "c");
        assert!(!k.has_zero_products());
    }

    #[test]
    fn cyclic_table() {
        let z4 = ColorAlgebra::from_spec("cyclic:4").unwrap();
        assert_eq!(z4.product(3, 2), Some(1));
        assert_eq!(ColorAlgebra::from_spec("group:2,2").unwrap().table(), ColorAlgebra::klein4().table());
    }

    #[test]
    fn non_associative_witness() {
        // x1·x2 = x3, x3·x3 = x1, everything else zero: (x1x2)x3 = x1, x1(x2x3) = 0
        let text = "3\n0 3 0\n3 0 0\n0 0 1\n";
        let err = ColorAlgebra::parse_table("bad", text).unwrap_err();
        assert!(err.to_string().contains("not associative at witness (x1, x2, x3)"), "{err}");
    }

    #[test]
    fn non_commutative_rejected() {
        let err = ColorAlgebra::parse_table("bad", "2\n1 2\n1 2\n").unwrap_err();
        assert!(err.to_string().contains("not commutative"), "{err}");
    }

    #[test]
    fn table_round_trip() {
        let a = ColorAlgebra::klein4();
        let back = ColorAlgebra::parse_table("k", &a.to_string()).unwrap();
        assert_eq!(back.table(), a.table());
    }

    #[test]
    fn table_parse_errors() {
        assert!(matches!(ColorAlgebra::parse_table("t", "2\n1 0\n0"), Err(Error::Parse { .. })));
        assert!(matches!(ColorAlgebra::parse_table("t", "1\n2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(ColorAlgebra::parse_table("t", "1\n1 1"), Err(Error::Parse { .. })));
        assert!(matches!(ColorAlgebra::from_spec("an:x"), Err(Error::Validation(_))));
        assert!(ColorAlgebra::from_spec("an:0").is_err());
    }
}
