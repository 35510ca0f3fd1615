//! CNF formulas, literals, partial assignments, and a DIMACS CNF parser.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mask::{bit, bits, Mask};

/// Largest variable count a formula may have (literal sets are bit masks over
/// `2 * num_vars` literal slots).
pub const MAX_VARS: usize = 32;

/// A literal: a variable index with a polarity. `x` and `~x` are contrary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit {
    var: usize,
    positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Lit {
        Lit {
            var,
            positive: false,
        }
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn negated(&self) -> Lit {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    /// Ground-element index of this literal: `2*var` for positive,
    /// `2*var + 1` for negative.
    pub fn index(&self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    pub fn from_index(index: usize) -> Lit {
        Lit {
            var: index / 2,
            positive: index.is_multiple_of(2),
        }
    }

    pub fn from_dimacs(value: i64, num_vars: usize) -> Result<Lit> {
        if value == 0 {
            return Err(Error::contract("literal 0 is the clause terminator"));
        }
        let var = value.unsigned_abs() as usize - 1;
        if var >= num_vars {
            return Err(Error::contract(format!(
                "variable {} outside declared range 1..={num_vars}",
                value.unsigned_abs()
            )));
        }
        Ok(Lit {
            var,
            positive: value > 0,
        })
    }

    pub fn to_dimacs(&self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

impl std::fmt::Display for Lit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "~x{}", self.var + 1)
        }
    }
}

/// A CNF formula. Clauses are non-empty; duplicate literals within a clause
/// are removed on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Lit>>) -> Result<CnfFormula> {
        if num_vars > MAX_VARS {
            return Err(Error::Capacity {
                what: "CNF variables",
                max: MAX_VARS,
                got: num_vars,
            });
        }
        let mut cleaned = Vec::with_capacity(clauses.len());
        for (i, clause) in clauses.into_iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::contract(format!("clause {} is empty", i + 1)));
            }
            if let Some(l) = clause.iter().find(|l| l.var() >= num_vars) {
                return Err(Error::contract(format!(
                    "clause {} uses {l} outside the declared {num_vars} variables",
                    i + 1
                )));
            }
            let mut c = clause;
            c.sort_unstable();
            c.dedup();
            cleaned.push(c);
        }
        Ok(CnfFormula {
            num_vars,
            clauses: cleaned,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_dimacs().to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

/// A partial assignment as a set of pairwise non-contrary literals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    lits: Mask,
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    /// Adds a literal; inserting the contrary of a present literal is an
    /// error.
    pub fn insert(&mut self, lit: Lit) -> Result<()> {
        if self.lits & bit(lit.negated().index()) != 0 {
            return Err(Error::contract(format!(
                "assignment already contains the contrary of {lit}"
            )));
        }
        self.lits |= bit(lit.index());
        Ok(())
    }

    pub fn contains(&self, lit: Lit) -> bool {
        self.lits & bit(lit.index()) != 0
    }

    pub fn as_mask(&self) -> Mask {
        self.lits
    }

    pub fn iter(&self) -> impl Iterator<Item = Lit> + '_ {
        bits(self.lits).map(Lit::from_index)
    }

    pub fn len(&self) -> usize {
        self.lits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.lits == 0
    }
}

/// Parses DIMACS CNF: a `p cnf n m` header, then clauses as 0-terminated
/// integer runs, possibly spanning lines. `c` lines are comments. Empty
/// clauses, missing terminators, out-of-range variables, and clause-count
/// mismatches are errors.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Lit>> = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    let mut last_line = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate problem line"));
            }
            let mut parts = line.split_whitespace();
            parts.next();
            if parts.next() != Some("cnf") {
                return Err(Error::parse(lineno, "expected `p cnf n m`"));
            }
            let n: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "bad variable count"))?;
            let m: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(lineno, "bad clause count"))?;
            header = Some((n, m));
            continue;
        }
        let (num_vars, _) =
            header.ok_or_else(|| Error::parse(lineno, "clause before problem line"))?;
        for tok in line.split_whitespace() {
            let value: i64 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad literal {tok:?}")))?;
            if value == 0 {
                if current.is_empty() {
                    return Err(Error::parse(lineno, "empty clause"));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                let lit = Lit::from_dimacs(value, num_vars)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
                current.push(lit);
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if !current.is_empty() {
        return Err(Error::parse(last_line, "clause missing its 0 terminator"));
    }
    if clauses.len() != num_clauses {
        return Err(Error::parse(
            0,
            format!(
                "header declares {num_clauses} clauses, found {}",
                clauses.len()
            ),
        ));
    }
    CnfFormula::new(num_vars, clauses)
}

/// Seeded random 3-CNF: each clause picks three distinct variables and
/// random polarities. Deterministic per seed.
pub fn random_3cnf(num_vars: usize, num_clauses: usize, seed: u64) -> Result<CnfFormula> {
    if num_vars < 3 {
        return Err(Error::contract(format!(
            "3-CNF needs at least 3 variables, got {num_vars}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut clauses = Vec::with_capacity(num_clauses);
    for _ in 0..num_clauses {
        let mut vars = Vec::with_capacity(3);
        while vars.len() < 3 {
            let v = rng.random_range(0..num_vars);
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let clause = vars
            .into_iter()
            .map(|v| {
                if rng.random_range(0..2) == 0 {
                    Lit::pos(v)
                } else {
                    Lit::neg(v)
                }
            })
            .collect();
        clauses.push(clause);
    }
    CnfFormula::new(num_vars, clauses)
}
