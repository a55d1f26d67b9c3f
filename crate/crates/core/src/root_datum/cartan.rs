use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Letter of an irreducible Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => TypeLetter::A,
            'B' => TypeLetter::B,
            'C' => TypeLetter::C,
            'D' => TypeLetter::D,
            'E' => TypeLetter::E,
            'F' => TypeLetter::F,
            'G' => TypeLetter::G,
            _ => return None,
        })
    }
}

/// A valid irreducible Cartan type such as `B3` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanSpec {
    letter: TypeLetter,
    rank: usize,
}

impl CartanSpec {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let reason = match letter {
            _ if rank == 0 => Some("rank must be positive"),
            TypeLetter::B | TypeLetter::C if rank < 2 => Some("B and C need rank >= 2"),
            TypeLetter::D if rank < 3 => Some("D needs rank >= 3"),
            TypeLetter::E if !(6..=8).contains(&rank) => Some("E needs rank 6, 7 or 8"),
            TypeLetter::F if rank != 4 => Some("F needs rank 4"),
            TypeLetter::G if rank != 2 => Some("G needs rank 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidCartanType {
                letter: letter.as_char(),
                rank,
                reason,
            }),
            None => Ok(Self { letter, rank }),
        }
    }

    pub fn from_parts(letter: char, rank: usize) -> Result<Self> {
        let l = TypeLetter::from_char(letter).ok_or(Error::InvalidCartanType {
            letter,
            rank,
            reason: "unknown type letter",
        })?;
        Self::new(l, rank)
    }

    pub fn letter(&self) -> TypeLetter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Squared root lengths per Bourbaki node, normalized so short roots have 2.
    pub fn node_norms(&self) -> Vec<i64> {
        let r = self.rank;
        match self.letter {
            TypeLetter::A | TypeLetter::D | TypeLetter::E => vec![2; r],
            TypeLetter::B => (0..r).map(|i| if i + 1 < r { 4 } else { 2 }).collect(),
            TypeLetter::C => (0..r).map(|i| if i + 1 < r { 2 } else { 4 }).collect(),
            TypeLetter::F => vec![4, 4, 2, 2],
            TypeLetter::G => vec![2, 6],
        }
    }

    /// Edges of the Dynkin diagram (0-based, Bourbaki numbering).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank;
        let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.letter {
            TypeLetter::A | TypeLetter::B | TypeLetter::C | TypeLetter::F | TypeLetter::G => chain(r),
            TypeLetter::D => {
                let mut e = chain(r - 1);
                e.push((r - 3, r - 1));
                e
            }
            TypeLetter::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..r - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// `cartan[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let norms = self.node_norms();
        let mut c = vec![vec![0i64; r]; r];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            // (alpha_i, alpha_j) = -max(norm)/2 on a bond
            let ip = -norms[i].max(norms[j]) / 2;
            c[i][j] = 2 * ip / norms[j];
            c[j][i] = 2 * ip / norms[i];
        }
        c
    }

    pub fn exponents(&self) -> Vec<u64> {
        let r = self.rank as u64;
        match self.letter {
            TypeLetter::A => (1..=r).collect(),
            TypeLetter::B | TypeLetter::C => (0..r).map(|i| 2 * i + 1).collect(),
            TypeLetter::D => {
                let mut e: Vec<u64> = (0..r - 1).map(|i| 2 * i + 1).collect();
                e.push(r - 1);
                e.sort_unstable();
                e
            }
            TypeLetter::E => match r {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            TypeLetter::F => vec![1, 5, 7, 11],
            TypeLetter::G => vec![1, 5],
        }
    }

    /// Primes dividing some coefficient of the highest root.
    pub fn bad_primes(&self) -> Vec<u64> {
        match self.letter {
            TypeLetter::A => vec![],
            TypeLetter::B | TypeLetter::C | TypeLetter::D => vec![2],
            TypeLetter::E if self.rank == 8 => vec![2, 3, 5],
            TypeLetter::E | TypeLetter::F | TypeLetter::G => vec![2, 3],
        }
    }
}

impl fmt::Display for CartanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for CartanSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        let letter = chars.next().ok_or_else(|| Error::InvalidArgument("empty Cartan type".into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse Cartan type {s:?}")))?;
        Self::from_parts(letter, rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_types() {
        for (l, r) in [('E', 5), ('F', 3), ('G', 3), ('D', 2), ('B', 1), ('C', 1), ('A', 0), ('H', 3)] {
            assert!(CartanSpec::from_parts(l, r).is_err(), "{l}{r}");
        }
        assert!("E9".parse::<CartanSpec>().is_err());
        assert_eq!("g2".parse::<CartanSpec>().unwrap().to_string(), "G2");
    }

    #[test]
    fn standard_cartan_matrices() {
        let b2 = CartanSpec::from_parts('B', 2).unwrap().cartan_matrix();
        assert_eq!(b2, vec![vec![2, -2], vec![-1, 2]]);
        let c2 = CartanSpec::from_parts('C', 2).unwrap().cartan_matrix();
        assert_eq!(c2, vec![vec![2, -1], vec![-2, 2]]);
        let g2 = CartanSpec::from_parts('G', 2).unwrap().cartan_matrix();
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
        let f4 = CartanSpec::from_parts('F', 4).unwrap().cartan_matrix();
        assert_eq!(f4[1][2], -2);
        assert_eq!(f4[2][1], -1);
        let d4 = CartanSpec::from_parts('D', 4).unwrap().cartan_matrix();
        assert_eq!(d4[1], vec![-1, 2, -1, -1]);
        let e6 = CartanSpec::from_parts('E', 6).unwrap().cartan_matrix();
        assert_eq!(e6[3], vec![0, -1, -1, 2, -1, 0]);
    }
}
