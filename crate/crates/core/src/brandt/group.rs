use crate::sgp::FiniteSemigroup;

use super::{BrandtError, Permutation};

/// Largest degree for which [`symmetric_group`] builds a full table.
pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and inverses.
    pub fn new(mul: Vec<usize>, labels: Vec<String>) -> Result<Self, BrandtError> {
        let order = labels.len();
        let not_group = |why: &str| BrandtError::NotAGroup(why.to_string());
        if order == 0 {
            return Err(not_group("empty"));
        }
        if mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(not_group("malformed table"));
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(not_group("not associative"));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| not_group("no identity"))?;
        let inv = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == identity && at(b, a) == identity)
                    .ok_or_else(|| not_group("missing inverse"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupTable {
            order,
            mul,
            inv,
            identity,
            labels,
        })
    }

    pub fn trivial() -> Self {
        GroupTable {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            identity: 0,
            labels: vec!["e".to_string()],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership vector of the subgroup generated by `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        member
    }

    pub fn is_generated_by(&self, gens: &[usize]) -> bool {
        gens.iter().all(|&g| g < self.order) && self.generated_by(gens).iter().all(|&b| b)
    }

    /// The group viewed as a semigroup, elements in table order.
    pub fn as_semigroup(&self) -> FiniteSemigroup {
        let table = self.mul.iter().map(|&x| x as u32).collect();
        FiniteSemigroup::from_table(table, self.labels.clone(), crate::sgp::AssociativityCheck::Skip)
            .expect("group tables are valid semigroup tables")
    }
}

/// Sₙ with elements in lexicographic order of image lists (identity first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricGroup {
    degree: usize,
    perms: Vec<Permutation>,
    table: GroupTable,
}

pub fn symmetric_group(n: usize) -> Result<SymmetricGroup, BrandtError> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(BrandtError::UnsupportedDegree(n));
    }
    let perms = Permutation::all(n);
    let order = perms.len();
    let mut mul = Vec::with_capacity(order * order);
    for a in &perms {
        for b in &perms {
            let ab = a.then(b)?;
            mul.push(perms.binary_search(&ab).expect("Sₙ is closed"));
        }
    }
    let labels = perms.iter().map(ToString::to_string).collect();
    Ok(SymmetricGroup {
        degree: n,
        table: GroupTable::new(mul, labels)?,
        perms,
    })
}

impl SymmetricGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn perm(&self, g: usize) -> &Permutation {
        &self.perms[g]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.perms.binary_search(p).ok()
    }
}
