//! Interned parameter names.
//!
//! Every indeterminate that appears in a polynomial is interned once in a
//! process-wide table.  The fourteen structure parameters are interned first,
//! in their canonical order, so that monomial comparisons (and therefore all
//! rendering) order them the same way the bracket relations list them.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

/// The fourteen structure-parameter names in canonical order.
pub const SYSTEM_PARAMS: [&str; 14] = [
    "lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4", "w1", "w2", "theta1",
    "theta2",
];

struct Table {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

impl Table {
    fn intern(&mut self, name: &str) -> u32 {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), id);
        id
    }
}

static TABLE: LazyLock<RwLock<Table>> = LazyLock::new(|| {
    let mut table = Table { names: Vec::new(), ids: HashMap::new() };
    for name in SYSTEM_PARAMS {
        table.intern(name);
    }
    RwLock::new(table)
});

/// An interned variable.  Variables order by interning rank; the structure
/// parameters always occupy ranks `0..14` in canonical order.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(u32);

impl Var {
    /// Interns `name` (or looks it up) and returns its handle.
    pub fn new(name: &str) -> Var {
        if let Some(&id) = TABLE.read().unwrap().ids.get(name) {
            return Var(id);
        }
        Var(TABLE.write().unwrap().intern(name))
    }

    /// The name this handle was interned under.
    pub fn name(self) -> String {
        TABLE.read().unwrap().names[self.0 as usize].clone()
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Var {
        Var(i as u32)
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_params_come_first_in_canonical_order() {
        for (i, name) in SYSTEM_PARAMS.iter().enumerate() {
            assert_eq!(Var::new(name).index(), i);
        }
    }

    #[test]
    fn interning_is_idempotent() {
        assert_eq!(Var::new("some_fresh_var"), Var::new("some_fresh_var"));
        assert_eq!(Var::new("z2").name(), "z2");
    }

    #[test]
    fn later_names_rank_after_system_params() {
        assert!(Var::new("theta2") < Var::new("user_supplied"));
    }
}
