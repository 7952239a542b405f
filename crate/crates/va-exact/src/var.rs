//! Process-wide registry of formal parameter names.
//!
//! Variables are referred to by a small integer id. Ids are only used for
//! internal ordering; anything user-facing (printing, parameter lists) sorts by
//! name so output never depends on registration order.

use std::sync::{OnceLock, RwLock};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub(crate) u32);

fn registry() -> &'static RwLock<Vec<String>> {
    static REG: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(Vec::new()))
}

impl Var {
    /// Intern `name`, returning the same id for the same name.
    pub fn new(name: &str) -> Var {
        {
            let reg = registry().read().unwrap();
            if let Some(i) = reg.iter().position(|n| n == name) {
                return Var(i as u32);
            }
        }
        let mut reg = registry().write().unwrap();
        if let Some(i) = reg.iter().position(|n| n == name) {
            return Var(i as u32);
        }
        reg.push(name.to_string());
        Var((reg.len() - 1) as u32)
    }

    pub fn name(self) -> String {
        registry().read().unwrap()[self.0 as usize].clone()
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}
