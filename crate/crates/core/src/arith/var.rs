use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

/// Whether an indeterminate is a plain formal variable or an umbral symbol
/// that must be eliminated by the expectation operator.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    Free,
    Umbral,
}

/// An interned indeterminate. Cheap to copy and compare.
///
/// Ordering follows interning order, not the name; it only has to be a
/// total order for canonical monomials.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

struct Interner {
    entries: Vec<(&'static str, VarKind)>,
    lookup: HashMap<(&'static str, VarKind), u32>,
}

static INTERNER: LazyLock<RwLock<Interner>> = LazyLock::new(|| {
    RwLock::new(Interner {
        entries: Vec::new(),
        lookup: HashMap::new(),
    })
});

impl Var {
    /// Free formal variable named `name`.
    pub fn new(name: &str) -> Var {
        Self::intern(name, VarKind::Free)
    }

    /// Umbral symbol named `name`; distinct from a free variable of the same name.
    pub fn umbral(name: &str) -> Var {
        Self::intern(name, VarKind::Umbral)
    }

    fn intern(name: &str, kind: VarKind) -> Var {
        if let Some(&id) = INTERNER.read().unwrap().lookup.get(&(name, kind)) {
            return Var(id);
        }
        let mut guard = INTERNER.write().unwrap();
        if let Some(&id) = guard.lookup.get(&(name, kind)) {
            return Var(id);
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = guard.entries.len() as u32;
        guard.entries.push((leaked, kind));
        guard.lookup.insert((leaked, kind), id);
        Var(id)
    }

    pub fn name(self) -> &'static str {
        INTERNER.read().unwrap().entries[self.0 as usize].0
    }

    pub fn kind(self) -> VarKind {
        INTERNER.read().unwrap().entries[self.0 as usize].1
    }

    pub fn is_umbral(self) -> bool {
        self.kind() == VarKind::Umbral
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
