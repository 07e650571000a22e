use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use super::PolyError;

/// Index of a variable inside a [`Ring`]. The ordinal doubles as the
/// variable's rank in the monomial order: lower index means larger variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub(crate) u32);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Size guards shared by every polynomial of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest total degree any product or power may reach.
    pub max_degree: u32,
    /// Largest number of variables the registry accepts.
    pub max_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 64,
            max_vars: 1 << 16,
        }
    }
}

#[derive(Default)]
struct Registry {
    names: Vec<String>,
    lookup: HashMap<String, u32>,
}

struct RingInner {
    id: u64,
    limits: Limits,
    registry: RwLock<Registry>,
}

/// Variable registry shared by a family of polynomials.
///
/// Variables are append-only and indexed in declaration order, so the
/// graded lexicographic order of existing monomials never changes when new
/// variables are declared. Cloning is cheap.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

impl Ring {
    pub fn new() -> Self {
        Self::with_limits(Limits::default())
    }

    pub fn with_limits(limits: Limits) -> Self {
        Ring(Arc::new(RingInner {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            limits,
            registry: RwLock::new(Registry::default()),
        }))
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    /// Returns the variable called `name`, declaring it if necessary.
    pub fn var(&self, name: &str) -> Result<VarId, PolyError> {
        if let Some(&idx) = self.0.registry.read().unwrap().lookup.get(name) {
            return Ok(VarId(idx));
        }
        if !is_valid_name(name) {
            return Err(PolyError::InvalidVariableName(name.to_string()));
        }
        let mut reg = self.0.registry.write().unwrap();
        if let Some(&idx) = reg.lookup.get(name) {
            return Ok(VarId(idx));
        }
        if reg.names.len() >= self.0.limits.max_vars {
            return Err(PolyError::TooManyVariables(self.0.limits.max_vars));
        }
        let idx = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.lookup.insert(name.to_string(), idx);
        Ok(VarId(idx))
    }

    /// Declares every name in order.
    pub fn vars<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<VarId>, PolyError> {
        names.iter().map(|n| self.var(n.as_ref())).collect()
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.0.registry.read().unwrap().lookup.get(name).map(|&i| VarId(i))
    }

    pub fn name(&self, v: VarId) -> String {
        self.0.registry.read().unwrap().names[v.index()].clone()
    }

    pub fn num_vars(&self) -> usize {
        self.0.registry.read().unwrap().names.len()
    }

    pub(crate) fn with_names<R>(&self, f: impl FnOnce(&[String]) -> R) -> R {
        f(&self.0.registry.read().unwrap().names)
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        self.0.id == other.0.id
    }
}

impl Default for Ring {
    fn default() -> Self {
        Self::new()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring#{}({} vars)", self.0.id, self.num_vars())
    }
}

/// Variable names: a letter followed by letters, digits, `_`, or a
/// balanced `{...}` / `[...]` group holding digits and commas.
pub fn is_valid_name(name: &str) -> bool {
    let bytes = name.as_bytes();
    if bytes.is_empty() || !bytes[0].is_ascii_alphabetic() {
        return false;
    }
    let mut i = 1;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_alphanumeric() || c == b'_' {
            i += 1;
        } else if c == b'{' || c == b'[' {
            let close = if c == b'{' { b'}' } else { b']' };
            let Some(end) = bytes[i + 1..].iter().position(|&b| b == close) else {
                return false;
            };
            let inner = &bytes[i + 1..i + 1 + end];
            if !inner.iter().all(|b| b.is_ascii_digit() || *b == b',') {
                return false;
            }
            i += end + 2;
        } else {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declaration_order_is_index_order() {
        let ring = Ring::new();
        let a = ring.var("x_12").unwrap();
        let b = ring.var("y_{0,1,3}").unwrap();
        assert_eq!(a.index(), 0);
        assert_eq!(b.index(), 1);
        assert_eq!(ring.var("x_12").unwrap(), a);
        assert_eq!(ring.name(b), "y_{0,1,3}");
    }

    #[test]
    fn names_are_validated() {
        assert!(is_valid_name("x_{}"));
        assert!(is_valid_name("x_[1,0,2]"));
        assert!(is_valid_name("t0_1"));
        assert!(!is_valid_name("1x"));
        assert!(!is_valid_name("x y"));
        assert!(!is_valid_name("x_{1"));
        let ring = Ring::new();
        assert!(matches!(ring.var("a+b"), Err(PolyError::InvalidVariableName(_))));
    }

    #[test]
    fn variable_cap_is_enforced() {
        let ring = Ring::with_limits(Limits {
            max_degree: 64,
            max_vars: 2,
        });
        ring.var("a").unwrap();
        ring.var("b").unwrap();
        assert!(matches!(ring.var("c"), Err(PolyError::TooManyVariables(2))));
    }
}
