use std::fmt;
use std::sync::OnceLock;

/// Index of a variable in the session registry; lower ids sort first in
/// the term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub usize);

impl Var {
    pub const X: Var = Var(0);
    pub const Y: Var = Var(1);
    pub const T: Var = Var(2);
    pub const XD: Var = Var(3);
    pub const YD: Var = Var(4);
    pub const U: Var = Var(5);
    pub const V: Var = Var(6);
    pub const T1: Var = Var(7);
    pub const T2: Var = Var(8);
    pub const A: Var = Var(9);
    pub const E: Var = Var(10);
    pub const S: Var = Var(11);
}

/// Ordered, duplicate-free list of variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
}

const STANDARD: [&str; 12] = ["x", "y", "t", "xD", "yD", "u", "v", "t1", "t2", "a", "e", "s"];

impl VarRegistry {
    /// Fails on duplicate or malformed names.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, String> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(format!("invalid variable name `{n}`"));
            }
            if out.iter().any(|o| o == n) {
                return Err(format!("duplicate variable `{n}`"));
            }
            out.push(n.to_string());
        }
        Ok(VarRegistry { names: out })
    }

    /// The session registry: x, y, t, xD, yD, u, v, t1, t2, a, e, s.
    pub fn standard() -> &'static VarRegistry {
        static REG: OnceLock<VarRegistry> = OnceLock::new();
        REG.get_or_init(|| VarRegistry::new(&STANDARD).expect("standard names are valid"))
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name).map(Var)
    }

    pub fn name(&self, v: Var) -> String {
        self.names
            .get(v.0)
            .cloned()
            .unwrap_or_else(|| format!("v{}", v.0))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&VarRegistry::standard().name(*self))
    }
}
