use alloc::string::String;
use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;

/// A parameter symbol: one of the deformation parameters `h`, `s` or a colour
/// identifier (`lambda`, `mu`, ...).
///
/// Symbols are totally ordered with `h < s < colours`, colours among
/// themselves lexicographically by name. This order is what makes monomials,
/// polynomials and pivoting deterministic, so it is fixed here once.
#[derive(Clone)]
pub struct Symbol {
    name: Arc<str>,
}

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol { name: Arc::from(name) }
    }

    pub fn h() -> Self {
        Symbol::new("h")
    }

    pub fn s() -> Self {
        Symbol::new("s")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_colour(&self) -> bool {
        self.rank() == 2
    }

    fn rank(&self) -> u8 {
        match &*self.name {
            "h" => 0,
            "s" => 1,
            _ => 2,
        }
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Symbol {}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.name.cmp(&other.name))
    }
}

impl core::hash::Hash for Symbol {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state);
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Self {
        Symbol::new(name)
    }
}

impl From<String> for Symbol {
    fn from(name: String) -> Self {
        Symbol::new(&name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_h_s_colours() {
        let h = Symbol::h();
        let s = Symbol::s();
        let eta = Symbol::new("eta");
        let lam = Symbol::new("lambda");
        let mu = Symbol::new("mu");
        assert!(h < s);
        assert!(s < eta);
        assert!(eta < lam);
        assert!(lam < mu);
        // colours sort after s even when lexicographically earlier
        let a = Symbol::new("a");
        assert!(s < a);
        assert!(h < a);
    }
}
