use core::fmt;

/// A Stanley depth value.
///
/// The zero module has no Stanley space at all; its depth is reported as
/// [`Sdepth::Infinite`], which compares greater than every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sdepth {
    Finite(usize),
    Infinite,
}

impl Sdepth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Sdepth::Finite(v) => Some(v),
            Sdepth::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Sdepth::Infinite)
    }
}

impl From<usize> for Sdepth {
    fn from(v: usize) -> Self {
        Sdepth::Finite(v)
    }
}

impl fmt::Display for Sdepth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sdepth::Finite(v) => write!(f, "{v}"),
            Sdepth::Infinite => f.write_str("infinite"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_dominates() {
        assert!(Sdepth::Infinite > Sdepth::Finite(usize::MAX));
        assert!(Sdepth::Finite(2) < Sdepth::Finite(3));
        assert_eq!(Sdepth::Finite(4).finite(), Some(4));
        assert_eq!(Sdepth::Infinite.finite(), None);
    }
}
