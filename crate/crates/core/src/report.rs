/// One failed axiom with the number of nonzero entries in its residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub count: usize,
}

/// Outcome of an exact check. Passes iff no violations were recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            violations: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records `axiom` as violated when `count` is nonzero.
    pub fn record(&mut self, axiom: impl Into<String>, count: usize) -> &mut Self {
        if count > 0 {
            self.violations.push(Violation {
                axiom: axiom.into(),
                count,
            });
        }
        self
    }

    pub fn require(&mut self, axiom: impl Into<String>, holds: bool) -> &mut Self {
        self.record(axiom, usize::from(!holds))
    }

    /// Folds another report in, prefixing its axiom labels.
    pub fn absorb(&mut self, other: &CheckReport) -> &mut Self {
        for v in &other.violations {
            self.violations.push(Violation {
                axiom: format!("{}.{}", other.name, v.axiom),
                count: v.count,
            });
        }
        self
    }

    pub fn violation(&self, axiom: &str) -> Option<usize> {
        self.violations.iter().find(|v| v.axiom == axiom).map(|v| v.count)
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.pass() {
            return write!(f, "{}: pass", self.name);
        }
        write!(f, "{}: fail (", self.name)?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} x{}", v.axiom, v.count)?;
        }
        write!(f, ")")
    }
}
