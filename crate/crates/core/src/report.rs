use std::fmt;

/// Outcome of a named verification: how many comparisons ran and which
/// ones failed (the first few are kept verbatim).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

const KEEP: usize = 8;

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            ..Default::default()
        }
    }

    /// Records one comparison; `msg` is only built on failure.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
        ok
    }

    pub fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(format!("{}: {f}", other.name));
            }
        }
    }

    /// Like [`Report::absorb`] but keeps failure messages unprefixed, for
    /// merging sub-checks of the same identity.
    pub fn absorb_quiet(&mut self, other: Report) {
        self.cases += other.cases;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < KEEP {
                self.failures.push(f);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} cases failed; first: {})",
                self.name,
                self.failure_count,
                self.cases,
                self.failures[0]
            )
        }
    }
}
