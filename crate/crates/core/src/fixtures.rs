//! Codes used throughout the documentation and test suites. The files are
//! shipped under `fixtures/` at the repository root.

use crate::code::Z2Z4Code;
use crate::io::CodeFile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    F1,
    F2,
    F4,
    F5,
    F6,
    F7,
    FC1,
    FC2,
    FC3,
}

impl Fixture {
    pub const ALL: [Fixture; 9] = [
        Fixture::F1,
        Fixture::F2,
        Fixture::F4,
        Fixture::F5,
        Fixture::F6,
        Fixture::F7,
        Fixture::FC1,
        Fixture::FC2,
        Fixture::FC3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::F1 => "f1",
            Fixture::F2 => "f2",
            Fixture::F4 => "f4",
            Fixture::F5 => "f5",
            Fixture::F6 => "f6",
            Fixture::F7 => "f7",
            Fixture::FC1 => "fc1",
            Fixture::FC2 => "fc2",
            Fixture::FC3 => "fc3",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Contents of the fixture's code file.
    pub fn source(self) -> &'static str {
        match self {
            Fixture::F1 => include_str!("../../../fixtures/f1.code"),
            Fixture::F2 => include_str!("../../../fixtures/f2.code"),
            Fixture::F4 => include_str!("../../../fixtures/f4.code"),
            Fixture::F5 => include_str!("../../../fixtures/f5.code"),
            Fixture::F6 => include_str!("../../../fixtures/f6.code"),
            Fixture::F7 => include_str!("../../../fixtures/f7.code"),
            Fixture::FC1 => include_str!("../../../fixtures/fc1.code"),
            Fixture::FC2 => include_str!("../../../fixtures/fc2.code"),
            Fixture::FC3 => include_str!("../../../fixtures/fc3.code"),
        }
    }

    /// The rows exactly as written in the file.
    pub fn file(self) -> CodeFile {
        self.source().parse().expect("fixture files are well formed")
    }

    pub fn code(self) -> Z2Z4Code {
        self.file().to_code().expect("fixture rows have the declared shape")
    }
}
