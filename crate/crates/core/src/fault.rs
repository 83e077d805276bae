//! Misuse faults: the deterministic aborts the hazard encodings raise.
//!
//! Every fault carries a [`FaultCode`] so a harness can assert which rule
//! fired instead of matching on message text.

use core::fmt;

/// Machine-readable identity of a misuse rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaultCode {
    /// `sys_eof` on a closed descriptor.
    EofAfterClose,
    /// `sys_read` with the cursor already at the end of the file.
    ReadPastEof,
    /// `sys_read` on a closed descriptor.
    ReadAfterClose,
    /// `sys_close` on a closed descriptor.
    DoubleClose,
    /// A template hole with no argument left to fill it.
    TooFewArgs,
    /// A dynamically typed payload failed to narrow to the listener's type.
    WrongPayloadType,
}

impl FaultCode {
    pub const ALL: [FaultCode; 6] = [
        FaultCode::EofAfterClose,
        FaultCode::ReadPastEof,
        FaultCode::ReadAfterClose,
        FaultCode::DoubleClose,
        FaultCode::TooFewArgs,
        FaultCode::WrongPayloadType,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            FaultCode::EofAfterClose => "EOF_AFTER_CLOSE",
            FaultCode::ReadPastEof => "READ_PAST_EOF",
            FaultCode::ReadAfterClose => "READ_AFTER_CLOSE",
            FaultCode::DoubleClose => "DOUBLE_CLOSE",
            FaultCode::TooFewArgs => "TOO_FEW_ARGS",
            FaultCode::WrongPayloadType => "WRONG_PAYLOAD_TYPE",
        }
    }
}

impl fmt::Display for FaultCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A trapped misuse fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fault {
    code: FaultCode,
    detail: &'static str,
}

impl Fault {
    pub const fn new(code: FaultCode) -> Self {
        Fault { code, detail: "" }
    }

    pub const fn with_detail(code: FaultCode, detail: &'static str) -> Self {
        Fault { code, detail }
    }

    pub const fn code(&self) -> FaultCode {
        self.code
    }

    /// Extra context, e.g. the type a payload was expected to have. May be empty.
    pub const fn detail(&self) -> &'static str {
        self.detail
    }
}

impl From<FaultCode> for Fault {
    fn from(code: FaultCode) -> Self {
        Fault::new(code)
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "misuse fault {}", self.code)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

impl core::error::Error for Fault {}
