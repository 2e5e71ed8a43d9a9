use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Yes,
    No,
    Unknown,
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn from_answer(a: testcat_core::Answer) -> Status {
        match a {
            testcat_core::Answer::Yes => Status::Yes,
            testcat_core::Answer::No => Status::No,
            testcat_core::Answer::Unknown => Status::Unknown,
        }
    }

    pub fn of_bool(b: bool) -> Status {
        if b {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn severity(self) -> u8 {
        match self {
            Status::Error => 3,
            Status::No | Status::Fail => 2,
            Status::Unknown => 1,
            Status::Yes | Status::Pass => 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: Value,
    pub timing_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub config: Value,
    pub results: Vec<CheckResult>,
    pub overall: Status,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<InputDigest>, config: Value) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            tool: "testcat".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            inputs,
            config,
            results: Vec::new(),
            overall: Status::Pass,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, detail: Value, timing_ms: u128) {
        self.results.push(CheckResult { name: name.into(), status, detail, timing_ms });
    }

    pub fn finalize(&mut self) {
        let worst = self.results.iter().map(|r| r.status.severity()).max().unwrap_or(0);
        self.overall = match worst {
            3 => Status::Error,
            2 => Status::Fail,
            1 => Status::Unknown,
            _ => Status::Pass,
        };
    }

    /// 0 = all pass, 1 = some failure, 2 = some unknown and no failure,
    /// 3 = input or precondition error.
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Status::Pass | Status::Yes => 0,
            Status::Fail | Status::No => 1,
            Status::Unknown => 2,
            Status::Error => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("testcat {} :: {}\n", self.version, self.command));
        for i in &self.inputs {
            out.push_str(&format!("input {} sha256={}\n", i.name, i.sha256));
        }
        for r in &self.results {
            let status = format!("{:?}", r.status).to_lowercase();
            out.push_str(&format!("[{status:>7}] {}", r.name));
            if !r.detail.is_null() {
                let compact = serde_json::to_string(&r.detail).unwrap_or_default();
                let summary = if compact.len() > 160 {
                    format!("{}…", &compact[..compact.char_indices().take(159).last().map(|(i, c)| i + c.len_utf8()).unwrap_or(0)])
                } else {
                    compact
                };
                out.push_str(&format!("  {summary}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("overall: {:?}\n", self.overall).to_lowercase());
        out
    }
}
