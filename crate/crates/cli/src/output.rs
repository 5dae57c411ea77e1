//! Output schemas and renderers.
//!
//! All integers that may exceed machine words are encoded as decimal strings
//! in JSON; CSV cells are plain decimal. Field order is fixed by the struct
//! declarations, so csv and json encodings are byte-stable for equal inputs.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("output structs always serialize");
    line.push('\n');
    line
}

#[derive(Serialize)]
pub struct StepOut {
    pub value: String,
    pub m: u64,
}

#[derive(Serialize)]
pub struct OrbitOut {
    pub start: String,
    pub steps: Vec<StepOut>,
    pub terminated: bool,
}

impl OrbitOut {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_line(self),
            Format::Csv => {
                let mut out = String::from("index,value,step_size\n");
                for (i, step) in self.steps.iter().enumerate() {
                    out.push_str(&format!("{},{},{}\n", i + 1, step.value, step.m));
                }
                out
            }
            Format::Human => {
                let mut out = format!("start: {}\n", self.start);
                for (i, step) in self.steps.iter().enumerate() {
                    out.push_str(&format!("{:4}: {}  (m={})\n", i + 1, step.value, step.m));
                }
                if self.terminated {
                    out.push_str(&format!("reached 1 after {} steps\n", self.steps.len()));
                } else {
                    out.push_str(&format!(
                        "stopped after {} steps without reaching 1\n",
                        self.steps.len()
                    ));
                }
                out
            }
        }
    }
}

#[derive(Serialize)]
pub struct ConstructOut {
    pub direction: String,
    pub n: u64,
    pub m: u64,
    pub multiplier: String,
    pub start: String,
    pub predicted_final: String,
    pub actual_final: String,
    pub verified: bool,
    pub sequence: Vec<String>,
}

impl ConstructOut {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_line(self),
            Format::Csv => {
                let mut out = String::from("index,value,step_size\n");
                for (i, value) in self.sequence.iter().enumerate() {
                    if i + 1 < self.sequence.len() {
                        out.push_str(&format!("{},{},{}\n", i + 1, value, self.m));
                    } else {
                        out.push_str(&format!("{},{},\n", i + 1, value));
                    }
                }
                out
            }
            Format::Human => {
                let mut out = format!(
                    "direction: {}\nn: {}   step size: {}   multiplier: {}\nstart: {}\n",
                    self.direction, self.n, self.m, self.multiplier, self.start
                );
                out.push_str(&format!("sequence: {}\n", self.sequence.join(" -> ")));
                out.push_str(&format!(
                    "predicted final: {}   actual final: {}   verified: {}\n",
                    self.predicted_final,
                    self.actual_final,
                    if self.verified { "yes" } else { "no" }
                ));
                out
            }
        }
    }
}

/// Wide-format table of increasing runs, one column per multiplier K.
pub struct FigureOut {
    pub k_labels: Vec<String>,
    /// `columns[j][i]` is the i-th value of the run for `k_labels[j]`.
    pub columns: Vec<Vec<String>>,
}

impl FigureOut {
    pub fn render_csv(&self) -> String {
        let mut out = String::from("step");
        for label in &self.k_labels {
            out.push_str(&format!(",k={label}"));
        }
        out.push('\n');
        let rows = self.columns.first().map_or(0, Vec::len);
        for i in 0..rows {
            out.push_str(&format!("{}", i + 1));
            for column in &self.columns {
                out.push_str(&format!(",{}", column[i]));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Serialize)]
pub struct MemberOut {
    pub r: u64,
    pub value: String,
    pub verified: bool,
    /// The member's observed rhythm; null when its orbit is too short.
    pub rhythm: Option<Vec<u64>>,
}

#[derive(Serialize)]
pub struct RhythmOut {
    pub base: String,
    pub n: u64,
    pub rhythm: Vec<u64>,
    #[serde(rename = "D")]
    pub d: String,
    pub members: Vec<MemberOut>,
}

fn join_sizes(sizes: &[u64]) -> String {
    sizes
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl RhythmOut {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_line(self),
            Format::Csv => {
                let mut out = String::from("r,member,verified,rhythm\n");
                for member in &self.members {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        member.r,
                        member.value,
                        member.verified,
                        member.rhythm.as_deref().map(join_sizes).unwrap_or_default()
                    ));
                }
                out
            }
            Format::Human => {
                let mut out = format!(
                    "base: {}\nrhythm (n={}): <{}>\nmodulus D: {}\nmembers:\n",
                    self.base,
                    self.n,
                    join_sizes(&self.rhythm),
                    self.d
                );
                for member in &self.members {
                    let status = match (&member.rhythm, member.verified) {
                        (_, true) => "ok".to_string(),
                        (Some(found), false) => format!("MISMATCH <{}>", join_sizes(found)),
                        (None, false) => "orbit too short".to_string(),
                    };
                    out.push_str(&format!("  r={}: {}  {}\n", member.r, member.value, status));
                }
                out
            }
        }
    }
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub lo: String,
    pub hi: String,
    pub all_converged: bool,
    pub max_excursion: String,
    pub worst_start: String,
    pub total_steps: u64,
    pub first_nonconverged: Option<String>,
}

impl VerifyOut {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_line(self),
            Format::Csv => format!(
                "lo,hi,all_converged,max_excursion,worst_start,total_steps,first_nonconverged\n{},{},{},{},{},{},{}\n",
                self.lo,
                self.hi,
                self.all_converged,
                self.max_excursion,
                self.worst_start,
                self.total_steps,
                self.first_nonconverged.as_deref().unwrap_or_default()
            ),
            Format::Human => {
                let mut out = format!(
                    "range: [{}, {}]\nall converged: {}\nmax excursion: {} (from start {})\ntotal steps: {}\n",
                    self.lo,
                    self.hi,
                    if self.all_converged { "yes" } else { "NO" },
                    self.max_excursion,
                    self.worst_start,
                    self.total_steps
                );
                if let Some(bad) = &self.first_nonconverged {
                    out.push_str(&format!("first non-converged start: {bad}\n"));
                }
                out
            }
        }
    }
}

#[derive(Serialize)]
pub struct CycleOut {
    pub start: String,
    pub cycle_found: bool,
    pub is_trivial: bool,
    pub steps_used: u64,
    pub members: Vec<String>,
}

impl CycleOut {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_line(self),
            Format::Csv => format!(
                "start,cycle_found,is_trivial,steps_used,members\n{},{},{},{},{}\n",
                self.start,
                self.cycle_found,
                self.is_trivial,
                self.steps_used,
                self.members.join(" ")
            ),
            Format::Human => {
                if self.cycle_found {
                    format!(
                        "start: {}\ncycle: {}{}\ndetected after {} steps\n",
                        self.start,
                        self.members.join(" -> "),
                        if self.is_trivial { "  (trivial)" } else { "  (NON-TRIVIAL)" },
                        self.steps_used
                    )
                } else {
                    format!(
                        "start: {}\ninconclusive: no repeated value within {} steps\n",
                        self.start, self.steps_used
                    )
                }
            }
        }
    }
}

#[derive(Serialize)]
pub struct GrowthPointOut {
    pub index: u64,
    pub x: String,
    pub y: String,
}

#[derive(Serialize)]
pub struct CensusOut {
    pub start: String,
    pub horizon: u64,
    pub growth: Vec<GrowthPointOut>,
    pub distinct_y: u64,
}

impl CensusOut {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json_line(self),
            Format::Csv => {
                let mut out = String::from("index,x,y\n");
                for point in &self.growth {
                    out.push_str(&format!("{},{},{}\n", point.index, point.x, point.y));
                }
                out
            }
            Format::Human => {
                let mut out = format!(
                    "start: {}   horizon: {}\ngrowth points: {}   distinct y: {}\n",
                    self.start,
                    self.horizon,
                    self.growth.len(),
                    self.distinct_y
                );
                for point in &self.growth {
                    out.push_str(&format!(
                        "  x_{} = {}   y = {}\n",
                        point.index, point.x, point.y
                    ));
                }
                out
            }
        }
    }
}
