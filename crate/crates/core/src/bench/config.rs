use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dataset::{CsvOptions, MissingPolicy};
use crate::error::{Error, Result};
use crate::init::Method;
use crate::lloyd::KMeansConfig;

/// Output format of a benchmark report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Csv,
    #[serde(alias = "md")]
    Markdown,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

/// One dataset of a benchmark run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetEntry {
    pub path: PathBuf,
    /// Report name; defaults to the file stem.
    #[serde(default)]
    pub name: Option<String>,
    /// Zero-based class column; its distinct-label count is the default K.
    #[serde(default, alias = "class")]
    pub class_column: Option<usize>,
    /// Explicit number of clusters.
    #[serde(default)]
    pub k: Option<usize>,
    /// Whether the first line is a header. Detected when unset.
    #[serde(default)]
    pub header: Option<bool>,
    #[serde(default)]
    pub delimiter: Option<char>,
    #[serde(default)]
    pub missing: MissingPolicy,
}

impl DatasetEntry {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self {
            path: path.into(),
            name: None,
            class_column: None,
            k: None,
            header: None,
            delimiter: None,
            missing: MissingPolicy::Drop,
        }
    }

    pub fn with_class_column(mut self, column: usize) -> Self {
        self.class_column = Some(column);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    /// Parses a command-line dataset spec:
    /// `<path>[,class=<idx>][,k=<K>][,name=<name>][,header=yes|no][,delim=<c>][,missing=drop|strict]`.
    pub fn parse_cli(spec: &str) -> Result<Self> {
        let mut parts = spec.split(',');
        let path = parts.next().unwrap_or_default().trim();
        if path.is_empty() {
            return Err(Error::Config(format!("dataset spec {spec:?} has no path")));
        }
        let mut entry = DatasetEntry::new(path);
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=value, got {part:?}")))?;
            let value = value.trim();
            let bad = || Error::Config(format!("invalid value {value:?} for {key:?}"));
            match key.trim() {
                "class" | "class_column" => {
                    entry.class_column = Some(value.parse().map_err(|_| bad())?)
                }
                "k" => entry.k = Some(value.parse().map_err(|_| bad())?),
                "name" => entry.name = Some(value.to_string()),
                "header" => {
                    entry.header = Some(match value {
                        "yes" | "true" | "1" => true,
                        "no" | "false" | "0" => false,
                        _ => return Err(bad()),
                    })
                }
                "delim" | "delimiter" => {
                    let mut chars = value.chars();
                    entry.delimiter = match (chars.next(), chars.next()) {
                        (Some(c), None) => Some(c),
                        _ if value == "tab" => Some('\t'),
                        _ => return Err(bad()),
                    }
                }
                "missing" => {
                    entry.missing = match value {
                        "drop" => MissingPolicy::Drop,
                        "strict" => MissingPolicy::Strict,
                        _ => return Err(bad()),
                    }
                }
                other => return Err(Error::Config(format!("unknown dataset option {other:?}"))),
            }
        }
        Ok(entry)
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            self.path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| self.path.display().to_string())
        })
    }

    pub(crate) fn delimiter_byte(&self) -> Result<u8> {
        let c = self.delimiter.unwrap_or(',');
        u8::try_from(c).ok().filter(u8::is_ascii).ok_or_else(|| {
            Error::Config(format!("delimiter {c:?} is not a single ASCII character"))
        })
    }

    pub(crate) fn csv_options(&self, has_header: bool) -> Result<CsvOptions> {
        Ok(CsvOptions {
            delimiter: self.delimiter_byte()?,
            has_header,
            class_column: self.class_column,
            missing_policy: self.missing,
        })
    }
}

/// A full benchmark description: datasets x methods, k-means settings,
/// normalization and output format.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub datasets: Vec<DatasetEntry>,
    pub methods: Vec<Method>,
    pub kmeans: KMeansConfig,
    pub normalize: bool,
    pub format: ReportFormat,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            datasets: Vec::new(),
            methods: Method::ALL.to_vec(),
            kmeans: KMeansConfig::default(),
            normalize: true,
            format: ReportFormat::Csv,
        }
    }
}

/// On-disk layout of a config file (TOML).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    methods: Option<Vec<String>>,
    #[serde(default)]
    epsilon: Option<f64>,
    #[serde(default, alias = "max_iters")]
    max_iterations: Option<usize>,
    #[serde(default)]
    normalize: Option<bool>,
    #[serde(default)]
    format: Option<String>,
    #[serde(default, rename = "dataset")]
    datasets: Vec<DatasetEntry>,
}

impl BenchConfig {
    /// Parses a TOML config. Relative dataset paths are resolved against `base_dir`.
    ///
    /// ```toml
    /// methods = ["mm", "kk", "vp", "pp", "ms", "ms+"]
    /// epsilon = 1e-6
    /// max_iterations = 100
    /// normalize = true
    /// format = "md"
    ///
    /// [[dataset]]
    /// path = "iris.csv"
    /// class_column = 4
    /// ```
    pub fn from_toml_str(text: &str, base_dir: &Path) -> Result<Self> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let mut config = BenchConfig::default();
        if let Some(methods) = file.methods {
            config.methods = methods.iter().map(|m| m.parse()).collect::<Result<_>>()?;
        }
        if let Some(e) = file.epsilon {
            config.kmeans.epsilon = e;
        }
        if let Some(m) = file.max_iterations {
            config.kmeans.max_iterations = m;
        }
        if let Some(n) = file.normalize {
            config.normalize = n;
        }
        if let Some(f) = file.format {
            config.format = f.parse()?;
        }
        config.datasets = file
            .datasets
            .into_iter()
            .map(|mut d| {
                if d.path.is_relative() {
                    d.path = base_dir.join(&d.path);
                }
                d
            })
            .collect();
        Ok(config)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&text, path.parent().unwrap_or(Path::new(".")))
    }

    /// Checks everything that can be checked without reading the data.
    pub fn validate(&self) -> Result<()> {
        if self.datasets.is_empty() {
            return Err(Error::Config("no datasets".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::Config("no methods".into()));
        }
        self.kmeans.validate()?;
        for d in &self.datasets {
            if d.k == Some(0) {
                return Err(Error::Config(format!(
                    "{}: K override must be at least 1",
                    d.display_name()
                )));
            }
            if d.k.is_none() && d.class_column.is_none() {
                return Err(Error::Config(format!(
                    "{}: either a class column or an explicit K is required",
                    d.display_name()
                )));
            }
            d.delimiter_byte()?;
        }
        Ok(())
    }
}
