use std::fs;
use std::path::PathBuf;

use bqlong::algebra::table_io::read_tables;
use bqlong::algebra::{alexander_biquandle, alexander_tables, wada_tables, FiniteGroup};
use bqlong::{FiniteBiquandle, SwitchTables};
use clap::Args;

use crate::CliError;

/// Exactly one of these selects the biquandle.
#[derive(Debug, Clone, Default, Args)]
#[group(multiple = false)]
pub struct SourceArgs {
    /// Read operation tables from a file
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,

    /// Wada biquandle on the symmetric group S_K (1..=7)
    #[arg(long, value_name = "K")]
    pub wada_sn: Option<usize>,

    /// Wada biquandle on the cyclic group Z/N
    #[arg(long, value_name = "N")]
    pub wada_zn: Option<usize>,

    /// Alexander biquandle on Z/N with parameters LAMBDA and MU
    #[arg(long, value_name = "N,LAMBDA,MU", allow_hyphen_values = true)]
    pub alexander: Option<String>,
}

impl SourceArgs {
    pub fn is_given(&self) -> bool {
        self.table.is_some()
            || self.wada_sn.is_some()
            || self.wada_zn.is_some()
            || self.alexander.is_some()
    }
}

/// Unverified tables plus what is needed to name elements.
pub struct LoadedTables {
    pub label: String,
    pub tables: SwitchTables,
    pub names: Option<Vec<String>>,
    pub group: Option<FiniteGroup>,
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_alexander(spec: &str) -> Result<(u64, i64, i64), CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let bad = || CliError::Usage(format!("--alexander expects N,LAMBDA,MU, got {spec:?}"));
    let [n, l, m] = parts.as_slice() else {
        return Err(bad());
    };
    Ok((
        n.parse().map_err(|_| bad())?,
        l.parse().map_err(|_| bad())?,
        m.parse().map_err(|_| bad())?,
    ))
}

fn group_tables(label: String, group: FiniteGroup) -> LoadedTables {
    LoadedTables {
        label,
        tables: wada_tables(&group),
        names: Some(group.names().to_vec()),
        group: Some(group),
    }
}

pub fn load_tables(source: &SourceArgs) -> Result<LoadedTables, CliError> {
    if let Some(path) = &source.table {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let file =
            read_tables(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        return Ok(LoadedTables {
            label: path.display().to_string(),
            tables: file.tables,
            names: file.names,
            group: None,
        });
    }
    if let Some(k) = source.wada_sn {
        let group = FiniteGroup::symmetric(k).map_err(usage)?;
        return Ok(group_tables(format!("wada S{k}"), group));
    }
    if let Some(n) = source.wada_zn {
        let group = FiniteGroup::cyclic(n).map_err(usage)?;
        return Ok(group_tables(format!("wada Z/{n}"), group));
    }
    if let Some(spec) = &source.alexander {
        let (n, l, m) = parse_alexander(spec)?;
        // Reject non-units up front with the constructor's message.
        alexander_biquandle(n, l, m).map_err(usage)?;
        return Ok(LoadedTables {
            label: format!("alexander Z/{n} lambda={l} mu={m}"),
            tables: alexander_tables(n, l, m).map_err(usage)?,
            names: None,
            group: None,
        });
    }
    Err(CliError::Usage(
        "a biquandle source is required: --table, --wada-sn, --wada-zn or --alexander".into(),
    ))
}

/// A verified structure with element naming.
pub struct Context {
    pub label: String,
    pub b: FiniteBiquandle,
    pub group: Option<FiniteGroup>,
}

impl Context {
    pub fn load(source: &SourceArgs) -> Result<Self, CliError> {
        let loaded = load_tables(source)?;
        let mut b = FiniteBiquandle::from_tables(loaded.tables)
            .map_err(|e| CliError::Failure(format!("{}: {e}", loaded.label)))?;
        if let Some(names) = loaded.names {
            b = b.with_names(names).map_err(usage)?;
        }
        Ok(Self {
            label: loaded.label,
            b,
            group: loaded.group,
        })
    }

    /// Cycle notation (any spacing) for permutation groups, otherwise a
    /// display name or an index.
    pub fn resolve(&self, text: &str) -> Result<usize, CliError> {
        self.group
            .as_ref()
            .and_then(|g| g.element(text))
            .or_else(|| self.b.element(text))
            .ok_or_else(|| CliError::Usage(format!("unknown element {text:?} in {}", self.label)))
    }

    pub fn name(&self, x: usize) -> &str {
        self.b.name(x)
    }

    pub fn names(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.name(x).to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alexander_spec_parsing() {
        assert_eq!(parse_alexander("5,2,3").unwrap(), (5, 2, 3));
        assert_eq!(parse_alexander(" 7, -1 ,3").unwrap(), (7, -1, 3));
        assert!(parse_alexander("5,2").is_err());
        assert!(parse_alexander("5,x,3").is_err());
    }
}
