//! Root datum and subgroup inputs: flags, optional `key=value` config file.

use std::collections::BTreeSet;
use std::path::Path;

use qspaces_core::lie::{RootDatum, SubgroupData};

use crate::CliError;

#[derive(Debug, Default)]
pub struct LatticeSpec {
    pub type_label: Option<String>,
    pub cartan: Option<String>,
    pub s: Option<String>,
    pub l: Option<String>,
}

impl LatticeSpec {
    /// Values from `path`, overridden by any that are already set.
    pub fn merge_config(mut self, path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Parse(format!("{}:{}: expected key=value", path.display(), lineno + 1))
            })?;
            let value = value.trim().to_string();
            let slot = match key.trim() {
                "type" => &mut self.type_label,
                "cartan" => &mut self.cartan,
                "S" => &mut self.s,
                "L" => &mut self.l,
                other => {
                    return Err(CliError::Validation(format!(
                        "{}:{}: unknown key `{other}`",
                        path.display(),
                        lineno + 1
                    )))
                }
            };
            slot.get_or_insert(value);
        }
        Ok(self)
    }

    pub fn datum(&self) -> Result<RootDatum, CliError> {
        match (&self.type_label, &self.cartan) {
            (Some(_), Some(_)) => Err(CliError::Usage(
                "give either a root system type or a Cartan matrix, not both".into(),
            )),
            (Some(t), None) => Ok(RootDatum::from_type(t)?),
            (None, Some(c)) => {
                let rows: Vec<Vec<i64>> = serde_json::from_str(c)
                    .map_err(|e| CliError::Parse(format!("cartan matrix: {e}")))?;
                Ok(RootDatum::from_cartan(rows)?)
            }
            (None, None) => Err(CliError::Usage(
                "a root datum is required: --type, --cartan or --config".into(),
            )),
        }
    }

    pub fn subgroup(&self, datum: &RootDatum) -> Result<SubgroupData, CliError> {
        let s = parse_root_set(self.s.as_deref().unwrap_or(""))?;
        match &self.l {
            None => Ok(SubgroupData::full_lattice(s, datum)?),
            Some(l) => Ok(SubgroupData::new(s, parse_generators(l)?, datum)?),
        }
    }
}

/// `"1,3"` (1-based) to 0-based indices.
pub fn parse_root_set(text: &str) -> Result<BTreeSet<usize>, CliError> {
    let mut out = BTreeSet::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| CliError::Parse(format!("simple root index `{part}` is not a positive integer")))?;
        if i == 0 {
            return Err(CliError::Validation("simple root indices start at 1".into()));
        }
        out.insert(i - 1);
    }
    Ok(out)
}

/// `"(1,0);(0,2)"` to generator vectors. The empty string means `L = {0}`.
pub fn parse_generators(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let mut out = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let inner = part
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .ok_or_else(|| CliError::Parse(format!("lattice generator `{part}` must look like (a,b,...)")))?;
        let coords = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Parse(format!("bad coordinate `{}` in `{part}`", c.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(coords);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        assert_eq!(parse_generators("(1,0);(0,2)").unwrap(), vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(parse_generators(" (0) ").unwrap(), vec![vec![0]]);
        assert!(parse_generators("").unwrap().is_empty());
        assert!(parse_generators("(1,x)").is_err());
        assert!(parse_generators("1,2").is_err());
    }

    #[test]
    fn root_sets() {
        assert_eq!(parse_root_set("1, 3").unwrap(), BTreeSet::from([0, 2]));
        assert!(parse_root_set("").unwrap().is_empty());
        assert!(parse_root_set("0").is_err());
    }
}
