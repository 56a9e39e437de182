use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::CliResult;

/// 12 significant digits, plain notation when the exponent is moderate.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let exp: i32 = sci.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        sci
    }
}

pub(crate) fn to_json<T: Serialize>(v: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| crate::CliError::Config(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Writes `text` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
