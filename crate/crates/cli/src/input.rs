use std::io::Read;
use std::path::Path;

use bracekit::format::{brace_from_json, parse_json, read_brace_text, BraceFile};
use bracekit::Error;
use serde_json::Value;

use crate::CliError;

/// Reads a file, or stdin when the path is absent or `-`.
pub fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    let mut buf = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            buf =
                std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(buf)
}

/// Accepts a bare brace (text or JSON) or the JSON output of another
/// command, whose `payload` holds the brace.
pub fn parse_brace(src: &str, max_order: usize) -> Result<BraceFile, CliError> {
    let file = if src.trim_start().starts_with('{') {
        brace_from_json(unwrap_result(parse_json(src)?)?)?
    } else {
        read_brace_text(src)?
    };
    let order = file.brace.order();
    if order > max_order {
        return Err(Error::BoundExceeded { order, bound: max_order }.into());
    }
    Ok(file)
}

fn unwrap_result(v: Value) -> Result<Value, CliError> {
    let Value::Object(mut map) = v else { return Ok(v) };
    if !map.contains_key("status") || !map.contains_key("payload") {
        return Ok(Value::Object(map));
    }
    if map.get("status").and_then(Value::as_str) != Some("ok") {
        return Err(CliError::Domain { message: "input is an error result".into(), witness: None });
    }
    Ok(map.remove("payload").expect("checked"))
}

pub fn load_brace(path: Option<&Path>, max_order: usize) -> Result<BraceFile, CliError> {
    parse_brace(&read_source(path)?, max_order)
}
