//! Report assembly and rendering.
//!
//! Reports are JSON values with sorted keys and two-space indentation, so
//! a report doubles as a regression golden file: two runs of the same
//! scenario are byte-identical once the timing block is stripped. A
//! markdown rendering is emitted alongside for human reading.

use serde_json::{json, Map, Value};

pub const ENGINE_NAME: &str = "socle";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct RunReport {
    pub ok: bool,
    pub value: Value,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.value).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_markdown(&self) -> String {
        render_markdown(&self.value)
    }
}

/// The report without its volatile parts (timings), for determinism
/// comparisons and golden files.
pub fn strip_volatile(value: &Value) -> Value {
    let mut v = value.clone();
    if let Value::Object(map) = &mut v {
        map.remove("timings");
    }
    v
}

pub fn assemble(
    name: &str,
    field: &str,
    scenario_echo: Value,
    tasks: Vec<Value>,
    notes: Vec<String>,
    total_ms: u128,
    per_task_ms: Vec<u128>,
) -> RunReport {
    let ok = tasks
        .iter()
        .all(|t| t.get("ok").and_then(Value::as_bool).unwrap_or(false));
    let value = json!({
        "schema": 1,
        "engine": {"name": ENGINE_NAME, "version": ENGINE_VERSION},
        "name": name,
        "field": field,
        "scenario": scenario_echo,
        "ok": ok,
        "tasks": tasks,
        "notes": notes,
        "timings": {
            "total_ms": total_ms as u64,
            "per_task_ms": per_task_ms.iter().map(|m| *m as u64).collect::<Vec<u64>>(),
        },
    });
    RunReport { ok, value }
}

fn render_markdown(value: &Value) -> String {
    let mut out = String::new();
    let name = value.get("name").and_then(Value::as_str).unwrap_or("?");
    let field = value.get("field").and_then(Value::as_str).unwrap_or("?");
    let ok = value.get("ok").and_then(Value::as_bool).unwrap_or(false);
    out.push_str(&format!("# {name}\n\n"));
    out.push_str(&format!("- field: {field}\n"));
    out.push_str(&format!("- ok: {ok}\n"));
    if let Some(Value::Array(notes)) = value.get("notes") {
        for n in notes {
            if let Some(s) = n.as_str() {
                out.push_str(&format!("- note: {s}\n"));
            }
        }
    }
    out.push('\n');
    if let Some(Value::Array(tasks)) = value.get("tasks") {
        for (i, task) in tasks.iter().enumerate() {
            let kind = task.get("kind").and_then(Value::as_str).unwrap_or("?");
            out.push_str(&format!("## task {i}: {kind}\n\n"));
            if let Value::Object(map) = task {
                render_object(&mut out, map);
            }
            out.push('\n');
        }
    }
    out
}

fn render_object(out: &mut String, map: &Map<String, Value>) {
    for (k, v) in map {
        if k == "kind" {
            continue;
        }
        match v {
            Value::Array(items) if items.iter().all(Value::is_number) => {
                out.push_str(&format!("- {k}:\n\n"));
                let header: Vec<String> = (0..items.len()).map(|n| n.to_string()).collect();
                let row: Vec<String> = items.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("  | n | {} |\n", header.join(" | ")));
                out.push_str(&format!(
                    "  |---|{}|\n",
                    header.iter().map(|_| "---").collect::<Vec<_>>().join("|")
                ));
                out.push_str(&format!("  | value | {} |\n\n", row.join(" | ")));
            }
            Value::Object(inner) => {
                out.push_str(&format!("- {k}:\n"));
                for (ik, iv) in inner {
                    out.push_str(&format!("  - {ik}: {iv}\n"));
                }
            }
            other => {
                out.push_str(&format!("- {k}: {other}\n"));
            }
        }
    }
}
