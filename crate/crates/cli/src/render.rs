use std::fmt::Write;

use lyndon_core::{LyndonForest, LyndonTree};
use serde_json::{json, Value};

use crate::Format;

fn joined(values: &[usize], sep: &str) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

fn letter(y: &[u8], j: usize) -> char {
    y[j] as char
}

pub fn lyns(format: Format, y: &[u8], lyns: &[usize], period: Option<&[usize]>) -> String {
    match format {
        Format::Json => {
            let mut obj = json!({ "lyns": lyns });
            if let Some(period) = period {
                obj["period"] = json!(period);
            }
            obj.to_string() + "\n"
        }
        Format::Tsv => {
            let mut out = String::from("j\ty[j]\tlyns[j]");
            out += if period.is_some() { "\tperiod[j]\n" } else { "\n" };
            for j in 0..y.len() {
                let _ = write!(out, "{j}\t{}\t{}", letter(y, j), lyns[j]);
                if let Some(period) = period {
                    let _ = write!(out, "\t{}", period[j]);
                }
                out.push('\n');
            }
            out
        }
        _ => {
            let mut out = joined(lyns, " ") + "\n";
            if let Some(period) = period {
                out += &(joined(period, " ") + "\n");
            }
            out
        }
    }
}

/// `psp`, `rank` and period tables.
pub fn sequence(format: Format, key: &str, index: &str, values: &[usize], sep: &str) -> String {
    match format {
        Format::Json => json!({ key: values }).to_string() + "\n",
        Format::Tsv => {
            let mut out = format!("{index}\t{key}[{index}]\n");
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{i}\t{v}");
            }
            out
        }
        _ => joined(values, sep) + "\n",
    }
}

pub fn word(format: Format, y: &[u8]) -> String {
    let y = String::from_utf8_lossy(y);
    match format {
        Format::Json => json!({ "word": y }).to_string() + "\n",
        _ => format!("{y}\n"),
    }
}

pub fn factors(format: Format, y: &[u8], starts: &[usize]) -> String {
    let pieces: Vec<String> = starts
        .iter()
        .enumerate()
        .map(|(i, &s)| String::from_utf8_lossy(&y[s..starts.get(i + 1).copied().unwrap_or(y.len())]).into_owned())
        .collect();
    match format {
        Format::Json => json!({ "factors": starts, "words": pieces }).to_string() + "\n",
        Format::Tsv => {
            let mut out = String::from("start\tfactor\n");
            for (s, piece) in starts.iter().zip(&pieces) {
                let _ = writeln!(out, "{s}\t{piece}");
            }
            out
        }
        _ => format!("{}\n{}\n", joined(starts, " "), pieces.join("|")),
    }
}

/// Bracketed form `[[a,b],b]`, built without recursion.
fn bracketed(y: &[u8], tree: &LyndonTree) -> String {
    enum Step {
        Node(usize),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut stack = vec![Step::Node(tree.root())];
    while let Some(step) = stack.pop() {
        match step {
            Step::Text(s) => out.push_str(s),
            Step::Node(id) => match tree.children(id) {
                None => out.push(letter(y, tree.span(id).start)),
                Some((l, r)) => {
                    out.push('[');
                    stack.extend([Step::Text("]"), Step::Node(r), Step::Text(","), Step::Node(l)]);
                }
            },
        }
    }
    out
}

fn tree_json(tree: &LyndonTree) -> Value {
    let nodes: Vec<Value> = (0..tree.node_count())
        .map(|id| json!({ "id": id, "left": tree.left(id), "right": tree.right(id) }))
        .collect();
    Value::Array(nodes)
}

fn tree_tsv(out: &mut String, y: &[u8], tree: &LyndonTree, offset: usize) {
    for id in 0..tree.node_count() {
        let span = tree.span(id);
        let (start, end) = (span.start + offset, span.end + offset);
        let _ = match tree.children(id) {
            None => writeln!(out, "{id}\tleaf\t\t\t{start}\t{end}\t{}", letter(y, start)),
            Some((l, r)) => writeln!(out, "{id}\tinternal\t{l}\t{r}\t{start}\t{end}\t"),
        };
    }
}

/// Nodes in id order, then each internal node's left and right edge. Leaf
/// labels use word positions shifted by `offset`, internal labels creation
/// ranks shifted by `rank_offset`.
fn dot_body(out: &mut String, y: &[u8], tree: &LyndonTree, prefix: &str, offset: usize, rank_offset: usize) {
    for id in 0..tree.node_count() {
        let _ = match tree.creation_rank(id) {
            None => {
                let j = id + offset;
                writeln!(out, "  {prefix}{id} [shape=box, label=\"{j}:{}\"];", letter(y, j))
            }
            Some(rank) => writeln!(out, "  {prefix}{id} [shape=circle, label=\"{}\"];", rank + rank_offset),
        };
    }
    for id in tree.internal_nodes() {
        let (l, r) = tree.children(id).expect("internal node");
        let _ = writeln!(out, "  {prefix}{id} -> {prefix}{l};");
        let _ = writeln!(out, "  {prefix}{id} -> {prefix}{r};");
    }
}

pub fn tree(format: Format, y: &[u8], tree: &LyndonTree) -> String {
    match format {
        Format::Json => json!({ "tree": tree_json(tree) }).to_string() + "\n",
        Format::Tsv => {
            let mut out = String::from("id\tkind\tleft\tright\tstart\tend\tletter\n");
            tree_tsv(&mut out, y, tree, 0);
            out
        }
        Format::Dot => {
            let mut out = String::from("digraph tree {\n");
            dot_body(&mut out, y, tree, "n", 0, 0);
            out + "}\n"
        }
        Format::Text => bracketed(y, tree) + "\n",
    }
}

pub fn forest(format: Format, y: &[u8], forest: &LyndonForest) -> String {
    let factors: Vec<_> = forest.factors().collect();
    match format {
        Format::Json => {
            let trees: Vec<Value> = factors.iter().map(|(_, t)| tree_json(t)).collect();
            json!({ "factors": forest.starts(), "forest": trees }).to_string() + "\n"
        }
        Format::Tsv => {
            let mut out = String::from("factor\tid\tkind\tleft\tright\tstart\tend\tletter\n");
            for (f, (range, t)) in factors.iter().enumerate() {
                let mut rows = String::new();
                tree_tsv(&mut rows, y, t, range.start);
                for row in rows.lines() {
                    let _ = writeln!(out, "{f}\t{row}");
                }
            }
            out
        }
        Format::Dot => {
            let mut out = String::from("digraph forest {\n");
            let mut created = 0;
            for (f, (range, t)) in factors.iter().enumerate() {
                let _ = writeln!(out, "  subgraph cluster_{f} {{");
                let _ = writeln!(out, "    label=\"{}\";", String::from_utf8_lossy(&y[range.clone()]));
                dot_body(&mut out, y, t, &format!("f{f}n"), range.start, created);
                out += "  }\n";
                created += t.internal_count();
            }
            out + "}\n"
        }
        Format::Text => factors
            .iter()
            .map(|(range, t)| bracketed(&y[range.clone()], t) + "\n")
            .collect(),
    }
}
