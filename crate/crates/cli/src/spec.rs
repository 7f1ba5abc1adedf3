//! Graph specs on the command line.
//!
//! ```text
//! spec    := family ":" arg | "union(" list ")" | "join(" list ")" | graph6
//! family  := cycle | path | complete | empty      arg := n | a..b
//!          | biclique                             arg := pxq
//! list    := spec ("," spec)*
//! ```
//!
//! graph6 bytes are all in `63..=126`, so `:`, `,` and parentheses never
//! occur inside one. A range `a..b` (inclusive) expands to one graph per order.

use wellcover::catalog::{all_graphs, connected_graphs};
use wellcover::constructions::join;
use wellcover::graph::generators::{complete, complete_bipartite, cycle, disjoint_union, path};
use wellcover::Graph;

use crate::Failure;

/// Splits at commas outside parentheses.
pub fn split_list(s: &str) -> Result<Vec<&str>, Failure> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Failure::usage(format!("unbalanced ')' in {s:?}")))?
            }
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Failure::usage(format!("unbalanced '(' in {s:?}")));
    }
    out.push(s[start..].trim());
    if out.iter().any(|p| p.is_empty()) {
        return Err(Failure::usage(format!("empty item in list {s:?}")));
    }
    Ok(out)
}

fn orders(arg: &str) -> Result<Vec<usize>, Failure> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Failure::usage(format!("expected a vertex count, got {t:?}")))
    };
    match arg.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Failure::usage(format!("empty range {arg:?}")));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(arg)?]),
    }
}

/// Every graph a spec denotes, in order.
pub fn parse_specs(spec: &str) -> Result<Vec<Graph>, Failure> {
    let spec = spec.trim();
    for (op, combine) in [
        ("union(", disjoint_union as fn(&[Graph]) -> wellcover::Result<Graph>),
        ("join(", join),
    ] {
        if let Some(inner) = spec.strip_prefix(op) {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Failure::usage(format!("missing ')' in {spec:?}")))?;
            let parts = split_list(inner)?
                .into_iter()
                .map(parse_one)
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(vec![combine(&parts)?]);
        }
    }
    if let Some((family, arg)) = spec.split_once(':') {
        if family == "biclique" {
            let (p, q) = arg
                .split_once('x')
                .ok_or_else(|| Failure::usage(format!("biclique needs pxq, got {arg:?}")))?;
            let (p, q) = (orders(p)?, orders(q)?);
            if p.len() != 1 || q.len() != 1 {
                return Err(Failure::usage("biclique does not take ranges"));
            }
            return Ok(vec![complete_bipartite(p[0], q[0])?]);
        }
        let make: fn(usize) -> wellcover::Result<Graph> = match family {
            "cycle" => cycle,
            "path" => path,
            "complete" => complete,
            "empty" => Graph::empty,
            _ => return Err(Failure::usage(format!("unknown graph family {family:?}"))),
        };
        return orders(arg)?.into_iter().map(|n| make(n).map_err(Failure::from)).collect();
    }
    Ok(vec![Graph::from_graph6(spec).map_err(|e| Failure::usage(format!("{spec:?}: {e}")))?])
}

/// A spec that must denote exactly one graph.
pub fn parse_one(spec: &str) -> Result<Graph, Failure> {
    let mut gs = parse_specs(spec)?;
    if gs.len() != 1 {
        return Err(Failure::usage(format!("{spec:?} denotes {} graphs, expected one", gs.len())));
    }
    Ok(gs.pop().unwrap())
}

/// `connected:N`, `all:N` or a range `connected:a..b`.
pub fn parse_catalog(spec: &str) -> Result<Vec<Graph>, Failure> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| Failure::usage(format!("catalog spec needs kind:orders, got {spec:?}")))?;
    let mut ns = orders(arg)?;
    if !arg.contains("..") {
        ns = (1..=ns[0]).collect();
    }
    let mut out = Vec::new();
    for n in ns.into_iter().filter(|&n| n >= 1) {
        out.extend(match kind {
            "connected" => connected_graphs(n)?,
            "all" => all_graphs(n)?,
            _ => return Err(Failure::usage(format!("unknown catalog {kind:?}; use connected or all"))),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_one("cycle:5").unwrap(), cycle(5).unwrap());
        assert_eq!(parse_one("biclique:2x3").unwrap(), complete_bipartite(2, 3).unwrap());
        assert_eq!(parse_specs("cycle:3..5").unwrap().len(), 3);
        assert_eq!(parse_one("Bw").unwrap(), complete(3).unwrap());
        let k3k1 = parse_one("union(complete:3,complete:1)").unwrap();
        assert_eq!((k3k1.order(), k3k1.edge_count()), (4, 3));
        assert_eq!(parse_one("join(complete:2, complete:2)").unwrap(), complete(4).unwrap());
        assert_eq!(parse_one("join(union(empty:1,empty:1),empty:2)").unwrap(), complete_bipartite(2, 2).unwrap());
    }

    #[test]
    fn errors() {
        for bad in ["cycle:2", "wheel:5", "cycle:x", "cycle:5..3", "union(cycle:3", "join()", "biclique:3", "!!", "cycle:3..4,"] {
            assert!(parse_specs(bad).is_err(), "{bad}");
        }
        assert!(parse_one("cycle:3..4").is_err());
    }

    #[test]
    fn catalogs() {
        assert_eq!(parse_catalog("connected:4").unwrap().len(), 1 + 1 + 2 + 6);
        assert_eq!(parse_catalog("all:3..3").unwrap().len(), 4);
        assert!(parse_catalog("trees:4").is_err());
        assert!(parse_catalog("connected:12").is_err());
    }
}
