//! `--family` graph shortcuts such as `cycle:5` or `tree:-,0,0,1,1`.

use iasi_core::graph::families;
use iasi_core::Graph;

pub fn parse_family(spec: &str) -> Result<Graph, String> {
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| format!("family `{spec}` must look like `name:args`"))?;
    let number = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad number `{s}` in family `{spec}`"))
    };
    let graph = match name {
        "path" => families::path(number(args)?),
        "cycle" => families::cycle(number(args)?),
        "complete" => families::complete(number(args)?),
        "empty" => Ok(Graph::empty(number(args)?)),
        "complete-bipartite" => {
            let (m, n) = args
                .split_once(',')
                .ok_or_else(|| format!("complete-bipartite needs `m,n`, got `{args}`"))?;
            families::complete_bipartite(number(m)?, number(n)?)
        }
        "tree" => {
            let parents = args
                .split(',')
                .map(|t| match t.trim() {
                    "-" => Ok(None),
                    t => number(t).map(Some),
                })
                .collect::<Result<Vec<_>, _>>()?;
            families::tree_from_parent_array(&parents)
        }
        other => return Err(format!("unknown graph family `{other}`")),
    };
    graph.map_err(|e| e.to_string())
}
