//! Command implementations behind the `isopos` binary.

pub mod bench;
pub mod io;
pub mod mine;
pub mod report;

use anyhow::{bail, Context, Result};
use isopos_core::corpus::{connected_gnp, gen_gnp, named_graph, Seed};
use isopos_core::Graph;

/// Graph from a generator spec: a fixture name, `gnp:<n>:<p>`, or
/// `cgnp:<n>:<p>` for the first connected sample.
pub fn generate(spec: &str, seed: u64) -> Result<Graph> {
    let random = |rest: &str| -> Result<(usize, f64)> {
        let (n, p) = rest.split_once(':').context("expected <n>:<p>")?;
        Ok((n.parse().context("bad n")?, p.parse().context("bad p")?))
    };
    if let Some(rest) = spec.strip_prefix("gnp:") {
        let (n, p) = random(rest)?;
        return Ok(gen_gnp(n, p, Seed(seed))?);
    }
    if let Some(rest) = spec.strip_prefix("cgnp:") {
        let (n, p) = random(rest)?;
        return Ok(connected_gnp(n, p, &mut Seed(seed).rng())?);
    }
    match named_graph(spec) {
        Ok(g) => Ok(g),
        Err(e) => bail!("{e}"),
    }
}
