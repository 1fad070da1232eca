use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Filter, Prepared, Radix, Switching};
use crate::error::{Error, Result};
use crate::formula::{FragmentId, Polarity};
use crate::graph::{ArcId, Label, NodeId, ProofStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Ac,
    C,
    Cw,
    Acc,
    Accw,
    #[serde(rename = "cwforall")]
    CwForall,
    Wten,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Ac => "ac",
            Criterion::C => "c",
            Criterion::Cw => "cw",
            Criterion::Acc => "acc",
            Criterion::Accw => "accw",
            Criterion::CwForall => "cwforall",
            Criterion::Wten => "wten",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Criterion> {
        [
            Criterion::Ac,
            Criterion::C,
            Criterion::Cw,
            Criterion::Acc,
            Criterion::Accw,
            Criterion::CwForall,
            Criterion::Wten,
        ]
        .into_iter()
        .find(|c| c.name() == s.to_ascii_lowercase())
        .ok_or_else(|| Error::Format(format!("unknown criterion '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest number of ⅋ nodes with a free choice that may be enumerated.
    pub max_parr: usize,
    /// Enumerate every switching for C and C_#w even once AC holds.
    pub exhaustive: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_parr: 20, exhaustive: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ComponentCensus {
    pub nodes: usize,
    /// Nodes that are erasing in the structure itself.
    pub erasing: usize,
    pub bottoms: usize,
    pub thread: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub node: NodeId,
    pub arc: ArcId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub criterion: Criterion,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Switching>,
    /// Components of the counterexample switching graph, or of the first one examined.
    pub census: Vec<ComponentCensus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

pub fn check(ps: &ProofStructure, criterion: Criterion) -> Result<Verdict> {
    check_with(ps, criterion, &CheckOptions::default())
}

pub fn check_with(ps: &ProofStructure, criterion: Criterion, opts: &CheckOptions) -> Result<Verdict> {
    let prep = Prepared::new(ps);
    let fresh = prep.fresh_map();
    let filter = match criterion {
        Criterion::CwForall | Criterion::Wten => Filter::WCompatible,
        _ => Filter::All,
    };
    let options = prep.options(ps, filter)?;
    let free = options.iter().filter(|o| o.len() > 1).count();
    if free > opts.max_parr {
        return Err(Error::EnumerationCap { parrs: free, cap: opts.max_parr });
    }
    let first: Vec<u8> = options.iter().map(|o| o[0]).collect();
    let verdict = |holds: bool, choice: &[u8]| {
        let an = prep.analyze(choice, &fresh);
        Verdict {
            criterion,
            holds,
            counterexample: (!holds).then(|| prep.switching(choice)),
            census: prep.census(&an),
            witness: None,
        }
    };

    let target = match criterion {
        Criterion::C | Criterion::Acc => Some(1isize),
        Criterion::Cw | Criterion::Accw => {
            Some(ps.count(Label::Bot) as isize - ps.jumps.len() as isize + 1)
        }
        _ => None,
    };

    match criterion {
        Criterion::Wten => {
            let w = ps.wten_witness();
            let mut v = verdict(w.is_none(), &first);
            v.counterexample = None;
            v.witness = w.map(|(node, arc)| Witness { node, arc });
            Ok(v)
        }
        Criterion::CwForall => {
            for choice in Radix::new(options) {
                let an = prep.analyze(&choice, &fresh);
                let ok = prep.census(&an).iter().all(|c| c.erasing == 0 || c.thread);
                if !ok {
                    return Ok(verdict(false, &choice));
                }
            }
            Ok(verdict(true, &first))
        }
        Criterion::Ac => Ok(match find_cycle(&prep, &fresh, &options) {
            Some(choice) => verdict(false, &choice),
            None => verdict(true, &first),
        }),
        Criterion::Acc | Criterion::Accw | Criterion::C | Criterion::Cw => {
            let target = target.unwrap();
            let needs_ac = matches!(criterion, Criterion::Acc | Criterion::Accw);
            let cycle = find_cycle(&prep, &fresh, &options);
            if let (true, Some(choice)) = (needs_ac, &cycle) {
                return Ok(verdict(false, choice));
            }
            if cycle.is_none() && !opts.exhaustive {
                let an = prep.analyze(&first, &fresh);
                return Ok(verdict(an.cc as isize == target, &first));
            }
            for choice in Radix::new(options) {
                let an = prep.analyze(&choice, &fresh);
                if an.cc as isize != target {
                    return Ok(verdict(false, &choice));
                }
            }
            Ok(verdict(true, &first))
        }
    }
}

fn find_cycle(
    prep: &Prepared,
    fresh: &[Option<(usize, usize)>],
    options: &[Vec<u8>],
) -> Option<Vec<u8>> {
    Radix::new(options.to_vec()).find(|choice| !prep.analyze(choice, fresh).acyclic)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingStats {
    pub switching: Switching,
    pub cc: usize,
    pub acyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputStats {
    /// #w(R).
    pub bottoms: usize,
    /// #out(R): conclusions of output type.
    pub outputs: usize,
    pub acyclic: bool,
    /// Every switching.
    pub switchings: Vec<SwitchingStats>,
    /// Per intuitionistic switching, (#⊥, #output conclusions) of each component.
    pub balance: Vec<Vec<(usize, usize)>>,
}

impl OutputStats {
    /// #cc = #w + #out on every switching.
    pub fn cc_law_holds(&self) -> bool {
        self.switchings.iter().all(|s| s.cc == self.bottoms + self.outputs)
    }

    /// #w(C) + #out(C) = 1 on every component of every intuitionistic switching.
    pub fn balance_holds(&self) -> bool {
        self.balance.iter().flatten().all(|(w, o)| w + o == 1)
    }
}

pub fn output_stats(ps: &ProofStructure, opts: &CheckOptions) -> Result<OutputStats> {
    if !ps.is_typed() {
        return Err(Error::PolarityTypingRequired);
    }
    let report = ps.validate(Some(FragmentId::Imll));
    if !report.ok {
        return Err(Error::Invalid(report));
    }
    let prep = Prepared::new(ps);
    let fresh = prep.fresh_map();
    if prep.parrs.len() > opts.max_parr {
        return Err(Error::EnumerationCap { parrs: prep.parrs.len(), cap: opts.max_parr });
    }
    let output: Vec<bool> = prep
        .arc_ids
        .iter()
        .map(|a| ps.types[a].polarity() == Some(Polarity::Output))
        .collect();
    let outputs = ps.conclusions.iter().filter(|a| ps.types[*a].polarity() == Some(Polarity::Output)).count();

    let mut switchings = Vec::new();
    let mut acyclic = true;
    for choice in Radix::new(prep.options(ps, Filter::All)?) {
        let an = prep.analyze(&choice, &fresh);
        acyclic &= an.acyclic;
        switchings.push(SwitchingStats { switching: prep.switching(&choice), cc: an.cc, acyclic: an.acyclic });
    }

    let mut balance = Vec::new();
    for choice in Radix::new(prep.options(ps, Filter::Intuitionistic)?) {
        let an = prep.analyze(&choice, &fresh);
        let mut per = vec![(0usize, 0usize); an.cc];
        for (v, label) in prep.labels.iter().enumerate() {
            if *label == Label::Bot {
                per[an.comp[v]].0 += 1;
            }
        }
        for (i, out) in output.iter().enumerate() {
            let h = prep.head_index(i, &choice, &fresh);
            let is_dot = h >= prep.ids.len() || prep.labels[h] == Label::Dot;
            if *out && is_dot {
                per[an.comp[h]].1 += 1;
            }
        }
        balance.push(per);
    }
    Ok(OutputStats { bottoms: ps.count(Label::Bot), outputs, acyclic, switchings, balance })
}
