//! Serial transmission chains: the carrier of each link is the noumenon of
//! the next, and each link's reflections are the next link's states.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::model::{InformationModel, StateEntry};
use crate::validate::{require_restorable, validate};

fn check_junction(junction: usize, a: &InformationModel, b: &InformationModel) -> Result<()> {
    let mismatch = |reason: &str| Error::ChainMismatch {
        junction,
        reason: reason.to_string(),
    };
    if a.carriers != b.noumena {
        return Err(mismatch("carriers differ from the next link's noumena"));
    }
    if a.reflection != b.occurrence {
        return Err(mismatch("reflection time differs from the next link's occurrence time"));
    }
    let reflected: HashSet<&StateEntry> = a.reflections.iter().collect();
    let next_states: HashSet<&StateEntry> = b.states.iter().collect();
    if reflected != next_states {
        return Err(mismatch("reflection states differ from the next link's states"));
    }
    Ok(())
}

/// Composes a chain `I_1, ..., I_n` into `<o_1, T_h1, f_1, c_n, T_mn, g_n>`
/// whose mapping is the composition of the link mappings.
pub fn compose_chain(chain: &[InformationModel]) -> Result<InformationModel> {
    let (first, last) = match (chain.first(), chain.last()) {
        (Some(f), Some(l)) => (f, l),
        _ => return Err(Error::EmptyChain),
    };
    for link in chain {
        require_restorable(link)?;
    }
    for (j, pair) in chain.windows(2).enumerate() {
        check_junction(j, &pair[0], &pair[1])?;
    }

    let lookups: Vec<HashMap<&StateEntry, usize>> = chain
        .iter()
        .map(|link| {
            let mut index = HashMap::new();
            for (i, s) in link.states.iter().enumerate() {
                index.entry(s).or_insert(i);
            }
            index
        })
        .collect();

    let mapping = first
        .mapping
        .iter()
        .map(|&(s, r)| {
            let mut reflection = r;
            for j in 1..chain.len() {
                let state = lookups[j][&chain[j - 1].reflections[reflection]];
                reflection = chain[j].image_of(state).expect("valid links are total");
            }
            (s, reflection)
        })
        .collect();

    let mut measures = last.measures.clone();
    measures.noumenon_measure = first.measures.noumenon_measure.clone();
    let composed = InformationModel {
        noumena: first.noumena.clone(),
        carriers: last.carriers.clone(),
        occurrence: first.occurrence.clone(),
        reflection: last.reflection.clone(),
        states: first.states.clone(),
        reflections: last.reflections.clone(),
        mapping,
        copies: last.copies.clone(),
        measures,
        enabled: chain.iter().all(|l| l.enabled),
    };
    if let Some(v) = validate(&composed).violations.first() {
        return Err(Error::ChainMismatch {
            junction: chain.len().saturating_sub(2),
            reason: format!("composed mapping is not a valid model: {v}"),
        });
    }
    Ok(composed)
}
