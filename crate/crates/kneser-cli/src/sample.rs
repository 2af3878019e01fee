//! Seeded sampling of proper colorings.

use rand::seq::SliceRandom;

use rand_chacha::ChaCha8Rng;

use kneser_core::{Coloring, Error, MultiHypergraph, Result};

/// First-fit over a shuffled vertex order, followed by a random relabeling
/// of the palette. Always proper; the palette size varies with the order,
/// which is the point of sampling.
pub fn sample_proper_coloring(kg: &MultiHypergraph, rng: &mut ChaCha8Rng) -> Result<Coloring> {
    let m = kg.vertex_count();
    let mut order: Vec<usize> = (1..=m).collect();
    order.shuffle(rng);

    let mut assign = vec![0usize; m];
    let mut palette = 1usize;
    for &v in &order {
        let mut c = 1usize;
        'try_color: loop {
            for edge in kg.edges() {
                if !edge.contains(&(v as u32)) {
                    continue;
                }
                let mut all_same = true;
                let mut has_other = false;
                for &u in edge {
                    let u = u as usize;
                    if u == v {
                        continue;
                    }
                    has_other = true;
                    if assign[u - 1] != c {
                        all_same = false;
                        break;
                    }
                }
                if !has_other {
                    // the edge's support is this single vertex: uncolorable
                    return Err(Error::Input(format!(
                        "derived hypergraph has a one-vertex edge at vertex {v}; \
                         no proper coloring exists"
                    )));
                }
                if all_same {
                    c += 1;
                    continue 'try_color;
                }
            }
            break;
        }
        assign[v - 1] = c;
        palette = palette.max(c);
    }

    let mut relabel: Vec<usize> = (1..=palette).collect();
    relabel.shuffle(rng);
    let relabeled: Vec<usize> = assign.iter().map(|&c| relabel[c - 1]).collect();
    let coloring = Coloring::new(palette, relabeled)?;
    debug_assert!(kg.is_proper(&coloring)?);
    Ok(coloring)
}
