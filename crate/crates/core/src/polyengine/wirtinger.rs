use serde::Serialize;

use crate::codec::{validate, Diagram, Kind, Role};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    /// 0-based component.
    pub component: usize,
    /// First arc of its component; its generator is the meridian.
    pub meridian: bool,
}

/// One crossing: `under_out = over^sign * under_in * over^-sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub crossing: u32,
    pub under_in: usize,
    pub under_out: usize,
    pub over: usize,
    pub sign: i64,
}

/// Wirtinger presentation of a diagram. Relations are listed component by
/// component in traversal order, so sweeping them in order propagates each
/// meridian along its component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerPresentation {
    pub arcs: Vec<Arc>,
    pub relations: Vec<Relation>,
    /// Index of the meridian arc of each component.
    pub meridians: Vec<usize>,
    /// For each component, its arcs in traversal order.
    pub component_arcs: Vec<Vec<usize>>,
}

/// Arcs run between consecutive Under passages. An open component with `u`
/// Under passages has `u + 1` arcs; a cyclic one has `max(u, 1)`, the piece
/// after the last Under passage merging with the first arc.
pub fn wirtinger(d: &Diagram) -> Result<WirtingerPresentation> {
    validate(d).into_result()?;
    let signs = d.sign_map();
    let mut arcs = Vec::new();
    let mut meridians = Vec::new();
    let mut component_arcs = Vec::new();
    // Per crossing: arc carrying the Over passage.
    let mut over_arc = std::collections::HashMap::new();
    // (crossing, in, out) in traversal order.
    let mut unders = Vec::new();

    for (k, comp) in d.components.iter().enumerate() {
        let first = arcs.len();
        meridians.push(first);
        arcs.push(Arc { component: k, meridian: true });
        let mut own = vec![first];
        let under_count = comp.iter().filter(|p| p.role == Role::Under).count();
        let mut seen = 0;
        let mut current = first;
        for p in comp {
            match p.role {
                Role::Over => {
                    over_arc.insert(p.crossing, current);
                }
                Role::Under => {
                    seen += 1;
                    let next = if d.kind == Kind::Link && seen == under_count {
                        first
                    } else {
                        arcs.push(Arc { component: k, meridian: false });
                        own.push(arcs.len() - 1);
                        arcs.len() - 1
                    };
                    unders.push((p.crossing, current, next));
                    current = next;
                }
            }
        }
        component_arcs.push(own);
    }

    let relations = unders
        .into_iter()
        .map(|(crossing, under_in, under_out)| Relation {
            crossing,
            under_in,
            under_out,
            over: over_arc[&crossing],
            sign: signs[&crossing].value(),
        })
        .collect();
    Ok(WirtingerPresentation { arcs, relations, meridians, component_arcs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid;

    #[test]
    fn unknot() {
        let w = wirtinger(&Diagram::trivial(Kind::Link, 1)).unwrap();
        assert_eq!(w.arcs.len(), 1);
        assert!(w.relations.is_empty());
        assert!(w.arcs[0].meridian);
    }

    #[test]
    fn trefoil_and_hopf() {
        let t = wirtinger(&braid::closure(2, &[1, 1, 1]).unwrap()).unwrap();
        assert_eq!((t.arcs.len(), t.relations.len()), (3, 3));
        let h = wirtinger(&braid::closure(2, &[1, 1]).unwrap()).unwrap();
        assert_eq!((h.arcs.len(), h.relations.len()), (2, 2));
        assert_eq!(h.meridians, vec![0, 1]);
    }

    #[test]
    fn open_components_get_an_extra_arc() {
        let d = braid::knot_tangle(2, &[1, 1, 1]).unwrap();
        let w = wirtinger(&d).unwrap();
        assert_eq!(w.arcs.len(), 4);
        let r = &w.relations[2];
        assert_eq!((r.under_in, r.under_out), (2, 3));
    }
}
