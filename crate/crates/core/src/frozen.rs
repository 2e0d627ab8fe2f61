//! Frozen and Kempe-frozen colourings, Kempe-frozen clique partitions of the
//! complement, and certificates that a colouring space is not one Kempe class.
//!
//! In a Kempe-frozen colouring every two colour classes induce a connected
//! subgraph, so every Kempe chain is a whole pair of classes and every swap
//! just renames two colours. The label-erased partition therefore never
//! changes, and any proper colouring with a different partition lies in
//! another Kempe class.

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::colouring::{colour_classes, is_proper, partition_of, require_proper, Colouring, Partition};
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::Graph;

/// Whether every closed neighbourhood contains every one of the `k` colours.
pub fn is_frozen(g: &Graph, c: &Colouring) -> Result<bool> {
    require_proper(g, c)?;
    let k = c.k();
    Ok((0..g.n()).all(|v| {
        let mut seen = vec![false; k];
        for u in g.closed_neighbourhood(v).iter() {
            seen[c.colour(u)] = true;
        }
        seen.into_iter().all(|s| s)
    }))
}

/// Whether all `k` colours are used and every two colour classes induce a
/// connected subgraph.
pub fn is_kempe_frozen(g: &Graph, c: &Colouring) -> Result<bool> {
    require_proper(g, c)?;
    let classes = colour_classes(c);
    Ok(pairwise_connected(&classes, |s| g.is_connected_within(s)))
}

fn pairwise_connected(classes: &[VertexSet], connected: impl Fn(&VertexSet) -> bool) -> bool {
    if classes.iter().any(VertexSet::is_empty) {
        return false;
    }
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let mut union = a.clone();
            union.union_with(b);
            if !connected(&union) {
                return false;
            }
        }
    }
    true
}

/// Whether a partition of `g` into cliques is Kempe frozen: for every two
/// cliques, the complement of the subgraph they induce is connected.
///
/// This is the complement-side view of [`is_kempe_frozen`]: a surjective
/// colouring `c` of `h` is Kempe frozen iff `partition_of(c)` is a Kempe
/// frozen clique partition of `h.complement()`.
pub fn is_kempe_frozen_clique_partition(g: &Graph, p: &Partition) -> Result<bool> {
    if p.vertex_count() != g.n() {
        return Err(Error::input(format!(
            "partition covers {} vertices but the graph has {}",
            p.vertex_count(),
            g.n()
        )));
    }
    let cliques = p.class_sets();
    if let Some(bad) = cliques.iter().find(|s| !g.is_clique(s)) {
        return Err(Error::input(format!("class {:?} is not a clique", bad)));
    }
    let co = g.complement();
    Ok(pairwise_connected(&cliques, |s| co.is_connected_within(s)))
}

/// Boolean outcomes of each certificate condition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChecks {
    pub frozen_proper: bool,
    pub witness_proper: bool,
    pub same_k: bool,
    pub frozen_surjective: bool,
    pub frozen_pairs_connected: bool,
    pub partitions_differ: bool,
}

impl CertificateChecks {
    pub fn all_pass(&self) -> bool {
        self.frozen_proper
            && self.witness_proper
            && self.same_k
            && self.frozen_surjective
            && self.frozen_pairs_connected
            && self.partitions_differ
    }

    fn first_failure(&self) -> Option<&'static str> {
        [
            (self.frozen_proper, "frozen colouring is not proper"),
            (self.witness_proper, "witness colouring is not proper"),
            (self.same_k, "colourings use different k"),
            (self.frozen_surjective, "frozen colouring leaves a colour unused"),
            (
                self.frozen_pairs_connected,
                "some pair of classes of the frozen colouring induces a disconnected subgraph",
            ),
            (self.partitions_differ, "both colourings induce the same partition"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, why)| why)
    }
}

/// A Kempe-frozen `k`-colouring together with a proper `k`-colouring whose
/// partition differs. Its existence shows the `k`-colourings of the host
/// graph are not a single Kempe class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotKempeClassCertificate {
    pub k: usize,
    #[serde(rename = "frozen")]
    pub frozen_colouring: Colouring,
    #[serde(rename = "witness")]
    pub witness_colouring: Colouring,
    pub checks: CertificateChecks,
    /// Present when the chromatic number was computed alongside validation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chromatic_number: Option<usize>,
}

/// Evaluates every certificate condition without failing early.
pub fn certificate_checks(g: &Graph, frozen: &Colouring, witness: &Colouring) -> Result<CertificateChecks> {
    let frozen_proper = is_proper(g, frozen)?;
    let witness_proper = is_proper(g, witness)?;
    let classes = colour_classes(frozen);
    Ok(CertificateChecks {
        frozen_proper,
        witness_proper,
        same_k: frozen.k() == witness.k(),
        frozen_surjective: classes.iter().all(|s| !s.is_empty()),
        frozen_pairs_connected: frozen_proper && pairwise_connected(&classes, |s| g.is_connected_within(s)),
        partitions_differ: partition_of(frozen) != partition_of(witness),
    })
}

/// Validates and packages a not-a-Kempe-class certificate.
pub fn build_not_kempe_class_certificate(
    g: &Graph,
    frozen: &Colouring,
    witness: &Colouring,
) -> Result<NotKempeClassCertificate> {
    let checks = certificate_checks(g, frozen, witness)?;
    if let Some(why) = checks.first_failure() {
        return Err(Error::CertificateRejected(why.to_string()));
    }
    Ok(NotKempeClassCertificate {
        k: frozen.k(),
        frozen_colouring: frozen.clone(),
        witness_colouring: witness.clone(),
        checks,
        chromatic_number: None,
    })
}

/// As [`build_not_kempe_class_certificate`], additionally recording the
/// chromatic number of `g`.
pub fn build_certificate_with_chi(
    g: &Graph,
    frozen: &Colouring,
    witness: &Colouring,
) -> Result<NotKempeClassCertificate> {
    let mut cert = build_not_kempe_class_certificate(g, frozen, witness)?;
    cert.chromatic_number = Some(exact::chromatic_number(g)?);
    Ok(cert)
}

/// Certificate whose witness is a minimum colouring of `g` viewed as a
/// `frozen.k()`-colouring. Fails when a minimum colouring needs more colours
/// than `frozen` has or shares its partition.
pub fn certificate_against_minimum(g: &Graph, frozen: &Colouring) -> Result<NotKempeClassCertificate> {
    let min = exact::minimum_colouring(g)?;
    if min.k() > frozen.k() {
        return Err(Error::CertificateRejected(format!(
            "minimum colouring needs {} colours, more than {}",
            min.k(),
            frozen.k()
        )));
    }
    let mut cert = build_not_kempe_class_certificate(g, frozen, &min.with_k(frozen.k())?)?;
    cert.chromatic_number = Some(min.k());
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{enumerate_colourings, DEFAULT_ENUMERATION_CAP};
    use crate::families;
    use crate::kempe::{kempe_class_of, kempe_classes, DEFAULT_STATE_CAP};
    use proptest::prelude::*;

    fn c(k: usize, one_based: &[usize]) -> Colouring {
        Colouring::from_one_based(k, one_based).unwrap()
    }

    #[test]
    fn frozen_examples() {
        let (d2, psi) = families::gen_dq(2).unwrap();
        assert!(is_frozen(&d2, &psi).unwrap());
        for k in 1..=5 {
            let col = Colouring::new(k, (0..k).collect()).unwrap();
            assert!(is_frozen(&Graph::complete(k), &col).unwrap());
        }
        let p3 = Graph::path(3);
        assert!(!is_frozen(&p3, &c(3, &[1, 2, 1])).unwrap());
        assert!(is_frozen(&p3, &c(2, &[1, 2, 1])).unwrap());
        assert!(is_frozen(&p3, &c(2, &[1, 1, 2])).is_err());
    }

    #[test]
    fn kempe_frozen_examples() {
        let (fig1, left, _) = families::gen_fig1();
        assert!(is_kempe_frozen(&fig1, &left).unwrap());
        let (fig2, left, _) = families::gen_fig2();
        assert!(is_kempe_frozen(&fig2, &left).unwrap());
        assert!(!is_kempe_frozen(&Graph::path(3), &c(3, &[1, 2, 3])).unwrap());
        let (y2, zeta) = families::gen_yr(2).unwrap();
        assert!(is_kempe_frozen(&y2, &zeta).unwrap());
        // Unused colour.
        assert!(!is_kempe_frozen(&Graph::complete(2), &c(3, &[1, 2])).unwrap());
    }

    #[test]
    fn clique_partition_examples() {
        let (d2, psi) = families::gen_dq(2).unwrap();
        let co = d2.complement();
        let p = partition_of(&psi);
        assert!(is_kempe_frozen_clique_partition(&co, &p).unwrap());
        assert_eq!(
            is_kempe_frozen_clique_partition(&co, &p).unwrap(),
            is_kempe_frozen(&d2, &psi).unwrap()
        );

        // Two edges {0,1}, {2,3} joined by one edge form a P4: frozen.
        let p4 = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let pairs = Partition::from_classes(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(is_kempe_frozen_clique_partition(&p4, &pairs).unwrap());
        // Joined by two edges: the complement of the union is disconnected.
        for extra in [(0, 2), (0, 3), (1, 3)] {
            let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2), extra]).unwrap();
            assert!(!is_kempe_frozen_clique_partition(&g, &pairs).unwrap());
        }
        // A class that is not a clique.
        assert!(is_kempe_frozen_clique_partition(&Graph::edgeless(4), &pairs).is_err());
    }

    #[test]
    fn certificate_examples() {
        let (fig1, left, right) = families::gen_fig1();
        let cert = build_not_kempe_class_certificate(&fig1, &left, &right).unwrap();
        assert!(cert.checks.all_pass());

        let (d2, psi) = families::gen_dq(2).unwrap();
        let cert = certificate_against_minimum(&d2, &psi).unwrap();
        assert_eq!((cert.k, cert.chromatic_number), (5, Some(4)));

        let (prism, left, _) = families::gen_prism();
        match build_not_kempe_class_certificate(&prism, &left, &left) {
            Err(Error::CertificateRejected(why)) => assert!(why.contains("same partition")),
            other => panic!("expected rejection, got {other:?}"),
        }
        let bad = c(3, &[1, 1, 2, 2, 3, 3]);
        assert!(matches!(
            build_not_kempe_class_certificate(&prism, &left, &bad),
            Err(Error::CertificateRejected(_))
        ));
        assert!(matches!(
            build_not_kempe_class_certificate(&prism, &left, &left.with_k(4).unwrap()),
            Err(Error::CertificateRejected(_))
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let (fig1, left, right) = families::gen_fig1();
        let cert = build_not_kempe_class_certificate(&fig1, &left, &right).unwrap();
        let v: serde_json::Value = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["k"], 3);
        assert_eq!(v["frozen"]["k"], 3);
        assert!(v["witness"]["colours"].is_array());
        assert_eq!(v["checks"]["partitions_differ"], true);
        assert!(v.get("chromatic_number").is_none());
    }

    #[test]
    fn kempe_frozen_starts_keep_their_partition() {
        let (prism, l, _) = families::gen_prism();
        let (fig1, l1, _) = families::gen_fig1();
        let (d2, psi) = families::gen_dq(2).unwrap();
        for (g, start) in [(&prism, &l), (&fig1, &l1), (&d2, &psi)] {
            let p = partition_of(start);
            let class = kempe_class_of(g, start, DEFAULT_STATE_CAP).unwrap();
            let k = start.k();
            assert_eq!(class.len(), (1..=k).product::<usize>());
            assert!(class.iter().all(|c| partition_of(c) == p));
        }
    }

    #[test]
    fn frozen_plus_witness_implies_several_classes() {
        let (prism, l, r) = families::gen_prism();
        let (fig1, l1, r1) = families::gen_fig1();
        for (g, f, w) in [(&prism, &l, &r), (&fig1, &l1, &r1)] {
            build_not_kempe_class_certificate(g, f, w).unwrap();
            assert!(kempe_classes(g, f.k(), DEFAULT_ENUMERATION_CAP).unwrap().class_count() >= 2);
        }
    }

    proptest! {
        #[test]
        fn kempe_frozen_implies_frozen_and_complement_duality(
            g in crate::graph::tests::arb_graph(7),
            k in 1usize..=4,
        ) {
            let co = g.complement();
            for col in enumerate_colourings(&g, k, 50_000).unwrap() {
                let col = col.unwrap();
                let kf = is_kempe_frozen(&g, &col).unwrap();
                if kf {
                    prop_assert!(is_frozen(&g, &col).unwrap());
                    // Singleton classes of a Kempe-frozen colouring are universal vertices.
                    for class in colour_classes(&col) {
                        if class.len() == 1 {
                            prop_assert!(g.is_universal(class.first().unwrap()));
                        }
                    }
                }
                let p = partition_of(&col);
                let dual = p.len() == col.k() && is_kempe_frozen_clique_partition(&co, &p).unwrap();
                prop_assert_eq!(kf, dual);
            }
        }
    }
}
