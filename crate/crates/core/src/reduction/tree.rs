//! Explicit reduction trees, for inspection and export.

use std::fmt::Write;

use serde::Serialize;
use serde_json::json;

use super::{psi, Reducer};
use crate::affine_weyl::AffineElement;
use crate::bset::IsocrystalClass;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeKind {
    I,
    II,
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub element: AffineElement,
    pub length: usize,
    /// Set on leaves, which are certified minimal.
    pub minimal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeEdge {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
    pub pivot: usize,
    /// Conjugating reflections from the parent to the element that is reduced.
    pub witness: Vec<usize>,
}

/// A reduction tree with nodes stored in creation order; node 0 is the root.
/// Equal elements in different branches are separate nodes.
#[derive(Clone, Debug)]
pub struct ReductionTree {
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<TreeEdge>,
}

#[derive(Clone, Debug)]
pub struct ReductionPath {
    /// Edge indices from the root to the leaf.
    pub edges: Vec<usize>,
    pub l1: u32,
    pub l2: u32,
    pub end: AffineElement,
    pub class: IsocrystalClass,
}

pub(super) fn build(r: &Reducer<'_>, w: &AffineElement) -> Result<ReductionTree> {
    let aw = r.group();
    let mut t = ReductionTree {
        nodes: Vec::new(),
        edges: Vec::new(),
    };
    let mut stack = vec![(w.clone(), None::<(usize, EdgeKind, usize, Vec<usize>)>)];
    while let Some((x, parent)) = stack.pop() {
        let id = t.nodes.len();
        let mv = r.find_reduction_move(&x)?;
        t.nodes.push(TreeNode {
            length: aw.length(&x),
            minimal: mv.is_none(),
            element: x,
        });
        if let Some((from, kind, pivot, witness)) = parent {
            t.edges.push(TreeEdge {
                from,
                to: id,
                kind,
                pivot,
                witness,
            });
        }
        if let Some(m) = mv {
            let (c1, c2) = r.children(&m);
            stack.push((c2, Some((id, EdgeKind::II, m.pivot, m.witness.clone()))));
            stack.push((c1, Some((id, EdgeKind::I, m.pivot, m.witness.clone()))));
        }
    }
    Ok(t)
}

impl ReductionTree {
    pub fn root(&self) -> &AffineElement {
        &self.nodes[0].element
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].minimal)
    }

    pub fn paths(&self, r: &Reducer<'_>) -> Result<Vec<ReductionPath>> {
        let mut into = vec![None; self.nodes.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            into[edge.to] = Some(e);
        }
        let mut out = Vec::new();
        for leaf in self.leaves() {
            let mut edges = Vec::new();
            let mut cur = leaf;
            while let Some(e) = into[cur] {
                edges.push(e);
                cur = self.edges[e].from;
            }
            edges.reverse();
            let l1 = edges
                .iter()
                .filter(|&&e| self.edges[e].kind == EdgeKind::I)
                .count() as u32;
            let l2 = edges.len() as u32 - l1;
            let end = self.nodes[leaf].element.clone();
            out.push(ReductionPath {
                edges,
                l1,
                l2,
                class: psi(r.group(), &end)?,
                end,
            });
        }
        Ok(out)
    }

    pub fn to_json(&self, r: &Reducer<'_>) -> Result<serde_json::Value> {
        let aw = r.group();
        let nodes: Vec<_> = self
            .nodes
            .iter()
            .map(|n| json!({"elt": aw.format(&n.element), "len": n.length}))
            .collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "from": e.from,
                    "to": e.to,
                    "kind": e.kind,
                    "pivot": format!("s{}", e.pivot),
                    "witness": e.witness.iter().map(|k| format!("s{k}")).collect::<Vec<_>>(),
                })
            })
            .collect();
        let paths: Vec<_> = self
            .paths(r)?
            .iter()
            .map(|p| {
                json!({
                    "end": aw.format(&p.end),
                    "lI": p.l1,
                    "lII": p.l2,
                    "b": {"newton": p.class.newton, "kottwitz": p.class.kottwitz},
                })
            })
            .collect();
        Ok(json!({"nodes": nodes, "edges": edges, "paths": paths}))
    }

    pub fn to_dot(&self, r: &Reducer<'_>) -> String {
        let aw = r.group();
        let mut s = String::from("digraph reduction {\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let style = if n.minimal { ", style=bold" } else { "" };
            let _ = writeln!(
                s,
                "  n{i} [label=\"{} ({})\"{style}];",
                aw.format(&n.element),
                n.length
            );
        }
        for e in &self.edges {
            let label = match e.kind {
                EdgeKind::I => "I",
                EdgeKind::II => "II",
            };
            let _ = writeln!(
                s,
                "  n{} -> n{} [label=\"{label} s{}\"];",
                e.from, e.to, e.pivot
            );
        }
        s.push_str("}\n");
        s
    }
}
