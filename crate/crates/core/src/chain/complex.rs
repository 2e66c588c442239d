//! Multigraded cochain complexes and their integer homology.
//!
//! Every differential in this crate raises the homological degree by one and
//! preserves all other gradings, so a complex is stored as independent blocks,
//! one per grading vector. Homology is computed block by block.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::matrix::SparseIntMatrix;
use super::poly::MultiPoly;
use super::snf::{smith_normal_form, SmithForm};
use crate::error::{Error, Result};

pub type Grading = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId(usize);

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ComplexBlock {
    /// Generator descriptions per degree, in canonical order.
    pub generators: BTreeMap<usize, Vec<String>>,
    /// `d_k : C^k → C^{k+1}` keyed by source degree `k`; rows index degree `k+1`.
    pub differentials: BTreeMap<usize, SparseIntMatrix>,
}

impl ComplexBlock {
    pub fn rank_at(&self, degree: usize) -> usize {
        self.generators.get(&degree).map_or(0, Vec::len)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.keys().copied()
    }

    fn euler(&self) -> i64 {
        self.generators
            .iter()
            .map(|(&k, g)| sign(k) * g.len() as i64)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradedComplex {
    grading_arity: usize,
    blocks: BTreeMap<Grading, ComplexBlock>,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

struct GenInfo {
    degree: usize,
    grading: Grading,
    slot: usize,
}

/// Incremental construction of a [`GradedComplex`].
///
/// Generators are placed in their block in insertion order, so builders that
/// insert in a canonical order get byte-identical matrices.
pub struct ComplexBuilder {
    arity: usize,
    gens: Vec<GenInfo>,
    blocks: BTreeMap<Grading, ComplexBlock>,
    entries: Vec<(GenId, GenId, i64)>,
}

impl ComplexBuilder {
    pub fn new(grading_arity: usize) -> Self {
        Self {
            arity: grading_arity,
            gens: Vec::new(),
            blocks: BTreeMap::new(),
            entries: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn add_generator(&mut self, degree: usize, grading: Grading, label: String) -> GenId {
        assert_eq!(grading.len(), self.arity, "grading arity");
        let list = self
            .blocks
            .entry(grading.clone())
            .or_default()
            .generators
            .entry(degree)
            .or_default();
        let slot = list.len();
        list.push(label);
        self.gens.push(GenInfo {
            degree,
            grading,
            slot,
        });
        GenId(self.gens.len() - 1)
    }

    /// Adds `coeff` to the coefficient of `target` in `d(source)`.
    pub fn add_entry(&mut self, source: GenId, target: GenId, coeff: i64) -> Result<()> {
        let (s, t) = (&self.gens[source.0], &self.gens[target.0]);
        if s.grading != t.grading || t.degree != s.degree + 1 {
            return Err(Error::Validation(format!(
                "differential entry from degree {} grading {:?} to degree {} grading {:?}",
                s.degree, s.grading, t.degree, t.grading
            )));
        }
        self.entries.push((source, target, coeff));
        Ok(())
    }

    /// Assembles the boundary matrices and checks `d∘d = 0`.
    pub fn build(self) -> Result<GradedComplex> {
        let mut blocks = self.blocks;
        for block in blocks.values_mut() {
            let shapes: Vec<(usize, usize, usize)> = block
                .generators
                .iter()
                .map(|(&k, g)| (k, block.generators.get(&(k + 1)).map_or(0, Vec::len), g.len()))
                .collect();
            for (k, rows, cols) in shapes {
                block.differentials.insert(k, SparseIntMatrix::new(rows, cols));
            }
        }
        for (source, target, coeff) in self.entries {
            let (s, t) = (&self.gens[source.0], &self.gens[target.0]);
            let m = blocks
                .get_mut(&s.grading)
                .and_then(|b| b.differentials.get_mut(&s.degree))
                .expect("matrix allocated for every generator degree");
            m.add_to(t.slot, s.slot, &BigInt::from(coeff));
        }
        let c = GradedComplex {
            grading_arity: self.arity,
            blocks,
        };
        c.verify_d_squared()?;
        Ok(c)
    }
}

impl GradedComplex {
    /// Assembles a complex from explicit blocks; shapes and `d∘d = 0` are checked.
    pub fn from_blocks(grading_arity: usize, blocks: BTreeMap<Grading, ComplexBlock>) -> Result<Self> {
        for (g, block) in &blocks {
            if g.len() != grading_arity {
                return Err(Error::Validation(format!("grading {g:?} has wrong arity")));
            }
            for (&k, m) in &block.differentials {
                let cols = block.rank_at(k);
                let rows = block.rank_at(k + 1);
                if m.col_count() != cols || m.row_count() != rows {
                    return Err(Error::Validation(format!(
                        "d_{k} at grading {g:?} is {}x{}, expected {rows}x{cols}",
                        m.row_count(),
                        m.col_count()
                    )));
                }
            }
        }
        let c = Self {
            grading_arity,
            blocks,
        };
        c.verify_d_squared()?;
        Ok(c)
    }

    pub fn grading_arity(&self) -> usize {
        self.grading_arity
    }

    pub fn blocks(&self) -> &BTreeMap<Grading, ComplexBlock> {
        &self.blocks
    }

    pub fn generator_count(&self) -> usize {
        self.blocks
            .values()
            .flat_map(|b| b.generators.values())
            .map(Vec::len)
            .sum()
    }

    /// `(degree, grading) → rank C^{degree, grading}`.
    pub fn chain_ranks(&self) -> BTreeMap<(Grading, usize), usize> {
        self.blocks
            .iter()
            .flat_map(|(g, b)| b.generators.iter().map(move |(&k, v)| ((g.clone(), k), v.len())))
            .collect()
    }

    pub fn verify_d_squared(&self) -> Result<()> {
        let failures: Vec<(Grading, usize)> = self
            .blocks
            .par_iter()
            .flat_map_iter(|(g, block)| {
                block.differentials.iter().filter_map(move |(&k, dk)| {
                    let next = block.differentials.get(&(k + 1))?;
                    (!next.mul(dk).is_zero()).then(|| (g.clone(), k))
                })
            })
            .collect();
        match failures.into_iter().min() {
            Some((grading, degree)) => Err(Error::Integrity { grading, degree }),
            None => Ok(()),
        }
    }

    /// Total number of nonzero boundary-matrix entries.
    pub fn nonzero_entries(&self) -> usize {
        self.blocks
            .values()
            .flat_map(|b| b.differentials.values())
            .map(SparseIntMatrix::nnz)
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologySummary {
    groups: BTreeMap<(Grading, usize), HomologyGroup>,
    euler: BTreeMap<Grading, i64>,
}

impl HomologySummary {
    pub fn group(&self, degree: usize, grading: &[u32]) -> HomologyGroup {
        self.groups
            .get(&(grading.to_vec(), degree))
            .cloned()
            .unwrap_or(HomologyGroup {
                betti: 0,
                torsion: Vec::new(),
            })
    }

    pub fn betti(&self, degree: usize, grading: &[u32]) -> usize {
        self.group(degree, grading).betti
    }

    /// `(grading, degree) → group`, including zero groups where the chain
    /// group is nonzero.
    pub fn groups(&self) -> &BTreeMap<(Grading, usize), HomologyGroup> {
        &self.groups
    }

    pub fn nonzero_groups(&self) -> impl Iterator<Item = (&(Grading, usize), &HomologyGroup)> {
        self.groups.iter().filter(|(_, h)| !h.is_zero())
    }

    pub fn euler(&self, grading: &[u32]) -> i64 {
        self.euler.get(grading).copied().unwrap_or(0)
    }

    pub fn euler_map(&self) -> &BTreeMap<Grading, i64> {
        &self.euler
    }

    pub fn total_euler(&self) -> i64 {
        self.euler.values().sum()
    }

    /// `Σ_g euler(g) · Π vars[i]^{g_i}`.
    pub fn euler_polynomial(&self, vars: &[&str]) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            self.euler
                .iter()
                .map(|(g, &e)| (g.clone(), BigInt::from(e))),
        )
    }

    /// Sorted multiset of `(degree, betti, torsion)` over nonzero groups,
    /// forgetting the gradings.
    pub fn betti_multiset(&self) -> Vec<(usize, usize, Vec<BigInt>)> {
        let mut v: Vec<_> = self
            .nonzero_groups()
            .map(|((_, k), h)| (*k, h.betti, h.torsion.clone()))
            .collect();
        v.sort();
        v
    }

    pub fn to_json(&self) -> Value {
        let mut out: Vec<Value> = self
            .groups
            .iter()
            .map(|((g, k), h)| {
                json!({
                    "degree": k,
                    "grading": g,
                    "betti": h.betti,
                    "torsion": h.torsion.iter().map(bigint_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        out.extend(
            self.euler
                .iter()
                .map(|(g, e)| json!({ "grading": g, "euler": e })),
        );
        Value::Array(out)
    }
}

pub(crate) fn bigint_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn block_homology(block: &ComplexBlock) -> (BTreeMap<usize, HomologyGroup>, i64) {
    let snfs: HashMap<usize, SmithForm> = block
        .differentials
        .iter()
        .map(|(&k, m)| (k, smith_normal_form(m)))
        .collect();
    let mut groups = BTreeMap::new();
    for (&k, gens) in &block.generators {
        let out_rank = snfs.get(&k).map_or(0, |s| s.rank);
        let (in_rank, torsion) = match k.checked_sub(1).and_then(|j| snfs.get(&j)) {
            Some(s) => (s.rank, s.torsion()),
            None => (0, Vec::new()),
        };
        groups.insert(
            k,
            HomologyGroup {
                betti: gens.len() - out_rank - in_rank,
                torsion,
            },
        );
    }
    (groups, block.euler())
}

pub fn homology(c: &GradedComplex) -> Result<HomologySummary> {
    c.verify_d_squared()?;
    let per_block: Vec<(Grading, BTreeMap<usize, HomologyGroup>, i64)> = c
        .blocks
        .par_iter()
        .map(|(g, b)| {
            let (groups, euler) = block_homology(b);
            (g.clone(), groups, euler)
        })
        .collect();
    let mut summary = HomologySummary::default();
    for (g, groups, euler) in per_block {
        let from_homology: i64 = groups.iter().map(|(&k, h)| sign(k) * h.betti as i64).sum();
        if from_homology != euler {
            return Err(Error::TheoryViolation(format!(
                "Euler characteristic at grading {g:?}: chain ranks give {euler}, Betti numbers give {from_homology}"
            )));
        }
        summary.euler.insert(g.clone(), euler);
        for (k, h) in groups {
            summary.groups.insert((g.clone(), k), h);
        }
    }
    Ok(summary)
}
