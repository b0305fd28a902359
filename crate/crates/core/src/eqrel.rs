//! Relations `R ⊂ X × X` presented by ideals in doubled variables, and the
//! four axioms of a finite equivalence relation.
//!
//! For a product ambient `X = ⊔ X_a` the relation splits into blocks
//! `R_ab ⊂ X_a × X_b`, each an ideal of the ring in copy 1 of `X_a`'s
//! variables and copy 2 of `X_b`'s. A block may be the unit ideal.

use std::fmt;

use crate::ambient::{AmbientRef, Element};
use crate::error::{Error, Result};
use crate::groebner::{finite_over_block, ideal_intersect, radical_member, Ideal};
use crate::invariants::GroupAction;
use crate::poly::{PolyRing, Polynomial, RingRef, VarTag};

/// Scheme-theoretic membership, or membership up to radicals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Scheme,
    Set,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Scheme => "scheme",
            Mode::Set => "set",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "scheme" => Ok(Mode::Scheme),
            "set" => Ok(Mode::Set),
            _ => Err(Error::Unsupported(format!("mode `{s}`"))),
        }
    }
}

/// Variable names of the three copies of every component.
#[derive(Clone, Debug)]
pub struct Copies {
    ambient: AmbientRef,
    names: Vec<[Vec<String>; 3]>,
}

fn copy_name(name: &str, k: usize) -> String {
    if name.ends_with(|c: char| c.is_ascii_digit()) {
        format!("{name}_{k}")
    } else {
        format!("{name}{k}")
    }
}

impl Copies {
    /// `x` becomes `x1, x2, x3`; a name already ending in a digit gets
    /// `_1, _2, _3`.
    pub fn suffixed(ambient: &AmbientRef) -> Copies {
        let names = ambient
            .components()
            .iter()
            .map(|c| std::array::from_fn(|k| c.ring().names().iter().map(|n| copy_name(n, k + 1)).collect()))
            .collect();
        Copies {
            ambient: ambient.clone(),
            names,
        }
    }

    /// Caller-chosen names, one triple per component.
    pub fn explicit(ambient: &AmbientRef, names: Vec<[Vec<String>; 3]>) -> Result<Copies> {
        if names.len() != ambient.ncomponents() {
            return Err(Error::ComponentMismatch {
                expected: ambient.ncomponents(),
                found: names.len(),
            });
        }
        for (c, triple) in ambient.components().iter().zip(&names) {
            for copy in triple {
                if copy.len() != c.ring().nvars() {
                    return Err(Error::VariableCountMismatch {
                        expected: c.ring().nvars(),
                        found: copy.len(),
                    });
                }
            }
        }
        Ok(Copies {
            ambient: ambient.clone(),
            names,
        })
    }

    /// Base names `stem0 + s` become `stem_k + s` in copy `k`, e.g. `x1`
    /// becomes `y1` and `z1` with stems `x, y, z`.
    pub fn with_stems(ambient: &AmbientRef, stems: [&str; 3]) -> Result<Copies> {
        let mut names = Vec::new();
        for c in ambient.components() {
            let mut triple: [Vec<String>; 3] = Default::default();
            for n in c.ring().names() {
                let Some(rest) = n.strip_prefix(stems[0]) else {
                    return Err(Error::UnknownVariable(format!("{n} (expected prefix {})", stems[0])));
                };
                for (k, stem) in stems.iter().enumerate() {
                    triple[k].push(format!("{stem}{rest}"));
                }
            }
            names.push(triple);
        }
        Copies::explicit(ambient, names)
    }

    /// The same names over another ambient with matching shape, e.g.
    /// after a change of field.
    pub fn rebased(&self, ambient: &AmbientRef) -> Result<Copies> {
        Copies::explicit(ambient, self.names.clone())
    }

    pub fn ambient(&self) -> &AmbientRef {
        &self.ambient
    }

    pub fn names(&self, component: usize, copy: usize) -> &[String] {
        &self.names[component][copy - 1]
    }

    fn build(&self, parts: &[(usize, usize)]) -> Result<RingRef> {
        let mut names = Vec::new();
        let mut tags = Vec::new();
        for &(a, k) in parts {
            names.extend(self.names[a][k - 1].iter().cloned());
            tags.extend(std::iter::repeat(VarTag::Copy(k as u8)).take(self.names[a][k - 1].len()));
        }
        let base = self.ambient.component(parts[0].0).ring();
        Ok(PolyRing::with_tags(base.field(), names, tags)?.with_budget(base.budget()))
    }

    /// `k[x^(a) copy 1, x^(b) copy 2]`.
    pub fn pair_ring(&self, a: usize, b: usize) -> Result<RingRef> {
        self.build(&[(a, 1), (b, 2)])
    }

    /// `k[x^(a) copy 1, x^(b) copy 2, x^(c) copy 3]`.
    pub fn triple_ring(&self, a: usize, b: usize, c: usize) -> Result<RingRef> {
        self.build(&[(a, 1), (b, 2), (c, 3)])
    }

    pub(crate) fn nvars(&self, a: usize) -> usize {
        self.ambient.component(a).ring().nvars()
    }

    /// Moves a polynomial of component `a` into `target`, placing its
    /// variables starting at `offset`.
    pub(crate) fn place(&self, p: &Polynomial, target: &RingRef, offset: usize) -> Polynomial {
        let map: Vec<usize> = (0..p.ring().nvars()).map(|i| offset + i).collect();
        p.map_vars(target, &map)
    }
}

/// An ideal `I(x,y)` per ordered pair of components, each containing
/// `Q_a(x) + Q_b(y)`; optionally remembering the map `f_1..f_m` and a
/// cocycle `f` with `I = J + (f)`.
#[derive(Clone, Debug)]
pub struct RelationPresentation {
    copies: Copies,
    blocks: Vec<Vec<Ideal>>,
    maps: Option<Vec<Element>>,
    cocycle: Option<Polynomial>,
}

impl RelationPresentation {
    /// `blocks[a][b]` must live in `copies.pair_ring(a, b)`; the moduli of
    /// both factors are added.
    pub fn from_blocks(copies: Copies, blocks: Vec<Vec<Vec<Polynomial>>>) -> Result<RelationPresentation> {
        let n = copies.ambient.ncomponents();
        if blocks.len() != n || blocks.iter().any(|row| row.len() != n) {
            return Err(Error::ComponentMismatch {
                expected: n,
                found: blocks.len(),
            });
        }
        let mut out = Vec::new();
        for (a, row) in blocks.into_iter().enumerate() {
            let mut r = Vec::new();
            for (b, gens) in row.into_iter().enumerate() {
                let ring = copies.pair_ring(a, b)?;
                for g in &gens {
                    if g.ring().names() != ring.names() {
                        return Err(Error::RingMismatch);
                    }
                }
                r.push(Self::with_moduli(&copies, a, b, &ring, gens)?);
            }
            out.push(r);
        }
        Ok(RelationPresentation {
            copies,
            blocks: out,
            maps: None,
            cocycle: None,
        })
    }

    /// Single-component relation with suffixed copy names.
    pub fn from_ideal(ambient: &AmbientRef, gens: Vec<Polynomial>) -> Result<RelationPresentation> {
        ambient.single()?;
        Self::from_blocks(Copies::suffixed(ambient), vec![vec![gens]])
    }

    fn with_moduli(copies: &Copies, a: usize, b: usize, ring: &RingRef, mut gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in copies.ambient.component(a).modulus().gens() {
            gens.push(copies.place(g, ring, 0));
        }
        for g in copies.ambient.component(b).modulus().gens() {
            gens.push(copies.place(g, ring, copies.nvars(a)));
        }
        Ideal::new(ring, gens).canonical()
    }

    pub fn copies(&self) -> &Copies {
        &self.copies
    }

    pub fn ambient(&self) -> &AmbientRef {
        &self.copies.ambient
    }

    pub fn block(&self, a: usize, b: usize) -> &Ideal {
        &self.blocks[a][b]
    }

    /// The ideal of a single-component relation.
    pub fn ideal(&self) -> Result<&Ideal> {
        self.ambient().single()?;
        Ok(&self.blocks[0][0])
    }

    pub fn maps(&self) -> Option<&[Element]> {
        self.maps.as_deref()
    }

    pub fn cocycle(&self) -> Option<&Polynomial> {
        self.cocycle.as_ref()
    }

    /// `I + (f)` for a single-component relation, remembering `f`.
    pub fn with_cocycle(&self, f: &Polynomial) -> Result<RelationPresentation> {
        let ideal = self.ideal()?;
        if f.ring().names() != ideal.ring().names() {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        out.blocks[0][0] = ideal.with_gens(&[f.reorder(ideal.ring())]).canonical()?;
        out.cocycle = Some(f.reorder(ideal.ring()));
        Ok(out)
    }

    /// The image of `I_ab` under exchanging the two factors, as an ideal of
    /// `pair_ring(b, a)`.
    pub fn swapped_block(&self, a: usize, b: usize) -> Result<Ideal> {
        let target = self.copies.pair_ring(b, a)?;
        let (na, nb) = (self.copies.nvars(a), self.copies.nvars(b));
        let map: Vec<usize> = (0..na).map(|i| nb + i).chain(0..nb).collect();
        Ok(self.blocks[a][b].map_vars(&target, &map))
    }

    /// The relation with the two factors exchanged.
    pub fn swap(&self) -> Result<RelationPresentation> {
        let n = self.blocks.len();
        let mut blocks = Vec::new();
        for a in 0..n {
            let mut row = Vec::new();
            for b in 0..n {
                row.push(self.swapped_block(b, a)?.canonical()?);
            }
            blocks.push(row);
        }
        Ok(RelationPresentation {
            copies: self.copies.clone(),
            blocks,
            maps: None,
            cocycle: None,
        })
    }
}

/// `I = (f_i(x) - f_i(y)) + Q(x) + Q(y)`; for a product ambient, block
/// `ab` uses the `a`-th and `b`-th parts of every `f_i`.
pub fn relation_from_map(ambient: &AmbientRef, maps: &[Element]) -> Result<RelationPresentation> {
    relation_from_map_with(Copies::suffixed(ambient), maps)
}

/// [`relation_from_map`] with chosen copy names.
pub fn relation_from_map_with(copies: Copies, maps: &[Element]) -> Result<RelationPresentation> {
    let n = copies.ambient.ncomponents();
    let mut blocks = Vec::new();
    for a in 0..n {
        let mut row = Vec::new();
        for b in 0..n {
            let ring = copies.pair_ring(a, b)?;
            let na = copies.nvars(a);
            let gens = maps
                .iter()
                .map(|f| &copies.place(f.part(a), &ring, 0) - &copies.place(f.part(b), &ring, na))
                .collect();
            row.push(gens);
        }
        blocks.push(row);
    }
    let mut r = RelationPresentation::from_blocks(copies, blocks)?;
    r.maps = Some(maps.to_vec());
    Ok(r)
}

/// `I = ⋂_g (y - g·x)` for a linear action on a polynomial ring.
pub fn relation_from_group_action(group: &GroupAction) -> Result<RelationPresentation> {
    let ambient = group.ambient();
    let copies = Copies::suffixed(&ambient);
    let ring = copies.pair_ring(0, 0)?;
    let n = group.ring().nvars();
    let mut acc: Option<Ideal> = None;
    for g in group.elements() {
        let gens = (0..n)
            .map(|i| &Polynomial::var(&ring, n + i) - &copies.place(&g[i], &ring, 0))
            .collect();
        let graph = Ideal::new(&ring, gens);
        acc = Some(match acc {
            None => graph,
            Some(i) => ideal_intersect(&i, &graph)?,
        });
    }
    let gens = acc.map(|i| i.gens().to_vec()).unwrap_or_else(|| vec![Polynomial::one(&ring)]);
    RelationPresentation::from_blocks(copies, vec![vec![gens]])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Reflexivity,
    Symmetry,
    Transitivity,
    Finiteness,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Reflexivity, Axiom::Symmetry, Axiom::Transitivity, Axiom::Finiteness];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Symmetry => "symmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Finiteness => "finiteness",
        }
    }
}

/// Outcome of one axiom. `blocks` names the components involved in a
/// failure.
#[derive(Clone, Debug)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub passed: bool,
    pub witness: Option<Polynomial>,
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub mode: Mode,
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: Axiom) -> &AxiomVerdict {
        self.verdicts.iter().find(|v| v.axiom == axiom).expect("all axioms are checked")
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.verdict(axiom).passed
    }

    pub fn witness(&self, axiom: Axiom) -> Option<&Polynomial> {
        self.verdict(axiom).witness.as_ref()
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

fn member(f: &Polynomial, ideal: &Ideal, mode: Mode) -> Result<bool> {
    match mode {
        Mode::Scheme => ideal.contains(f),
        Mode::Set => radical_member(f, ideal),
    }
}

fn verdict(axiom: Axiom, failure: Option<(Polynomial, Vec<usize>)>) -> AxiomVerdict {
    match failure {
        None => AxiomVerdict {
            axiom,
            passed: true,
            witness: None,
            blocks: Vec::new(),
        },
        Some((w, blocks)) => AxiomVerdict {
            axiom,
            passed: false,
            witness: Some(w),
            blocks,
        },
    }
}

/// Checks the axioms. In set mode reflexivity, symmetry and transitivity
/// use radical membership; finiteness is the same in both modes.
///
/// Set-mode transitivity tests `I(x,z) ⊂ rad(I(x,y) + I(y,z))`, which is
/// the reduced fibre product condition.
pub fn verify_relation(r: &RelationPresentation, mode: Mode) -> Result<AxiomReport> {
    Ok(AxiomReport {
        mode,
        verdicts: vec![
            verdict(Axiom::Reflexivity, reflexivity_failure(r, mode)?),
            verdict(Axiom::Symmetry, symmetry_failure(r, mode)?),
            verdict(Axiom::Transitivity, transitivity_failure(r, mode)?),
            verdict(Axiom::Finiteness, finiteness_failure(r)?),
        ],
    })
}

/// First generator `g` of `I_aa` with `g(x, x) ∉ Q_a`.
pub fn reflexivity_failure(r: &RelationPresentation, mode: Mode) -> Result<Option<(Polynomial, Vec<usize>)>> {
    for (a, comp) in r.ambient().components().iter().enumerate() {
        let ring = comp.ring();
        let diag: Vec<Polynomial> = (0..2 * ring.nvars()).map(|i| Polynomial::var(ring, i % ring.nvars())).collect();
        for g in r.block(a, a).gens() {
            let on_diagonal = g.substitute(&diag, ring)?;
            if !member(&on_diagonal, comp.modulus(), mode)? {
                return Ok(Some((g.clone(), vec![a])));
            }
        }
    }
    Ok(None)
}

/// First generator distinguishing the swap of `I_ab` from `I_ba`.
pub fn symmetry_failure(r: &RelationPresentation, mode: Mode) -> Result<Option<(Polynomial, Vec<usize>)>> {
    let n = r.ambient().ncomponents();
    for a in 0..n {
        for b in 0..n {
            let swapped = r.swapped_block(a, b)?;
            let other = r.block(b, a);
            for g in swapped.gens() {
                if !member(g, other, mode)? {
                    return Ok(Some((g.clone(), vec![b, a])));
                }
            }
        }
    }
    Ok(None)
}

/// First generator of `I_ac(x, z)` outside `I_ab(x, y) + I_bc(y, z)`.
pub fn transitivity_failure(r: &RelationPresentation, mode: Mode) -> Result<Option<(Polynomial, Vec<usize>)>> {
    let n = r.ambient().ncomponents();
    let c = &r.copies;
    for a in 0..n {
        for cc in 0..n {
            for b in 0..n {
                let ring = c.triple_ring(a, b, cc)?;
                let (na, nb) = (c.nvars(a), c.nvars(b));
                let ab: Vec<usize> = (0..na + nb).collect();
                let bc: Vec<usize> = (na..na + nb + c.nvars(cc)).collect();
                let ac: Vec<usize> = (0..na).chain(na + nb..na + nb + c.nvars(cc)).collect();
                let joint = r.block(a, b).map_vars(&ring, &ab).sum(&r.block(b, cc).map_vars(&ring, &bc));
                for g in r.block(a, cc).gens() {
                    let g = g.map_vars(&ring, &ac);
                    if !member(&g, &joint, mode)? {
                        return Ok(Some((g, vec![a, b, cc])));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Both projections `R_ab -> X_a` and `R_ab -> X_b` must be finite; the
/// witness is a variable that is not integral.
pub fn finiteness_failure(r: &RelationPresentation) -> Result<Option<(Polynomial, Vec<usize>)>> {
    let n = r.ambient().ncomponents();
    for a in 0..n {
        for b in 0..n {
            let ideal = r.block(a, b);
            let ring = ideal.ring();
            let (na, nb) = (r.copies.nvars(a), r.copies.nvars(b));
            let first: Vec<usize> = (0..na).collect();
            let second: Vec<usize> = (na..na + nb).collect();
            for (base, other) in [(&first, &second), (&second, &first)] {
                if !finite_over_block(ideal, base)? {
                    let w = other
                        .iter()
                        .copied()
                        .find(|&v| !finite_over_block(ideal, &[base.as_slice(), &[v]].concat()).unwrap_or(false))
                        .unwrap_or(other[0]);
                    return Ok(Some((Polynomial::var(ring, w), vec![a, b])));
                }
            }
        }
    }
    Ok(None)
}
