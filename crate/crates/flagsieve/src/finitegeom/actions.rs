//! Permutation actions of SL(n,q) on projective objects, with the semilinear
//! and duality extensions.

use super::field::{FieldElement, FieldSpec};
use super::matrix::MatrixGL;
use super::subspace::{enumerate_subspaces, ProjSubspace};
use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation, DEFAULT_ORBIT_BUDGET};
use std::collections::HashMap;

/// Which projective objects the group permutes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionObject {
    /// 1-spaces, i.e. projective points.
    Points,
    /// i-dimensional subspaces.
    Subspaces(usize),
    /// Incident pairs (point, hyperplane); for n = 3 these are the
    /// point-line flags of the projective plane.
    IncidentFlags,
}

#[derive(Debug, Clone)]
enum ObjectList {
    Subspaces(Vec<ProjSubspace>),
    Flags(Vec<(ProjSubspace, ProjSubspace)>),
}

impl ObjectList {
    fn len(&self) -> usize {
        match self {
            ObjectList::Subspaces(v) => v.len(),
            ObjectList::Flags(v) => v.len(),
        }
    }
}

/// A permutation action of a projective group on a fixed, canonically ordered
/// object list. The group acts with the scalar kernel already factored out,
/// since it permutes canonical projective objects.
pub struct ProjectiveAction {
    pub group: PermGroup,
    field: FieldSpec,
    n: usize,
    object: ActionObject,
    objects: ObjectList,
}

impl ProjectiveAction {
    pub fn degree(&self) -> usize {
        self.objects.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn object(&self) -> ActionObject {
        self.object
    }

    /// Permutation induced on the object list by a matrix.
    pub fn permutation_of_matrix(&self, m: &MatrixGL) -> Result<Permutation> {
        let images = match &self.objects {
            ObjectList::Subspaces(v) => {
                let index: HashMap<&ProjSubspace, u32> = v.iter().zip(0u32..).collect();
                v.iter()
                    .map(|s| index[&s.apply(&self.field, m)])
                    .collect::<Vec<u32>>()
            }
            ObjectList::Flags(v) => {
                let index: HashMap<&(ProjSubspace, ProjSubspace), u32> =
                    v.iter().zip(0u32..).collect();
                v.iter()
                    .map(|(u, w)| index[&(u.apply(&self.field, m), w.apply(&self.field, m))])
                    .collect::<Vec<u32>>()
            }
        };
        Permutation::from_images(images)
    }

    fn frobenius_permutation(&self) -> Result<Permutation> {
        let field = &self.field;
        let images = match &self.objects {
            ObjectList::Subspaces(v) => {
                let index: HashMap<&ProjSubspace, u32> = v.iter().zip(0u32..).collect();
                v.iter()
                    .map(|s| index[&s.frobenius(field)])
                    .collect::<Vec<u32>>()
            }
            ObjectList::Flags(v) => {
                let index: HashMap<&(ProjSubspace, ProjSubspace), u32> =
                    v.iter().zip(0u32..).collect();
                v.iter()
                    .map(|(u, w)| index[&(u.frobenius(field), w.frobenius(field))])
                    .collect::<Vec<u32>>()
            }
        };
        Permutation::from_images(images)
    }

    fn duality_permutation(&self) -> Result<Permutation> {
        let field = &self.field;
        match &self.objects {
            ObjectList::Flags(v) => {
                let index: HashMap<&(ProjSubspace, ProjSubspace), u32> =
                    v.iter().zip(0u32..).collect();
                let images = v
                    .iter()
                    .map(|(u, w)| index[&(w.annihilator(field), u.annihilator(field))])
                    .collect::<Vec<u32>>();
                Permutation::from_images(images)
            }
            ObjectList::Subspaces(_) => Err(Error::InvalidArgument(
                "duality extension is only supported on incident flags".into(),
            )),
        }
    }
}

/// Standard generators of SL(n,q): the transvections x_{12}(w^j) for
/// 0 <= j < f (w the least primitive element, so the w^j span GF(q) over the
/// prime field) together with the signed basis cycle
/// e_1 -> e_2 -> ... -> e_n -> (-1)^{n-1} e_1.
pub fn sl_generators(field: &FieldSpec, n: usize) -> Vec<MatrixGL> {
    let w = field.primitive_element();
    let mut gens = Vec::with_capacity(field.f() as usize + 1);
    for j in 0..field.f() {
        let mut entries: Vec<FieldElement> = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = field.one();
        }
        entries[1] = field.pow(w, j as u64);
        gens.push(MatrixGL::new(field, n, entries).expect("transvection is invertible"));
    }
    let mut cycle: Vec<FieldElement> = vec![0; n * n];
    for i in 0..n - 1 {
        cycle[i * n + i + 1] = field.one();
    }
    cycle[(n - 1) * n] = if (n - 1) % 2 == 1 {
        field.neg(field.one())
    } else {
        field.one()
    };
    gens.push(MatrixGL::new(field, n, cycle).expect("cycle is invertible"));
    gens
}

/// The permutation group induced by SL(n,q) on the chosen object set. The
/// degree equals the object count; acting on canonical projective objects
/// quotients out the scalar kernel, so the image is PSL(n,q).
pub fn psl_action(n: usize, field: &FieldSpec, object: ActionObject) -> Result<ProjectiveAction> {
    psl_action_with_budget(n, field, object, DEFAULT_ORBIT_BUDGET)
}

pub fn psl_action_with_budget(
    n: usize,
    field: &FieldSpec,
    object: ActionObject,
    budget: usize,
) -> Result<ProjectiveAction> {
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let objects = match object {
        ActionObject::Points => ObjectList::Subspaces(enumerate_subspaces(field, n, 1, budget)?),
        ActionObject::Subspaces(i) => {
            ObjectList::Subspaces(enumerate_subspaces(field, n, i, budget)?)
        }
        ActionObject::IncidentFlags => {
            let points = enumerate_subspaces(field, n, 1, budget)?;
            let hyperplanes = enumerate_subspaces(field, n, n - 1, budget)?;
            let mut flags = Vec::new();
            for u in &points {
                for w in &hyperplanes {
                    if w.contains(field, u) {
                        if flags.len() == budget {
                            return Err(Error::BudgetExceeded { budget });
                        }
                        flags.push((u.clone(), w.clone()));
                    }
                }
            }
            flags.sort();
            ObjectList::Flags(flags)
        }
    };
    let mut action = ProjectiveAction {
        group: PermGroup::identity_group(objects.len()),
        field: field.clone(),
        n,
        object,
        objects,
    };
    let perms: Vec<Permutation> = sl_generators(field, n)
        .iter()
        .map(|m| action.permutation_of_matrix(m))
        .collect::<Result<_>>()?;
    action.group = PermGroup::new(action.degree(), perms)?;
    Ok(action)
}

/// Extends the group by the Frobenius field automorphism (trivial for prime
/// fields) and, when `with_duality` is set, by the inverse-transpose graph
/// automorphism realized on incident flags as (U, W) -> (ann W, ann U).
pub fn extend_to_pgammal(
    action: &ProjectiveAction,
    with_duality: bool,
) -> Result<ProjectiveAction> {
    let mut gens: Vec<Permutation> = action.group.generators().to_vec();
    if action.field.f() > 1 {
        gens.push(action.frobenius_permutation()?);
    }
    if with_duality {
        gens.push(action.duality_permutation()?);
    }
    Ok(ProjectiveAction {
        group: PermGroup::new(action.degree(), gens)?,
        field: action.field.clone(),
        n: action.n,
        object: action.object,
        objects: action.objects.clone(),
    })
}
