//! Exact permutation-group computations: orbits, stabilizers, orders,
//! transitivity, primitivity and set actions.

mod chain;
mod perm;

pub use perm::Permutation;

use crate::error::{Error, Result};
use chain::StabilizerChain;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

/// Default cap on breadth-first set-orbit closures (number of distinct images).
pub const DEFAULT_ORBIT_BUDGET: usize = 10_000_000;

/// A partition of `{0, .., degree-1}` into cells of equal size, witnessing
/// imprimitivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    degree: usize,
    parts: Vec<Vec<u32>>,
}

impl BlockSystem {
    fn from_cell_labels(labels: &[u32]) -> Self {
        let mut by_label: HashMap<u32, Vec<u32>> = HashMap::new();
        for (point, &label) in labels.iter().enumerate() {
            by_label.entry(label).or_default().push(point as u32);
        }
        let mut parts: Vec<Vec<u32>> = by_label.into_values().collect();
        for part in &mut parts {
            part.sort_unstable();
        }
        parts.sort();
        BlockSystem {
            degree: labels.len(),
            parts,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parts(&self) -> &[Vec<u32>] {
        &self.parts
    }

    pub fn cell_size(&self) -> usize {
        self.parts[0].len()
    }

    /// Cells are disjoint, nonempty, of equal size, and cover all points.
    pub fn is_valid(&self) -> bool {
        if self.parts.is_empty() {
            return false;
        }
        let size = self.parts[0].len();
        if size == 0 || self.parts.len() * size != self.degree {
            return false;
        }
        let mut seen = vec![false; self.degree];
        for part in &self.parts {
            if part.len() != size {
                return false;
            }
            for &x in part {
                if (x as usize) >= self.degree || seen[x as usize] {
                    return false;
                }
                seen[x as usize] = true;
            }
        }
        true
    }
}

/// Outcome of a primitivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    Imprimitive(BlockSystem),
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }

    pub fn witness(&self) -> Option<&BlockSystem> {
        match self {
            Primitivity::Primitive => None,
            Primitivity::Imprimitive(sys) => Some(sys),
        }
    }
}

/// A permutation group given by generators, with a lazily built stabilizer
/// chain for order and membership queries.
///
/// Groups are immutable after construction; all queries are read-only and the
/// chain is built at most once behind a `OnceLock`.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    /// Builds a group from generators, all of which must share `degree`.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn identity_group(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    /// Exact group order. The empty generating set yields 1.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    /// The orbit of `point`, sorted.
    pub fn orbit(&self, point: u32) -> Result<Vec<u32>> {
        if point as usize >= self.degree {
            return Err(Error::IndexOutOfRange {
                index: point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok((0..self.degree as u32)
            .filter(|&x| seen[x as usize])
            .collect())
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree as u32 {
            if seen[start as usize] {
                continue;
            }
            let orbit = self.orbit(start).expect("start < degree");
            for &x in &orbit {
                seen[x as usize] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1
            || self
                .orbit(0)
                .map(|o| o.len() == self.degree)
                .unwrap_or(false)
    }

    /// Generators of the stabilizer of `point`, via Schreier's lemma applied
    /// to a breadth-first transversal of the orbit of `point`.
    pub fn point_stabilizer(&self, point: u32) -> Result<PermGroup> {
        if point as usize >= self.degree {
            return Err(Error::IndexOutOfRange {
                index: point,
                degree: self.degree,
            });
        }
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[point as usize] = Some(Permutation::identity(self.degree));
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if transversal[y as usize].is_none() {
                    transversal[y as usize] =
                        Some(transversal[x as usize].as_ref().unwrap().then(g));
                    queue.push_back(y);
                }
            }
        }
        let mut gens: Vec<Permutation> = Vec::new();
        let mut seen: HashSet<Permutation> = HashSet::new();
        for x in 0..self.degree as u32 {
            let Some(rep) = &transversal[x as usize] else {
                continue;
            };
            for g in &self.generators {
                let target = transversal[g.apply(x) as usize].as_ref().unwrap();
                let schreier = rep.then(g).then(&target.inverse());
                if !schreier.is_identity() && seen.insert(schreier.clone()) {
                    gens.push(schreier);
                }
            }
        }
        PermGroup::new(self.degree, gens)
    }

    /// Orbit lengths of the stabilizer of `point` on all points, sorted;
    /// includes the trivial orbit of length 1 and sums to the degree.
    pub fn subdegrees(&self, point: u32) -> Result<Vec<usize>> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let stab = self.point_stabilizer(point)?;
        let mut lengths: Vec<usize> = stab.orbits().into_iter().map(|o| o.len()).collect();
        lengths.sort_unstable();
        Ok(lengths)
    }

    /// Minimal-block primitivity test.
    ///
    /// For each pair `(0, beta)` the finest block system whose cell contains
    /// both points is computed by union-find refinement; the group is
    /// primitive iff every such system is trivial. When imprimitive, the first
    /// nontrivial system encountered (beta ascending) is the witness.
    pub fn is_primitive(&self) -> Result<Primitivity> {
        if self.degree < 2 {
            return Err(Error::InvalidArgument(
                "primitivity requires degree >= 2".into(),
            ));
        }
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        for beta in 1..self.degree as u32 {
            let labels = self.minimal_block_labels(0, beta);
            let cell_of_zero = labels.iter().filter(|&&l| l == labels[0]).count();
            if cell_of_zero < self.degree {
                let system = BlockSystem::from_cell_labels(&labels);
                debug_assert!(system.is_valid());
                return Ok(Primitivity::Imprimitive(system));
            }
        }
        Ok(Primitivity::Primitive)
    }

    /// Union-find refinement producing the finest G-invariant partition in
    /// which `a` and `b` share a cell. Labels are union-find roots.
    fn minimal_block_labels(&self, a: u32, b: u32) -> Vec<u32> {
        let mut parent: Vec<u32> = (0..self.degree as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut queue = VecDeque::new();
        let root = find(&mut parent, a);
        parent[b as usize] = root;
        queue.push_back((a, b));
        while let Some((x, y)) = queue.pop_front() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
                if rx != ry {
                    parent[ry as usize] = rx;
                    queue.push_back((gx, gy));
                }
            }
        }
        (0..self.degree as u32)
            .map(|x| find(&mut parent, x))
            .collect()
    }

    /// All distinct images of `set` under the group, each sorted, the list
    /// sorted, computed by breadth-first closure with the default budget.
    pub fn orbit_of_set(&self, set: &[u32]) -> Result<Vec<Vec<u32>>> {
        self.orbit_of_set_with_budget(set, DEFAULT_ORBIT_BUDGET)
    }

    /// As `orbit_of_set`, failing once more than `budget` distinct images
    /// have been found.
    pub fn orbit_of_set_with_budget(&self, set: &[u32], budget: usize) -> Result<Vec<Vec<u32>>> {
        for &x in set {
            if x as usize >= self.degree {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    degree: self.degree,
                });
            }
        }
        let mut start: Vec<u32> = set.to_vec();
        start.sort_unstable();
        start.dedup();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for g in &self.generators {
                let image = g.apply_set(&s);
                if !seen.contains(&image) {
                    if seen.len() == budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    seen.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }
        let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `|G| / |orbit of set|`, the order of the setwise stabilizer.
    pub fn setwise_stabilizer_order(&self, set: &[u32]) -> Result<u128> {
        let orbit_len = self.orbit_of_set(set)?.len() as u128;
        Ok(self.order() / orbit_len)
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} generators)",
            self.degree,
            self.generators.len()
        )
    }
}

/// Renders a group in the group file format: a `degree <v>` header line
/// followed by one permutation per line as space-separated 0-based images.
pub fn write_group_file(group: &PermGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        let images: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
        out.push_str(&images.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the group file format. Lines starting with `#` are comments.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if degree.is_none() {
            let rest = line.strip_prefix("degree").ok_or(Error::Parse {
                line: lineno,
                message: "expected `degree <v>` header".into(),
            })?;
            let v: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid degree `{}`", rest.trim()),
            })?;
            degree = Some(v);
            continue;
        }
        let deg = degree.unwrap();
        let images: Vec<u32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("invalid point `{tok}`"),
                })
            })
            .collect::<Result<_>>()?;
        if images.len() != deg {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected {} images, found {}", deg, images.len()),
            });
        }
        let perm = Permutation::from_images(images).map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        gens.push(perm);
    }
    let degree = degree.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `degree <v>` header".into(),
    })?;
    PermGroup::new(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[u32]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    fn cyclic(degree: usize) -> PermGroup {
        let images: Vec<u32> = (0..degree as u32)
            .map(|i| (i + 1) % degree as u32)
            .collect();
        PermGroup::new(degree, vec![Permutation::from_images(images).unwrap()]).unwrap()
    }

    #[test]
    fn empty_generator_set_is_trivial() {
        let g = PermGroup::identity_group(5);
        assert_eq!(g.order(), 1);
        assert_eq!(g.orbit(3).unwrap(), vec![3]);
    }

    #[test]
    fn cyclic_shift_is_transitive() {
        let g = cyclic(7);
        assert_eq!(g.orbit(0).unwrap(), (0..7).collect::<Vec<u32>>());
        assert_eq!(g.order(), 7);
        // regular action: all subdegrees are 1
        assert_eq!(g.subdegrees(0).unwrap(), vec![1; 7]);
    }

    #[test]
    fn orbit_rejects_bad_point() {
        let g = cyclic(5);
        assert!(matches!(g.orbit(5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn stabilizer_of_identity_group() {
        let g = PermGroup::identity_group(4);
        let stab = g.point_stabilizer(0).unwrap();
        assert_eq!(stab.order(), 1);
    }

    #[test]
    fn translation_group_of_f2_4_is_imprimitive() {
        // Generators: xor by 1, 2, 4, 8 on 16 points.
        let gens: Vec<Permutation> = [1u32, 2, 4, 8]
            .iter()
            .map(|&t| perm(&(0..16).map(|x| x ^ t).collect::<Vec<u32>>()))
            .collect();
        let g = PermGroup::new(16, gens).unwrap();
        assert_eq!(g.order(), 16);
        let prim = g.is_primitive().unwrap();
        let witness = prim.witness().expect("translation group is imprimitive");
        assert_eq!(witness.cell_size(), 2);
        assert!(witness.is_valid());
    }

    #[test]
    fn symmetric_group_on_pairs() {
        let gens = vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])];
        let g = PermGroup::new(4, gens).unwrap();
        assert_eq!(g.order(), 24);
        let orbit = g.orbit_of_set(&[0, 1]).unwrap();
        assert_eq!(orbit.len(), 6);
        assert_eq!(g.setwise_stabilizer_order(&[0, 1]).unwrap(), 4);
        assert!(g.is_primitive().unwrap().is_primitive());
    }

    #[test]
    fn identity_group_set_orbit() {
        let g = PermGroup::identity_group(5);
        assert_eq!(g.orbit_of_set(&[1, 2]).unwrap(), vec![vec![1, 2]]);
        assert_eq!(g.setwise_stabilizer_order(&[1, 2]).unwrap(), 1);
    }

    #[test]
    fn orbit_budget_is_enforced() {
        let gens = vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])];
        let g = PermGroup::new(4, gens).unwrap();
        let err = g.orbit_of_set_with_budget(&[0, 1], 3).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 3 });
    }

    #[test]
    fn group_file_round_trip() {
        let gens = vec![perm(&[1, 2, 0]), perm(&[0, 2, 1])];
        let g = PermGroup::new(3, gens).unwrap();
        let text = write_group_file(&g);
        let parsed = parse_group_file(&text).unwrap();
        assert_eq!(parsed.degree(), 3);
        assert_eq!(parsed.order(), 6);
    }

    #[test]
    fn group_file_reports_line_numbers() {
        let err = parse_group_file("degree 3\n0 1\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                message: "expected 3 images, found 2".into()
            }
        );
        let err = parse_group_file("# only a comment\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn order_matches_full_closure_for_small_groups() {
        // Independent oracle: element closure, valid for order <= 1e5.
        fn closure_order(g: &PermGroup) -> usize {
            let ident = Permutation::identity(g.degree());
            let mut seen: HashSet<Permutation> = HashSet::from([ident.clone()]);
            let mut queue = VecDeque::from([ident]);
            while let Some(p) = queue.pop_front() {
                for gen in g.generators() {
                    let q = p.then(gen);
                    if seen.insert(q.clone()) {
                        queue.push_back(q);
                    }
                }
            }
            seen.len()
        }
        let s5 = PermGroup::new(5, vec![perm(&[1, 0, 2, 3, 4]), perm(&[1, 2, 3, 4, 0])]).unwrap();
        assert_eq!(s5.order(), closure_order(&s5) as u128);
        let c6 = cyclic(6);
        assert_eq!(c6.order(), closure_order(&c6) as u128);
        let d4 = PermGroup::new(4, vec![perm(&[1, 2, 3, 0]), perm(&[3, 2, 1, 0])]).unwrap();
        assert_eq!(d4.order(), closure_order(&d4) as u128);
        assert_eq!(d4.order(), 8);
    }

    #[test]
    fn primitivity_agrees_with_exhaustive_partition_check() {
        // Oracle: enumerate all partitions of the points into equal-size cells
        // and test invariance directly.
        fn primitive_by_exhaustion(g: &PermGroup) -> bool {
            let n = g.degree();
            fn partitions(points: &[u32], cell: usize) -> Vec<Vec<Vec<u32>>> {
                if points.is_empty() {
                    return vec![vec![]];
                }
                let first = points[0];
                let rest: Vec<u32> = points[1..].to_vec();
                let mut out = Vec::new();
                // choose companions for `first`
                let k = cell - 1;
                let idx: Vec<usize> = (0..rest.len()).collect();
                fn combos(idx: &[usize], k: usize) -> Vec<Vec<usize>> {
                    if k == 0 {
                        return vec![vec![]];
                    }
                    let mut out = Vec::new();
                    for (i, &x) in idx.iter().enumerate() {
                        for mut tail in combos(&idx[i + 1..], k - 1) {
                            tail.insert(0, x);
                            out.push(tail);
                        }
                    }
                    out
                }
                for combo in combos(&idx, k) {
                    let mut cell_points = vec![first];
                    cell_points.extend(combo.iter().map(|&i| rest[i]));
                    let remaining: Vec<u32> = rest
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !combo.contains(i))
                        .map(|(_, &x)| x)
                        .collect();
                    for mut tail in partitions(&remaining, cell) {
                        tail.insert(0, cell_points.clone());
                        out.push(tail);
                    }
                }
                out
            }
            let points: Vec<u32> = (0..n as u32).collect();
            for cell in 2..n {
                if !n.is_multiple_of(cell) {
                    continue;
                }
                for parts in partitions(&points, cell) {
                    let mut label = vec![0usize; n];
                    for (ci, part) in parts.iter().enumerate() {
                        for &x in part {
                            label[x as usize] = ci;
                        }
                    }
                    let invariant = g.generators().iter().all(|gen| {
                        let mut image_label: HashMap<usize, usize> = HashMap::new();
                        (0..n as u32).all(|x| {
                            let lx = label[x as usize];
                            let ly = label[gen.apply(x) as usize];
                            *image_label.entry(lx).or_insert(ly) == ly
                        })
                    });
                    if invariant {
                        return false;
                    }
                }
            }
            true
        }
        let twelve_cycle = perm(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0]);
        let reflection = perm(&[0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1]);
        let cases: Vec<PermGroup> = vec![
            cyclic(6),
            cyclic(7),
            PermGroup::new(4, vec![perm(&[1, 2, 3, 0]), perm(&[3, 2, 1, 0])]).unwrap(),
            PermGroup::new(4, vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])]).unwrap(),
            PermGroup::new(
                8,
                vec![
                    perm(&[1, 0, 3, 2, 5, 4, 7, 6]),
                    perm(&[2, 3, 4, 5, 6, 7, 0, 1]),
                ],
            )
            .unwrap(),
            cyclic(12),
            PermGroup::new(12, vec![twelve_cycle, reflection]).unwrap(),
        ];
        for g in &cases {
            assert_eq!(
                g.is_primitive().unwrap().is_primitive(),
                primitive_by_exhaustion(g),
                "disagreement for {g:?}"
            );
        }
    }
}
