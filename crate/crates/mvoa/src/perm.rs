//! Permutation groups on few points: breadth-first closure and an
//! independent orbit-stabilizer order computation (a basic Schreier-Sims
//! stabilizer chain).

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

/// A permutation of `{0, .., n-1}`, stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!seen[i as usize], "not a permutation");
            seen[i as usize] = true;
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }
}

/// All elements generated by the given permutations, by breadth-first
/// closure. Panics past the safety cap.
pub fn close_group(gens: &[Perm], cap: usize) -> Vec<Perm> {
    assert!(!gens.is_empty());
    let n = gens[0].degree();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = Perm::identity(n);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                assert!(seen.len() <= cap, "group closure exceeded cap {cap}");
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

/// Group order via a stabilizer chain: the order is the product of the
/// orbit sizes of the base points, with stabilizer generators obtained as
/// Schreier generators at each level. Independent of `close_group`.
pub fn order_by_stabilizer_chain(gens: &[Perm]) -> BigUint {
    assert!(!gens.is_empty());
    let n = gens[0].degree();
    let mut order = BigUint::one();
    let mut current: Vec<Perm> = gens.to_vec();
    for base in 0..n {
        current.retain(|g| !g.is_identity());
        if current.is_empty() {
            break;
        }
        // orbit of `base` with transversal representatives
        let mut transversal: HashMap<usize, Perm> = HashMap::new();
        transversal.insert(base, Perm::identity(n));
        let mut queue = VecDeque::from([base]);
        while let Some(pt) = queue.pop_front() {
            let rep = transversal[&pt].clone();
            for g in &current {
                let img = g.apply(pt);
                if !transversal.contains_key(&img) {
                    transversal.insert(img, g.compose(&rep));
                    queue.push_back(img);
                }
            }
        }
        order *= BigUint::from(transversal.len());
        // Schreier generators for the stabilizer of `base`
        let mut stab_set: HashSet<Perm> = HashSet::new();
        for (&pt, rep) in &transversal {
            for g in &current {
                let img = g.apply(pt);
                let schreier = transversal[&img].inverse().compose(&g.compose(rep));
                debug_assert_eq!(schreier.apply(base), base);
                if !schreier.is_identity() {
                    stab_set.insert(schreier);
                }
            }
        }
        current = stab_set.into_iter().collect();
    }
    order
}
