//! Weyl groups as `N(T)/T`: reflection actions on 𝔥* plus matrix representatives.

use std::collections::{HashMap, VecDeque};

use nalgebra::DMatrix;
use num_complex::Complex64 as C;

use super::group::Family;
use super::roots::RootDatum;
use crate::linalg::CMat;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Reduced word in simple reflections, applied right to left.
    pub word: Vec<usize>,
    /// Representative ŵ in the normalizer of the torus (standard coordinates).
    pub matrix: CMat,
    /// Action on ε-coordinates.
    pub action: DMatrix<f64>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    pub order: usize,
    generators: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
}

fn key(action: &DMatrix<f64>) -> Vec<i64> {
    action.iter().map(|x| (x * 1e6).round() as i64).collect()
}

fn permutation(n: usize, swap: (usize, usize)) -> CMat {
    let mut m = CMat::identity(n, n);
    m[(swap.0, swap.0)] = C::new(0.0, 0.0);
    m[(swap.1, swap.1)] = C::new(0.0, 0.0);
    m[(swap.0, swap.1)] = C::new(1.0, 0.0);
    m[(swap.1, swap.0)] = C::new(1.0, 0.0);
    m
}

/// Representative of the simple reflection `s_k`.
pub fn simple_reflection_matrix(datum: &RootDatum, k: usize) -> CMat {
    let g = &datum.group;
    match (g.family, g.n) {
        (Family::SU, 2) => {
            let (o, one) = (C::new(0.0, 0.0), C::new(1.0, 0.0));
            CMat::from_row_slice(2, 2, &[o, one, -one, o])
        }
        (Family::SU, n) => {
            let mut m = permutation(n, (k, k + 1));
            let other = if k + 2 < n { n - 1 } else { 0 };
            m[(other, other)] = C::new(-1.0, 0.0);
            m
        }
        (Family::Sp, n) if k + 1 < n => {
            &permutation(2 * n, (k, k + 1)) * &permutation(2 * n, (n + k, n + k + 1))
        }
        (Family::Sp, n) => {
            let mut m = CMat::identity(2 * n, 2 * n);
            m[(n - 1, n - 1)] = C::new(0.0, 0.0);
            m[(2 * n - 1, 2 * n - 1)] = C::new(0.0, 0.0);
            m[(n - 1, 2 * n - 1)] = C::new(1.0, 0.0);
            m[(2 * n - 1, n - 1)] = C::new(-1.0, 0.0);
            m
        }
        (Family::SO, 3) => crate::linalg::diag(&[C::new(1.0, 0.0), C::new(-1.0, 0.0), C::new(-1.0, 0.0)]),
        (Family::SO, _) => {
            let mut m = &permutation(4, (0, 2)) * &permutation(4, (1, 3));
            if k == 1 {
                m[(1, 3)] = C::new(-1.0, 0.0);
                m[(3, 1)] = C::new(-1.0, 0.0);
            }
            m
        }
    }
}

pub fn weyl_group(datum: &RootDatum) -> WeylGroup {
    let l = datum.rank();
    let m = datum.group.euclid_dim();
    let generators: Vec<WeylElement> = (0..l)
        .map(|k| WeylElement {
            word: vec![k],
            matrix: simple_reflection_matrix(datum, k),
            action: datum.reflection_matrix(k),
        })
        .collect();
    let identity = WeylElement {
        word: Vec::new(),
        matrix: CMat::identity(datum.dim(), datum.dim()),
        action: DMatrix::identity(m, m),
    };
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(key(&identity.action), 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for s in &generators {
            let action = &s.action * &elements[e].action;
            let k = key(&action);
            if index.contains_key(&k) {
                continue;
            }
            let mut word = s.word.clone();
            word.extend(&elements[e].word);
            let matrix = &s.matrix * &elements[e].matrix;
            index.insert(k, elements.len());
            queue.push_back(elements.len());
            elements.push(WeylElement { word, matrix, action });
        }
    }
    WeylGroup { order: elements.len(), elements, generators, index }
}

impl WeylGroup {
    pub fn generator(&self, k: usize) -> &WeylElement {
        &self.generators[k]
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn find(&self, action: &DMatrix<f64>) -> Option<usize> {
        self.index.get(&key(action)).copied()
    }

    /// Index of `s_k · w`.
    pub fn left_mul(&self, k: usize, w: usize) -> usize {
        self.find(&(&self.generators[k].action * &self.elements[w].action)).expect("closed")
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.find(&(&self.elements[a].action * &self.elements[b].action)).expect("closed")
    }

    /// Element with the given word (applied right to left).
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().rev().fold(0, |w, &k| self.left_mul(k, w))
    }

    /// Elements of the parabolic subgroup generated by `subset`.
    pub fn parabolic(&self, subset: &[usize]) -> Vec<usize> {
        let mut seen = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for &k in subset {
                let n = self.left_mul(k, e);
                if !seen.contains(&n) {
                    seen.push(n);
                    queue.push_back(n);
                }
            }
        }
        seen
    }
}
