//! Individuals and fixed-capacity populations.

use crate::error::{Error, Result};

/// A decision vector paired with its objective vector and, once assigned,
/// its fitness value (smaller is better).
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub fitness: Option<f64>,
}

impl Individual {
    pub fn new(x: Vec<f64>, f: Vec<f64>) -> Self {
        Individual { x, f, fitness: None }
    }
}

/// An ordered collection of individuals. The steady-state loop keeps
/// `len() == capacity()` at every iteration boundary.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Individual>,
    capacity: usize,
}

impl Population {
    pub fn new(members: Vec<Individual>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::contract("population must be nonempty"));
        }
        let capacity = members.len();
        Ok(Population { members, capacity })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &Individual {
        &self.members[i]
    }

    pub(crate) fn replace(&mut self, i: usize, ind: Individual) {
        self.members[i] = ind;
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Individual> {
        self.members.iter()
    }

    pub fn into_members(self) -> Vec<Individual> {
        self.members
    }
}
