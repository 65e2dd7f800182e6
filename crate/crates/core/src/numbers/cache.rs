//! Memo tables for sequences and triangles.
//!
//! Entries are keyed by what was asked for and store the longest prefix
//! computed so far; a longer request recomputes and replaces the entry.
//! Values never depend on the order of requests.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{Kind, Triangle};
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Tag {
    Beta,
    Alpha,
    Stirling(Kind),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Key {
    tag: Tag,
    w: i64,
    params: Vec<Poly>,
}

impl Key {
    pub(crate) fn new(tag: Tag, w: i64, params: &[&Poly]) -> Self {
        Key { tag, w, params: params.iter().map(|p| (*p).clone()).collect() }
    }
}

/// Something whose length tells how many orders it covers.
pub(crate) trait Prefix {
    fn covers(&self, order: usize) -> bool;
}

impl Prefix for Vec<Poly> {
    fn covers(&self, order: usize) -> bool {
        self.len() > order
    }
}

// Triangle and Vec<Poly> are distinct types; a triangle is a Vec<Vec<Poly>>.
impl Prefix for Triangle {
    fn covers(&self, order: usize) -> bool {
        self.len() > order
    }
}

pub(crate) struct Memo<V> {
    map: Mutex<HashMap<Key, Arc<V>>>,
}

impl<V: Prefix> Memo<V> {
    fn new() -> Self {
        Memo { map: Mutex::new(HashMap::new()) }
    }

    /// Returns a value covering at least `order`, computing it outside the lock.
    /// A computed value that does not cover `order` (a failed build) is
    /// returned but not stored.
    pub(crate) fn get_or_compute(&self, key: Key, order: usize, build: impl FnOnce(usize) -> V) -> Arc<V> {
        if let Some(v) = self.map.lock().expect("memo lock").get(&key) {
            if v.covers(order) {
                return Arc::clone(v);
            }
        }
        let value = Arc::new(build(order));
        if value.covers(order) {
            let mut map = self.map.lock().expect("memo lock");
            let keep = match map.get(&key) {
                Some(existing) if existing.covers(order) => Arc::clone(existing),
                _ => {
                    map.insert(key, Arc::clone(&value));
                    value
                }
            };
            return keep;
        }
        value
    }
}

pub(crate) fn sequences() -> &'static Memo<Vec<Poly>> {
    static MEMO: OnceLock<Memo<Vec<Poly>>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}

pub(crate) fn triangles() -> &'static Memo<Triangle> {
    static MEMO: OnceLock<Memo<Triangle>> = OnceLock::new();
    MEMO.get_or_init(Memo::new)
}
