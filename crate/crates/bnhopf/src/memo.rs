// SPDX-License-Identifier: MIT
//! Per-thread memo tables. Each worker thread fills its own tables, so
//! results never depend on scheduling.

use std::cell::RefCell;
use std::collections::HashMap;
use std::hash::Hash;
use std::thread::LocalKey;

pub(crate) type Table<K, V> = RefCell<HashMap<K, V>>;

pub(crate) fn memo<K, V>(table: &'static LocalKey<Table<K, V>>, key: K, compute: impl FnOnce() -> V) -> V
where
    K: Hash + Eq + Clone + 'static,
    V: Clone + 'static,
{
    if let Some(v) = table.with(|t| t.borrow().get(&key).cloned()) {
        return v;
    }
    let v = compute();
    table.with(|t| t.borrow_mut().insert(key, v.clone()));
    v
}
