//! Write-once memo tables shared across threads.
//!
//! Lookups and inserts take the lock briefly; the computation itself runs
//! unlocked, so recursive computations may consult the same table. Two
//! threads racing on one key both compute the same value and the second
//! insert is a no-op.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{LazyLock, Mutex};

type Table = HashMap<(TypeId, &'static str), Box<dyn Any + Send>>;

static TABLES: LazyLock<Mutex<Table>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Memoizes `compute(key)` in the table named `(Owner, name)`.
pub(crate) fn memo<Owner, K, V>(name: &'static str, key: &K, compute: impl FnOnce() -> V) -> V
where
    Owner: 'static,
    K: Hash + Eq + Clone + Send + 'static,
    V: Clone + Send + 'static,
{
    let id = (TypeId::of::<Owner>(), name);
    {
        let tables = TABLES.lock().expect("memo table poisoned");
        if let Some(table) = tables.get(&id) {
            let table = table
                .downcast_ref::<HashMap<K, V>>()
                .expect("memo table type is fixed per name");
            if let Some(v) = table.get(key) {
                return v.clone();
            }
        }
    }
    let value = compute();
    let mut tables = TABLES.lock().expect("memo table poisoned");
    let table = tables
        .entry(id)
        .or_insert_with(|| Box::new(HashMap::<K, V>::new()))
        .downcast_mut::<HashMap<K, V>>()
        .expect("memo table type is fixed per name");
    table.entry(key.clone()).or_insert_with(|| value.clone());
    value
}
