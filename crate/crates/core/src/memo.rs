use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

/// Read-mostly cache keyed by a small parameter. Population is idempotent:
/// two threads racing on the same key compute the same value and one wins.
pub(crate) struct Memo<K, V> {
    cell: OnceLock<RwLock<HashMap<K, Arc<V>>>>,
}

impl<K: Eq + Hash + Copy, V> Memo<K, V> {
    pub const fn new() -> Self {
        Self {
            cell: OnceLock::new(),
        }
    }

    pub fn get_or_try_insert<E>(&self, key: K, build: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        let map = self.cell.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(v) = map.read().expect("memo lock poisoned").get(&key) {
            return Ok(Arc::clone(v));
        }
        let value = Arc::new(build()?);
        let mut guard = map.write().expect("memo lock poisoned");
        Ok(Arc::clone(guard.entry(key).or_insert(value)))
    }
}
