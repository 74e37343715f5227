//! Multi-threaded search driver.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use trit_codes::codes::{Certificate, SearchDriver, Sequential};

/// Hands out partitions in index order to a pool of scoped threads and
/// keeps the hit with the lowest index, which makes the result the same as
/// a sequential scan.
#[derive(Copy, Clone, Debug)]
pub struct Threaded {
    pub workers: usize,
}

impl SearchDriver for Threaded {
    fn first_hit(
        &self,
        parts: usize,
        task: &(dyn Fn(usize) -> Option<Certificate> + Sync),
    ) -> Option<Certificate> {
        if self.workers <= 1 || parts <= 1 {
            return Sequential.first_hit(parts, task);
        }
        let next = AtomicUsize::new(0);
        let best_index = AtomicUsize::new(usize::MAX);
        let best: Mutex<Option<(usize, Certificate)>> = Mutex::new(None);
        thread::scope(|scope| {
            for _ in 0..self.workers.min(parts) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= parts || i > best_index.load(Ordering::Acquire) {
                        break;
                    }
                    if let Some(cert) = task(i) {
                        let mut slot = best.lock().expect("search worker panicked");
                        if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                            *slot = Some((i, cert));
                            best_index.fetch_min(i, Ordering::AcqRel);
                        }
                        // This worker only sees larger indices from here on.
                        break;
                    }
                });
            }
        });
        best.into_inner()
            .expect("search worker panicked")
            .map(|(_, cert)| cert)
    }
}
