//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the closures run on the current rayon pool;
//! without it they run in order on the calling thread. Both paths return the
//! same value: `find_map_first` yields the hit with the smallest index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    items.par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    F: Fn(&T) -> Option<R>,
{
    items.iter().find_map(f)
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Runs `f` on items until the first one (by index) that returns a hit.
///
/// Returns that hit with its index, plus the side output `S` of every item
/// up to and including it (of all items if none hits). Items after the hit
/// may run speculatively on other threads; their output is discarded, so
/// the result does not depend on the thread count.
pub fn first_hit<T, R, S, F>(items: &[T], f: F) -> (Option<(usize, R)>, Vec<S>)
where
    T: Sync,
    R: Send,
    S: Send,
    F: Fn(&T) -> (Option<R>, S) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use std::sync::atomic::{AtomicUsize, Ordering};
        let best = AtomicUsize::new(usize::MAX);
        let mut out: Vec<Option<(Option<R>, S)>> = items
            .par_iter()
            .enumerate()
            .map(|(i, item)| {
                if i > best.load(Ordering::Relaxed) {
                    return None;
                }
                let (hit, side) = f(item);
                if hit.is_some() {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                Some((hit, side))
            })
            .collect();
        let cut = best.into_inner();
        if cut != usize::MAX {
            out.truncate(cut + 1);
        }
        let mut sides = Vec::with_capacity(out.len());
        let mut found = None;
        for (i, slot) in out.into_iter().enumerate() {
            let (hit, side) = slot.expect("items up to the first hit always run");
            sides.push(side);
            if i == cut {
                found = hit.map(|r| (i, r));
            }
        }
        (found, sides)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut sides = Vec::new();
        for (i, item) in items.iter().enumerate() {
            let (hit, side) = f(item);
            sides.push(side);
            if let Some(r) = hit {
                return (Some((i, r)), sides);
            }
        }
        (None, sides)
    }
}

/// Number of worker threads the helpers above will use.
pub fn threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
