use rayon::prelude::*;

use crate::complex::{CosimplicialComplex, SimplexPool};
use crate::error::Error;
use crate::sequence::{MorseItem, MorseSequence};
use crate::stack::{lower_star_blocks, VertexMap};

use super::engine::{run, Direction};

fn process_block(k: &SimplexPool, block: &[usize]) -> Vec<MorseItem> {
    let star = CosimplicialComplex::new(k.subpool(block.iter().copied()))
        .expect("a lower star is cosimplicial");
    let ones = vec![1; star.len()];
    run(&star, &ones, Direction::Increasing, false)
        .into_iter()
        .map(|step| step.into_item(&star))
        .collect()
}

fn concatenate(parts: Vec<Vec<MorseItem>>) -> MorseSequence {
    MorseSequence::from_items(parts.into_iter().flatten().collect())
}

/// `Max(V, δ̂)` on rayon's global pool.
///
/// Every lower star is processed independently with a constant stack and
/// the per-star sequences are concatenated in the vertex order induced by
/// `f`, so the result does not depend on scheduling. Fails with
/// [`Error::NotInjective`] when `f` has ties; `max_f` on the induced stack is
/// the fallback for those.
pub fn max_lower_star(k: &SimplexPool, f: &VertexMap) -> Result<MorseSequence, Error> {
    let blocks = lower_star_blocks(k, f)?;
    let parts: Vec<Vec<MorseItem>> = blocks
        .par_iter()
        .map(|(_, b)| process_block(k, b))
        .collect();
    Ok(concatenate(parts))
}

/// `Max(V, δ̂)` with an explicit worker count. `jobs <= 1` runs on the
/// calling thread.
pub fn max_lower_star_with_jobs(
    k: &SimplexPool,
    f: &VertexMap,
    jobs: usize,
) -> Result<MorseSequence, Error> {
    let blocks = lower_star_blocks(k, f)?;
    if jobs <= 1 {
        let parts = blocks.iter().map(|(_, b)| process_block(k, b)).collect();
        return Ok(concatenate(parts));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    let parts = pool.install(|| {
        blocks
            .par_iter()
            .map(|(_, b)| process_block(k, b))
            .collect()
    });
    Ok(concatenate(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sequence::{validate, MorseItem::*};
    use crate::simplex;

    #[test]
    fn single_vertex() {
        let k = SimplexPool::new([simplex![4]]);
        let f: VertexMap = [(4, 0)].into_iter().collect();
        assert_eq!(
            max_lower_star(&k, &f).unwrap().items,
            vec![Critical(simplex![4])]
        );
    }

    #[test]
    fn edge_trace() {
        let k = SimplexPool::from_generators([simplex![1, 2]]);
        let f: VertexMap = [(1, 1), (2, 2)].into_iter().collect();
        let seq = max_lower_star_with_jobs(&k, &f, 1).unwrap();
        assert_eq!(
            seq.items,
            vec![Critical(simplex![1]), Pair(simplex![2], simplex![1, 2])]
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let k = fixtures::grid(6);
        let f: VertexMap = k
            .vertex_ids()
            .into_iter()
            .map(|v| (v, ((v as i64) * 17) % 37))
            .collect();
        assert!(f.is_theta_map());
        let one = max_lower_star_with_jobs(&k, &f, 1).unwrap();
        let four = max_lower_star_with_jobs(&k, &f, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, max_lower_star(&k, &f).unwrap());
        assert!(validate(&one, &k).is_ok());
    }

    #[test]
    fn ties_are_refused() {
        let k = SimplexPool::from_generators([simplex![1, 2]]);
        let f: VertexMap = [(1, 0), (2, 0)].into_iter().collect();
        assert!(matches!(
            max_lower_star(&k, &f),
            Err(Error::NotInjective { .. })
        ));
    }
}
