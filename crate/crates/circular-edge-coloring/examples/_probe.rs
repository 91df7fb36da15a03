use circular_edge_coloring::generators::random_cubic_bridgeless_with_budget;
use std::time::Instant;

fn main() {
    // How fast do we find girth-6 graphs per n, and which seeds are quick?
    for n in [20usize, 30, 36, 40] {
        let start = Instant::now();
        let mut found = 0;
        for seed in 0..20u64 {
            if random_cubic_bridgeless_with_budget(n, 6, seed, 60_000).is_some() {
                found += 1;
            }
        }
        println!("n={n}: {found}/20 seeds in {:.1?}", start.elapsed());
    }
    // Timing for a batch the size of the acceptance run.
    let start = Instant::now();
    let mut got = 0;
    let mut seed = 0u64;
    let mut sizes = [20usize, 24, 28, 32, 36, 40].iter().cycle();
    while got < 100 {
        let n = *sizes.next().unwrap();
        if random_cubic_bridgeless_with_budget(n, 6, seed, 200_000).is_some() {
            got += 1;
        }
        seed += 1;
    }
    println!("100 graphs with {seed} seeds in {:.1?}", start.elapsed());
}
