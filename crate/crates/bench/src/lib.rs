//! Fixtures shared by the kernel benchmarks.

use feq_core::identities::Grid;

/// The grid swept by the classification benchmark.
pub fn small_grid() -> Grid {
    Grid::new(3, 5, 6).excluding_degenerate()
}
