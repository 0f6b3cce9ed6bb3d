#pragma once

#include <gmpxx.h>

#include <vector>

#include "parks/board.hpp"

namespace parks {

mpz_class a002464_recurrence(unsigned n);
mpz_class a002464_explicit(unsigned n);
mpz_class stirling2(unsigned n, unsigned k);

struct CensusReport {
  mpz_class contiguous_one_sided = 0;
  mpz_class contiguous_unique_total = 0;
  mpz_class noncontiguous_one_sided = 0;
  mpz_class noncontiguous_unique_total = 0;
  mpz_class at_least_one_solution_total = 0;
};

// Closed-form counts for 4x4 one-tree puzzles with unrestricted parks.
CensusReport census_4x4_noncontiguous();

// Exhaustive count of 4x4 one-tree puzzles with contiguous parks whose
// unique solution is one fixed pinwheel arrangement. When a collector is
// given it receives each counted puzzle in canonical park labeling.
CensusReport census_4x4_contiguous(std::vector<Puzzle>* one_sided = nullptr);

// Partitions of a rows x cols grid into exactly `parts` nonempty classes,
// up to relabeling. With the connectivity filter off this is a Stirling
// number of the second kind.
mpz_class count_grid_partitions(int rows, int cols, int parts,
                                bool require_connected);

}  // namespace parks
