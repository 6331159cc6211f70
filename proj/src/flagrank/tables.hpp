#pragma once

#include <string>
#include <vector>

#include "flagrank/orbitrank.hpp"

namespace flagrank {

// Closed-form classification answers used to cross-check every computed
// cell.  Node indices are 1-based simple nodes (Humphreys numbering).

// Open diagonal orbit on (G/P_i)^n, P_i maximal.
bool golden_theorem1(char family, int rank, int node, int n);

// Open diagonal orbit on (G/P_I)^n for a marked set I with |I| >= 2 and
// G not of type A; delegates to golden_theorem1 when |I| == 1.
bool golden_theorem2(char family, int rank, const std::vector<int>& marked,
                     int n);

// G/P_i x G/P_i spherical (equivalently: finitely many orbits on the triple
// product), P_i maximal.
bool golden_spherical(char family, int rank, int node);

struct TableCell {
  char family = 'A';
  int rank = 0;
  std::vector<int> marked;  // 1-based nodes
  int n = 0;                // 0 for the sphericity table
  bool computed = false;
  bool expected = false;
  bool match = false;
};

struct TableRun {
  std::string name;  // "theorem1" | "theorem2" | "corollary"
  std::vector<TableCell> cells;
  bool all_match = true;
};

// Recompute every cell of the named table with the sampling engine and
// compare against the closed-form answer.  Types of rank above max_rank are
// skipped.  Cells are evaluated by a bounded worker pool (threads <= 0 picks
// a default) but the cell order of the result is deterministic.
// Throws std::invalid_argument on an unknown table name.
TableRun run_table(const std::string& name, const RunConfig& cfg,
                   int max_rank = 8, int threads = 0);

std::string table_markdown(const TableRun& run);

}  // namespace flagrank
