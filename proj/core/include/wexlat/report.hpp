#pragma once

#include <memory>
#include <string>

#include "wexlat/category.hpp"
#include "wexlat/exactness.hpp"

namespace wexlat {

/// Everything the report and DOT emitters need, computed once.
struct Pipeline {
  Category cat;
  std::shared_ptr<const ExtBimodule> bm;  // heap-allocated: the lattice points into it
  SubmoduleLattice lat;
  std::vector<ClosednessVerdict> verdicts;
};

Pipeline run_pipeline(Category cat, const EnumOptions& opts = {});

struct ReportOptions {
  std::size_t detail_limit = 5000;       // per-node listing and Hasse edges
  std::size_t modularity_limit = 1000;   // nodes; above this the check is skipped
  std::size_t oracle_limit = 5000;       // middle-exactness sweep
  std::size_t composition_limit = 600;   // composition-search sweep
  std::uint32_t seed = 1;                // obscure-axiom sampling
};

/// Deterministic JSON report. Skipped checks and truncated sections are
/// recorded under conventions.truncation_notes.
std::string report_json(const Pipeline& p, const ReportOptions& opts = {});

/// Graphviz DOT of the Hasse diagram, bottom-to-top; closed nodes are
/// double-circled. With closed_only, only closed nodes appear and the edges
/// are the covers of the closed sublattice (whose join is closed_join).
std::string report_dot(const Pipeline& p, bool closed_only = false);

/// Human-readable label of global coordinate k ("e(C,A)" with block index
/// suffix for blocks of dimension > 1).
std::string coord_label(const ExtBimodule& bm, const std::vector<std::string>& names,
                        std::size_t k);

}  // namespace wexlat
