#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcres {

enum class FallbackPolicy { OracleFallback, Strict };
enum class SubtableSource { Oracle, Engine };

struct Options {
  int field = 2;
  FallbackPolicy policy = FallbackPolicy::OracleFallback;
  int generator_cap = 22;        // decreasing-order subset search
  int facet_cap = 15;            // simplicial-tree subcollection check
  long long backtrack_budget = 1000;
  int threads = 1;
  SubtableSource hyper_subtables = SubtableSource::Oracle;
};

// Reduced homology ranks keyed by field and relabeled facet list; results
// are deterministic, so concurrent duplicate computation is harmless.
struct HomologyCache {
  std::mutex mu;
  std::unordered_map<std::string, std::vector<int>> map;
};

struct EngineNode;  // engine.hpp
struct EngineMemo {
  std::mutex mu;
  std::unordered_map<std::string, std::shared_ptr<const EngineNode>> map;
};

// One computation session: options plus the caches shared across calls.
struct Workspace {
  Options opts;
  HomologyCache hom_cache;
  EngineMemo engine_memo;
};

}  // namespace mcres
