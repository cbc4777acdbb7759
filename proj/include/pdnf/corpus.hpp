#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdnf/report.hpp"

namespace pdnf {

/// A worked example with its expected outcome.  Inputs are stored in the
/// field-file format; free constants are pinned as recorded in `pins`.
struct CorpusEntry {
  std::string id;
  std::string description;
  std::string provenance;
  std::string pins;
  /// Main input: a field file, or a family file when `is_family`.
  std::string input;
  bool is_family = false;
  /// Companion field (a symmetry or an expected normal form), may be empty.
  std::string companion;
};

const std::vector<CorpusEntry>& corpus_entries();

struct CorpusCheck {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct CorpusOutcome {
  std::string id;
  bool passed = false;
  std::vector<CorpusCheck> checks;
  /// Extra lines for the report, e.g. a coefficient table.
  std::vector<std::string> table;
  /// Set when the pipeline threw; the entry then fails.
  std::string error;
  double seconds = 0;
};

/// Glob match with `*` and `?`.
bool corpus_filter_matches(std::string_view pattern, std::string_view id);

/// Runs every entry whose id matches `filter` (all when empty).  Failures
/// are recorded per entry, never thrown.
std::vector<CorpusOutcome> run_corpus(const std::optional<std::string>& filter = std::nullopt);

Json corpus_json(const std::vector<CorpusOutcome>& outcomes);
std::string corpus_text(const std::vector<CorpusOutcome>& outcomes);

}  // namespace pdnf
