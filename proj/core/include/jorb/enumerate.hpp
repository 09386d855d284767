#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jorb/sp_expr.hpp"
#include "jorb/word.hpp"

namespace jorb {

/// All length-n uppercase atom strings without equal adjacent atoms over the
/// first k symbols of the alphabet, lexicographic, optionally filtered by
/// first/last atom. Count is k*(k-1)^(n-1) when unfiltered.
std::vector<MWord> generate(const AlphabetPtr& alphabet, int n,
                            std::optional<int> start = std::nullopt,
                            std::optional<int> end = std::nullopt);

/// word (compact) -> quadruple, insertion order preserved.
std::vector<std::pair<std::string, Quadruple>> tabulate(const std::vector<MWord>& words);

/// Counts of reactive atoms (capacitor A, inductor C) in the compact
/// rendering of the reduced word.
std::pair<int, int> reactive_count(const MWord& x);

struct CatalogueRow {
  std::string jorb;  // compact rendering
  Quadruple quad;
  std::vector<std::string> schemes;  // ids; '*' prefix marks bridge networks
};

/// CSV rows `jorb,"[vl, ls, lp, vr]","id id ..."`.
std::vector<CatalogueRow> load_catalogue(const std::string& path);
std::string catalogue_csv(const std::vector<CatalogueRow>& rows);

/// Scheme expression file: `<id> <sp expression>` lines.
std::vector<std::pair<std::string, SPExprPtr>> load_schemes(const std::string& path);

/// Evaluates each scheme, groups by reduced compact jorb, orders rows
/// lexicographically by jorb. Scheme ids within a row keep input order.
std::vector<CatalogueRow> classify(const std::vector<std::pair<std::string, SPExprPtr>>& schemes);

}  // namespace jorb
