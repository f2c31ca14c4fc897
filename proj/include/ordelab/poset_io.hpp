#pragma once

#include <string>
#include <vector>

#include "ordelab/chains.hpp"
#include "ordelab/poset.hpp"

namespace ord {

// {"n": int, "leq": [[i, j], ...]} with strict pairs; the relation is closed
// reflexively and transitively on read and validated. Throws BadInput on
// malformed documents.
FinitePoset poset_from_json(const std::string& text);
std::string poset_to_json(const FinitePoset& p);

// Hasse diagram, bottom-up ranks. Node names are labels when given.
std::string hasse_dot(const FinitePoset& p, const std::vector<std::string>* labels = nullptr);

std::string diagnose_csv(const std::vector<DiagnoseRow>& rows);

} // namespace ord
