#pragma once

#include <string>

#include "ccap/capacity.hpp"
#include "ccap/nonoverlap.hpp"
#include "ccap/verify.hpp"

namespace ccap {

// Constraint specification document:
//   { "q": 2,
//     "symbols": ["0","1"],                 optional
//     "forbidden": ["11","0000"]            exactly one of forbidden /
//     "family": {"name":"RLL","d":1,"k":3}  family / combine
//     "combine": [ {...}, {...} ] }
// Words may be strings (single-character symbols) or arrays of symbol names.
// family and combine specs are materialized and reduced on parse; an explicit
// forbidden list is kept as given. Serializing always emits the materialized
// word list, so parse -> serialize -> parse is the identity on sets.
ForbiddenSet parse_constraint_spec(const std::string& text);
std::string constraint_spec_json(const ForbiddenSet& f);

// GenFun document: {"T": [...], "S": [...], "q": q, "ellF": l} with
// coefficients as decimal strings, lowest degree first. Emission is
// deterministic, so parse -> emit round-trips byte-identically.
std::string genfun_json(const GenFun& f);
GenFun parse_genfun_json(const std::string& text);

std::string capacity_json(const CapacityEstimate& est);
std::string bound_report_json(const BoundReport& r, const MaxCodeResult* search);
std::string graph_json(const DeBruijnGraph& g);

} // namespace ccap
