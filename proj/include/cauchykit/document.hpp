#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cauchykit/cauchy.hpp"
#include "cauchykit/frames.hpp"
#include "cauchykit/pair.hpp"

namespace cauchykit {

// JSON documents. Every document names its field once ("Q" or "GF(p)") and a
// kind; all scalars are strings such as "-7/3" or "5".
//
//   {"field": "Q", "kind": "matrix", "n_rows": 2, "n_cols": 2, "entries": [...]}
//   {"field": "Q", "kind": "cauchy_data", "x": [...], "x_tilde": [...]}
//   {"field": "Q", "kind": "pair", "X": {"n_rows", "n_cols", "entries"},
//    "X_tilde": {...}, "note": "..."}

using DocumentValue = std::variant<DenseMatrix, CauchyData, CauchyPair>;

/// Throws Error(Parse) naming the offending key or token.
DocumentValue parse_document(std::string_view text);
const char* document_kind(const DocumentValue& doc);

std::string to_json(const DenseMatrix& m);
std::string to_json(const CauchyData& d);
std::string to_json(const CauchyPair& p);
std::string to_json(const DocumentValue& doc);

std::string report_json(const VerificationReport& r);
std::string recognize_json(const std::variant<CauchyData, NotCauchy>& r);
std::string identities_json(const CauchyData& d, const std::vector<IdentityCheck>& checks);
std::string equivalence_json(const std::optional<Equivalence>& e);
std::string classes_json(const std::vector<EquivalenceClass>& classes);
std::string alphas_json(const CauchyData& d, const std::vector<Scalar>& alpha, const std::vector<Scalar>& alpha_tilde);
// zeta is the shift with a + ζ equal to b up to ordering.
std::string perm_equivalence_json(const std::optional<Scalar>& zeta);

}  // namespace cauchykit
