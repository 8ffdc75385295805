#pragma once

#include "hanfkit/expr.hpp"
#include "hanfkit/predicates.hpp"
#include "hanfkit/signature.hpp"
#include "hanfkit/typecat.hpp"

#include <string>

namespace hanfkit {

// Parses the s-expression surface syntax.  `store` is needed only to
// resolve `(sphere TYPEID x ...)` atoms; pass nullptr to reject them.
// Sugar (and/implies/forall/foralln) is expanded during parsing.
ExprPtr parse(const std::string& text, const Signature& sig, const PredicateCollection& preds,
              CatalogStore* store = nullptr);

} // namespace hanfkit
