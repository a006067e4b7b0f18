#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "multisym/poly.hpp"

namespace multisym {

/// Restricts which variable names a parse may introduce. An empty context
/// accepts (and interns) any well-formed name.
struct VariableContext {
    std::optional<std::set<std::string>> allowed;

    static VariableContext any() { return {}; }
    static VariableContext only(std::set<std::string> names) { return {std::move(names)}; }
};

/// Parses the textual polynomial grammar:
///   poly   = term (("+" | "-") term)*
///   term   = [sign] [rational "*"] factor ("*" factor)* | [sign] rational
///   factor = varname ["^" positive-int]
/// Throws Error{Syntax} with the offending position, or
/// Error{UnknownVariable} when the context rejects a name.
Poly parse_poly(std::string_view text, const VariableContext& context = VariableContext::any());

/// Canonical text, leading (largest) monomial first; parse_poly inverts it.
std::string render(const Poly& p);
std::string render(const Mono& m);

}  // namespace multisym
