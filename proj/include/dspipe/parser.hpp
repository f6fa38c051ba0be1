#pragma once

#include <string_view>

#include "dspipe/ast.hpp"
#include "dspipe/errors.hpp"

namespace dspipe {

// Parses one Python source cell into a Module node. Covers the statement and
// expression grammar found in data-science scripts and notebooks; f-strings
// are kept as opaque string literals. Throws SyntaxError on input the
// grammar does not accept.
NodePtr parse_python(std::string_view source);

} // namespace dspipe
