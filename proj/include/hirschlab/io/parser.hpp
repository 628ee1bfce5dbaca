#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "hirschlab/groebner.hpp"
#include "hirschlab/polynomial.hpp"
#include "hirschlab/term_order.hpp"

namespace hirschlab::io {

struct GensBlock {
  IdealPresentation ideal;
};

struct PrimesBlock {
  std::vector<IdealPresentation> primes;
};

using Block = std::variant<GensBlock, PrimesBlock>;

/// Parsed input file:
///
///     # comment
///     ring QQ[x,y,z]          (or GF(7)[x1,x2])
///     order lex               (lex | deglex | degrevlex; optional)
///     gens: x^2 - y; 1/2*x*z
///     primes: [x; y] [y; z]
///     weights: 1,1,4          reg: 3          hvec: 1,3,1
struct InputDocument {
  RingPtr ring;
  std::optional<TermOrder> order;
  std::vector<Block> blocks;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<std::int64_t> reg;
  std::optional<std::vector<std::int64_t>> hvec;
};

/// Throws ParseError with line and column on malformed input, unknown
/// variables, or coefficients outside the field.
InputDocument parse_document(std::string_view text);

/// A single polynomial expression over `ring`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace hirschlab::io
