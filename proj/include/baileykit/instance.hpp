#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "baileykit/corpus.hpp"

namespace baileykit {

struct InstanceLine {
  std::size_t line = 0;
  IdentityInstance instance;
};

/// Instances of a file in file order; comments and blank lines are skipped.
struct InstanceFile {
  std::vector<InstanceLine> lines;
};

/// Parses a whole instance file. Any bad line rejects the file:
/// ParseError for syntax, UnknownIdentity, UnknownParameter, and ConstraintViolation for
/// bindings outside the row's domain. Messages carry the line (and column when known).
InstanceFile parse_instances(std::string_view text);

/// Parses one instance line ("ID name=value ... [order=N]"); line_no is used in messages.
IdentityInstance parse_instance(std::string_view line, std::size_t line_no = 1);

/// Parses a VALUE: an integer, "inf", or a monomial such as -3/2q^(5/2).
/// Columns in ParseError are relative to the start of the text, counted from 1.
Monomial parse_value(std::string_view text);

std::string serialize(const IdentityInstance& inst);
std::string serialize(const InstanceFile& file);

}  // namespace baileykit
