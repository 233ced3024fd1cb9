#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arknit/field.hpp"

namespace arknit::cli {

enum class Format { Json, Dot, Table };

/// Options shared by every command. Defaults: field Q, seed 0 (or $AR_KNIT_SEED), level 8,
/// window 6, JSON output, no certificate, validation on.
struct RunConfig {
  Field field = Field::rationals();
  std::uint64_t seed = 0;
  int level = 8;
  std::string window = "6";
  Format format = Format::Json;
  bool certify = false;
  bool validate = true;
};

/// "Q", "F<p>" or "<p>".
Field parse_field(const std::string& s);

/// Runs one command (args exclude the program name). Returns 0 on success, 1 on usage and
/// precondition errors (an error JSON object is written to `out`), 2 when two independent
/// computations disagree.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arknit::cli
