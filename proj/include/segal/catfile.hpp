#pragma once

// Reader and writer for the segal-lab-category text format.
//
//   segal-lab-category v1
//   OBJECTS
//     zero
//     a 1          <- optional size rank, informational only
//   MORPHISMS
//     f a b
//   COMPOSE
//     g f h        <- g after f equals h
//   ZERO
//     zero
//   COFIBRATIONS   <- or FIBRATIONS, flipping fibration_mode
//     f
//   WEQ            <- optional
//     f
//
// '#' starts a comment, blank lines are skipped, ids are whitespace-free.
// Identity morphisms are not declared; they are recovered from the COMPOSE
// table (the endomorphism that is neutral on every listed composite).  A
// JSON document with the same fields is accepted whenever the input starts
// with '{'.  Parse errors carry 1-based line numbers.

#include <string>

#include "segal/cofcat.hpp"

namespace segal {

struct ParsedCategory {
  CofStructure cof;
  bool fibration_mode = false;
  bool has_weq = false;
  WaldStructure wald;  // populated iff has_weq
};

ParsedCategory parse_category(const std::string& text);

/// Reads and parses a file; the path is prefixed to any diagnostic.
ParsedCategory load_category(const std::string& path);

/// Deterministic text form: fixed section order, ids in declaration order.
/// Unnamed objects and morphisms get generated ids (o0, o1, ... / m0, ...).
std::string emit_category(const CofStructure& s, const WaldStructure* w = nullptr,
                          bool fibration_mode = false);

}  // namespace segal
