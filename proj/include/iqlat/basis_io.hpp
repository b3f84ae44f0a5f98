#pragma once

#include <string>
#include <vector>

#include "iqlat/lattice.hpp"

// Strict JSON serialization of basis files:
//   {"d": 3, "vectors": [[[4,1],[-1,5]], [[1,4],[1,2]]]}
// "vectors" holds exactly two vectors; each coordinate pair [a, b] means
// a + b*xi.  Integers only; floats, missing fields, unknown fields, ragged
// lengths, and non-square-free d are all rejected with messages naming the
// offending field.

namespace iqlat {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BasisFile {
    long d = 0;
    std::array<std::vector<std::array<long long, 2>>, 2> vectors;
};

bool operator==(const BasisFile& a, const BasisFile& b);

BasisFile parse_basis_text(const std::string& text);
BasisFile parse_basis_file(const std::string& path);
std::string serialize_basis(const BasisFile& file);

// May throw DependentBasis; square-free d was already enforced by parsing.
AlgBasis to_basis(const BasisFile& file);
BasisFile from_basis(const AlgBasis& basis);

}  // namespace iqlat
