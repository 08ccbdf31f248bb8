#pragma once

#include <string>

#include "mfheight/shimura.hpp"
#include "mfheight/vvq.hpp"

namespace mfh {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar coefficient files, shared between the expansion tools and the
// L-machinery:
//   coeffs v1 weight=<rat> level=<int>
//   <n> <a_n>        (exact rationals, one term per line, # comments)
CuspFormExpansion read_coeff_file(const std::string& path);
void write_coeff_file(const std::string& path, const CuspFormExpansion& f);

// Vector-valued tables for lift/pair/phi-expand inputs:
//   vvcoeffs v1 N=<int> weight=<rat> [dual=<0|1>] trunc=<rat>
//   <exponent> <mu> <value>
struct VVCoeffFile {
    long N = 1;
    Rat weight;
    bool dual = false;
    VVQExpansion series;
};
VVCoeffFile read_vv_file(const std::string& path);
void write_vv_file(const std::string& path, const VVCoeffFile& f);

}  // namespace mfh
