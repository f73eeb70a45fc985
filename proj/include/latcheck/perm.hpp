#pragma once

#include <string>
#include <vector>

#include "latcheck/util.hpp"

namespace latcheck {

// A permutation of {0..degree-1}; images[i] is the image of point i.
using perm = std::vector<u16>;

perm identity_perm(u32 degree);
bool is_valid_perm(const perm& p);

// compose(a, b) applies b first, then a: (a*b)(x) = a[b[x]].
perm compose(const perm& a, const perm& b);
perm inverse(const perm& a);

// "(0 1 2)(3 4)"; the identity renders as "()".
std::string cycle_string(const perm& p);
// Parse disjoint-cycle notation onto a fixed degree.  Throws parse_error with
// a byte offset (relative to `text`) on malformed input, semantic_error on
// out-of-range or repeated points.
perm parse_cycles(const std::string& text, u32 degree);

}  // namespace latcheck
