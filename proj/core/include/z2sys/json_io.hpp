#ifndef Z2SYS_JSON_IO_HPP
#define Z2SYS_JSON_IO_HPP

#include <string>

#include "z2sys/complex.hpp"

namespace z2sys {

// On-disk format: {"n": int, "maximal_simplices": [[int,...],...]}.
// Saving canonicalizes (sorted vertex tuples, lexicographically sorted
// simplices), so save(load(f)) is a fixed point.
SimplicialComplex load_complex(const std::string& path);
void save_complex(const SimplicialComplex& M, const std::string& path);

std::string complex_to_json(const SimplicialComplex& M);
SimplicialComplex complex_from_json(const std::string& text);

} // namespace z2sys

#endif
