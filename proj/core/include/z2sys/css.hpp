#ifndef Z2SYS_CSS_HPP
#define Z2SYS_CSS_HPP

#include <string>

#include "z2sys/minweight.hpp"

namespace z2sys {

/**
 * CSS code from the three-term chain complex around dimension k: qubits are
 * the k-simplices, X checks come from the (k+1)-boundary transposed, Z
 * checks from the k-boundary.  Distances are the minimum weights of
 * nontrivial cycles (d_X) and cocycles (d_Z), each flagged certified or
 * best-found according to the oracle that produced it.
 */
struct CssCode {
    int k = 0;
    long long qubits = 0;
    long long logical_qubits = 0;
    BinaryMatrix h_x;  // rows: (k+1)-simplices
    BinaryMatrix h_z;  // rows: (k-1)-simplices
    bool orthogonal = false;  // H_X * H_Z^T == 0, checked bit-exactly
    MinWeightResult d_x;      // minimum nontrivial k-cycle
    MinWeightResult d_z;      // minimum nontrivial k-cocycle
};

CssCode css_code(const SimplicialComplex& M, int k, const SearchOptions& opts = {});

// sparse text format: one line per check, space-separated qubit indices
std::string check_matrix_text(const BinaryMatrix& m);
void write_check_matrix(const BinaryMatrix& m, const std::string& path);

} // namespace z2sys

#endif
