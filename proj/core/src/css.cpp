#include "z2sys/css.hpp"

#include <fstream>
#include <sstream>

namespace z2sys {

CssCode css_code(const SimplicialComplex& M, int k, const SearchOptions& opts) {
    const int n = M.top_dim();
    if (k < 1 || k > n - 1) throw std::invalid_argument("css_code: need 1 <= k <= n-1");

    CssCode code;
    code.k = k;
    code.qubits = M.count(k);
    code.h_x = boundary_matrix(M, k + 1).transposed();
    code.h_z = boundary_matrix(M, k);
    code.orthogonal = code.h_x.multiplied(code.h_z.transposed()).is_zero();

    HomologyPair hp(M, k);
    code.logical_qubits = hp.dim();
    if (hp.dim() > 0) {
        code.d_x = min_nontrivial_cycle(hp, opts);
        code.d_z = min_nontrivial_cocycle(hp, opts);
    }
    return code;
}

std::string check_matrix_text(const BinaryMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool first = true;
        for (std::size_t j : m.row(i).support()) {
            if (!first) out << ' ';
            out << j;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

void write_check_matrix(const BinaryMatrix& m, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << check_matrix_text(m);
}

} // namespace z2sys
