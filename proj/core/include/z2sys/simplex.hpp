#ifndef Z2SYS_SIMPLEX_HPP
#define Z2SYS_SIMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace z2sys {

using Vertex = int;

// Abstract simplex: a strictly increasing tuple of vertex identifiers.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
        std::sort(v_.begin(), v_.end());
        if (v_.empty()) throw std::invalid_argument("Simplex: empty vertex list");
        if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
            throw std::invalid_argument("Simplex: repeated vertex");
        if (v_.front() < 0) throw std::invalid_argument("Simplex: negative vertex id");
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return v_; }
    Vertex vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
    Vertex last_vertex() const { return v_.back(); }

    bool has_vertex(Vertex u) const {
        return std::binary_search(v_.begin(), v_.end(), u);
    }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    // facet obtained by dropping the i-th vertex; only valid for dim() >= 1
    Simplex facet(int i) const {
        std::vector<Vertex> w;
        w.reserve(v_.size() - 1);
        for (std::size_t j = 0; j < v_.size(); ++j)
            if (j != static_cast<std::size_t>(i)) w.push_back(v_[j]);
        Simplex s;
        s.v_ = std::move(w);
        return s;
    }

    // contiguous sub-tuple [from, to], inclusive; the front/back faces of the
    // cup product are the two extremes
    Simplex range_face(int from, int to) const {
        Simplex s;
        s.v_.assign(v_.begin() + from, v_.begin() + to + 1);
        return s;
    }

    auto operator<=>(const Simplex& o) const = default;

private:
    std::vector<Vertex> v_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (Vertex v : s.vertices()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace z2sys

#endif
