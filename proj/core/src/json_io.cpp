#include "z2sys/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace z2sys {

using nlohmann::json;

std::string complex_to_json(const SimplicialComplex& M) {
    auto tops = M.maximal_vertex_lists();
    std::sort(tops.begin(), tops.end());
    json j;
    j["n"] = M.top_dim();
    j["maximal_simplices"] = tops;
    return j.dump();
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j.contains("maximal_simplices"))
        throw std::invalid_argument("complex json: missing required field");
    const int n = j.at("n").get<int>();
    auto tops = j.at("maximal_simplices").get<std::vector<std::vector<Vertex>>>();
    return SimplicialComplex::build(tops, n);
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return complex_from_json(ss.str());
}

void save_complex(const SimplicialComplex& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << complex_to_json(M) << "\n";
}

} // namespace z2sys
