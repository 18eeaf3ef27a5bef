#include "mal/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mal/errors.hpp"

namespace mal {
namespace io {

using nlohmann::json;

SimplicialComplex parse_facets(std::istream& in) {
    int m = -1;
    std::vector<VertexSet> facets;
    std::string line;
    int lineno = 0;
    int max_vertex = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank / comment-only line

        if (first == "m") {
            if (m != -1) throw ParseError(lineno, "duplicate 'm' header");
            if (!facets.empty()) throw ParseError(lineno, "'m' header must precede facets");
            if (!(ls >> m) || m < 1 || m > 63)
                throw ParseError(lineno, "'m' header needs an integer in 1..63");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after 'm' header");
            continue;
        }

        VertexSet f;
        std::istringstream vs(line);
        int v;
        while (vs >> v) {
            if (v < 1 || v > 63) throw ParseError(lineno, "vertex index out of range 1..63");
            if (m != -1 && v > m)
                throw ParseError(lineno, "vertex " + std::to_string(v) + " exceeds declared m=" +
                                             std::to_string(m));
            f = f.with(v);
            max_vertex = std::max(max_vertex, v);
        }
        if (!vs.eof()) throw ParseError(lineno, "malformed vertex index");
        if (f.empty()) throw ParseError(lineno, "empty facet");
        facets.push_back(f);
    }

    if (facets.empty()) throw ParseError(lineno, "no facets in input");
    try {
        return SimplicialComplex::from_facets(facets, m == -1 ? max_vertex : m);
    } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
    }
}

SimplicialComplex parse_facets(const std::string& text) {
    std::istringstream in(text);
    return parse_facets(in);
}

SimplicialComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_facets(in);
}

namespace {

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long long>());
}

}  // namespace

std::string betti_table_to_json(const BigradedBettiTable& t) {
    json table = json::array();
    for (const auto& [d, v] : t.b) {
        if (v == 0) continue;
        table.push_back({{"q", d.q}, {"p2", 2 * d.p}, {"betti", int_to_json(v)}});
    }
    json out = {{"m", t.m}, {"n", t.n}, {"table", table}};
    return out.dump(2);
}

BigradedBettiTable betti_table_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        BigradedBettiTable t;
        t.m = j.at("m").get<int>();
        t.n = j.at("n").get<int>();
        for (const auto& row : j.at("table")) {
            const int p2 = row.at("p2").get<int>();
            if (p2 % 2 != 0) throw InputError("odd second degree in Betti table");
            const Int v = int_from_json(row.at("betti"));
            if (v != 0) t.b[{row.at("q").get<int>(), p2 / 2}] = v;
        }
        return t;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad Betti table JSON: ") + e.what());
    }
}

std::string cell_counts_to_json(int m, int n, const std::map<Bidegree, int>& dims) {
    json table = json::array();
    for (const auto& [d, c] : dims) {
        if (c == 0) continue;
        table.push_back({{"q", d.q}, {"p2", 2 * d.p}, {"dim", c}});
    }
    json out = {{"m", m}, {"n", n}, {"table", table}};
    return out.dump(2);
}

std::string report_to_json(const VerificationReport& rep) {
    json out = json::array();
    for (const auto& c : rep.checks) {
        const char* status = c.status == CheckStatus::Pass   ? "pass"
                             : c.status == CheckStatus::Fail ? "fail"
                                                             : "skipped";
        out.push_back({{"check", c.name},
                       {"status", status},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"citation", c.citation}});
    }
    return out.dump(2);
}

std::string euler_poly_to_json(const EulerPolynomial& poly, const std::string& space) {
    json coeffs = json::array();
    for (const auto& c : poly.chi) coeffs.push_back(int_to_json(c));
    json out = {{"space", space}, {"coefficients", coeffs}, {"polynomial", poly.to_string()}};
    return out.dump(2);
}

}  // namespace io
}  // namespace mal
