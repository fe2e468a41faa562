#include "enrhom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "enrhom/generators.hpp"

namespace enrhom {
namespace io {

using nlohmann::json;

SimplicialComplex parse_facet_text(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<int> n;
    std::vector<std::vector<int>> facets;
    int max_vertex = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first.rfind("n=", 0) == 0) {
            try {
                n = std::stoi(first.substr(2));
            } catch (const std::exception&) {
                throw ParseError(lineno, "cannot parse ground-set size in '" + first + "'");
            }
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "unexpected token after header: " + extra);
            continue;
        }
        if (first == "#") continue;
        std::vector<int> facet;
        ls.clear();
        ls.str(line);
        std::string tok;
        while (ls >> tok) {
            try {
                size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                if (v < 1) throw std::invalid_argument(tok);
                facet.push_back(v);
                max_vertex = std::max(max_vertex, v);
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected a positive vertex label, got '" + tok + "'");
            }
        }
        facets.push_back(std::move(facet));
    }
    const int ground = n.value_or(max_vertex);
    if (ground < 1) throw ParseError("no facets and no n= header");
    if (max_vertex > ground)
        throw ParseError("vertex " + std::to_string(max_vertex) + " exceeds declared n=" +
                         std::to_string(ground));
    return SimplicialComplex::from_facets(ground, facets);
}

namespace {

SimplicialComplex complex_from_json_value(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw ParseError("facet JSON must be an object with 'n' and 'facets'");
    if (!j["n"].is_number_integer()) throw ParseError("'n' must be an integer");
    const int n = j["n"].get<int>();
    if (!j["facets"].is_array()) throw ParseError("'facets' must be an array of arrays");
    std::vector<std::vector<int>> facets;
    for (const auto& row : j["facets"]) {
        if (!row.is_array()) throw ParseError("'facets' must be an array of arrays");
        std::vector<int> f;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError("facet vertices must be integers");
            f.push_back(v.get<int>());
        }
        facets.push_back(std::move(f));
    }
    try {
        return SimplicialComplex::from_facets(n, facets);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

SimplicialComplex parse_facet_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json_value(j);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_facet_json(text);
    std::istringstream stream(text);
    return parse_facet_text(stream);
}

SimplicialComplex parse_generator_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.empty() || parts[0] != "gen")
        throw ParseError("generator spec must start with 'gen:'");
    auto arg = [&](size_t i) -> int {
        if (i >= parts.size()) throw ParseError("generator spec '" + spec + "' is missing a parameter");
        try {
            return std::stoi(parts[i]);
        } catch (const std::exception&) {
            throw ParseError("cannot parse parameter '" + parts[i] + "' in '" + spec + "'");
        }
    };
    if (parts.size() < 2) throw ParseError("empty generator spec");
    const std::string& name = parts[1];
    try {
        if (name == "torus7") return gen::torus_seven();
        if (name == "rp2_6") return gen::rp2_six();
        if (name == "fano") return gen::fano_plane();
        if (name == "cycle") return gen::cycle(arg(2));
        if (name == "path") return gen::path(arg(2));
        if (name == "cyclic") return gen::cyclic_polytope_boundary(arg(2), arg(3));
        if (name == "simplex") return gen::full_simplex(arg(2));
        if (name == "skeleton") return gen::simplex_skeleton(arg(2), arg(3));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown generator '" + name + "'");
}

SimplicialComplex load_input(const std::string& arg) {
    if (arg.rfind("gen:", 0) == 0) return parse_generator_spec(arg);
    return load_complex_file(arg);
}

namespace {

json mask_to_json(Mask m) {
    json arr = json::array();
    for (int v : bits::vertices(m)) arr.push_back(v);
    return arr;
}

json complex_json_value(const SimplicialComplex& k) {
    json j;
    j["n"] = k.ground_size();
    json facets = json::array();
    for (Mask f : k.facets()) facets.push_back(mask_to_json(f));
    j["facets"] = std::move(facets);
    return j;
}

}  // namespace

std::string complex_to_json(const SimplicialComplex& k) { return complex_json_value(k).dump(); }

std::string complex_to_text(const SimplicialComplex& k) {
    std::ostringstream os;
    os << "n=" << k.ground_size() << '\n';
    for (Mask f : k.facets()) {
        bool first = true;
        for (int v : bits::vertices(f)) {
            if (!first) os << ' ';
            os << v;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::string table_to_json(const SquarefreeTable& t) {
    json j;
    j["p"] = t.p;
    j["kind"] = t.kind == TableKind::homology ? "homology" : "cohomology";
    j["field"] = t.field.name();
    std::vector<std::pair<std::vector<int>, int>> entries;
    for (const auto& [mask, dim] : t.dims) entries.emplace_back(bits::vertices(mask), dim);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    json arr = json::array();
    for (const auto& [verts, dim] : entries) {
        json e;
        e["R"] = verts;
        e["dim"] = dim;
        arr.push_back(std::move(e));
    }
    j["entries"] = std::move(arr);
    return j.dump();
}

std::string report_to_json(const ClassificationReport& r) {
    json j;
    j["field"] = r.field.name();
    j["n"] = r.n;
    j["d"] = r.d;
    j["c"] = r.c;
    j["dim"] = r.dim;
    j["is_cm"] = r.is_cm;
    j["lcm_level"] = r.lcm_level;
    j["is_buchsbaum"] = r.is_buchsbaum;
    j["is_gorenstein_star"] = r.is_gorenstein_star;
    j["is_orientable_homology_manifold"] = r.is_orientable_homology_manifold;
    if (r.is_bicm) j["is_bicm"] = *r.is_bicm;
    else j["is_bicm"] = nullptr;
    j["girth"] = r.girth;
    j["h_minus1_is_k"] = r.h_minus1_is_k;
    j["is_cone"] = r.is_cone;
    json wit = json::object();
    for (const auto& [name, w] : r.witnesses) {
        json e;
        e["R"] = mask_to_json(w.subset);
        e["p"] = w.p;
        wit[name] = std::move(e);
    }
    j["witnesses"] = std::move(wit);
    j["conventions"] = r.conventions;
    j["skipped"] = r.skipped;
    return j.dump();
}

std::string fvector_to_json(const FVector& f) {
    json arr = json::array();
    for (long long c : f.counts) arr.push_back(c);
    return arr.dump();
}

}  // namespace io
}  // namespace enrhom
