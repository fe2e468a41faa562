// enrhom: offline queries on simplicial complexes — homology tables,
// classification ladder, design checks, batch corpus runs.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "enrhom/classify.hpp"
#include "enrhom/design.hpp"
#include "enrhom/enriched.hpp"
#include "enrhom/generators.hpp"
#include "enrhom/io.hpp"

namespace {

using namespace enrhom;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitRouteDisagreement = 3;

Mask parse_vertex_set(const std::string& arg) {
    std::string s = arg;
    for (char& ch : s)
        if (ch == ',') ch = ' ';
    std::istringstream is(s);
    std::vector<int> vs;
    int v = 0;
    while (is >> v) vs.push_back(v);
    if (!is.eof()) throw io::ParseError("cannot parse vertex set '" + arg + "'");
    return bits::mask_of(vs);
}

json routes_json(const PredicateResult& r) {
    json routes = json::object();
    for (const auto& [name, value] : r.routes) routes[name] = value;
    return routes;
}

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

int parse_check_int(const std::string& s, const std::string& check) {
    try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw io::ParseError("cannot parse design check '" + check + "'");
    }
}

json design_verdict(const SimplicialComplex& k, const std::string& check, const FieldSpec& field) {
    json out;
    out["check"] = check;
    out["field"] = field.name();
    PredicateResult res;
    std::optional<Rational> lambda_formula;
    std::optional<int> block_t;
    if (check.rfind("lcm:", 0) == 0) {
        const int l = parse_check_int(check.substr(4), check);
        res = is_lcm_design(k, l, field);
        lambda_formula = lcm_design_lambda(k.ground_size(), k.cardinality_d(), k.frame_c(), l);
        block_t = l - 1;
    } else if (check.rfind("ab:", 0) == 0) {
        const std::string params = check.substr(3);
        const auto comma = params.find(',');
        if (comma == std::string::npos) throw io::ParseError("expected ab:<a>,<b>");
        const int a = parse_check_int(params.substr(0, comma), check);
        const int b = parse_check_int(params.substr(comma + 1), check);
        res = is_ab_design(k, a, b, field);
        block_t = a + b;
    } else if (check.rfind("block:", 0) == 0) {
        const int t = parse_check_int(check.substr(6), check);
        const auto lambda = block_design_check(k, t);
        out["value"] = lambda.has_value();
        out["lambda"] = lambda ? json(*lambda) : json(nullptr);
        out["agree"] = true;
        return out;
    } else {
        throw io::ParseError("unknown design check '" + check + "'");
    }
    out["value"] = res.value;
    out["routes"] = routes_json(res);
    out["agree"] = res.routes_agree();
    if (res.convention) out["convention"] = *res.convention;
    if (res.witness) {
        json w;
        w["R"] = bits::vertices(res.witness->subset);
        w["p"] = res.witness->p;
        out["witness"] = std::move(w);
    }
    if (lambda_formula) out["lambda"] = rational_str(*lambda_formula);
    if (block_t && res.value) {
        try {
            const auto counted = block_design_check(k, *block_t);
            out["block_lambda"] = counted ? json(*counted) : json(nullptr);
        } catch (const std::invalid_argument&) {
            out["block_lambda"] = nullptr;  // non-pure complex
        }
    }
    return out;
}

json batch_record(const std::string& line, size_t index, const FieldSpec& field,
                  std::optional<int> conjecture_l) {
    json rec;
    rec["index"] = index;
    try {
        const SimplicialComplex k = io::parse_facet_json(line);
        if (conjecture_l) {
            const auto cand = conjecture_candidate(k, *conjecture_l, field);
            rec["candidate"] = cand.has_value();
            if (cand) {
                rec["c"] = cand->c;
                rec["girth"] = cand->girth;
                rec["l"] = cand->l;
            }
        } else {
            rec["report"] = json::parse(io::report_to_json(classify(k, field)));
        }
    } catch (const RouteDisagreement& e) {
        rec["error"] = e.what();
        rec["route_disagreement"] = true;
    } catch (const std::exception& e) {
        rec["error"] = e.what();
    }
    return rec;
}

int run(int argc, char** argv) {
    CLI::App app{"enriched homology, cohomology and classification of simplicial complexes"};
    app.require_subcommand(1);

    std::string input, field_name = "q", kind = "homology", set_arg, check;
    std::string batch_path;
    int table_p = 0, jobs = 1;
    int max_l = 0, conjecture_l = 0;
    bool as_text = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "facet file or gen:<name>[:<params>] spec")->required();
        cmd->add_option("--field", field_name, "coefficient field: q or gf:<p>");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "full classification report");
    add_input(c_classify);
    c_classify->add_option("--max-l", max_l, "cap the l-CM level search");

    CLI::App* c_enriched = app.add_subcommand("enriched", "multigraded module dimension table");
    add_input(c_enriched);
    c_enriched->add_option("--p", table_p, "homological index")->required();
    c_enriched->add_option("--kind", kind, "homology or cohomology")
        ->check(CLI::IsMember({"homology", "cohomology"}));

    CLI::App* c_girth = app.add_subcommand("girth", "girth of the complex");
    add_input(c_girth);

    CLI::App* c_fvector = app.add_subcommand("fvector", "face counts by cardinality");
    add_input(c_fvector);

    CLI::App* c_dual = app.add_subcommand("dual", "Alexander dual complex");
    add_input(c_dual);
    c_dual->add_flag("--text", as_text, "emit the facet text format");

    CLI::App* c_link = app.add_subcommand("link", "link of a vertex set");
    add_input(c_link);
    c_link->add_option("--set", set_arg, "vertices, e.g. 1,2")->required();
    c_link->add_flag("--text", as_text, "emit the facet text format");

    CLI::App* c_restrict = app.add_subcommand("restrict", "restriction to a vertex set");
    add_input(c_restrict);
    c_restrict->add_option("--set", set_arg, "vertices, e.g. 1,2")->required();
    c_restrict->add_flag("--text", as_text, "emit the facet text format");

    CLI::App* c_design = app.add_subcommand("design", "design checks with route agreement");
    add_input(c_design);
    c_design->add_option("--check", check, "lcm:<l> | ab:<a>,<b> | block:<t>")->required();

    CLI::App* c_batch = app.add_subcommand("batch", "JSONL corpus runner");
    c_batch->add_option("corpus", batch_path, "JSONL file, one facet object per line")->required();
    c_batch->add_option("--field", field_name, "coefficient field: q or gf:<p>");
    c_batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    c_batch->add_option("--conjecture", conjecture_l, "scan for girth-conjecture candidates at l");

    CLI::App* c_gen = app.add_subcommand("gen", "emit a named generator");
    c_gen->add_option("name", input, "e.g. torus7, rp2_6, fano, cycle:6, cyclic:8:4")->required();
    c_gen->add_flag("--text", as_text, "emit the facet text format");

    CLI11_PARSE(app, argc, argv);

    const FieldSpec field = FieldSpec::parse(field_name);

    if (c_classify->parsed()) {
        const SimplicialComplex k = io::load_input(input);
        ClassifyOptions opts;
        if (max_l > 0) opts.max_l = max_l;
        std::cout << io::report_to_json(classify(k, field, opts)) << '\n';
        return 0;
    }
    if (c_enriched->parsed()) {
        const SimplicialComplex k = io::load_input(input);
        const SquarefreeTable t = kind == "homology" ? enriched_homology(k, table_p, field)
                                                     : enriched_cohomology(k, table_p, field);
        std::cout << io::table_to_json(t) << '\n';
        return 0;
    }
    if (c_girth->parsed()) {
        std::cout << girth(io::load_input(input), field) << '\n';
        return 0;
    }
    if (c_fvector->parsed()) {
        std::cout << io::fvector_to_json(io::load_input(input).f_vector()) << '\n';
        return 0;
    }
    if (c_dual->parsed()) {
        const SimplicialComplex d = io::load_input(input).alexander_dual();
        std::cout << (as_text ? io::complex_to_text(d) : io::complex_to_json(d) + "\n");
        return 0;
    }
    if (c_link->parsed()) {
        const SimplicialComplex l = io::load_input(input).link(parse_vertex_set(set_arg));
        std::cout << (as_text ? io::complex_to_text(l) : io::complex_to_json(l) + "\n");
        return 0;
    }
    if (c_restrict->parsed()) {
        const SimplicialComplex r = io::load_input(input).restriction(parse_vertex_set(set_arg));
        std::cout << (as_text ? io::complex_to_text(r) : io::complex_to_json(r) + "\n");
        return 0;
    }
    if (c_design->parsed()) {
        const SimplicialComplex k = io::load_input(input);
        const json verdict = design_verdict(k, check, field);
        std::cout << verdict.dump() << '\n';
        return verdict["agree"].get<bool>() ? 0 : kExitRouteDisagreement;
    }
    if (c_batch->parsed()) {
        std::ifstream in(batch_path);
        if (!in) throw io::ParseError("cannot open '" + batch_path + "'");
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
        std::vector<json> records(lines.size());
        std::optional<int> scan_l;
        if (conjecture_l > 0) scan_l = conjecture_l;
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= lines.size()) break;
                records[i] = batch_record(lines[i], i, field, scan_l);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        bool disagreement = false;
        for (const auto& rec : records) {
            std::cout << rec.dump() << '\n';
            if (rec.contains("route_disagreement")) disagreement = true;
        }
        return disagreement ? kExitRouteDisagreement : 0;
    }
    if (c_gen->parsed()) {
        const SimplicialComplex k = io::parse_generator_spec("gen:" + input);
        std::cout << (as_text ? io::complex_to_text(k) : io::complex_to_json(k) + "\n");
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const RouteDisagreement& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitRouteDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
