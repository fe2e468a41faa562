#pragma once

#include <iosfwd>
#include <string>

#include "enrhom/classify.hpp"
#include "enrhom/enriched.hpp"

namespace enrhom {
namespace io {

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Facet text format: one facet per line, vertices whitespace- or
/// comma-separated; an optional header line n=<int> fixes the ground-set
/// size (default: the largest vertex seen).
SimplicialComplex parse_facet_text(std::istream& in);

/// {"n": int, "facets": [[int,...],...]}
SimplicialComplex parse_facet_json(const std::string& text);

/// Sniffs JSON ('{') versus the text format.
SimplicialComplex load_complex_file(const std::string& path);

/// gen:<name>[:<params>] specs: torus7, rp2_6, fano, cycle:<n>, path:<n>,
/// cyclic:<n>:<d>, simplex:<n>, skeleton:<n>:<k>.
SimplicialComplex parse_generator_spec(const std::string& spec);

/// Generator spec when the argument starts with "gen:", file otherwise.
SimplicialComplex load_input(const std::string& arg);

std::string complex_to_json(const SimplicialComplex& k);
std::string complex_to_text(const SimplicialComplex& k);

/// {"p":, "kind":, "field":, "entries": [{"R": [...], "dim": ...}]},
/// entries sorted by (|R|, lexicographic vertex list).
std::string table_to_json(const SquarefreeTable& t);

std::string report_to_json(const ClassificationReport& r);

std::string fvector_to_json(const FVector& f);

}  // namespace io
}  // namespace enrhom
