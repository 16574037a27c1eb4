#pragma once

// Tautological relations on the moduli of quasi-polarized K3 surfaces of
// low degree, stored as exact coefficient data, plus elimination queries
// over them. The relations are a ledger: this module records them and does
// linear algebra, it does not derive them.
//
// Noether-Lefschetz divisors are named by their Picard class convention
// (the lattice containing the polarization and the extra class). Per
// degree, the polarization-independent kappa combination is stored as a
// single composite label:
//   degree 2: kappa[1,1]-4*kappa[3,0]
//   degree 4: kappa[1,1]-2*kappa[3,0]
//   degree 6: 3*kappa[1,1]-4*kappa[3,0]
//   degree 8: kappa[1,1]-kappa[3,0]

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "segrehilb/matrix.hpp"
#include "segrehilb/rational.hpp"

namespace segrehilb {

struct UnsupportedDegree : std::domain_error {
    explicit UnsupportedDegree(int degree)
        : std::domain_error("no built-in relations for degree " + std::to_string(degree)) {}
};

struct Underdetermined : std::domain_error {
    explicit Underdetermined(int rank_found)
        : std::domain_error("elimination system has insufficient rank (" +
                            std::to_string(rank_found) + ")"),
          rank(rank_found) {}
    int rank;
};

struct TautRelation {
    int degree = 0;
    int codimension = 1;
    std::map<std::string, Rational> terms;  // label -> exact coefficient
    std::string source;
};

inline nlohmann::json relations_to_json(const std::vector<TautRelation>& relations, int version = 1) {
    nlohmann::json doc;
    doc["version"] = version;
    doc["relations"] = nlohmann::json::array();
    for (const auto& r : relations) {
        nlohmann::json jr;
        jr["degree"] = r.degree;
        jr["codimension"] = r.codimension;
        jr["source"] = r.source;
        jr["terms"] = nlohmann::json::object();
        for (const auto& [label, coeff] : r.terms) jr["terms"][label] = coeff.str();
        doc["relations"].push_back(std::move(jr));
    }
    return doc;
}

inline std::vector<TautRelation> relations_from_json(const nlohmann::json& doc) {
    std::vector<TautRelation> out;
    for (const auto& jr : doc.at("relations")) {
        TautRelation r;
        r.degree = jr.at("degree").get<int>();
        r.codimension = jr.at("codimension").get<int>();
        r.source = jr.value("source", "");
        for (const auto& [label, value] : jr.at("terms").items())
            r.terms[label] = Rational::parse(value.get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

// Built-in relation data. The same document ships as
// data/moduli_relations.json so conjectural relations can be added without
// recompiling.
inline const char* builtin_relations_json() {
    return R"json({
  "version": 1,
  "relations": [
    {
      "degree": 2, "codimension": 1,
      "source": "quot-scheme localization, degree 2, chi=0, weight 0^4",
      "terms": {"kappa[1,1]-4*kappa[3,0]": "1", "lambda": "-18", "P": "12"}
    },
    {
      "degree": 2, "codimension": 1,
      "source": "quot-scheme localization, degree 2, chi=1, weight 0^6",
      "terms": {"kappa[1,1]-4*kappa[3,0]": "1", "lambda": "9/2", "P": "-24/5", "S": "-3/10"}
    },
    {
      "degree": 2, "codimension": 2,
      "source": "quot-scheme localization, degree 2, chi=0, weight 0^4*zeta",
      "terms": {
        "kappa[4,0]": "11", "kappa[2,1]": "-1", "kappa[3,0]^2": "-3",
        "kappa[3,0]*P": "-4", "kappa[3,0]*lambda": "6", "lambda*P": "-8", "lambda^2": "4"
      }
    },
    {
      "degree": 4, "codimension": 1,
      "source": "quot-scheme localization, degree 4, chi=0, weight 0^6",
      "terms": {"kappa[1,1]-2*kappa[3,0]": "10", "lambda": "-38", "P1": "8", "P2": "-2", "S": "-3"}
    },
    {
      "degree": 4, "codimension": 1,
      "source": "quot-scheme localization, degree 4, chi=0, weight 0^4*zeta^2",
      "terms": {"kappa[1,1]-2*kappa[3,0]": "4", "lambda": "-26", "P1": "16", "P2": "2", "S": "-1"}
    },
    {
      "degree": 6, "codimension": 1,
      "source": "quot-scheme localization, degree 6, chi=-1",
      "terms": {"3*kappa[1,1]-4*kappa[3,0]": "-1", "lambda": "21", "P1": "-16", "P2": "-1", "S": "1"}
    },
    {
      "degree": 6, "codimension": 1,
      "source": "quot-scheme localization, degree 6, chi=0",
      "terms": {"3*kappa[1,1]-4*kappa[3,0]": "-11", "lambda": "280", "P1": "-230", "P2": "-38", "P3": "-2", "S": "10"}
    },
    {
      "degree": 8, "codimension": 1,
      "source": "quot-scheme localization, degree 8, chi=-2",
      "terms": {"kappa[1,1]-kappa[3,0]": "8/3", "lambda": "-24", "P1": "24", "P2": "4", "S": "-1"}
    },
    {
      "degree": 8, "codimension": 1,
      "source": "quot-scheme localization, degree 8, chi=-1",
      "terms": {"kappa[1,1]-kappa[3,0]": "-128/3", "lambda": "424", "P1": "-440", "P2": "-92", "P3": "-8", "S": "15"}
    }
  ]
})json";
}

inline std::vector<TautRelation> builtin_relations(int degree) {
    if (degree != 2 && degree != 4 && degree != 6 && degree != 8)
        throw UnsupportedDegree(degree);
    auto all = relations_from_json(nlohmann::json::parse(builtin_relations_json()));
    std::vector<TautRelation> out;
    for (auto& r : all)
        if (r.degree == degree) out.push_back(std::move(r));
    return out;
}

/// Result of eliminating labels: each solved label is expressed in the
/// remaining labels, e.g. lambda -> {P: 56/75, S: 1/75}.
using Elimination = std::map<std::string, std::map<std::string, Rational>>;

/// Solves the relation system for the requested labels by exact Gaussian
/// elimination. Pivot order is the given label order, then lexicographic
/// over rows, so results are deterministic. Throws Underdetermined (with
/// the rank found) if some requested label cannot be pivoted.
inline Elimination eliminate(const std::vector<TautRelation>& relations,
                             const std::vector<std::string>& solve_for) {
    if (solve_for.empty()) return {};

    // Column layout: solve_for labels first (given order), then the
    // remaining labels in lexicographic order.
    std::map<std::string, int> column;
    std::vector<std::string> labels;
    for (const auto& l : solve_for)
        if (!column.count(l)) { column[l] = static_cast<int>(labels.size()); labels.push_back(l); }
    std::map<std::string, bool> seen;
    for (const auto& r : relations)
        for (const auto& [l, c] : r.terms) seen[l] = true;
    for (const auto& [l, _] : seen)
        if (!column.count(l)) { column[l] = static_cast<int>(labels.size()); labels.push_back(l); }

    int nrows = static_cast<int>(relations.size());
    int ncols = static_cast<int>(labels.size());
    RationalMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r)
        for (const auto& [l, c] : relations[static_cast<size_t>(r)].terms)
            m.at(r, column.at(l)) = c;

    int nsolve = static_cast<int>(solve_for.size());
    std::vector<int> pivot_row(static_cast<size_t>(nsolve), -1);
    std::vector<bool> row_used(static_cast<size_t>(nrows), false);
    for (int c = 0; c < nsolve; ++c) {
        int pr = -1;
        for (int r = 0; r < nrows; ++r)
            if (!row_used[static_cast<size_t>(r)] && !m.at(r, c).is_zero()) { pr = r; break; }
        if (pr < 0) throw Underdetermined(rank_exact(m));
        row_used[static_cast<size_t>(pr)] = true;
        pivot_row[static_cast<size_t>(c)] = pr;
        Rational inv = Rational(1) / m.at(pr, c);
        for (int j = 0; j < ncols; ++j) m.at(pr, j) *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == pr || m.at(r, c).is_zero()) continue;
            Rational f = m.at(r, c);
            for (int j = 0; j < ncols; ++j) m.at(r, j) -= f * m.at(pr, j);
        }
    }

    Elimination out;
    for (int c = 0; c < nsolve; ++c) {
        int pr = pivot_row[static_cast<size_t>(c)];
        std::map<std::string, Rational> expr;
        for (int j = nsolve; j < ncols; ++j)
            if (!m.at(pr, j).is_zero())
                expr[labels[static_cast<size_t>(j)]] = -m.at(pr, j);
        // A remaining dependence on another solve_for label means the
        // system could not separate them.
        for (int j = 0; j < nsolve; ++j)
            if (j != c && !m.at(pr, j).is_zero())
                throw Underdetermined(rank_exact(m));
        out[labels[static_cast<size_t>(c)]] = std::move(expr);
    }
    return out;
}

}  // namespace segrehilb
