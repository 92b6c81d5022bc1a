#pragma once

#include <string>

#include <json.hpp>

#include "bicov/bimodule.hpp"
#include "bicov/errors.hpp"
#include "bicov/group.hpp"
#include "bicov/hopf.hpp"

namespace bicov {

using json = nlohmann::ordered_json;

inline json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const std::vector<cplx>& v) {
    json a = json::array();
    for (const cplx& z : v) a.push_back(to_json(z));
    return a;
}

inline json to_json(const CMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Parse the irrep file format: {"dim": d, "matrices": [...]} with one matrix
/// per group element index, each matrix an array of rows of [re, im] pairs.
/// Validation (homomorphism, irreducibility) runs before returning.
inline Irrep load_irrep(const GroupTable& g, const std::string& text, const std::string& label,
                        double tol = kDefaultTol) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw ParseError("irrep '" + label + "': " + ex.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrices"))
        throw ParseError("irrep '" + label + "': expected {\"dim\": ..., \"matrices\": [...]}");
    Irrep r;
    r.label = label;
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
        throw ParseError("irrep '" + label + "': dim must be a positive integer");
    r.degree = doc["dim"].get<std::size_t>();
    const json& mats = doc["matrices"];
    if (!mats.is_array() || mats.size() != g.n)
        throw ParseError("irrep '" + label + "': expected " + std::to_string(g.n) + " matrices");
    for (const json& jm : mats) {
        if (!jm.is_array() || jm.size() != r.degree)
            throw ParseError("irrep '" + label + "': dimension mismatch in matrix rows");
        CMatrix m(r.degree, r.degree);
        for (std::size_t i = 0; i < r.degree; ++i) {
            const json& row = jm[i];
            if (!row.is_array() || row.size() != r.degree)
                throw ParseError("irrep '" + label + "': dimension mismatch in matrix columns");
            for (std::size_t j = 0; j < r.degree; ++j) {
                const json& ent = row[j];
                if (!ent.is_array() || ent.size() != 2 || !ent[0].is_number() || !ent[1].is_number())
                    throw ParseError("irrep '" + label + "': entries must be [re, im] pairs");
                m(i, j) = cplx(ent[0].get<double>(), ent[1].get<double>());
            }
        }
        r.matrices.push_back(std::move(m));
    }
    validate_irrep(g, r, tol);
    return r;
}

inline json irrep_to_json(const Irrep& r) {
    json doc;
    doc["dim"] = r.degree;
    json mats = json::array();
    for (const CMatrix& m : r.matrices) mats.push_back(to_json(m));
    doc["matrices"] = std::move(mats);
    return doc;
}

/// Λ export: side length, row-major [re,im] entries, and the index
/// convention spelled out so downstream consumers can re-index.
inline json lambda_to_json(const BicovBimodule& bm, const CMatrix& lam) {
    json doc;
    doc["dim"] = lam.rows();
    doc["carrier_dim"] = bm.dim;
    doc["convention"] =
        "row=(i,j)=i*carrier_dim+j, col=(k,l); Lambda^{ij}_{kl} = <f_{jl}, R_{ki}>; kron (A x B)^{ik}_{jl} = A_ij B_kl";
    json entries = json::array();
    for (std::size_t i = 0; i < lam.rows(); ++i)
        for (std::size_t j = 0; j < lam.cols(); ++j) entries.push_back(to_json(lam(i, j)));
    doc["entries"] = std::move(entries);
    return doc;
}

} // namespace bicov
