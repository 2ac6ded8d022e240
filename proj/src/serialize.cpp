// Copyright 2026 The qfasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfasim/serialize.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qfasim/catalog.hpp"
#include "qfasim/errors.hpp"

namespace qfasim {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_doc(const std::string& message) {
    fail(ErrorCode::parse, "machine document: " + message);
}

double as_real(const Json& j, const char* where) {
    if (!j.is_number()) {
        bad_doc(std::string(where) + " must be a number");
    }
    return j.get<double>();
}

Complex as_complex(const Json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        bad_doc(std::string(where) + " must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

RMatrix real_matrix(const Json& j, Eigen::Index n, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
        bad_doc(where + " must be a list of " + std::to_string(n) + " rows");
    }
    RMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            bad_doc(where + " row " + std::to_string(i + 1) + " must have " +
                    std::to_string(n) + " entries");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            m(i, k) = as_real(row[static_cast<std::size_t>(k)], where.c_str());
        }
    }
    return m;
}

CMatrix complex_matrix(const Json& j, Eigen::Index n, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
        bad_doc(where + " must be a list of " + std::to_string(n) + " rows");
    }
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            bad_doc(where + " row " + std::to_string(i + 1) + " must have " +
                    std::to_string(n) + " entries");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            m(i, k) = as_complex(row[static_cast<std::size_t>(k)], where.c_str());
        }
    }
    return m;
}

Json real_matrix_json(const RMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json complex_matrix_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct DocHeader {
    std::string kind;
    Eigen::Index n;
    std::vector<char> alphabet;
    std::vector<Eigen::Index> accepting;
};

DocHeader parse_header(const Json& doc) {
    if (!doc.is_object()) {
        bad_doc("top level must be an object");
    }
    for (const char* field : {"kind", "n", "alphabet", "accepting", "transitions"}) {
        if (!doc.contains(field)) {
            bad_doc(std::string("missing field '") + field + "'");
        }
    }
    DocHeader h;
    if (!doc["kind"].is_string()) {
        bad_doc("'kind' must be a string");
    }
    h.kind = doc["kind"].get<std::string>();
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1) {
        bad_doc("'n' must be a positive integer");
    }
    h.n = doc["n"].get<Eigen::Index>();
    if (!doc["alphabet"].is_array() || doc["alphabet"].empty()) {
        bad_doc("'alphabet' must be a nonempty list");
    }
    for (const Json& s : doc["alphabet"]) {
        if (!s.is_string() || s.get<std::string>().size() != 1) {
            bad_doc("alphabet symbols must be single-character strings");
        }
        h.alphabet.push_back(s.get<std::string>()[0]);
    }
    if (!doc["accepting"].is_array()) {
        bad_doc("'accepting' must be a list of 1-based state indices");
    }
    for (const Json& q : doc["accepting"]) {
        if (!q.is_number_integer()) {
            bad_doc("accepting indices must be integers");
        }
        const auto one_based = q.get<std::int64_t>();
        if (one_based < 1 || one_based > h.n) {
            bad_doc("accepting state " + std::to_string(one_based) + " outside 1.." +
                    std::to_string(h.n));
        }
        h.accepting.push_back(static_cast<Eigen::Index>(one_based - 1));
    }
    if (!doc["transitions"].is_object()) {
        bad_doc("'transitions' must map symbols to matrices");
    }
    for (char c : h.alphabet) {
        if (!doc["transitions"].contains(std::string(1, c))) {
            bad_doc(std::string("no transition for symbol '") + c + "'");
        }
    }
    if (doc["transitions"].size() != h.alphabet.size()) {
        bad_doc("'transitions' lists a symbol outside the alphabet");
    }
    return h;
}

Machine from_json(const Json& doc) {
    const DocHeader h = parse_header(doc);
    const Json& trans = doc["transitions"];
    if (h.kind == "dfa" || h.kind == "pfa") {
        std::map<char, StochasticMatrix> t;
        for (char c : h.alphabet) {
            const std::string where = std::string("transitions['") + c + "']";
            t.emplace(c, StochasticMatrix(real_matrix(trans[std::string(1, c)], h.n, where)));
        }
        if (h.kind == "dfa") {
            return RtDFA(h.alphabet, std::move(t), h.accepting);
        }
        return RtPFA(h.alphabet, std::move(t), h.accepting);
    }
    if (h.kind == "qfa-unitary") {
        std::map<char, UnitaryOperator> t;
        for (char c : h.alphabet) {
            const std::string where = std::string("transitions['") + c + "']";
            t.emplace(c, UnitaryOperator(complex_matrix(trans[std::string(1, c)], h.n, where)));
        }
        return MeasureOnceQFA(h.alphabet, std::move(t),
                              {h.accepting.begin(), h.accepting.end()});
    }
    if (h.kind == "qfa-general") {
        std::map<char, Superoperator> t;
        for (char c : h.alphabet) {
            const Json& list = trans[std::string(1, c)];
            if (!list.is_array() || list.empty()) {
                bad_doc(std::string("transitions['") + c +
                        "'] must be a nonempty list of element matrices");
            }
            std::vector<CMatrix> elements;
            for (std::size_t e = 0; e < list.size(); ++e) {
                const std::string where = std::string("transitions['") + c + "'] element " +
                                          std::to_string(e + 1);
                elements.push_back(complex_matrix(list[e], h.n, where));
            }
            t.emplace(c, Superoperator(std::move(elements)));
        }
        return GeneralQFA(h.alphabet, std::move(t),
                          {h.accepting.begin(), h.accepting.end()});
    }
    bad_doc("unknown kind '" + h.kind + "'");
}

template <typename AcceptingRange>
Json header_json(MachineKind kind, Eigen::Index n, const std::vector<char>& alphabet,
                 const AcceptingRange& accepting) {
    Json doc = Json::object();
    doc["kind"] = machine_kind_name(kind);
    doc["n"] = n;
    Json alpha = Json::array();
    for (char c : alphabet) {
        alpha.push_back(std::string(1, c));
    }
    doc["alphabet"] = std::move(alpha);
    Json acc = Json::array();
    for (Eigen::Index q : accepting) {
        acc.push_back(static_cast<std::int64_t>(q) + 1);
    }
    doc["accepting"] = std::move(acc);
    return doc;
}

Json to_json(const Machine& m) {
    Json doc;
    Json trans = Json::object();
    if (const auto* dfa = std::get_if<RtDFA>(&m)) {
        const RtPFA& p = dfa->as_pfa();
        doc = header_json(MachineKind::dfa, p.state_count(), p.alphabet(), p.accepting());
        for (char c : p.alphabet()) {
            trans[std::string(1, c)] = real_matrix_json(p.transition(c).entries());
        }
    } else if (const auto* pfa = std::get_if<RtPFA>(&m)) {
        doc = header_json(MachineKind::pfa, pfa->state_count(), pfa->alphabet(),
                          pfa->accepting());
        for (char c : pfa->alphabet()) {
            trans[std::string(1, c)] = real_matrix_json(pfa->transition(c).entries());
        }
    } else if (const auto* qfa = std::get_if<MeasureOnceQFA>(&m)) {
        doc = header_json(MachineKind::qfa_unitary, qfa->state_count(), qfa->alphabet(),
                          qfa->accepting());
        for (char c : qfa->alphabet()) {
            trans[std::string(1, c)] = complex_matrix_json(qfa->transition(c).entries());
        }
    } else {
        const auto& gqfa = std::get<GeneralQFA>(m);
        doc = header_json(MachineKind::qfa_general, gqfa.state_count(), gqfa.alphabet(),
                          gqfa.accepting());
        for (char c : gqfa.alphabet()) {
            Json elements = Json::array();
            for (const CMatrix& e : gqfa.channel(c).elements()) {
                elements.push_back(complex_matrix_json(e));
            }
            trans[std::string(1, c)] = std::move(elements);
        }
    }
    doc["transitions"] = std::move(trans);
    return doc;
}

/// Parses "key=value" with an integral value.
std::int64_t int_param(const std::string& params, const std::string& key,
                       const std::string& name) {
    const std::string prefix = key + "=";
    if (params.rfind(prefix, 0) != 0) {
        fail(ErrorCode::parse,
             "catalog name '" + name + "' needs the form " + name.substr(0, name.find(':')) +
                 ":" + key + "=<integer>");
    }
    const std::string value = params.substr(prefix.size());
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        fail(ErrorCode::parse, "'" + value + "' is not an integer");
    }
    return out;
}

Machine catalog_machine(const std::string& ref) {
    if (ref == "neq") {
        return neq_machine();
    }
    const auto colon = ref.find(':');
    const std::string head = ref.substr(0, colon);
    const std::string params = (colon == std::string::npos) ? "" : ref.substr(colon + 1);
    if (head == "evenodd") {
        return evenodd_machine(static_cast<int>(int_param(params, "k", ref)));
    }
    if (head == "modp") {
        const std::int64_t p = int_param(params, "p", ref);
        if (p < 2) {
            fail(ErrorCode::invalid_argument, "p must be at least 2");
        }
        return modp_machine(static_cast<std::uint64_t>(p));
    }
    if (head == "rot") {
        const std::string prefix = "theta=";
        if (params.rfind(prefix, 0) != 0) {
            fail(ErrorCode::parse, "catalog name 'rot' needs the form rot:theta=<radians>");
        }
        const std::string value = params.substr(prefix.size());
        std::size_t used = 0;
        double theta = 0.0;
        try {
            theta = std::stod(value, &used);
        } catch (const std::exception&) {
            fail(ErrorCode::parse, "'" + value + "' is not a number");
        }
        if (used != value.size()) {
            fail(ErrorCode::parse, "'" + value + "' is not a number");
        }
        return rotation_machine(theta);
    }
    fail(ErrorCode::parse, "unknown catalog name '" + ref + "'");
}

bool looks_like_catalog(const std::string& ref) {
    if (ref == "neq") {
        return true;
    }
    const auto colon = ref.find(':');
    if (colon == std::string::npos) {
        return false;
    }
    const std::string head = ref.substr(0, colon);
    return head == "evenodd" || head == "modp" || head == "rot";
}

} // namespace

Machine machine_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("machine document: ") + e.what());
    }
    return from_json(doc);
}

std::string machine_to_json_text(const Machine& m) {
    return to_json(m).dump(2) + "\n";
}

Machine load_machine(const std::string& ref) {
    if (looks_like_catalog(ref)) {
        return catalog_machine(ref);
    }
    if (!std::filesystem::exists(ref)) {
        fail(ErrorCode::not_found,
             "'" + ref +
                 "' is neither a catalog name (neq, evenodd:k=N, modp:p=N, "
                 "rot:theta=X) nor a file");
    }
    std::ifstream in(ref);
    if (!in) {
        fail(ErrorCode::io, "cannot read '" + ref + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return machine_from_json_text(buffer.str());
}

} // namespace qfasim
