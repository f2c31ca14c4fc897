#include "ordelab/poset_io.hpp"

#include <sstream>

#include "json.hpp"

namespace ord {
namespace {

constexpr int json_size_cap = 8192;

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

FinitePoset poset_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::BadInput, std::string("json parse: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("leq"))
        throw Error(Errc::BadInput, "expected an object with \"n\" and \"leq\"");
    if (!doc["n"].is_number_integer())
        throw Error(Errc::BadInput, "\"n\" is not an integer");
    long long n = doc["n"].get<long long>();
    if (n < 0) throw Error(Errc::BadInput, "\"n\" is negative", {n});
    if (n > json_size_cap)
        throw Error(Errc::CapExceeded, "poset too large", {n, json_size_cap});
    if (!doc["leq"].is_array())
        throw Error(Errc::BadInput, "\"leq\" is not an array");

    const int nn = int(n);
    std::vector<Bits> up(nn, Bits(nn));
    for (int i = 0; i < nn; ++i) up[i].set(i);
    for (const auto& pair : doc["leq"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw Error(Errc::BadInput, "\"leq\" entries must be integer pairs");
        long long a = pair[0].get<long long>(), b = pair[1].get<long long>();
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(Errc::BadInput, "pair out of range", {a, b, n});
        up[std::size_t(a)].set(int(b));
    }
    for (int k = 0; k < nn; ++k)
        for (int i = 0; i < nn; ++i)
            if (up[i].test(k)) up[i] |= up[k];
    return FinitePoset::from_up_sets(std::move(up));
}

std::string poset_to_json(const FinitePoset& p) {
    nlohmann::ordered_json doc;
    doc["n"] = p.size();
    auto& leq = doc["leq"] = nlohmann::ordered_json::array();
    for (int i = 0; i < p.size(); ++i)
        for (int j = p.up(i).first(); j >= 0; j = p.up(i).next(j))
            if (j != i) leq.push_back({i, j});
    return doc.dump();
}

std::string hasse_dot(const FinitePoset& p, const std::vector<std::string>* labels) {
    if (labels && int(labels->size()) != p.size())
        throw Error(Errc::BadInput, "label count differs from poset size",
                    {static_cast<long long>(labels->size()), p.size()});
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < p.size(); ++i) {
        std::string name = labels ? (*labels)[i] : std::to_string(i);
        os << "  n" << i << " [label=\"" << dot_escape(name) << "\"];\n";
    }
    for (const CoverPair& c : cover_pairs(p))
        os << "  n" << c.lower << " -> n" << c.upper << ";\n";
    os << "}\n";
    return os.str();
}

std::string diagnose_csv(const std::vector<DiagnoseRow>& rows) {
    std::ostringstream os;
    os << "depth,boolK,omegaK,width,chainSteps\n";
    for (const DiagnoseRow& r : rows)
        os << r.depth << "," << r.boolK << "," << r.omegaK << "," << r.width << ","
           << r.chainSteps << "\n";
    return os.str();
}

} // namespace ord
