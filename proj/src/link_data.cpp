#include "cwl/link_data.hpp"

#include <bit>
#include <sstream>

#include <json.hpp>

#include "cwl/errors.hpp"

namespace cwl {

using nlohmann::json;

LinkInvariantData::LinkInvariantData(IntMatrix linking, std::map<Subset, Poly> conway_table)
    : linking_(std::move(linking)), conway_(std::move(conway_table)) {
    if (!linking_.is_symmetric()) throw ArgumentError("linking matrix must be symmetric");
    const int n = linking_.dim();
    if (n < 1 || n > 30) throw ArgumentError("component count out of range");
    for (const auto& [s, p] : conway_) {
        if (s == 0 || s >= (Subset{1} << n)) throw ArgumentError("bad subset key");
        // parity/offset pattern: c_k = 0 unless k >= m-1 and k = m-1 (mod 2)
        const int m = std::popcount(s);
        for (size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0 && (static_cast<int>(k) < m - 1 || (static_cast<int>(k) - (m - 1)) % 2))
                throw ArgumentError("conway coefficients of " + subset_to_string(s) +
                                    " violate the parity pattern");
    }
}

LinkInvariantData LinkInvariantData::from_link(const FramedLink& link) {
    const int n = link.num_components();
    std::map<Subset, Poly> table;
    for (Subset s = 1; s < (Subset{1} << n); ++s) {
        std::vector<int> keep;
        for (int i = 0; i < n; ++i)
            if (s & (Subset{1} << i)) keep.push_back(i);
        table[s] = cwl::conway(link.sublink(keep));
    }
    return LinkInvariantData(linking_matrix(link), std::move(table));
}

bool LinkInvariantData::complete() const {
    const Subset all = (Subset{1} << num_components()) - 1;
    for (Subset s = 1; s <= all; ++s)
        if (!conway_.count(s)) return false;
    return true;
}

const Poly& LinkInvariantData::conway(Subset s) const {
    auto it = conway_.find(s);
    if (it == conway_.end())
        throw IncompleteDataError("no Conway data for sublink " + subset_to_string(s));
    return it->second;
}

Rational LinkInvariantData::conway_coeff(Subset s, int k) const { return poly_coeff(conway(s), k); }

LinkInvariantData LinkInvariantData::relabeled(const std::vector<int>& perm) const {
    const int n = num_components();
    if (static_cast<int>(perm.size()) != n) throw ArgumentError("bad permutation size");
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(perm[i], perm[j]) = linking_.at(i, j);
    std::map<Subset, Poly> table;
    for (const auto& [s, p] : conway_) {
        Subset t = 0;
        for (int i = 0; i < n; ++i)
            if (s & (Subset{1} << i)) t |= Subset{1} << perm[i];
        table[t] = p;
    }
    return LinkInvariantData(std::move(m), std::move(table));
}

LinkInvariantData LinkInvariantData::with_split_component(int fr, const Poly& knot_conway) const {
    IntMatrix m(1);
    m.at(0, 0) = fr;
    return split_union(*this, LinkInvariantData(std::move(m), {{Subset{1}, knot_conway}}));
}

LinkInvariantData split_union(const LinkInvariantData& a, const LinkInvariantData& b) {
    const int na = a.num_components(), nb = b.num_components();
    IntMatrix m(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) m.at(i, j) = a.linking().at(i, j);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) m.at(na + i, na + j) = b.linking().at(i, j);
    std::map<Subset, Poly> table;
    for (Subset s = 1; s < (Subset{1} << (na + nb)); ++s) {
        const Subset sa = s & ((Subset{1} << na) - 1);
        const Subset sb = s >> na;
        if (sa && sb) table[s] = Poly{};  // split sublinks have vanishing Conway polynomial
        else if (sa && a.has(sa)) table[s] = a.conway(sa);
        else if (sb && b.has(sb)) table[s] = b.conway(sb);
    }
    return LinkInvariantData(std::move(m), std::move(table));
}

std::string subset_to_string(Subset s) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 31; ++i)
        if (s & (Subset{1} << i)) {
            if (!first) out << ",";
            out << i + 1;
            first = false;
        }
    return out.str();
}

Subset subset_from_string(const std::string& text, int n) {
    Subset s = 0;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int v;
        try {
            v = std::stoi(item);
        } catch (const std::exception&) {
            throw ParseError("bad component index '" + item + "'");
        }
        if (v < 1 || v > n) throw ParseError("component index out of range: " + item);
        if (s & (Subset{1} << (v - 1))) throw ParseError("repeated component index: " + item);
        s |= Subset{1} << (v - 1);
    }
    if (s == 0) throw ParseError("empty component set");
    return s;
}

namespace {

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(static_cast<long long>(v.get<int64_t>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("expected integer or \"p/q\" string");
}

json rational_to_json(const Rational& q) {
    if (den(q) == 1 && num(q) >= std::numeric_limits<int64_t>::min() &&
        num(q) <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(num(q));
    return to_string(q);
}

}  // namespace

LinkInvariantData LinkInvariantData::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    try {
        if (j.contains("pd")) {
            std::vector<std::array<int, 4>> pd;
            for (const auto& row : j.at("pd")) {
                if (!row.is_array() || row.size() != 4) throw ParseError("pd rows are 4-tuples");
                pd.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                              row[3].get<int>()});
            }
            std::vector<int> framings = j.at("framings").get<std::vector<int>>();
            FramedLink link = FramedLink::from_pd(pd, framings);
            if (j.contains("components") && j.at("components").get<int>() != link.num_components())
                throw ParseError("PD code has " + std::to_string(link.num_components()) +
                                 " components, not " +
                                 std::to_string(j.at("components").get<int>()));
            return from_link(link);
        }
        if (!j.contains("linking_matrix")) throw ParseError("need \"pd\" or \"linking_matrix\"");
        const auto& lm = j.at("linking_matrix");
        const int n = static_cast<int>(lm.size());
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(lm[i].size()) != n) throw ParseError("linking matrix not square");
            for (int jj = 0; jj < n; ++jj) m.at(i, jj) = Integer(lm[i][jj].get<int64_t>());
        }
        std::map<Subset, Poly> table;
        if (j.contains("conway"))
            for (const auto& [key, coeffs] : j.at("conway").items()) {
                Poly p;
                for (const auto& v : coeffs) p.push_back(rational_from_json(v));
                while (!p.empty() && p.back() == 0) p.pop_back();
                table[subset_from_string(key, n)] = std::move(p);
            }
        return LinkInvariantData(std::move(m), std::move(table));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad input schema: ") + e.what());
    }
}

std::string LinkInvariantData::to_json() const {
    json j;
    const int n = num_components();
    json lm = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int jj = 0; jj < n; ++jj) row.push_back(static_cast<int64_t>(linking_.at(i, jj)));
        lm.push_back(row);
    }
    j["linking_matrix"] = lm;
    json table = json::object();
    for (const auto& [s, p] : conway_) {
        json coeffs = json::array();
        for (const auto& c : p) coeffs.push_back(rational_to_json(c));
        table[subset_to_string(s)] = coeffs;
    }
    j["conway"] = table;
    return j.dump(2);
}

}  // namespace cwl
