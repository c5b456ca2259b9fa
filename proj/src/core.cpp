#include "pregroup/core.hpp"

#include <algorithm>

namespace pregroup {

std::string to_string(const SimpleType& t) {
    std::string out = t.base;
    if (t.z != 0) {
        out += '^';
        out.append(static_cast<std::size_t>(t.z < 0 ? -t.z : t.z), t.z < 0 ? 'l' : 'r');
    }
    return out;
}

Term concat(const Term& s, const Term& t) {
    Term out = s;
    out.factors.insert(out.factors.end(), t.factors.begin(), t.factors.end());
    return out;
}

std::string to_string(const Term& t) {
    if (t.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ' ';
        out += to_string(t[i]);
    }
    return out;
}

void TypePoset::validate_name(const std::string& name) {
    if (name.empty()) throw Error("basic type name is empty");
    if (name == "1") throw Error("'1' is reserved for the unit term");
    for (char c : name) {
        if (!(c == '_' || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')))
            throw Error("invalid basic type name '" + name + "'");
    }
}

TypePoset::TypePoset(std::vector<std::string> names,
                     std::vector<std::pair<std::string, std::string>> declared_order)
    : names_(std::move(names)), declared_(std::move(declared_order)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        validate_name(names_[i]);
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw Error("duplicate basic type '" + names_[i] + "'");
    }
    const std::size_t n = names_.size();
    leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
    for (const auto& [a, b] : declared_)
        leq_[static_cast<std::size_t>(index_of(a))][static_cast<std::size_t>(index_of(b))] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq_[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (leq_[k][j]) leq_[i][j] = true;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (leq_[i][j] && leq_[j][i])
                throw Error("order cycle between '" + names_[i] + "' and '" + names_[j] + "'");
}

int TypePoset::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("undeclared basic type '" + name + "'");
    return it->second;
}

bool TypePoset::leq(const std::string& a, const std::string& b) const {
    const auto ia = static_cast<std::size_t>(index_of(a));
    const auto ib = static_cast<std::size_t>(index_of(b));
    return leq_[ia][ib];
}

std::vector<std::pair<std::string, std::string>> TypePoset::closure_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < names_.size(); ++j)
            if (leq_[i][j]) out.emplace_back(names_[i], names_[j]);
    std::sort(out.begin(), out.end());
    return out;
}

Term adjoint(const Term& t, AdjointDirection direction) {
    const int dz = direction == AdjointDirection::Left ? -1 : +1;
    Term out;
    out.factors.reserve(t.size());
    for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
        out.factors.push_back(SimpleType{it->base, it->z + dz});
    return out;
}

bool leq_basic(const std::string& a, const std::string& b, const TypePoset& poset) {
    return poset.leq(a, b);
}

bool leq_simple(const SimpleType& u, const SimpleType& v, const TypePoset& poset) {
    if (u.z != v.z) return false;
    const bool even = u.z % 2 == 0;
    return even ? poset.leq(u.base, v.base) : poset.leq(v.base, u.base);
}

bool contractible(const SimpleType& u, const SimpleType& v, const TypePoset& poset) {
    if (v.z != u.z + 1) return false;
    const bool even = u.z % 2 == 0;
    return even ? poset.leq(u.base, v.base) : poset.leq(v.base, u.base);
}

}  // namespace pregroup
