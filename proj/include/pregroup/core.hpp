#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pregroup/error.hpp"

namespace pregroup {

enum class AdjointDirection { Left, Right };

// A basic type decorated with an iterated-adjoint order z: z = 0 is the bare
// type, z = -1 its left adjoint (^l), z = +1 its right adjoint (^r), z = -2
// the doubled left adjoint (^ll), and so on. No bound is imposed on |z|.
struct SimpleType {
    std::string base;
    int z = 0;

    bool operator==(const SimpleType& o) const { return z == o.z && base == o.base; }
    bool operator!=(const SimpleType& o) const { return !(*this == o); }
    bool operator<(const SimpleType& o) const {
        return base != o.base ? base < o.base : z < o.z;
    }
};

// Renders {"pi3", 1} as "pi3^r", {"o", -2} as "o^ll".
std::string to_string(const SimpleType& t);

// An element of the free pregroup: an ordered product of simple types.
// The empty product is the monoid unit and prints as "1".
struct Term {
    std::vector<SimpleType> factors;

    Term() = default;
    explicit Term(std::vector<SimpleType> f) : factors(std::move(f)) {}

    bool empty() const { return factors.empty(); }
    std::size_t size() const { return factors.size(); }
    const SimpleType& operator[](std::size_t i) const { return factors[i]; }

    bool operator==(const Term& o) const { return factors == o.factors; }
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const { return factors < o.factors; }
};

Term concat(const Term& s, const Term& t);
std::string to_string(const Term& t);

// Finite partially ordered alphabet of basic types. The stored relation is the
// reflexive-transitive closure of the declared pairs, computed at construction;
// a cycle through two distinct names is a construction error. Immutable once
// built, so instances may be shared freely across threads.
class TypePoset {
public:
    TypePoset() = default;
    TypePoset(std::vector<std::string> names,
              std::vector<std::pair<std::string, std::string>> declared_order);

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    // True iff (a, b) is in the closure. Throws on an undeclared name.
    bool leq(const std::string& a, const std::string& b) const;

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::pair<std::string, std::string>>& declared_order() const {
        return declared_;
    }

    // Closure as a sorted pair list, for equality tests and serialization.
    std::vector<std::pair<std::string, std::string>> closure_pairs() const;

    bool operator==(const TypePoset& o) const {
        return names_ == o.names_ && leq_ == o.leq_;
    }

    // Names are non-empty, over [a-z0-9_], and may not be the reserved "1".
    static void validate_name(const std::string& name);

private:
    int index_of(const std::string& name) const;

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::pair<std::string, std::string>> declared_;
    std::vector<std::vector<bool>> leq_;
};

// Left/right adjoint of a term: reverses the factors and shifts every z by
// -1 (left) or +1 (right), so adjoint(adjoint(t, Left), Right) == t.
Term adjoint(const Term& t, AdjointDirection direction);

// Basic-type order test in the closure.
bool leq_basic(const std::string& a, const std::string& b, const TypePoset& poset);

// Simple-type order: equal z, with the basic order read forwards for even z
// and reversed for odd z (adjunction reverses order once per iteration).
bool leq_simple(const SimpleType& u, const SimpleType& v, const TypePoset& poset);

// Single contraction step test: u . v <= 1. Holds iff z(v) = z(u) + 1 and the
// bases satisfy the order, forwards when z(u) is even, reversed when odd.
bool contractible(const SimpleType& u, const SimpleType& v, const TypePoset& poset);

}  // namespace pregroup
