#pragma once

#include <memory>
#include <vector>

#include "lg/connector.hpp"

namespace lg {

// A linking-requirement formula.  And/Or lists are nonempty and
// order-significant (for And, earlier connectors link nearer).
// Optional(e) is semantically Or(e, Empty).
struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Expression {
    enum class Kind : uint8_t { Leaf, And, Or, Optional, Empty };

    Kind kind = Kind::Empty;
    Connector leaf;             // Kind::Leaf
    int leaf_cost = 0;          // cost-bracket depth at the leaf
    std::vector<ExprPtr> children;  // And/Or members; Optional has one

    static ExprPtr make_leaf(Connector c, int cost = 0);
    static ExprPtr make_and(std::vector<ExprPtr> parts);
    static ExprPtr make_or(std::vector<ExprPtr> parts);
    static ExprPtr make_optional(ExprPtr e);
    static ExprPtr make_empty();

    std::string str() const;
};

// One way of satisfying a word: ordered connector lists, index 0 nearest.
struct Disjunct {
    std::vector<Connector> left;
    std::vector<Connector> right;
    int cost = 0;

    bool same_shape(const Disjunct& o) const;
    std::string str() const;  // ((L1,..,Lm)(Rn,..,R1)), right list outermost-first
};

// All disjuncts obtainable by choosing one branch at each Or.  And
// concatenates in formula order, so connector order within each list equals
// formula order restricted to that direction.  Duplicates merge keeping the
// minimum cost.
std::vector<Disjunct> expand(const ExprPtr& e);

// Expansion without duplicate merging (property tests compare its size with
// the direct recursive satisfaction count).
std::vector<Disjunct> expand_nodedup(const ExprPtr& e);

}  // namespace lg
