#include "lg/expression.hpp"

#include <algorithm>
#include <map>

namespace lg {

ExprPtr Expression::make_leaf(Connector c, int cost) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Leaf;
    e->leaf = std::move(c);
    e->leaf_cost = cost;
    return e;
}

ExprPtr Expression::make_and(std::vector<ExprPtr> parts) {
    if (parts.empty()) return make_empty();
    if (parts.size() == 1) return parts[0];
    auto e = std::make_shared<Expression>();
    e->kind = Kind::And;
    e->children = std::move(parts);
    return e;
}

ExprPtr Expression::make_or(std::vector<ExprPtr> parts) {
    if (parts.empty()) return make_empty();
    if (parts.size() == 1) return parts[0];
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Or;
    e->children = std::move(parts);
    return e;
}

ExprPtr Expression::make_optional(ExprPtr inner) {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Optional;
    e->children.push_back(std::move(inner));
    return e;
}

ExprPtr Expression::make_empty() {
    auto e = std::make_shared<Expression>();
    e->kind = Kind::Empty;
    return e;
}

std::string Expression::str() const {
    switch (kind) {
        case Kind::Leaf: {
            // render cost as that many bracket layers so printing round-trips
            std::string s(leaf_cost, '[');
            s += leaf.str();
            s.append(leaf_cost, ']');
            return s;
        }
        case Kind::Empty: return "()";
        case Kind::Optional: return "{" + children[0]->str() + "}";
        case Kind::And:
        case Kind::Or: {
            std::string s = "(";
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) s += kind == Kind::And ? " & " : " or ";
                s += children[i]->str();
            }
            return s + ")";
        }
    }
    return "?";
}

bool Disjunct::same_shape(const Disjunct& o) const {
    if (left.size() != o.left.size() || right.size() != o.right.size()) return false;
    for (size_t i = 0; i < left.size(); ++i)
        if (!left[i].same_shape(o.left[i])) return false;
    for (size_t i = 0; i < right.size(); ++i)
        if (!right[i].same_shape(o.right[i])) return false;
    return true;
}

std::string Disjunct::str() const {
    std::string s = "((";
    for (size_t i = 0; i < left.size(); ++i) {
        if (i) s += ",";
        s += (left[i].multi ? "@" : "") + (left[i].fat ? left[i].fat->str() : left[i].name.str());
    }
    s += ")(";
    for (size_t i = right.size(); i-- > 0;) {
        s += (right[i].multi ? "@" : "") + (right[i].fat ? right[i].fat->str() : right[i].name.str());
        if (i) s += ",";
    }
    s += "))";
    return s;
}

namespace {

void expand_rec(const Expression* e, std::vector<Disjunct>& acc) {
    switch (e->kind) {
        case Expression::Kind::Empty:
            return;
        case Expression::Kind::Leaf: {
            std::vector<Disjunct> out;
            out.reserve(acc.size());
            for (auto& d : acc) {
                Disjunct nd = d;
                if (e->leaf.dir == Dir::Left) nd.left.push_back(e->leaf);
                else nd.right.push_back(e->leaf);
                nd.cost += e->leaf_cost;
                out.push_back(std::move(nd));
            }
            acc = std::move(out);
            return;
        }
        case Expression::Kind::And:
            for (auto& c : e->children) expand_rec(c.get(), acc);
            return;
        case Expression::Kind::Optional:
        case Expression::Kind::Or: {
            std::vector<Disjunct> out;
            for (auto& c : e->children) {
                std::vector<Disjunct> branch = acc;
                expand_rec(c.get(), branch);
                out.insert(out.end(), branch.begin(), branch.end());
            }
            if (e->kind == Expression::Kind::Optional)
                out.insert(out.end(), acc.begin(), acc.end());
            acc = std::move(out);
            return;
        }
    }
}

std::string disjunct_key(const Disjunct& d) {
    std::string k;
    for (auto& c : d.left) k += c.str() + "|";
    k += "/";
    for (auto& c : d.right) k += c.str() + "|";
    return k;
}

}  // namespace

std::vector<Disjunct> expand_nodedup(const ExprPtr& e) {
    std::vector<Disjunct> acc(1);
    expand_rec(e.get(), acc);
    return acc;
}

std::vector<Disjunct> expand(const ExprPtr& e) {
    std::vector<Disjunct> all = expand_nodedup(e);
    std::map<std::string, size_t> seen;
    std::vector<Disjunct> out;
    out.reserve(all.size());
    for (auto& d : all) {
        auto key = disjunct_key(d);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), out.size());
            out.push_back(std::move(d));
        } else if (d.cost < out[it->second].cost) {
            out[it->second].cost = d.cost;
        }
    }
    return out;
}

}  // namespace lg
