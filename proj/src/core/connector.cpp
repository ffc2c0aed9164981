#include "lg/connector.hpp"

namespace lg {

bool parse_connector_name(const std::string& text, ConnectorName& out) {
    size_t i = 0;
    while (i < text.size() && text[i] >= 'A' && text[i] <= 'Z') ++i;
    if (i == 0) return false;
    for (size_t j = i; j < text.size(); ++j) {
        char c = text[j];
        if (!((c >= 'a' && c <= 'z') || c == '*')) return false;
    }
    out.head = text.substr(0, i);
    out.tail = text.substr(i);
    return true;
}

static bool chars_compatible(char a, char b) {
    if (a == '#' || b == '#') return (a == '*' || b == '*');
    return a == b || a == '*' || b == '*';
}

bool names_match(const ConnectorName& a, const ConnectorName& b) {
    if (a.head != b.head) return false;
    size_t n = std::max(a.tail.size(), b.tail.size());
    for (size_t i = 0; i < n; ++i) {
        char ca = i < a.tail.size() ? a.tail[i] : '*';
        char cb = i < b.tail.size() ? b.tail[i] : '*';
        if (!chars_compatible(ca, cb)) return false;
    }
    return true;
}

ConnectorName intersect_names(const ConnectorName& a, const ConnectorName& b) {
    assert(a.head == b.head && "intersect requires equal heads");
    size_t n = std::max(a.tail.size(), b.tail.size());
    std::string tail;
    tail.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        char ca = i < a.tail.size() ? a.tail[i] : '*';
        char cb = i < b.tail.size() ? b.tail[i] : '*';
        if (ca == cb) tail.push_back(ca);
        else if (ca == '*') tail.push_back(cb);
        else if (cb == '*') tail.push_back(ca);
        else tail.push_back('#');
    }
    while (!tail.empty() && tail.back() == '*') tail.pop_back();
    return ConnectorName(a.head, tail);
}

std::string FatSig::str() const {
    std::string s = "<(";
    for (size_t i = 0; i < left.size(); ++i) {
        if (i) s += ",";
        s += left[i].str();
    }
    s += ")(";
    for (size_t i = 0; i < right.size(); ++i) {
        if (i) s += ",";
        s += right[i].str();
    }
    s += ")>";
    return s;
}

std::string Connector::str() const {
    std::string s;
    if (multi) s += "@";
    if (fat) s += fat->str();
    else s += name.str();
    s += (dir == Dir::Right ? '+' : '-');
    if (priority) s += ('0' + priority);
    return s;
}

static bool sigs_compatible(const FatSig& a, const FatSig& b) {
    if (a.left.size() != b.left.size() || a.right.size() != b.right.size()) return false;
    for (size_t i = 0; i < a.left.size(); ++i)
        if (a.left[i].head != b.left[i].head) return false;
    for (size_t i = 0; i < a.right.size(); ++i)
        if (a.right[i].head != b.right[i].head) return false;
    return true;
}

bool match(const Connector& a, const Connector& b) {
    // priorities: (0,0), (1,2), (2,1)
    if (a.priority == 0 || b.priority == 0) {
        if (a.priority != b.priority) return false;
    } else if (a.priority + b.priority != 3) {
        return false;
    }
    if (a.fat || b.fat) {
        if (!a.fat || !b.fat) return false;
        return sigs_compatible(*a.fat, *b.fat);
    }
    return names_match(a.name, b.name);
}

}  // namespace lg
