#pragma once

// Text forms: partitions as comma-separated decreasing integers ("0" or ""
// for empty), GL(P)-labels as x^q[*xi][*Tr] with "1" for the unit, weights
// as zpart|tpart.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ver4/glp_label.hpp"
#include "ver4/mullineux.hpp"
#include "ver4/partition.hpp"
#include "ver4/weight.hpp"

namespace ver4 {

namespace detail {
inline std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep)
        out.push_back("");
    return out;
}
}  // namespace detail

inline Partition parse_partition(const std::string& text) {
    std::string body = detail::trim(text);
    if (body.empty() || body == "0")
        return Partition{};
    std::vector<int> parts;
    for (const auto& tok : detail::split(body, ',')) {
        if (tok.empty())
            throw std::invalid_argument("parse_partition: empty part in '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

inline std::string to_string(const GLPLabel& t) {
    if (t.trivial())
        return "1";
    std::string s;
    auto append = [&](const std::string& tok) {
        if (!s.empty())
            s += '*';
        s += tok;
    };
    if (t.q != 0)
        append("x^" + std::to_string(t.q));
    if (t.xi)
        append("xi");
    if (t.r != 0)
        append("T" + std::to_string(t.r));
    return s;
}

inline GLPLabel parse_glp_label(const std::string& text) {
    std::string body = detail::trim(text);
    if (body.empty() || body == "1")
        return GLPLabel{};
    int q = 0, r = 0;
    bool xi = false, any = false;
    for (const auto& tok : detail::split(body, '*')) {
        if (tok == "1")
            continue;
        if (tok == "xi") {
            if (xi)
                throw std::invalid_argument("parse_glp_label: repeated xi");
            xi = true;
        } else if (tok.size() >= 3 && tok[0] == 'x' && tok[1] == '^') {
            q += std::stoi(tok.substr(2));
        } else if (tok == "x") {
            q += 1;
        } else if (tok.size() == 2 && tok[0] == 'T') {
            const int rr = tok[1] - '0';
            if (rr < 0 || rr > 3)
                throw std::invalid_argument("parse_glp_label: T index must be 0..3");
            if (r != 0)
                throw std::invalid_argument("parse_glp_label: repeated T factor");
            r = rr;
        } else {
            throw std::invalid_argument("parse_glp_label: bad factor '" + tok + "'");
        }
        any = true;
    }
    if (!any)
        throw std::invalid_argument("parse_glp_label: empty label '" + text + "'");
    return GLPLabel(q, r, xi);
}

inline std::string to_string(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.zpart.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w.zpart[i]);
    }
    s += '|';
    for (std::size_t j = 0; j < w.tpart.size(); ++j) {
        if (j)
            s += ',';
        s += to_string(w.tpart[j]);
    }
    return s;
}

inline Weight parse_weight(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("parse_weight: missing '|'");
    Weight w;
    std::string z = detail::trim(text.substr(0, bar));
    if (!z.empty()) // zeros are meaningful weight entries; "" means m = 0
        for (const auto& tok : detail::split(z, ','))
            w.zpart.push_back(std::stoi(tok));
    std::string t = detail::trim(text.substr(bar + 1));
    if (!t.empty())
        for (const auto& tok : detail::split(t, ','))
            w.tpart.push_back(parse_glp_label(tok));
    return w;
}

inline std::string to_string(const MSequence& m) {
    if (m.empty())
        return "()";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            s += ',';
        s += to_string(m[i]);
    }
    return s;
}

}  // namespace ver4
