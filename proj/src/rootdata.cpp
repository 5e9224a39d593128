#include "frobflag/rootdata.hpp"

#include "frobflag/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace frobflag {

namespace {

// Coroot functionals derived once from Euclidean realizations; the test
// suite re-derives them (see test_rootdata.cpp).
RootData make_a2() {
    return {RootType::A2,
            {Weight{2, -1}, Weight{-1, 2}},
            {{1, 0}, {0, 1}, {1, 1}},
            {1, 1, 2},
            6};
}

RootData make_b2() {
    return {RootType::B2,
            {Weight{2, -1}, Weight{-2, 2}},
            {{1, 0}, {0, 1}, {1, 1}, {1, 2}},
            {1, 1, 2, 3},
            8};
}

RootData make_g2() {
    return {RootType::G2,
            {Weight{2, -1}, Weight{-3, 2}},
            {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}},
            {1, 1, 2, 3, 4, 5},
            12};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("malformed weight literal '" + std::string(whole) + "'");
    }
    return v;
}

std::vector<WeylWord> enumerate_group(RootType t) {
    const int n = root_data(t).num_positive();
    // Elements are identified by their action on the regular weight rho.
    // Words are visited in (length, lexicographic) order, so the first word
    // that reaches an image is its lex-minimal reduced word.
    std::map<Weight, WeylWord> seen;
    std::vector<WeylWord> out;
    std::vector<WeylWord> layer{WeylWord{}};
    for (int len = 0; len <= n; ++len) {
        std::vector<WeylWord> next;
        for (const auto& w : layer) {
            Weight image = act(t, w, kRho);
            if (!seen.contains(image)) {
                seen.emplace(image, w);
                out.push_back(w);
            }
            for (int i : {1, 2}) {
                WeylWord ext = w;
                ext.letters.push_back(i);
                next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace

std::string_view to_string(RootType t) {
    switch (t) {
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
    case RootType::G2: return "G2";
    }
    return "?";
}

RootType parse_root_type(std::string_view s) {
    s = trim(s);
    if (s == "A2") return RootType::A2;
    if (s == "B2" || s == "C2") return RootType::B2;
    if (s == "G2") return RootType::G2;
    throw ParseError("unknown root system type '" + std::string(s) + "'");
}

std::string to_string(Weight w) {
    return std::to_string(w.a) + "," + std::to_string(w.b);
}

Weight parse_weight(std::string_view s) {
    std::string_view body = trim(s);
    if (!body.empty() && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    auto comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("weight literal must look like 'a,b': '" + std::string(s) + "'");
    }
    return {parse_int(body.substr(0, comma), s), parse_int(body.substr(comma + 1), s)};
}

const RootData& root_data(RootType t) {
    static const RootData a2 = make_a2();
    static const RootData b2 = make_b2();
    static const RootData g2 = make_g2();
    switch (t) {
    case RootType::A2: return a2;
    case RootType::B2: return b2;
    case RootType::G2: return g2;
    }
    throw InvalidParameter("unsupported root type");
}

std::vector<std::int64_t> pairing_all_positive(RootType t, Weight lambda) {
    const auto& rd = root_data(t);
    std::vector<std::int64_t> out;
    out.reserve(rd.positive_coroots.size());
    for (const auto& f : rd.positive_coroots) out.push_back(f(lambda));
    return out;
}

Weight reflect_simple(RootType t, int i, Weight lambda) {
    if (i != 1 && i != 2) throw InvalidParameter("simple root index must be 1 or 2");
    const Weight alpha = root_data(t).simple_roots[static_cast<std::size_t>(i - 1)];
    return lambda - alpha * lambda.coordinate(i);
}

Weight dot_simple(RootType t, int i, Weight lambda) {
    return reflect_simple(t, i, lambda + kRho) - kRho;
}

WeylWord concat(const WeylWord& v, const WeylWord& w) {
    WeylWord out = v;
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
}

std::string to_string(const WeylWord& w) {
    if (w.letters.empty()) return "e";
    std::ostringstream os;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (k) os << ' ';
        os << 's' << w.letters[k];
    }
    return os.str();
}

Weight act(RootType t, const WeylWord& w, Weight lambda) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        lambda = reflect_simple(t, *it, lambda);
    }
    return lambda;
}

Weight dot_action(RootType t, const WeylWord& w, Weight lambda) {
    return act(t, w, lambda + kRho) - kRho;
}

const std::vector<WeylWord>& weyl_group(RootType t) {
    static const std::vector<WeylWord> a2 = enumerate_group(RootType::A2);
    static const std::vector<WeylWord> b2 = enumerate_group(RootType::B2);
    static const std::vector<WeylWord> g2 = enumerate_group(RootType::G2);
    switch (t) {
    case RootType::A2: return a2;
    case RootType::B2: return b2;
    case RootType::G2: return g2;
    }
    throw InvalidParameter("unsupported root type");
}

} // namespace frobflag
