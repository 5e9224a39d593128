#include "frobflag/kclass.hpp"

#include "frobflag/errors.hpp"

#include <cctype>
#include <sstream>

namespace frobflag {

KClass KClass::line(Weight w, BigInt coeff) {
    KClass out;
    out.add_term(w, coeff);
    return out;
}

void KClass::add_term(Weight w, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt KClass::coefficient(Weight w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt KClass::rank() const {
    BigInt r = 0;
    for (const auto& [w, c] : terms_) r += c;
    return r;
}

KClass& KClass::operator+=(const KClass& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

KClass& KClass::operator*=(const BigInt& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
}

KClass KClass::operator-() const {
    KClass out = *this;
    return out *= BigInt(-1);
}

KClass KClass::dual() const {
    KClass out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(-w, c);
    return out;
}

KClass KClass::tensor(const KClass& o) const {
    KClass out;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) out.add_term(w1 + w2, c1 * c2);
    }
    return out;
}

std::string KClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.str() << "*";
        os << "(" << frobflag::to_string(w) << ")";
        first = false;
    }
    return os.str();
}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char ch) {
        if (peek() != ch) return false;
        ++pos_;
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }
    std::string_view until(char ch) {
        std::size_t end = s_.find(ch, pos_);
        if (end == std::string_view::npos) fail(std::string("missing '") + ch + "'");
        auto out = s_.substr(pos_, end - pos_);
        pos_ = end;
        return out;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("malformed class literal '" + std::string(s_) + "': " + what +
                         " at offset " + std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

KClass KClass::parse(std::string_view s) {
    Lexer lex(s);
    KClass out;
    if (lex.done()) lex.fail("empty literal");
    {
        std::string_view body = s;
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
        if (body == "0") return out;
    }
    bool first = true;
    while (!lex.done()) {
        BigInt sign = 1;
        if (lex.accept('-')) {
            sign = -1;
        } else if (!lex.accept('+') && !first) {
            lex.fail("expected '+' or '-'");
        }
        BigInt coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            coeff = BigInt(lex.digits());
            lex.expect('*');
        }
        lex.expect('(');
        Weight w = parse_weight(lex.until(')'));
        lex.expect(')');
        out.add_term(w, sign * coeff);
        first = false;
    }
    return out;
}

KClass frobenius_pullback(const KClass& c, FrobeniusParams fp) {
    const std::int64_t q = fp.q();
    KClass out;
    for (const auto& [w, coeff] : c.terms()) out += KClass::line(w * q, coeff);
    return out;
}

BigInt euler_char(RootType t, const KClass& c) {
    BigInt total = 0;
    for (const auto& [w, coeff] : c.terms()) total += coeff * euler_line(t, w);
    return total;
}

BigInt euler_pairing(RootType t, const KClass& a, const KClass& b) {
    return euler_char(t, a.dual().tensor(b));
}

namespace {

struct DictEntry {
    std::string_view name;
    std::string_view literal;
};

// Classes read off from the defining short exact sequences (Euler sequences
// on P^2, P^3, Q_3, the spinor and null-correlation sequences).
constexpr DictEntry kCommon[] = {
    {"O", "(0,0)"},
    {"omega", "(-2,-2)"},
};

constexpr DictEntry kA2[] = {
    {"Omega1_P2(w1)", "3*(0,0) - (1,0)"},
    {"Omega1_P2v(w2)", "3*(0,0) - (0,1)"},
    {"Omega1_P2(2w1+w2)", "3*(1,1) - (2,1)"},
    {"Omega1_P2v(w1+2w2)", "3*(1,1) - (1,2)"},
    {"T_P2(-2w1-w2)", "3*(-1,-1) - (-2,-1)"},
    {"T_P2v(-w1-2w2)", "3*(-1,-1) - (-1,-2)"},
    {"V*xO", "3*(0,0)"},
    {"VxO", "3*(0,0)"},
};

constexpr DictEntry kB2[] = {
    {"U2", "(-1,0) + (1,-1)"},
    {"U2v", "(1,0) + (-1,1)"},
    {"Psi1", "5*(0,0) - (0,1)"},
    {"N", "(1,-1) + (-1,1)"},
    {"Omega1_P3(wa)", "4*(0,0) - (1,0)"},
    {"Omega2_P3(2wa)", "4*(-1,0) - (-2,0)"},
    {"Omega1_P3(wa-wb)", "4*(0,-1) - (1,-1)"},
    {"T_P3(-wa-rho)", "4*(-1,-1) - (-2,-1)"},
    {"U2v(-rho)", "(0,-1) + (-2,0)"},
    {"Psi1v(-rho)", "5*(-1,-1) - (-1,-2)"},
    {"U2(rho)", "(0,1) + (2,0)"},
    {"T_P3(wb-wa)", "4*(0,1) - (-1,1)"},
    {"Psi1(rho)", "5*(1,1) - (1,2)"},
    {"Omega1_P3(wa+rho)", "4*(1,1) - (2,1)"},
    {"U2(-wb)", "(-1,-1) + (1,-2)"},
    {"nabla_wb(x)O", "5*(0,0)"},
    {"VxO", "4*(0,0)"},
};

std::span<const DictEntry> type_entries(RootType t) {
    switch (t) {
    case RootType::A2: return kA2;
    case RootType::B2: return kB2;
    case RootType::G2: return {};
    }
    return {};
}

NamedBundle make_named(std::string name, KClass c) {
    BigInt r = c.rank();
    return {std::move(name), std::move(c), std::move(r)};
}

} // namespace

NamedBundle bundle_dictionary(RootType t, std::string_view name) {
    for (const auto& e : kCommon) {
        if (e.name == name) return make_named(std::string(name), KClass::parse(e.literal));
    }
    for (const auto& e : type_entries(t)) {
        if (e.name == name) return make_named(std::string(name), KClass::parse(e.literal));
    }
    if (name.size() > 3 && name.starts_with("L(") && name.ends_with(")")) {
        Weight w;
        try {
            w = parse_weight(name.substr(2, name.size() - 3));
        } catch (const ParseError&) {
            throw UnknownName("unknown bundle name '" + std::string(name) + "'");
        }
        return make_named("L(" + to_string(w) + ")", KClass::line(w));
    }
    throw UnknownName("unknown bundle name '" + std::string(name) + "' for type " +
                      std::string(to_string(t)));
}

std::vector<std::string> bundle_names(RootType t) {
    std::vector<std::string> out;
    for (const auto& e : kCommon) out.emplace_back(e.name);
    for (const auto& e : type_entries(t)) out.emplace_back(e.name);
    return out;
}

std::vector<std::vector<std::string>> builtin_collection_blocks(RootType t) {
    switch (t) {
    case RootType::A2:
        return {{"L(-1,-1)"},
                {"L(-1,0)", "L(0,-1)"},
                {"Omega1_P2(w1)", "Omega1_P2v(w2)"},
                {"O"}};
    case RootType::B2:
        return {{"L(-1,-1)"},
                {"L(-1,0)", "L(0,-1)"},
                {"Omega2_P3(2wa)", "U2"},
                {"Omega1_P3(wa)", "Psi1"},
                {"O"}};
    case RootType::G2: break;
    }
    throw UnsupportedType("no builtin full exceptional collection for " + std::string(to_string(t)));
}

std::vector<NamedBundle> builtin_full_collection(RootType t) {
    std::vector<NamedBundle> out;
    for (const auto& block : builtin_collection_blocks(t)) {
        for (const auto& name : block) out.push_back(bundle_dictionary(t, name));
    }
    return out;
}

bool kclass_equal(RootType t, const KClass& a, const KClass& b) {
    if (t == RootType::G2) {
        throw UnsupportedType("pairing-based class equality is not available for G2");
    }
    if (a == b) return true;
    if (a.rank() != b.rank()) return false;
    const KClass diff = a - b;
    static const auto a2 = builtin_full_collection(RootType::A2);
    static const auto b2 = builtin_full_collection(RootType::B2);
    for (const auto& member : t == RootType::A2 ? a2 : b2) {
        if (euler_pairing(t, member.kclass, diff) != 0) return false;
    }
    return true;
}

} // namespace frobflag
