#include "solvency/rational.hpp"

#include "solvency/errors.hpp"

#include <cctype>
#include <sstream>

namespace solvency {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rat rat_from_string(std::string_view text) {
    // Trim surrounding whitespace; GMP would accept embedded spaces we don't want.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    const auto slash = text.find('/');
    if (slash != std::string_view::npos && text.find('/', slash + 1) != std::string_view::npos) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    // GMP rejects an explicit '+'.
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    const std::string cleaned = std::string(num) + "/" + std::string(den);

    Rat q;
    if (mpq_set_str(q.get_mpq_t(), cleaned.c_str(), 10) != 0) {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
        throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream out;
    if (q.get_den() == 1) {
        out << q.get_num();
    } else {
        out << q.get_num() << '/' << q.get_den();
    }
    return out.str();
}

double rat_approx(const Rat& q) { return q.get_d(); }

Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw InputError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

RatVec canonical_scaled(const RatVec& v) {
    if (v.empty()) throw InputError("cannot scale an empty vector");
    for (const Rat& x : v) {
        if (x <= 0) throw InputError("canonical scaling requires strictly positive components");
    }
    return scaled_by_max(v);
}

RatVec scaled_by_max(const RatVec& v) {
    if (v.empty()) throw InputError("cannot scale an empty vector");
    const Rat* max = &v.front();
    for (const Rat& x : v) {
        if (x > *max) max = &x;
    }
    if (*max <= 0) throw InputError("maximum component must be positive");
    RatVec out;
    out.reserve(v.size());
    for (const Rat& x : v) out.push_back(Rat(x / *max));
    return out;
}

bool proportional(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size() || a.empty()) return false;
    std::size_t pivot = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        if (pivot == a.size() && b[i] != 0) pivot = i;
    }
    if (pivot == a.size()) return true; // both zero vectors
    const Rat alpha = a[pivot] / b[pivot];
    if (alpha <= 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != alpha * b[i]) return false;
    }
    return true;
}

int compare_lex(const RatVec& a, const RatVec& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

std::string vec_to_string(const RatVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    out += ")";
    return out;
}

} // namespace solvency
