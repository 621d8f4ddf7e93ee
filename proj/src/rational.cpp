#include "pgg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pgg {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational: '" + text + "' (expected p/q, integer, or decimal)");
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den)) throw bad();
        Rat q{Int(num), Int(den)};
        if (q.get_den() == 0) throw std::invalid_argument("not a rational: '" + text + "' (zero denominator)");
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty() && frac.empty()) throw bad();
        for (char c : head + frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        Int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Int num = Int(head.empty() ? "0" : head) * scale + Int(frac.empty() ? "0" : frac);
        if (neg) num = -num;
        Rat q(num, scale);
        q.canonicalize();
        return q;
    }
    if (!is_integer_literal(text)) throw bad();
    return Rat(Int(text));
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

double rat_double(const Rat& q) {
    return q.get_d();
}

Rat rat_pow(const Rat& q, unsigned long e) {
    Rat result;
    mpz_pow_ui(result.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(result.get_den_mpz_t(), q.get_den_mpz_t(), e);
    // num/den coprime implies num^e/den^e coprime; no canonicalize needed
    return result;
}

bool fits_uint64(const Int& v) {
    return mpz_sgn(v.get_mpz_t()) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_uint64(const Int& v) {
    if (!fits_uint64(v)) throw std::invalid_argument("value does not fit in 64 bits");
    return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

}  // namespace pgg
