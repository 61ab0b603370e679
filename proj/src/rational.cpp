#include "mptkit/rational.hpp"

#include "mptkit/error.hpp"

#include <cctype>

namespace mptkit {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InputError("malformed rational '" + std::string(text) + "'");
        mpz_class d { std::string(den) };
        if (d == 0)
            throw InputError("zero denominator in '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            throw InputError("malformed rational '" + std::string(text) + "'");
        mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        result = Rational(num, den);
    } else {
        if (!all_digits(body))
            throw InputError("malformed rational '" + std::string(text) + "'");
        result = Rational(mpz_class(std::string(body)));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q)
{
    return q.get_d();
}

} // namespace mptkit
