#include "otkit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "otkit/errors.hpp"

namespace otk {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    const auto valid = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den))
        throw ParseError("malformed rational literal \"" + text + "\"");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("malformed rational literal \"" + text + "\"");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_zero_vector(const QVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return sgn(x) == 0; });
}

}  // namespace otk
